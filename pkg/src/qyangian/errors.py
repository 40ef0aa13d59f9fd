"""Exception hierarchy shared by every module of the package."""


class QSuperError(Exception):
    """Base class for all package errors."""


class InvalidIndexError(QSuperError, ValueError):
    """An index is zero, out of range, or otherwise not admissible."""


class SizeMismatchError(QSuperError, ValueError):
    """Operands live in algebras of different size or generator order."""


class UndefinedDegreeError(QSuperError, ValueError):
    """The filtration degree of the zero element was requested."""


class NotInCentralizerError(QSuperError, ValueError):
    """The centralizer projection was applied outside its domain."""


class ConfigurationError(QSuperError, ValueError):
    """A suite or substitution was configured with invalid parameters."""

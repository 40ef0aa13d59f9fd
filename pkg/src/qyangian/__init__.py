"""Exact computations in U(q_N), its centralizers and the Yangian of q_N."""

from ._backend import BACKEND
from .core import (
    GeneratorRef,
    bracket_generators,
    canonicalize,
    parity_of_index,
    verify_bracket,
)
from .errors import (
    ConfigurationError,
    InvalidIndexError,
    NotInCentralizerError,
    QSuperError,
    SizeMismatchError,
    UndefinedDegreeError,
)
from .pbw import (
    Element,
    GeneratorOrder,
    Monomial,
    filtration_degree,
    multiply,
    principal_antiautomorphism,
    reorder,
    supercommutator,
    z2_degree,
)

from .fgen import (
    c_element,
    f_element,
    verify_central,
    verify_centrality,
    verify_defrel,
    verify_fnr,
    verify_prop31,
)
from .centralizer import (
    CentralizerContext,
    alpha_projection,
    centralizer_check,
    verify_alpha_homomorphism,
    verify_prop14,
)
from .free import FreeTensor, FreeYElement
from .yangian import (
    comultiply,
    omega_image,
    tau_image,
    verify_coassociativity,
    verify_omega_correspondence,
    verify_primitive,
    verify_series_equivalence,
    verify_tau_relations,
    yang_relation_coeff,
)
from .grsym import (
    SuperPolynomial,
    TensorElement,
    XsSubstitution,
    leading_symbol,
    phi_map,
    psi_map,
    verify_eh_identity,
    verify_vanishing_sums,
    xs_independence_check,
)
from .report import Report

__version__ = "0.1.0"

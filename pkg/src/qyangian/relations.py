"""Relation instances as elements of free superalgebras.

Every builder returns ``LHS - RHS`` (or just the right side, for the
``*_rhs`` helpers) as a :class:`FreeYElement`.  The optional ``mutate``
argument flips one sign slot of the formula; the slot numbering is listed
in each docstring.  Mutations exist so the test-suite can confirm that a
single wrong sign is always detected.
"""

from __future__ import annotations

from .core import parity_of_index as _p
from .free import FreeYElement

__all__ = [
    "F",
    "T",
    "fnr_rhs",
    "prop31_rhs",
    "defrel_rhs",
    "defrel_element",
    "yang37_element",
    "yang38_element",
    "yang_relation_coeff",
    "Series2",
    "t_series",
    "yangrel_series",
]


def F(i: int, j: int, n: int, N: int) -> FreeYElement:
    return FreeYElement.gen("F", i, j, n, N)


def T(i: int, j: int, n: int, N: int) -> FreeYElement:
    return FreeYElement.gen("T", i, j, n, N)


def _sgn(flag) -> int:
    return -1 if flag % 2 else 1


def _signs(count: int, mutate: int | None) -> list[int]:
    out = [1] * count
    if mutate is not None:
        if not 0 <= mutate < count:
            raise ValueError(f"mutation slot {mutate} out of range 0..{count - 1}")
        out[mutate] = -1
    return out


def _zero(N: int) -> FreeYElement:
    return FreeYElement(N)


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def fnr_rhs(i, j, k, l, n, N, mutate=None) -> FreeYElement:
    """Right side of ``[F_ij, F(n)_kl]``; slots 0-3 are the four summands."""
    m = _signs(4, mutate)
    s = _sgn((_p(i) + _p(j)) * (_p(k) + _p(l)))
    out = _zero(N)
    if k == j:
        out = out + m[0] * F(i, l, n, N)
    if i == l:
        out = out - m[1] * s * F(k, j, n, N)
    if -k == j:
        out = out + m[2] * F(-i, l, n, N)
    if i == -l:
        out = out - m[3] * s * F(k, -j, n, N)
    return out


def _leading(m, n, i, j, k, l, N, sg) -> FreeYElement:
    s = _sgn((_p(i) + _p(j)) * (_p(k) + _p(l)))
    e = _sgn(m - 1)
    d = m + n - 1
    out = _zero(N)
    if k == j:
        out = out + sg[0] * F(i, l, d, N)
    if i == l:
        out = out - sg[1] * s * F(k, j, d, N)
    if -k == j:
        out = out + sg[2] * e * F(-i, l, d, N)
    if i == -l:
        out = out - sg[3] * e * s * F(k, -j, d, N)
    return out


def prop31_rhs(m, n, i, j, k, l, N, mutate=None) -> FreeYElement:
    """Right side of ``[F(m)_ij, F(n)_kl]`` with both sums over ``r < m``.

    Slots: 0-3 leading terms, 4 first sum prefactor, 5 its inner minus,
    6 second sum prefactor, 7 its inner minus.
    """
    sg = _signs(8, mutate)
    t = _sgn(_p(j) * _p(k) + _p(j) * _p(l) + _p(k) * _p(l))
    t2 = t * _sgn(_p(k) + _p(l))
    out = _leading(m, n, i, j, k, l, N, sg)
    for r in range(1, m):
        a, b = n + r - 1, m - r
        out = out + sg[4] * t * (
            F(i, l, a, N) * F(k, j, b, N) - sg[5] * F(i, l, b, N) * F(k, j, a, N)
        )
        out = out + sg[6] * t2 * _sgn(r) * (
            F(-i, l, a, N) * F(-k, j, b, N) - sg[7] * F(i, -l, b, N) * F(k, -j, a, N)
        )
    return out


def defrel_rhs(m, n, i, j, k, l, N, mutate=None) -> FreeYElement:
    """Right side of the defining relation, sums over ``r < min(m, n)``.

    Same slot numbering as :func:`prop31_rhs`.
    """
    sg = _signs(8, mutate)
    t = _sgn(_p(j) * _p(k) + _p(j) * _p(l) + _p(k) * _p(l))
    t2 = t * _sgn(_p(k) + _p(l))
    out = _leading(m, n, i, j, k, l, N, sg)
    for r in range(1, min(m, n)):
        a = m + n - r - 1
        out = out + sg[4] * t * (
            F(i, l, a, N) * F(k, j, r, N) - sg[5] * F(i, l, r, N) * F(k, j, a, N)
        )
        out = out + sg[6] * t2 * _sgn(m + r) * (
            F(-i, l, a, N) * F(-k, j, r, N) - sg[7] * F(i, -l, r, N) * F(k, -j, a, N)
        )
    return out


def defrel_element(m, n, i, j, k, l, N, mutate=None) -> FreeYElement:
    """``[F(m)_ij, F(n)_kl]`` minus the right side of the defining relation."""
    if m < 1 or n < 1:
        raise ValueError("degrees must be positive")
    lhs = F(i, j, m, N).supercommutator(F(k, l, n, N))
    return lhs - defrel_rhs(m, n, i, j, k, l, N, mutate)


def yang37_element(m, n, i, j, k, l, N, mutate=None) -> FreeYElement:
    """The coefficient relation for ``[T(m)_ji, T(n)_lk]`` as ``LHS - RHS``.

    Letters follow the relation as obtained from the defining relation, so
    the supercommutator is taken with transposed index pairs.  Defined for
    all ``m, n >= -1`` using the collapse rules.

    Slots: 0 the sign in front of the supercommutator, 1 inner minus of the
    first sum, 2 prefactor of the second sum, 3 its alternating sign,
    4 its inner minus.
    """
    sg = _signs(5, mutate)
    sigma = _sgn(_p(i) * _p(j) + _p(i) * _p(k) + _p(j) * _p(k))
    pre = _sgn(_p(i) + _p(j) + 1)
    lhs = sg[0] * sigma * T(j, i, m, N).supercommutator(T(l, k, n, N))
    rhs = _zero(N)
    for r in range(0, m):
        a = m + n - r - 1
        rhs = rhs + (T(j, k, a, N) * T(l, i, r, N) - sg[1] * T(j, k, r, N) * T(l, i, a, N))
        alt = _sgn(m + r) if sg[3] > 0 else _sgn(m + r + 1)
        rhs = rhs + sg[2] * pre * alt * (
            T(-j, k, a, N) * T(-l, i, r, N) - sg[4] * T(j, -k, r, N) * T(l, -i, a, N)
        )
    return lhs - rhs


def yang38_element(m, n, i, j, k, l, N) -> FreeYElement:
    """The shifted form: differences of supercommutators with degrees moved by one."""
    sigma = _sgn(_p(i) * _p(j) + _p(i) * _p(k) + _p(j) * _p(k))
    lhs = sigma * (
        T(j, i, m + 1, N).supercommutator(T(l, k, n - 1, N))
        - T(j, i, m - 1, N).supercommutator(T(l, k, n + 1, N))
    )
    rhs = (
        T(j, k, n - 1, N) * T(l, i, m, N)
        - T(j, k, m, N) * T(l, i, n - 1, N)
        + T(j, k, n, N) * T(l, i, m - 1, N)
        - T(j, k, m - 1, N) * T(l, i, n, N)
    )
    rhs = rhs + _sgn(_p(i) + _p(j)) * (
        T(-j, k, n - 1, N) * T(-l, i, m, N)
        - T(j, -k, m, N) * T(l, -i, n - 1, N)
        - T(-j, k, n, N) * T(-l, i, m - 1, N)
        + T(j, -k, m - 1, N) * T(l, -i, n, N)
    )
    return lhs - rhs


def yang_relation_coeff(m, n, a, b, c, d, N, mutate=None) -> FreeYElement:
    """Relation for ``[T(m)_ab, T(n)_cd]`` as ``LHS - RHS``."""
    if m < 1 or n < 1:
        raise ValueError("degrees must be positive")
    return yang37_element(m, n, b, a, d, c, N, mutate)


class Series2:
    """Truncated Laurent polynomial in ``x, y`` with free-algebra coefficients.

    Keys are integer exponent pairs ``(ex, ey)``.
    """

    __slots__ = ("N", "c")

    def __init__(self, N: int, coeffs: dict | None = None):
        self.N = N
        self.c = {k: v for k, v in (coeffs or {}).items() if v}

    def __add__(self, other: "Series2") -> "Series2":
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out[k] + v if k in out else v
        return Series2(self.N, out)

    def __neg__(self) -> "Series2":
        return Series2(self.N, {k: -v for k, v in self.c.items()})

    def __sub__(self, other: "Series2") -> "Series2":
        return self + (-other)

    def __mul__(self, other: "Series2") -> "Series2":
        out: dict = {}
        for (a, b), u in self.c.items():
            for (e, f), v in other.c.items():
                key = (a + e, b + f)
                w = u * v
                out[key] = out[key] + w if key in out else w
        return Series2(self.N, out)

    def scale(self, c) -> "Series2":
        return Series2(self.N, {k: c * v for k, v in self.c.items()})

    def supercommutator(self, other: "Series2") -> "Series2":
        out: dict = {}
        for (a, b), u in self.c.items():
            for (e, f), v in other.c.items():
                key = (a + e, b + f)
                w = u.supercommutator(v)
                out[key] = out[key] + w if key in out else w
        return Series2(self.N, out)

    @classmethod
    def poly(cls, N: int, terms: dict) -> "Series2":
        """Scalar Laurent polynomial ``{(ex, ey): c}``."""
        return cls(N, {k: FreeYElement.one(N, c) for k, c in terms.items()})

    def coeff(self, ex: int, ey: int) -> FreeYElement:
        return self.c.get((ex, ey), FreeYElement(self.N))


def t_series(i: int, j: int, var: str, D: int, N: int, negate: bool = False) -> Series2:
    """``T_ij(var)`` truncated after ``var^{-D}``; ``negate`` substitutes ``-var``."""
    out = {}
    for n in range(0, D + 1):
        c = T(i, j, n, N)
        if negate and n % 2:
            c = -c
        out[(-n, 0) if var == "x" else (0, -n)] = c
    return Series2(N, out)


def yangrel_series(i, j, k, l, D, N) -> Series2:
    """``LHS - RHS`` of the series relation with every ``T`` truncated at ``D``."""
    tx = lambda a, b: t_series(a, b, "x", D, N)  # noqa: E731
    ty = lambda a, b: t_series(a, b, "y", D, N)  # noqa: E731
    sign = _sgn(_p(i) * _p(k) + _p(i) * _p(l) + _p(k) * _p(l))
    lhs = Series2.poly(N, {(2, 0): 1, (0, 2): -1}) * tx(i, j).supercommutator(ty(k, l))
    lhs = lhs.scale(sign)
    plus = Series2.poly(N, {(1, 0): 1, (0, 1): 1})
    minus = Series2.poly(N, {(1, 0): 1, (0, 1): -1})
    rhs = plus * (tx(k, j) * ty(i, l) - ty(k, j) * tx(i, l))
    rhs = rhs - (minus * (tx(-k, j) * ty(-i, l) - ty(k, -j) * tx(i, -l))).scale(
        _sgn(_p(k) + _p(l))
    )
    return lhs - rhs

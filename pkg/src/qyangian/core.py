"""Index conventions, generators of q_K and their Lie superbracket.

Indices run through ``-K, ..., -1, 1, ..., K``.  The generator ``F[i,j]``
equals ``F[-i,-j]``; the representative with positive first index is the
canonical one and is the only form stored anywhere downstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidIndexError, SizeMismatchError

__all__ = [
    "GeneratorRef",
    "parity_of_index",
    "canonicalize",
    "generators",
    "bracket_terms",
    "bracket_generators",
    "parse_generator",
    "verify_bracket",
]


def parity_of_index(i: int) -> int:
    """Return 0 for a positive index and 1 for a negative one."""
    if i == 0:
        raise InvalidIndexError("index 0 is not admissible")
    return 0 if i > 0 else 1


def _check(K: int, *idx: int) -> None:
    # K = 0 is the zero superalgebra; it only has the unit in U(q_0)
    if K < 0:
        raise InvalidIndexError(f"algebra size must be nonnegative, got {K}")
    for a in idx:
        if a == 0 or abs(a) > K:
            raise InvalidIndexError(f"index {a} out of range for q_{K}")


@dataclass(frozen=True, order=True)
class GeneratorRef:
    """Canonical basis generator ``F[i,j]`` of q_K (``i > 0``)."""

    algebra_size: int
    i: int
    j: int

    def __post_init__(self):
        _check(self.algebra_size, self.i, self.j)
        if self.i < 0:
            raise InvalidIndexError(
                f"F[{self.i},{self.j}] is not canonical; use canonicalize()"
            )

    @property
    def parity(self) -> int:
        return parity_of_index(self.j)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.i, self.j)

    def __str__(self) -> str:
        return f"F[{self.i},{self.j}]"


def canonicalize(K: int, i: int, j: int) -> GeneratorRef:
    _check(K, i, j)
    if i < 0:
        i, j = -i, -j
    return GeneratorRef(K, i, j)


def generators(K: int) -> list[GeneratorRef]:
    """All 2K^2 canonical generators of q_K in lexicographic order."""
    _check(K)
    return [
        GeneratorRef(K, i, j)
        for i in range(1, K + 1)
        for j in range(-K, K + 1)
        if j != 0
    ]


def _canon_pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i > 0 else (-i, -j)


def bracket_terms(i: int, j: int, k: int, l: int, mutate: int | None = None):
    """Linear combination ``[F_ij, F_kl]`` as a dict ``{(a, b): int}``.

    Keys are canonical index pairs.  ``mutate`` negates one of the four
    summands (0-3); it exists only to check that the verification suites
    are sensitive to sign errors.
    """
    p = parity_of_index(i) ^ parity_of_index(j)
    q = parity_of_index(k) ^ parity_of_index(l)
    s = -1 if p and q else 1
    signs = [1, -s, 1, -s]
    if mutate is not None:
        signs[mutate] = -signs[mutate]
    raw = (
        (k == j, (i, l)),
        (i == l, (k, j)),
        (-k == j, (-i, l)),
        (i == -l, (k, -j)),
    )
    out: dict[tuple[int, int], int] = {}
    for sign, (hit, pair) in zip(signs, raw):
        if hit:
            key = _canon_pair(*pair)
            out[key] = out.get(key, 0) + sign
    return {key: c for key, c in out.items() if c}


def bracket_generators(a: GeneratorRef, b: GeneratorRef):
    """The supercommutator of two generators as an element of U(q_K)."""
    from .pbw import Element

    if a.algebra_size != b.algebra_size:
        raise SizeMismatchError(
            f"q_{a.algebra_size} and q_{b.algebra_size} generators"
        )
    terms = bracket_terms(a.i, a.j, b.i, b.j)
    return Element.linear(a.algebra_size, {p: Fraction(c) for p, c in terms.items()})


_GEN_RE = re.compile(r"^\s*F\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*$")


def parse_generator(text: str, K: int) -> GeneratorRef:
    """Parse ``F[i,j]``; a non-canonical pair is canonicalized."""
    m = _GEN_RE.match(text)
    if not m:
        raise InvalidIndexError(f"cannot parse generator {text!r}")
    return canonicalize(K, int(m.group(1)), int(m.group(2)))


def _bracket_linear(x: dict, y: dict, mutate: int | None = None) -> dict:
    out: dict = {}
    for (i, j), a in x.items():
        for (k, l), b in y.items():
            for key, c in bracket_terms(i, j, k, l, mutate).items():
                out[key] = out.get(key, 0) + a * b * c
    return {key: c for key, c in out.items() if c}


def verify_bracket(K: int, mutate: int | None = None):
    """Super-antisymmetry over all generator pairs and super-Jacobi over all triples.

    Works in q_K itself, with brackets extended linearly.
    """
    from .report import Report

    rep = Report("bracket", {"K": K})
    gens = generators(K)
    for a in gens:
        for b in gens:
            s = -1 if a.parity and b.parity else 1
            ab = _bracket_linear({a.pair: 1}, {b.pair: 1}, mutate)
            ba = _bracket_linear({b.pair: 1}, {a.pair: 1}, mutate)
            d = {k: ab.get(k, 0) + s * ba.get(k, 0) for k in set(ab) | set(ba)}
            d = {k: v for k, v in d.items() if v}
            rep.check(("antisym", a.pair, b.pair), d or None)
    for a in gens:
        for b in gens:
            for c in gens:
                acc: dict = {}
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    sign = -1 if x.parity and z.parity else 1
                    inner = _bracket_linear({y.pair: 1}, {z.pair: 1}, mutate)
                    for key, v in _bracket_linear({x.pair: 1}, inner, mutate).items():
                        acc[key] = acc.get(key, 0) + sign * v
                acc = {k: v for k, v in acc.items() if v}
                rep.check(("jacobi", a.pair, b.pair, c.pair), acc or None)
    return rep

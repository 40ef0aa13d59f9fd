"""Centralizers of q_M inside U(q_{N+M}) and the projections between them."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigurationError, NotInCentralizerError, SizeMismatchError
from .fgen import c_element, f_element, indices
from .pbw import Element, GeneratorOrder, algebra, multiply, reorder, supercommutator
from .report import Report

__all__ = [
    "CentralizerContext",
    "centralizer_check",
    "alpha_projection",
    "verify_prop14",
    "centralizer_generators",
    "verify_alpha_homomorphism",
]


@dataclass(frozen=True)
class CentralizerContext:
    """The pair ``q_N, q_M`` inside ``q_{N+M}``."""

    N: int
    M: int

    def __post_init__(self):
        if self.N < 0 or self.M < 1:
            raise ConfigurationError(f"need N >= 0 and M >= 1, got N={self.N}, M={self.M}")

    @property
    def K(self) -> int:
        return self.N + self.M

    def q_m_generators(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.N + 1, self.K + 1)
            for j in indices(self.K)
            if abs(j) > self.N
        ]

    def in_q_n(self, i: int, j: int) -> bool:
        return abs(i) <= self.N and abs(j) <= self.N


def _require_size(a: Element, ctx: CentralizerContext) -> None:
    if a.K != ctx.K:
        raise SizeMismatchError(f"element of U(q_{a.K}) used with q_{ctx.K}")


def centralizer_check(a: Element, ctx: CentralizerContext) -> bool:
    """True iff ``a`` supercommutes with every generator of the q_M block."""
    _require_size(a, ctx)
    for i, j in ctx.q_m_generators():
        g = Element.generator(ctx.K, i, j, a.order)
        if supercommutator(g, a):
            return False
    return True


def alpha_projection(a: Element, ctx: CentralizerContext, check: bool = True) -> Element:
    """Project onto the summand living in U(q_{N+M-1}).

    The element is rewritten in the hc order and every monomial touching a
    generator with an index of modulus ``N+M`` is discarded.  ``check=False``
    skips the membership test for callers that already performed it.
    """
    _require_size(a, ctx)
    if check and not centralizer_check(a, ctx):
        raise NotInCentralizerError(
            f"element does not supercommute with q_{ctx.M} inside q_{ctx.K}"
        )
    K = ctx.K
    hc = GeneratorOrder.hc(K)
    src = algebra(hc)
    lower = GeneratorOrder.lex(K - 1)
    dst = algebra(lower)
    out: dict = {}
    for mono, c in reorder(a, hc).raw.items():
        pairs = [src.pairs[r] for r in mono]
        if any(max(abs(i), abs(j)) == K for i, j in pairs):
            continue
        # block 3 of hc(K) is q_{K-1} in lex order, so no straightening occurs
        key = tuple(dst.rank[p] for p in pairs)
        out[key] = out.get(key, 0) + c
    return Element(lower, out)


def verify_prop14(N: int, M: int, nmax: int) -> Report:
    """Projection of F(n)_ij and of C(n) to the next smaller centralizer."""
    ctx = CentralizerContext(N, M)
    rep = Report("prop14", {"N": N, "M": M, "nmax": nmax})
    K = ctx.K
    for n in range(1, nmax + 1):
        for i in indices(N):
            for j in indices(N):
                got = alpha_projection(f_element(i, j, n, K), ctx)
                want = f_element(i, j, n, K - 1)
                d = got - want
                rep.check(("F", i, j, n), d if d else None)
        if n % 2:
            got = alpha_projection(c_element(n, K), ctx)
            d = got - c_element(n, K - 1)
            rep.check(("C", n), d if d else None)
    return rep


def centralizer_generators(ctx: CentralizerContext, nmax: int = 3) -> list[tuple[tuple, Element]]:
    """Labelled F(n)_ij with ``|i|, |j| <= N`` and odd C(n), all with ``n <= nmax``."""
    K = ctx.K
    out = []
    for n in range(1, nmax + 1):
        for i in range(1, ctx.N + 1):
            for j in indices(ctx.N):
                out.append((("F", i, j, n), f_element(i, j, n, K)))
        if n % 2:
            out.append((("C", n), c_element(n, K)))
    return out


def _sample(rng: random.Random, pool, max_degree: int):
    """A random product of pool elements with total degree at most ``max_degree``."""
    label, elem = [], None
    budget = max_degree
    for _ in range(rng.randint(1, 2)):
        choices = [(lab, e) for lab, e in pool if lab[-1] <= budget]
        if not choices:
            break
        lab, e = rng.choice(choices)
        label.append(lab)
        elem = e if elem is None else multiply(elem, e)
        budget -= lab[-1]
    return tuple(label), elem


def verify_alpha_homomorphism(
    N: int, M: int, sample_count: int, seed: int, max_degree: int = 6
) -> Report:
    """Multiplicativity and additivity of the projection on sampled pairs.

    Each sample is a product of one or two centralizer generators whose
    degrees sum to at most ``max_degree``.
    """
    ctx = CentralizerContext(N, M)
    rep = Report(
        "alpha_hom",
        {"N": N, "M": M, "samples": sample_count, "seed": seed, "max_degree": max_degree},
    )
    rng = random.Random(seed)
    pool = centralizer_generators(ctx)
    proj: dict = {}

    def alpha(label, x):
        hit = proj.get(label)
        if hit is None:
            hit = alpha_projection(x, ctx, check=False)
            proj[label] = hit
        return hit

    for s in range(sample_count):
        lx, x = _sample(rng, pool, max_degree)
        ly, y = _sample(rng, pool, max_degree)
        a = Fraction(rng.randint(-3, 3) or 1)
        xy = multiply(x, y)
        if not centralizer_check(xy, ctx):
            rep.check((s, "member", lx, ly), {"reason": "product left the centralizer"})
            continue
        ax, ay = alpha(lx, x), alpha(ly, y)
        d = alpha_projection(xy, ctx, check=False) - multiply(ax, ay)
        rep.check((s, "mul", lx, ly), d if d else None)
        d = alpha_projection(a * x + y, ctx, check=False) - (a * ax + ay)
        rep.check((s, "add", lx, ly), d if d else None)
    return rep

"""The families F(n)_ij and C(n) in U(q_K) and their commutation suites."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .core import _check
from .free import FreeYElement
from .pbw import Element, GeneratorOrder, multiply, supercommutator
from .relations import defrel_element, defrel_rhs, fnr_rhs, prop31_rhs
from .report import Report

__all__ = [
    "f_element",
    "f_element_direct",
    "c_element",
    "indices",
    "Evaluator",
    "verify_fnr",
    "verify_prop31",
    "verify_defrel",
    "verify_central",
    "verify_centrality",
]


def indices(K: int) -> list[int]:
    """``-K, ..., -1, 1, ..., K``."""
    return [a for a in range(-K, K + 1) if a]


def _sign(p: int) -> int:
    return -1 if p % 2 else 1


@lru_cache(maxsize=None)
def f_element(i: int, j: int, n: int, K: int) -> Element:
    """F(n)_ij in U(q_K), by the left recursion over the first factor."""
    _check(K, i, j)
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    if n == 1:
        return Element.generator(K, i, j)
    if i < 0:
        # sign law keeps the cache to positive first indices
        return _sign(n - 1) * f_element(-i, -j, n, K)
    out = Element.zero(K)
    for k in indices(K):
        term = multiply(Element.generator(K, i, k), f_element(k, j, n - 1, K))
        out = out - term if k < 0 else out + term
    return out


def f_element_direct(i: int, j: int, n: int, K: int) -> Element:
    """F(n)_ij from the full sum over intermediate index chains."""
    _check(K, i, j)
    acc: dict = {}
    for chain in itertools.product(indices(K), repeat=n - 1):
        path = (i,) + chain + (j,)
        word = list(zip(path, path[1:]))
        sign = _sign(sum(1 for k in chain if k < 0))
        term = Element.from_word(K, word, sign)
        for m, c in term.raw.items():
            acc[m] = acc.get(m, 0) + c
    return Element(GeneratorOrder.lex(K), acc)


@lru_cache(maxsize=None)
def c_element(n: int, K: int) -> Element:
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    out = Element.zero(K)
    for k in indices(K):
        out = out + f_element(k, k, n, K)
    return out


class Evaluator:
    """Evaluate F-alphabet free elements at F(p)_ab -> f_element(a, b, p, K).

    Words are first rewritten with the sign law so only positive first
    indices reach the product cache.
    """

    def __init__(self, K: int):
        self.K = K
        self._cache: dict[tuple, Element] = {}

    def word(self, w: tuple) -> Element:
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        if not w:
            out = Element.one(self.K)
        elif len(w) == 1:
            g = w[0]
            out = f_element(g.i, g.j, g.n, self.K)
        else:
            out = multiply(self.word(w[:-1]), self.word(w[-1:]))
        self._cache[w] = out
        return out

    def __call__(self, a: FreeYElement) -> Element:
        out: dict = {}
        for w, c in a.normalize_symmetry().terms.items():
            for m, v in self.word(w).raw.items():
                out[m] = out.get(m, 0) + c * v
        return Element(GeneratorOrder.lex(self.K), out)


def _diff(lhs: Element, rhs: Element):
    d = lhs - rhs
    return d if d else None


def verify_fnr(K: int, nmax: int, mutate: int | None = None) -> Report:
    """``[F_ij, F(n)_kl]`` against its four-term right side, exhaustively."""
    rep = Report("fnr", {"K": K, "nmax": nmax})
    ev = Evaluator(K)
    idx = indices(K)
    for n in range(1, nmax + 1):
        for i, j, k, l in itertools.product(idx, repeat=4):
            lhs = supercommutator(Element.generator(K, i, j), f_element(k, l, n, K))
            rhs = ev(fnr_rhs(i, j, k, l, n, K, mutate))
            rep.check((i, j, k, l, n), _diff(lhs, rhs))
    return rep


def _commutator(ev: Evaluator, i, j, m, k, l, n) -> Element:
    key = ("comm", i, j, m, k, l, n)
    hit = ev._cache.get(key)
    if hit is None:
        hit = supercommutator(f_element(i, j, m, ev.K), f_element(k, l, n, ev.K))
        ev._cache[key] = hit
    return hit


def verify_prop31(K: int, mmax: int, nmax: int, mutate: int | None = None) -> Report:
    """``[F(m)_ij, F(n)_kl]`` with both sums over ``r = 1..m-1``."""
    rep = Report("prop31", {"K": K, "mmax": mmax, "nmax": nmax})
    ev = Evaluator(K)
    idx = indices(K)
    for m in range(1, mmax + 1):
        for n in range(1, nmax + 1):
            for i, j, k, l in itertools.product(idx, repeat=4):
                lhs = _commutator(ev, i, j, m, k, l, n)
                rhs = ev(prop31_rhs(m, n, i, j, k, l, K, mutate))
                rep.check((m, n, i, j, k, l), _diff(lhs, rhs))
    return rep


def verify_defrel(K: int, mmax: int, nmax: int, mutate: int | None = None) -> Report:
    """The truncated-sum defining relation, in U(q_K) and symbolically.

    Each instance is evaluated in U(q_K).  Independently, its right side is
    compared with the ``r < m`` form in the free algebra after the sign law
    is applied; for ``m <= n`` the two are required to agree term by term
    before any rewriting.
    """
    rep = Report("defrel", {"K": K, "mmax": mmax, "nmax": nmax})
    ev = Evaluator(K)
    idx = indices(K)
    rewrites = 0
    for m in range(1, mmax + 1):
        for n in range(1, nmax + 1):
            for i, j, k, l in itertools.product(idx, repeat=4):
                key = (m, n, i, j, k, l)
                lhs = _commutator(ev, i, j, m, k, l, n)
                rhs = ev(defrel_rhs(m, n, i, j, k, l, K, mutate))
                rep.check(key + ("U",), _diff(lhs, rhs))
                short = defrel_rhs(m, n, i, j, k, l, K, mutate)
                full = prop31_rhs(m, n, i, j, k, l, K)
                if m <= n:
                    delta = short - full
                else:
                    rewrites += 1
                    delta = (short - full).normalize_symmetry()
                rep.check(key + ("free",), delta if delta else None)
    rep.info["rewritten_instances"] = rewrites
    return rep


def verify_central(K: int, n: int) -> bool:
    c = c_element(n, K)
    for a in range(1, K + 1):
        for b in indices(K):
            if supercommutator(c, Element.generator(K, a, b)):
                return False
    return True


def verify_centrality(K: int, degrees=(1, 2, 3, 4)) -> Report:
    """Odd degrees: C(n) is central.  Even degrees: C(n) vanishes."""
    rep = Report("central", {"K": K, "degrees": list(degrees)})
    for n in degrees:
        if n % 2:
            rep.check(("central", n), None if verify_central(K, n) else {"n": n})
        else:
            c = c_element(n, K)
            rep.check(("zero", n), c if c else None)
    return rep


def defrel_in_u(m, n, i, j, k, l, K) -> Element:
    """Evaluate one defining-relation instance in U(q_K); zero when it holds."""
    return Evaluator(K)(defrel_element(m, n, i, j, k, l, K))


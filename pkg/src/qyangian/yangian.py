"""Yangian-side maps: omega, the evaluation homomorphisms tau_M and the coproduct.

Nothing here needs a normal form for the Yangian.  Relations are compared as
free-algebra elements, or evaluated in U(q_{N+M}) through ``tau_image``.
"""

from __future__ import annotations

import itertools

from .core import parity_of_index as _p
from .fgen import f_element, indices
from .free import AbstractGen, FreeTensor, FreeYElement
from .pbw import Element, GeneratorOrder, multiply, principal_antiautomorphism
from .relations import (
    T,
    defrel_element,
    t_series,
    yang37_element,
    yang38_element,
    yang_relation_coeff,
    yangrel_series,
)
from .report import Report

__all__ = [
    "defrel_element",
    "yang_relation_coeff",
    "omega_image",
    "omega_inverse",
    "omega_constant",
    "verify_omega_correspondence",
    "verify_series_equivalence",
    "tau_image",
    "TauEvaluator",
    "verify_tau_relations",
    "comult_coeff",
    "comultiply",
    "verify_primitive",
    "verify_coassociativity",
]


def _sgn(p: int) -> int:
    return -1 if p % 2 else 1


def _reversal_sign(word) -> int:
    odd = sum(g.parity for g in word)
    return _sgn(odd * (odd - 1) // 2)


def _anti_map(a: FreeYElement, src: str, dst: str, gen_sign, mutate=None) -> FreeYElement:
    out: dict = {}
    for w, c in a.terms.items():
        if any(g.alphabet != src for g in w):
            raise ValueError(f"expected a word over the {src} alphabet")
        sign = 1 if mutate == "reversal" else _reversal_sign(w)
        new = []
        for g in reversed(w):
            if mutate != "generator":
                sign *= gen_sign(g)
            new.append(AbstractGen(dst, g.j, g.i, g.n))
        key = tuple(new)
        out[key] = out.get(key, 0) + sign * c
    return FreeYElement(a.N, out)


def omega_image(a: FreeYElement, mutate: str | None = None) -> FreeYElement:
    """Anti-homomorphism ``F(n)_ij -> (-1)^{i bar} T(n)_ji`` on F-words.

    ``mutate`` is ``"generator"`` (drop the generator sign) or
    ``"reversal"`` (drop the Koszul sign of word reversal); test use only.
    """
    return _anti_map(a, "F", "T", lambda g: _sgn(_p(g.i)), mutate)


def omega_inverse(a: FreeYElement) -> FreeYElement:
    """Inverse of :func:`omega_image`: ``T(n)_ab -> (-1)^{b bar} F(n)_ba``."""
    return _anti_map(a, "T", "F", lambda g: _sgn(_p(g.j)))


def omega_constant(i: int, j: int, k: int, l: int) -> int:
    """Scalar relating the image of a defining relation to its Yangian form."""
    sigma = _sgn(_p(i) * _p(j) + _p(i) * _p(k) + _p(j) * _p(k))
    return -_sgn(_p(i) + _p(k)) * sigma


def verify_omega_correspondence(
    N: int, mmax: int, nmax: int, mutate_omega: str | None = None, mutate_37: int | None = None
) -> Report:
    """``omega(defrel(m,n,i,j,k,l)) = c * yang_relation_coeff(m,n,j,i,l,k)``.

    Both sides are brought to the ``T(n)_{-i,-j} = (-1)^n T(n)_ij`` normal
    form before comparison; the count of instances that already agree
    verbatim is recorded in ``info``.
    """
    rep = Report("omega", {"N": N, "mmax": mmax, "nmax": nmax})
    verbatim = 0
    for m in range(1, mmax + 1):
        for n in range(1, nmax + 1):
            for i, j, k, l in itertools.product(indices(N), repeat=4):
                img = omega_image(defrel_element(m, n, i, j, k, l, N), mutate_omega)
                target = omega_constant(i, j, k, l) * yang_relation_coeff(
                    m, n, j, i, l, k, N, mutate_37
                )
                if not (img - target):
                    verbatim += 1
                d = (img - target).normalize_symmetry()
                rep.check((m, n, i, j, k, l), d if d else None)
    rep.info["verbatim_matches"] = verbatim
    return rep


def verify_series_equivalence(N: int, degmax: int, mutate_37: int | None = None) -> Report:
    """Series relation against its coefficient forms.

    Checks, for every index tuple: each coefficient of the series relation
    equals the matching shifted relation (total degree up to ``degmax``);
    the shifted relation is the difference of two unshifted ones; every
    unshifted relation with ``m + n <= degmax`` is a telescoping sum of
    shifted ones; the reflection rule for the generating series.
    """
    if degmax < 2:
        from .errors import ConfigurationError

        raise ConfigurationError("degmax must be at least 2")
    rep = Report("series", {"N": N, "degmax": degmax})
    D = degmax + 1
    idx = indices(N)
    pairs37 = []
    for i, j, k, l in itertools.product(idx, repeat=4):
        s = yangrel_series(l, k, j, i, D, N)
        for a in range(0, degmax + 1):
            for b in range(0, degmax + 1 - a):
                d = s.coeff(1 - a, 1 - b) - yang38_element(b, a, i, j, k, l, N)
                rep.check(("coeff", b, a, i, j, k, l), d if d else None)
                d = yang38_element(b, a, i, j, k, l, N) - (
                    yang37_element(b + 1, a - 1, i, j, k, l, N, mutate_37)
                    - yang37_element(b - 1, a + 1, i, j, k, l, N, mutate_37)
                )
                rep.check(("shift", b, a, i, j, k, l), d if d else None)
        for m in range(1, degmax):
            for n in range(1, degmax + 1 - m):
                acc = FreeYElement(N)
                for t in range(0, (m - 1) // 2 + 1):
                    acc = acc + yang38_element(m - 1 - 2 * t, n + 1 + 2 * t, i, j, k, l, N)
                d = acc - yang37_element(m, n, i, j, k, l, N, mutate_37)
                pairs37.append((m, n))
                rep.check(("telescope", m, n, i, j, k, l), d if d else None)
    for i, j in itertools.product(idx, repeat=2):
        flipped = t_series(-i, -j, "x", D, N)
        reflected = t_series(i, j, "x", D, N, negate=True)
        for n in range(1, D + 1):
            # the x^{-n} coefficient must be the rule used by normalize_symmetry
            rel = flipped.coeff(-n, 0) - reflected.coeff(-n, 0)
            d = rel - (T(-i, -j, n, N) - _sgn(n) * T(i, j, n, N))
            if not d:
                d = rel.normalize_symmetry()
            rep.check(("reflect", n, i, j), d if d else None)
    rep.info["unshifted_degrees"] = sorted(set(pairs37))
    return rep


def tau_image(i: int, j: int, n: int, N: int, M: int) -> Element:
    """Image of ``T(n)_ij`` in U(q_{N+M})."""
    K = N + M
    for a in (i, j):
        if a == 0 or abs(a) > N:
            from .errors import InvalidIndexError

            raise InvalidIndexError(f"index {a} out of range for N={N}")
    if n == 0:
        return Element.scalar(K, 1 if i == j else 0)
    if n < 0:
        return Element.zero(K)
    return _sgn(_p(j)) * principal_antiautomorphism(f_element(j, i, n, K))


class TauEvaluator:
    """Homomorphic evaluation of T-words in U(q_{N+M}), with a word cache."""

    def __init__(self, N: int, M: int):
        self.N, self.M, self.K = N, M, N + M
        self._cache: dict = {}

    def word(self, w: tuple) -> Element:
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        if not w:
            out = Element.one(self.K)
        elif len(w) == 1:
            g = w[0]
            out = tau_image(g.i, g.j, g.n, self.N, self.M)
        else:
            out = multiply(self.word(w[:-1]), self.word(w[-1:]))
        self._cache[w] = out
        return out

    def __call__(self, a: FreeYElement) -> Element:
        out: dict = {}
        for w, c in a.terms.items():
            for m, v in self.word(w).raw.items():
                out[m] = out.get(m, 0) + c * v
        return Element(GeneratorOrder.lex(self.K), out)


def verify_tau_relations(N: int, M: int, degmax: int, mutate_37: int | None = None) -> Report:
    """Every Yangian relation with ``m + n <= degmax`` holds for the tau images."""
    rep = Report("tau", {"N": N, "M": M, "degmax": degmax})
    ev = TauEvaluator(N, M)
    idx = indices(N)
    for m in range(1, degmax):
        for n in range(1, degmax + 1 - m):
            for a, b, c, d in itertools.product(idx, repeat=4):
                val = ev(yang_relation_coeff(m, n, a, b, c, d, N, mutate_37))
                rep.check(("rel", m, n, a, b, c, d), val if val else None)
    for n in range(1, degmax + 1):
        for i, j in itertools.product(idx, repeat=2):
            val = ev(T(-i, -j, n, N) - _sgn(n) * T(i, j, n, N))
            rep.check(("reflect", n, i, j), val if val else None)
    return rep


def _tensor(x: FreeYElement, y: FreeYElement) -> FreeTensor:
    out: dict = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            out[(w1, w2)] = out.get((w1, w2), 0) + c1 * c2
    return FreeTensor(2, out)


def comult_coeff(i: int, j: int, n: int, N: int) -> FreeTensor:
    """Coproduct of ``T(n)_ij`` in the free tensor square."""
    out = FreeTensor(2)
    for k in indices(N):
        sign = _sgn((_p(i) + _p(k)) * (_p(j) + _p(k)))
        for a in range(0, n + 1):
            out = out + sign * _tensor(T(i, k, a, N), T(k, j, n - a, N))
    return out


def _comult_word(w: tuple, N: int) -> FreeTensor:
    acc = FreeTensor.one(2)
    for g in w:
        if g.alphabet != "T":
            raise ValueError("the coproduct is defined on T-words")
        acc = acc * comult_coeff(g.i, g.j, g.n, N)
    return acc


def comultiply(a: FreeYElement) -> FreeTensor:
    """Extend the coproduct multiplicatively to arbitrary T-elements."""
    out = FreeTensor(2)
    for w, c in a.terms.items():
        out = out + c * _comult_word(w, a.N)
    return out


def _leg_apply(t: FreeTensor, leg: int, N: int) -> FreeTensor:
    """Apply the coproduct to one leg of a tensor square, landing in the cube."""
    out: dict = {}
    for key, c in t.terms.items():
        for (u, v), d in _comult_word(key[leg], N).terms.items():
            new = (u, v, key[1]) if leg == 0 else (key[0], u, v)
            out[new] = out.get(new, 0) + c * d
    return FreeTensor(3, out)


def verify_primitive(N: int) -> Report:
    """``Delta(T(1)_ij) = T(1)_ij (x) 1 + 1 (x) T(1)_ij``."""
    rep = Report("primitive", {"N": N})
    one = FreeYElement.one(N)
    for i, j in itertools.product(indices(N), repeat=2):
        t = T(i, j, 1, N)
        d = comult_coeff(i, j, 1, N) - (_tensor(t, one) + _tensor(one, t))
        rep.check((i, j), d if d else None)
    return rep


def verify_coassociativity(N: int, nmax: int) -> Report:
    rep = Report("coassoc", {"N": N, "nmax": nmax})
    for n in range(1, nmax + 1):
        for i, j in itertools.product(indices(N), repeat=2):
            d = comult_coeff(i, j, n, N)
            left = _leg_apply(d, 0, N)
            right = _leg_apply(d, 1, N)
            diff = left - right
            rep.check((n, i, j), diff if diff else None)
    return rep

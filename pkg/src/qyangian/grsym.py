"""Symmetric superalgebra S(q_K), matrix-unit tensors and the X_s witness.

Variables are integer tuples whose first entry selects the kind:

* ``(0, i, j)``  the generator ``F[i,j]`` of S(q_K), canonical (``i > 0``);
* ``(1, n, i, j)``  the tail variable ``x(n)[i,j]`` of the X_s quotient;
* ``(2, r, 1)``  the diagonal variable ``x[r]``.

A variable is odd exactly when its last entry is negative.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .core import GeneratorRef, parity_of_index
from .errors import ConfigurationError, InvalidIndexError, UndefinedDegreeError
from .fgen import indices
from .pbw import Element, algebra
from .report import Report

__all__ = [
    "SuperPolynomial",
    "TensorElement",
    "fvar",
    "leading_symbol",
    "symbol",
    "f_symbol",
    "c_symbol",
    "phi_map",
    "psi_map",
    "permute",
    "cyclic_H",
    "verify_eh_identity",
    "verify_eh",
    "verify_phi_psi",
    "vanishing_sum",
    "verify_vanishing_sums",
    "XsSubstitution",
    "xs_independence_check",
]


def _odd(v: tuple) -> bool:
    return v[-1] < 0


def fvar(i: int, j: int) -> tuple:
    """Variable for ``F[i,j]``, using ``F[-i,-j] = F[i,j]``."""
    return (0, i, j) if i > 0 else (0, -i, -j)


def _mono_mul(m1: tuple, m2: tuple) -> tuple[int, tuple] | None:
    """Product of two sorted monomials as ``(sign, monomial)``; ``None`` if zero."""
    if not m1:
        return 1, m2
    if not m2:
        return 1, m1
    odd1 = [v for v in m1 if _odd(v)]
    swaps = 0
    for v in m2:
        if _odd(v):
            if v in odd1:
                return None
            swaps += sum(1 for u in odd1 if u > v)
    return (-1 if swaps % 2 else 1), tuple(sorted(m1 + m2))


def _var_str(v: tuple) -> str:
    if v[0] == 0:
        return f"F[{v[1]},{v[2]}]"
    if v[0] == 1:
        return f"x{v[1]}[{v[2]},{v[3]}]"
    return f"x[{v[1]}]"


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class SuperPolynomial:
    """Element of a free supercommutative algebra.

    Monomials are sorted tuples of variables with repetition allowed for
    even variables only; reordering odd variables contributes the sign.
    """

    __slots__ = ("K", "_t")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, K: int, terms: Mapping[tuple, Fraction] | None = None):
        self.K = K
        self._t = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, K: int, c=1) -> "SuperPolynomial":
        return cls(K, {(): Fraction(c)})

    @classmethod
    def var(cls, K: int, v: tuple) -> "SuperPolynomial":
        return cls(K, {(v,): Fraction(1)})

    @classmethod
    def product(cls, K: int, variables: Iterable[tuple], coeff=1) -> "SuperPolynomial":
        """Product of the variables in the given order."""
        sign, mono = 1, ()
        for v in variables:
            r = _mono_mul(mono, (v,))
            if r is None:
                return cls(K)
            s, mono = r
            sign *= s
        return cls(K, {mono: sign * Fraction(coeff)})

    @property
    def terms(self) -> dict:
        return self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self._t == other._t

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        out = dict(self._t)
        for m, c in other._t.items():
            out[m] = out.get(m, 0) + c
        return SuperPolynomial(self.K, out)

    def __neg__(self) -> "SuperPolynomial":
        return SuperPolynomial(self.K, {m: -c for m, c in self._t.items()})

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "SuperPolynomial":
        if not isinstance(other, SuperPolynomial):
            c = Fraction(other)
            return SuperPolynomial(self.K, {m: c * v for m, v in self._t.items()})
        out: dict = {}
        for m1, c1 in self._t.items():
            for m2, c2 in other._t.items():
                r = _mono_mul(m1, m2)
                if r is None:
                    continue
                s, m = r
                out[m] = out.get(m, 0) + s * c1 * c2
        return SuperPolynomial(self.K, out)

    __rmul__ = __mul__

    def degree(self) -> int:
        if not self._t:
            raise UndefinedDegreeError("the zero polynomial has no degree")
        return max(len(m) for m in self._t)

    def variables(self) -> set[tuple]:
        return {v for m in self._t for v in m}

    def substitute(self, images: Mapping[tuple, "SuperPolynomial"], default=None) -> "SuperPolynomial":
        """Parity-preserving substitution; unmapped variables go to ``default``."""
        out = SuperPolynomial(self.K)
        for m, c in self._t.items():
            acc = SuperPolynomial.one(self.K, c)
            for v in m:
                img = images.get(v, default)
                if img is None:
                    img = SuperPolynomial.var(self.K, v)
                acc = acc * img
                if not acc:
                    break
            out = out + acc
        return out

    def items(self):
        for m in sorted(self._t, key=lambda m: (-len(m), m)):
            yield m, self._t[m]

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for m, c in self.items():
            body = _render_mono(m)
            if m and abs(c) == 1:
                text = body
            else:
                text = f"{_fmt(abs(c))}*{body}" if m else _fmt(abs(c))
            parts.append(("-" if c < 0 else "+", text))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return s + "".join(f" {sg} {t}" for sg, t in parts[1:])

    def __repr__(self) -> str:
        return f"SuperPolynomial({self})"

    def to_dict(self) -> dict:
        return {
            "algebra": {"family": "S(q)", "size": self.K},
            "terms": [
                {"coeff": _fmt(c), "variables": [_var_json(v, e) for v, e in _runs(m)]}
                for m, c in self.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _runs(m: tuple):
    out = []
    for v in m:
        if out and out[-1][0] == v:
            out[-1][1] += 1
        else:
            out.append([v, 1])
    return [(v, e) for v, e in out]


def _render_mono(m: tuple) -> str:
    return "*".join(_var_str(v) + (f"^{e}" if e > 1 else "") for v, e in _runs(m))


def _var_json(v: tuple, e: int) -> dict:
    if v[0] == 0:
        return {"i": v[1], "j": v[2], "e": e}
    if v[0] == 1:
        return {"x": v[1], "i": v[2], "j": v[3], "e": e}
    return {"diag": v[1], "e": e}


# symbols


def symbol(a: Element, degree: int) -> SuperPolynomial:
    """Image in S^degree(q_K) of ``a``, read as an element of filtration ``degree``.

    Monomials of other lengths are ignored, so the result may be zero.
    """
    pairs = algebra(a.order).pairs
    out = SuperPolynomial(a.K)
    for mono, c in a.raw.items():
        if len(mono) == degree:
            out = out + SuperPolynomial.product(a.K, (fvar(*pairs[r]) for r in mono), c)
    return out


def leading_symbol(a: Element) -> SuperPolynomial:
    """Top filtration-degree part of ``a`` read in S(q_K)."""
    if not a:
        raise UndefinedDegreeError("the zero element has no symbol")
    return symbol(a, max(len(m) for m in a.raw))


def _chain_sum(K: int, first: int, last: int, n: int):
    """Sum over index chains of signed products ``F[a,k1] F[k1,k2] ... F[k_{n-1},b]``."""
    out: dict = {}
    for chain in itertools.product(indices(K), repeat=n - 1):
        path = (first,) + chain + (last,)
        sign = -1 if sum(1 for k in chain if k < 0) % 2 else 1
        p = SuperPolynomial.product(K, (fvar(a, b) for a, b in zip(path, path[1:])), sign)
        for m, c in p.terms.items():
            out[m] = out.get(m, 0) + c
    return SuperPolynomial(K, out)


def f_symbol(i: int, j: int, n: int, K: int) -> SuperPolynomial:
    """Symbol of F(n)_ij, expanded directly in S(q_K)."""
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    if n == 1:
        return SuperPolynomial.var(K, fvar(i, j))
    return _chain_sum(K, i, j, n)


def c_symbol(n: int, K: int) -> SuperPolynomial:
    out = SuperPolynomial(K)
    for k in indices(K):
        out = out + f_symbol(k, k, n, K)
    return out


# tensors of matrix units


def _eparity(i: int, j: int) -> int:
    return parity_of_index(i) ^ parity_of_index(j)


class TensorElement:
    """Linear combination of tensor words ``E[i1,j1] (x) ... (x) E[in,jn]``."""

    __slots__ = ("K", "n", "_t")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, K: int, n: int, terms: Mapping[tuple, Fraction] | None = None):
        self.K, self.n = K, n
        self._t = {w: Fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, K: int, pairs: Sequence[tuple[int, int]], coeff=1) -> "TensorElement":
        return cls(K, len(pairs), {tuple(pairs): Fraction(coeff)})

    @classmethod
    def unit(cls, K: int) -> "TensorElement":
        """The identity ``sum_a E[a,a]`` of one tensor factor."""
        return cls(K, 1, {((a, a),): Fraction(1) for a in indices(K)})

    @classmethod
    def identity(cls, K: int, n: int) -> "TensorElement":
        out = cls(K, 0, {(): Fraction(1)})
        for _ in range(n):
            out = out.tensor(cls.unit(K))
        return out

    @classmethod
    def slot(cls, K: int, n: int, p: int, i: int, j: int) -> "TensorElement":
        """``1 (x) ... (x) E[i,j] (x) ... (x) 1`` with ``E[i,j]`` in slot ``p`` (1-based)."""
        out = cls(K, 0, {(): Fraction(1)})
        for q in range(1, n + 1):
            out = out.tensor(cls.word(K, [(i, j)]) if q == p else cls.unit(K))
        return out

    @property
    def terms(self) -> dict:
        return self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.n == other.n and self._t == other._t

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self._t)
        for w, c in other._t.items():
            out[w] = out.get(w, 0) + c
        return TensorElement(self.K, self.n, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.K, self.n, {w: -c for w, c in self._t.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __rmul__(self, c) -> "TensorElement":
        c = Fraction(c)
        return TensorElement(self.K, self.n, {w: c * v for w, v in self._t.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return Fraction(other) * self
        if other.n != self.n:
            raise ValueError("tensor lengths differ")
        out: dict = {}
        for x, a in self._t.items():
            px = [_eparity(*e) for e in x]
            for y, b in other._t.items():
                word = []
                for (i, j), (k, l) in zip(x, y):
                    if j != k:
                        break
                    word.append((i, l))
                else:
                    py = [_eparity(*e) for e in y]
                    exp = sum(py[p] * sum(px[p + 1:]) for p in range(self.n))
                    key = tuple(word)
                    c = a * b
                    out[key] = out.get(key, 0) + (-c if exp % 2 else c)
        return TensorElement(self.K, self.n, out)

    def tensor(self, other: "TensorElement") -> "TensorElement":
        out: dict = {}
        for x, a in self._t.items():
            for y, b in other._t.items():
                out[x + y] = out.get(x + y, 0) + a * b
        return TensorElement(self.K, self.n + other.n, out)

    def __str__(self) -> str:
        if not self._t:
            return "0"
        return " + ".join(
            f"{_fmt(self._t[w])}*" + " (x) ".join(f"E[{i},{j}]" for i, j in w)
            for w in sorted(self._t)
        )

    def __repr__(self) -> str:
        return f"TensorElement(n={self.n}: {self})"

    @classmethod
    def from_dict(cls, data: Mapping) -> "TensorElement":
        alg = data["algebra"]
        K, n = int(alg["size"]), int(alg["length"])
        out: dict = {}
        for term in data.get("terms", []):
            word = tuple((int(e["i"]), int(e["j"])) for e in term["tensor"])
            if len(word) != n:
                raise ValueError(f"tensor word of length {len(word)} in length-{n} element")
            for i, j in word:
                if i == 0 or j == 0 or abs(i) > K or abs(j) > K:
                    raise InvalidIndexError(f"E[{i},{j}] out of range for size {K}")
            out[word] = out.get(word, 0) + Fraction(term["coeff"])
        return cls(K, n, out)

    def to_dict(self) -> dict:
        return {
            "algebra": {"family": "End", "size": self.K, "length": self.n},
            "terms": [
                {"coeff": _fmt(self._t[w]), "tensor": [{"i": i, "j": j} for i, j in w]}
                for w in sorted(self._t)
            ],
        }


def permute(t: TensorElement, perm: Sequence[int]) -> TensorElement:
    """Signed action: factor in slot ``p`` moves to slot ``perm[p]`` (0-based)."""
    if sorted(perm) != list(range(t.n)):
        raise ValueError(f"{perm!r} is not a permutation of {t.n} slots")
    out: dict = {}
    for w, c in t.terms.items():
        new = [None] * t.n
        for p, e in enumerate(w):
            new[perm[p]] = e
        par = [_eparity(*e) for e in w]
        swaps = sum(
            par[p] * par[q]
            for p in range(t.n)
            for q in range(p + 1, t.n)
            if perm[p] > perm[q]
        )
        key = tuple(new)
        out[key] = out.get(key, 0) + (-c if swaps % 2 else c)
    return TensorElement(t.K, t.n, out)


def phi_map(t: TensorElement) -> SuperPolynomial:
    out = SuperPolynomial(t.K)
    for w, c in t.terms.items():
        out = out + SuperPolynomial.product(t.K, (fvar(i, j) for i, j in w), c)
    return out


def psi_map(gens: Sequence[GeneratorRef]) -> TensorElement:
    """``2^{-n}`` times the symmetrized tensor of ``E[i,j] + E[-i,-j]``."""
    if not gens:
        raise ValueError("psi needs at least one generator")
    K = gens[0].algebra_size
    n = len(gens)
    t = TensorElement(K, 0, {(): Fraction(1)})
    for g in gens:
        t = t.tensor(TensorElement(K, 1, {((g.i, g.j),): 1, ((-g.i, -g.j),): 1}))
    out = TensorElement(K, n)
    for perm in itertools.permutations(range(n)):
        out = out + permute(t, perm)
    return Fraction(1, 2**n * math.factorial(n)) * out


def cyclic_H(n: int, K: int) -> TensorElement:
    """Image of the cycle ``(1, 2, ..., n)`` in the n-th tensor power."""
    if n < 2:
        raise ValueError("the cycle needs n >= 2")
    out: dict = {}
    for ks in itertools.product(indices(K), repeat=n):
        sign = -1 if sum(1 for k in ks[:-1] if k < 0) % 2 else 1
        word = ((ks[-1], ks[0]),) + tuple(zip(ks, ks[1:]))
        out[word] = out.get(word, 0) + sign
    return TensorElement(K, n, out)


def verify_eh_identity(n: int, i: int, j: int, K: int) -> bool:
    """``phi_n(E[i,j] (x) 1 ... (x) 1 * H) == f(n)_ij``."""
    if n == 1:
        return phi_map(TensorElement.word(K, [(i, j)])) == f_symbol(i, j, 1, K)
    lhs = phi_map(TensorElement.slot(K, n, 1, i, j) * cyclic_H(n, K))
    return lhs == f_symbol(i, j, n, K)


def verify_eh(n: int, K: int) -> Report:
    """:func:`verify_eh_identity` for every index pair."""
    rep = Report("eh", {"n": n, "K": K})
    for i in indices(K):
        for j in indices(K):
            rep.check((i, j), None if verify_eh_identity(n, i, j, K) else {"i": i, "j": j})
    return rep


def verify_phi_psi(n: int, K: int) -> Report:
    """``phi_n(psi_n(F_1 ... F_n)) = F_1 ... F_n`` for every ordered generator product."""
    from .core import generators

    rep = Report("phipsi", {"n": n, "K": K})
    for gens in itertools.product(generators(K), repeat=n):
        want = SuperPolynomial.product(K, (fvar(g.i, g.j) for g in gens))
        d = phi_map(psi_map(gens)) - want
        rep.check(tuple(g.pair for g in gens), d if d else None)
    return rep


def vanishing_sum(n: int, K: int, reordered: bool = False) -> SuperPolynomial:
    """The signed cyclic sum with the first index of the closing factor negated.

    ``reordered`` moves that closing factor to the end of each product.
    """
    out = SuperPolynomial(K)
    for ks in itertools.product(indices(K), repeat=n):
        sign = -1 if sum(1 for k in ks if k < 0) % 2 else 1
        chain = [fvar(a, b) for a, b in zip(ks, ks[1:])]
        close = fvar(-ks[-1], ks[0])
        factors = chain + [close] if reordered else [close] + chain
        out = out + SuperPolynomial.product(K, factors, sign)
    return out


def verify_vanishing_sums(n: int, K: int) -> Report:
    """Both forms of the vanishing sum, and ``phi_n(H) = c(n)``."""
    rep = Report("vanish", {"n": n, "K": K})
    for form in (False, True):
        v = vanishing_sum(n, K, reordered=form)
        rep.check(("reordered" if form else "direct", n), v if v else None)
    if n >= 2:
        d = phi_map(cyclic_H(n, K)) - c_symbol(n, K)
        rep.check(("phi(H)=c", n), d if d else None)
    return rep


# X_s quotient


@dataclass
class XsSubstitution:
    """The quotient of S(q_{N+M}) from the algebraic independence argument.

    ``osets`` maps each triple ``(i, j, n)`` with ``1 <= n <= s``,
    ``1 <= i <= N`` and ``1 <= |j| <= N`` to an ordered tuple of ``n - 1``
    indices above ``N``.  When omitted, consecutive blocks starting at
    ``N + 1`` are assigned in the order (n, i, j), and ``M`` is the
    smallest admissible value.
    """

    s: int
    N: int
    M: int | None = None
    osets: dict | None = None
    images: dict = field(init=False, repr=False)

    def __post_init__(self):
        if self.s < 1 or self.N < 1:
            raise ConfigurationError("need s >= 1 and N >= 1")
        trip = self.triples()
        if self.osets is None:
            nxt = self.N + 1
            self.osets = {}
            for t in trip:
                self.osets[t] = tuple(range(nxt, nxt + t[2] - 1))
                nxt += t[2] - 1
        if self.M is None:
            used = [x for o in self.osets.values() for x in o]
            self.M = max(used, default=self.N) - self.N + self.s
        self._validate(trip)
        self.images = self._images()

    def triples(self) -> list[tuple[int, int, int]]:
        return [
            (i, j, n)
            for n in range(1, self.s + 1)
            for i in range(1, self.N + 1)
            for j in indices(self.N)
        ]

    @property
    def K(self) -> int:
        return self.N + self.M

    def _validate(self, trip) -> None:
        if set(self.osets) != set(trip):
            raise ConfigurationError("O-sets must be given for exactly the admissible triples")
        seen: set[int] = set()
        top = self.N + self.M - self.s
        for (i, j, n), o in self.osets.items():
            if len(o) != n - 1:
                raise ConfigurationError(f"O-set for {(i, j, n)} must have {n - 1} elements")
            for x in o:
                if not self.N < x <= top:
                    raise ConfigurationError(f"index {x} outside {self.N + 1}..{top}")
                if x in seen:
                    raise ConfigurationError(f"index {x} used by two O-sets")
                seen.add(x)

    def _images(self) -> dict:
        K = self.K
        one = SuperPolynomial.one(K)
        img: dict = {}
        for (i, j, n), o in self.osets.items():
            path = (i,) + tuple(o)
            for a, b in zip(path, path[1:]):
                img[fvar(a, b)] = one
            img[fvar(path[-1], j)] = SuperPolynomial.var(K, (1, n, i, j))
        for r in range(1, self.s + 1):
            d = self.N + self.M - self.s + r
            img[fvar(d, d)] = SuperPolynomial.var(K, (2, r, 1))
        return img

    def apply(self, p: SuperPolynomial) -> SuperPolynomial:
        return p.substitute(self.images, default=SuperPolynomial(self.K))


def xs_independence_check(sub: XsSubstitution, stated_constant: bool = True) -> Report:
    """Triangularity of the images of f(n)_ij and odd c(n) in X_s.

    For f(n)_ij the image must be ``x(n)_ij`` plus products of tails of
    lower degree.  For c(n) the diagonal part must be ``k_n (x_1^n + ... +
    x_s^n)`` with ``k_n != 0`` and the remainder must use tails of degree at
    most ``n`` only; the observed ``k_n`` is recorded.  With
    ``stated_constant`` each ``k_n`` is also compared with ``2^n``.
    """
    rep = Report("independence", {"s": sub.s, "N": sub.N, "M": sub.M})
    K = sub.K
    leading = {}
    for i, j, n in sub.triples():
        img = sub.apply(f_symbol(i, j, n, K))
        lead = (1, n, i, j)
        rest = img - SuperPolynomial.var(K, lead)
        bad = [m for m in rest.terms if any(v[0] != 1 or v[1] >= n for v in m)]
        ok = img.terms.get((lead,)) == 1 and not bad
        rep.check(("f", i, j, n), None if ok else {"image": img.to_dict()})
        leading[f"f({n})[{i},{j}]"] = str(SuperPolynomial.var(K, lead))
    constants = {}
    for n in range(1, sub.s + 1, 2):
        img = sub.apply(c_symbol(n, K))
        powers = [tuple([(2, r, 1)] * n) for r in range(1, sub.s + 1)]
        kappa = img.terms.get(powers[0], Fraction(0))
        diag = SuperPolynomial(K, {m: kappa for m in powers})
        rest = img - diag
        bad = [m for m in rest.terms if any(v[0] != 1 or v[1] > n for v in m)]
        ok = kappa != 0 and not bad
        rep.check(("c", n), None if ok else {"image": img.to_dict()})
        constants[n] = _fmt(kappa)
        leading[f"c({n})"] = str(diag)
        if stated_constant and kappa != 2**n:
            rep.check(("c-constant", n), {"stated": 2**n, "observed": _fmt(kappa)})
        elif stated_constant:
            rep.check(("c-constant", n), None)
    rep.info["leading_terms"] = leading
    rep.info["diagonal_constants"] = constants
    rep.info["free_generators"] = len(sub.triples()) + sub.s
    return rep

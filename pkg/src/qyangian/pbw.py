"""PBW-ordered elements of the enveloping superalgebra U(q_K).

An :class:`Element` is a finite linear combination of ordered monomials in
the canonical generators, relative to a :class:`GeneratorOrder`.  Products
are brought to normal form by the straightening kernel in ``_backend``.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from ._backend import Straightener
from .core import GeneratorRef, bracket_terms, canonicalize, generators
from .errors import InvalidIndexError, SizeMismatchError, UndefinedDegreeError

__all__ = [
    "GeneratorOrder",
    "Monomial",
    "Element",
    "algebra",
    "multiply",
    "supercommutator",
    "filtration_degree",
    "z2_degree",
    "principal_antiautomorphism",
    "reorder",
]


@dataclass(frozen=True)
class GeneratorOrder:
    """A total order on the canonical generators of q_K.

    ``lex`` sorts by ``(i, j)``.  ``hc`` puts the level-K generators in four
    blocks: ``F[K,j]`` with ``|j| < K``, then ``F[K,+-K]``, then the
    generators of q_{K-1}, then ``F[i,+-K]`` with ``i < K``; lex inside each
    block.
    """

    kind: str
    size: int

    def __post_init__(self):
        if self.kind not in ("lex", "hc"):
            raise ValueError(f"unknown generator order {self.kind!r}")
        if self.size < 0:
            raise InvalidIndexError(f"algebra size must be nonnegative, got {self.size}")
        if self.kind == "hc" and self.size < 1:
            raise InvalidIndexError("the hc order needs a positive algebra size")

    @classmethod
    def lex(cls, K: int) -> "GeneratorOrder":
        return cls("lex", K)

    @classmethod
    def hc(cls, K: int) -> "GeneratorOrder":
        return cls("hc", K)

    @classmethod
    def parse(cls, text: str, K: int) -> "GeneratorOrder":
        if text == "lex":
            return cls.lex(K)
        m = re.fullmatch(r"hc:(\d+)", text)
        if m and int(m.group(1)) == K:
            return cls.hc(K)
        raise SizeMismatchError(f"order {text!r} does not fit q_{K}")

    @property
    def name(self) -> str:
        return "lex" if self.kind == "lex" else f"hc:{self.size}"

    def block(self, pair: tuple[int, int]) -> int:
        i, j = pair
        K = self.size
        if self.kind == "lex":
            return 0
        if i == K:
            return 1 if abs(j) < K else 2
        return 3 if abs(j) < K else 4

    def pairs(self) -> list[tuple[int, int]]:
        gens = [g.pair for g in generators(self.size)]
        return sorted(gens, key=lambda p: (self.block(p), p))


class _Algebra:
    """Rank tables and the straightening kernel for one generator order."""

    def __init__(self, order: GeneratorOrder):
        self.order = order
        self.K = order.size
        self.pairs = order.pairs()
        self.rank = {p: r for r, p in enumerate(self.pairs)}
        self.parity = [1 if j < 0 else 0 for _, j in self.pairs]
        n = len(self.pairs)
        bracket = []
        for x in range(n):
            row = []
            for g in range(n):
                i, j = self.pairs[x]
                k, l = self.pairs[g]
                row.append(
                    tuple(
                        (self.rank[p], c)
                        for p, c in sorted(bracket_terms(i, j, k, l).items())
                    )
                )
            bracket.append(row)
        square = []
        for x in range(n):
            if not self.parity[x]:
                square.append(())
                continue
            half = []
            for h, c in bracket[x][x]:
                assert c % 2 == 0
                half.append((h, c // 2))
            square.append(tuple(half))
        self.kernel = Straightener(self.parity, bracket, square)

    def rank_of(self, i: int, j: int) -> int:
        g = canonicalize(self.K, i, j)
        return self.rank[g.pair]


@lru_cache(maxsize=None)
def algebra(order: GeneratorOrder) -> _Algebra:
    return _Algebra(order)


@dataclass(frozen=True)
class Monomial:
    """An ordered monomial: ``(generator, exponent)`` pairs in PBW order."""

    factors: tuple[tuple[GeneratorRef, int], ...]

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    @property
    def parity(self) -> int:
        return sum(g.parity * e for g, e in self.factors) % 2

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(str(g) if e == 1 else f"{g}^{e}" for g, e in self.factors)


def _runs(mono: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    out: list[list[int]] = []
    for r in mono:
        if out and out[-1][0] == r:
            out[-1][1] += 1
        else:
            out.append([r, 1])
    return tuple((r, e) for r, e in out)


def _sort_key(mono: tuple[int, ...]):
    return (-len(mono), _runs(mono))


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Element:
    """An element of U(q_K) in PBW normal form.

    Instances are treated as immutable values.
    """

    __slots__ = ("order", "_t")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, order: GeneratorOrder, raw: Mapping[tuple[int, ...], Fraction]):
        # raw: rank tuples already in normal form for `order`
        self.order = order
        self._t = {m: Fraction(c) for m, c in raw.items() if c}

    # construction

    @classmethod
    def zero(cls, K: int, order: GeneratorOrder | None = None) -> "Element":
        return cls(order or GeneratorOrder.lex(K), {})

    @classmethod
    def one(cls, K: int, order: GeneratorOrder | None = None) -> "Element":
        return cls.scalar(K, 1, order)

    @classmethod
    def scalar(cls, K: int, c, order: GeneratorOrder | None = None) -> "Element":
        return cls(order or GeneratorOrder.lex(K), {(): Fraction(c)})

    @classmethod
    def generator(cls, K: int, i: int, j: int, order: GeneratorOrder | None = None) -> "Element":
        order = order or GeneratorOrder.lex(K)
        alg = algebra(order)
        return cls(order, {(alg.rank_of(i, j),): Fraction(1)})

    @classmethod
    def linear(cls, K: int, coeffs: Mapping[tuple[int, int], Fraction],
               order: GeneratorOrder | None = None) -> "Element":
        order = order or GeneratorOrder.lex(K)
        alg = algebra(order)
        raw: dict[tuple[int, ...], Fraction] = {}
        for (i, j), c in coeffs.items():
            key = (alg.rank_of(i, j),)
            raw[key] = raw.get(key, Fraction(0)) + Fraction(c)
        return cls(order, raw)

    @classmethod
    def from_word(cls, K: int, word: Iterable[tuple[int, int]], coeff=1,
                  order: GeneratorOrder | None = None) -> "Element":
        """The product of the generators in ``word``, taken in that order."""
        order = order or GeneratorOrder.lex(K)
        alg = algebra(order)
        ranks = [alg.rank_of(i, j) for i, j in word]
        c = Fraction(coeff)
        return cls(order, {m: c * v for m, v in alg.kernel.mul_word(ranks).items()})

    # inspection

    @property
    def K(self) -> int:
        return self.order.size

    @property
    def raw(self) -> dict[tuple[int, ...], Fraction]:
        return self._t

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in deterministic order: higher degree first, then by key."""
        pairs = algebra(self.order).pairs
        K = self.K
        for mono in sorted(self._t, key=_sort_key):
            factors = tuple((GeneratorRef(K, *pairs[r]), e) for r, e in _runs(mono))
            yield Monomial(factors), self._t[mono]

    def coefficient(self, word: Iterable[tuple[int, int]]) -> Fraction:
        alg = algebra(self.order)
        key = tuple(sorted(alg.rank_of(i, j) for i, j in word))
        return self._t.get(key, Fraction(0))

    # arithmetic

    def _same(self, other: "Element") -> None:
        if self.order != other.order:
            raise SizeMismatchError(
                f"elements over q_{self.K}/{self.order.name} and "
                f"q_{other.K}/{other.order.name}"
            )

    def __add__(self, other):
        if not isinstance(other, Element):
            other = Element.scalar(self.K, other, self.order)
        self._same(other)
        out = dict(self._t)
        for m, c in other._t.items():
            out[m] = out.get(m, 0) + c
        return Element(self.order, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.order, {m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        c = Fraction(other)
        return Element(self.order, {m: c * v for m, v in self._t.items()})

    def __rmul__(self, other):
        c = Fraction(other)
        return Element(self.order, {m: c * v for m, v in self._t.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Element.scalar(self.K, other, self.order)
        if not isinstance(other, Element):
            return NotImplemented
        if self.K != other.K:
            return False
        if self.order != other.order:
            other = reorder(other, self.order)
        return self._t == other._t

    def parity_components(self) -> dict[int, "Element"]:
        par = algebra(self.order).parity
        comp: dict[int, dict] = {0: {}, 1: {}}
        for m, c in self._t.items():
            comp[sum(par[r] for r in m) % 2][m] = c
        return {p: Element(self.order, t) for p, t in comp.items() if t}

    # rendering

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for mono, c in self.items():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono.factors:
                body = _fmt_coeff(a)
            elif a == 1:
                body = str(mono)
            else:
                body = f"{_fmt_coeff(a)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Element(q_{self.K}, {self.order.name}: {self})"

    def to_dict(self) -> dict:
        return {
            "algebra": {"family": "q", "size": self.K},
            "order": self.order.name,
            "terms": [
                {
                    "coeff": _fmt_coeff(c),
                    "monomial": [{"i": g.i, "j": g.j, "e": e} for g, e in mono.factors],
                }
                for mono, c in self.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Element":
        alg_info = data.get("algebra", {})
        if alg_info.get("family", "q") != "q":
            raise ValueError(f"unsupported algebra family {alg_info.get('family')!r}")
        K = int(alg_info["size"])
        order = GeneratorOrder.parse(data.get("order", "lex"), K)
        out = Element.zero(K, order)
        for term in data.get("terms", []):
            word = []
            for f in term["monomial"]:
                e = int(f.get("e", 1))
                if e < 1:
                    raise InvalidIndexError("exponents must be positive")
                word.extend([(int(f["i"]), int(f["j"]))] * e)
            out = out + Element.from_word(K, word, Fraction(term["coeff"]), order)
        return out

    @classmethod
    def from_json(cls, text: str) -> "Element":
        return cls.from_dict(json.loads(text))

    @classmethod
    def parse(cls, text: str, K: int, order: GeneratorOrder | None = None) -> "Element":
        """Parse the text rendering, e.g. ``3/2*F[1,-2]*F[2,1]^2 - F[1,1] + 1``."""
        order = order or GeneratorOrder.lex(K)
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty element text")
        if src[0] not in "+-":
            src = "+" + src
        out = Element.zero(K, order)
        for sign, body in re.findall(r"([+-])([^+-]+)", _protect(src)):
            body = body.replace("~", "-")
            coeff = Fraction(1)
            word: list[tuple[int, int]] = []
            for factor in body.split("*"):
                m = re.fullmatch(r"F\[(-?\d+),(-?\d+)\](?:\^(\d+))?", factor)
                if m:
                    e = int(m.group(3) or 1)
                    word.extend([(int(m.group(1)), int(m.group(2)))] * e)
                else:
                    coeff *= Fraction(factor)
            if sign == "-":
                coeff = -coeff
            out = out + Element.from_word(K, word, coeff, order)
        return out


def _protect(src: str) -> str:
    # hide minus signs inside brackets so the term splitter ignores them
    out, depth = [], 0
    for ch in src:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        out.append("~" if ch == "-" and depth else ch)
    return "".join(out)


def _scaled(t: Mapping[tuple[int, ...], Fraction]) -> tuple[dict, int]:
    d = 1
    for c in t.values():
        d = math.lcm(d, c.denominator)
    return {m: c.numerator * (d // c.denominator) for m, c in t.items()}, d


def multiply(a: Element, b: Element) -> Element:
    a._same(b)
    if not a._t or not b._t:
        return Element(a.order, {})
    A, da = _scaled(a._t)
    B, db = _scaled(b._t)
    kern = algebra(a.order).kernel
    den = da * db
    return Element(a.order, {m: Fraction(v, den) for m, v in kern.mul_terms(A, B).items()})


def supercommutator(a: Element, b: Element) -> Element:
    """``ab - (-1)^{deg a deg b} ba``, extended bilinearly over parity parts."""
    a._same(b)
    out = Element.zero(a.K, a.order)
    for p, x in a.parity_components().items():
        for q, y in b.parity_components().items():
            xy = multiply(x, y)
            yx = multiply(y, x)
            out = out + (xy + yx if p and q else xy - yx)
    return out


def filtration_degree(a: Element) -> int:
    if not a._t:
        raise UndefinedDegreeError("the zero element has no filtration degree")
    return max(len(m) for m in a._t)


def z2_degree(a: Element) -> int | None:
    """Common parity of all monomials; ``None`` when ``a`` is inhomogeneous.

    The zero element is reported as even.
    """
    comps = a.parity_components()
    if len(comps) > 1:
        return None
    return next(iter(comps), 0)


def principal_antiautomorphism(a: Element) -> Element:
    """Image under the anti-automorphism extending ``X -> -X`` on q_K."""
    alg = algebra(a.order)
    par = alg.parity
    out: dict[tuple[int, ...], Fraction] = {}
    for mono, c in a._t.items():
        odd = sum(par[r] for r in mono)
        flips = len(mono) + odd * (odd - 1) // 2
        sign = -c if flips % 2 else c
        for m, v in alg.kernel.mul_word(mono[::-1]).items():
            out[m] = out.get(m, 0) + sign * v
    return Element(a.order, out)


def reorder(a: Element, new_order: GeneratorOrder) -> Element:
    """The same element expressed in the PBW basis of ``new_order``."""
    if new_order.size != a.K:
        raise SizeMismatchError(f"cannot reorder q_{a.K} element into q_{new_order.size}")
    if new_order == a.order:
        return a
    old = algebra(a.order)
    new = algebra(new_order)
    out: dict[tuple[int, ...], Fraction] = {}
    for mono, c in a._t.items():
        word = [new.rank[old.pairs[r]] for r in mono]
        for m, v in new.kernel.mul_word(word).items():
            out[m] = out.get(m, 0) + c * v
    return Element(new_order, out)

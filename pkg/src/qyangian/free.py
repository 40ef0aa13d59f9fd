"""Free associative superalgebras over the T- and F-alphabets.

Relation elements live here before they are evaluated anywhere.  A word is
a tuple of :class:`AbstractGen`; the unit is the empty word.  Generators
``T[n]_ij`` with ``n = 0`` collapse to ``delta_ij`` and with ``n = -1`` to
zero as soon as they are built, so no stored word contains them.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .core import parity_of_index
from .errors import InvalidIndexError

__all__ = ["AbstractGen", "FreeYElement", "FreeTensor", "word_parity"]


class AbstractGen(NamedTuple):
    alphabet: str  # "T" or "F"
    i: int
    j: int
    n: int

    @property
    def parity(self) -> int:
        return parity_of_index(self.i) ^ parity_of_index(self.j)

    def __str__(self) -> str:
        return f"{self.alphabet}{self.n}[{self.i},{self.j}]"


def word_parity(word: Iterable[AbstractGen]) -> int:
    p = 0
    for g in word:
        p ^= g.parity
    return p


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _word_key(word):
    return (len(word), tuple((g.alphabet, g.n, g.i, g.j) for g in word))


class FreeYElement:
    """Finite linear combination of words; immutable by convention."""

    __slots__ = ("N", "_t")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, N: int, terms: Mapping[tuple, Fraction] | None = None):
        self.N = N
        self._t = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, N: int, c=1) -> "FreeYElement":
        return cls(N, {(): Fraction(c)})

    @classmethod
    def gen(cls, alphabet: str, i: int, j: int, n: int, N: int) -> "FreeYElement":
        """A single generator with the collapse rules applied."""
        if alphabet not in ("T", "F"):
            raise ValueError(f"unknown alphabet {alphabet!r}")
        for a in (i, j):
            if a == 0 or abs(a) > N:
                raise InvalidIndexError(f"index {a} out of range for N={N}")
        if alphabet == "T":
            if n == 0:
                return cls(N, {(): Fraction(1)} if i == j else {})
            if n == -1:
                return cls(N)
            if n < -1:
                raise InvalidIndexError(f"T-generator degree {n} < -1")
        elif n < 1:
            raise InvalidIndexError(f"F-generator degree {n} < 1")
        return cls(N, {(AbstractGen(alphabet, i, j, n),): Fraction(1)})

    @property
    def terms(self) -> dict:
        return self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._t
        if not isinstance(other, FreeYElement):
            return NotImplemented
        return self._t == other._t

    def __add__(self, other: "FreeYElement") -> "FreeYElement":
        out = dict(self._t)
        for w, c in other._t.items():
            out[w] = out.get(w, 0) + c
        return FreeYElement(self.N, out)

    def __neg__(self) -> "FreeYElement":
        return FreeYElement(self.N, {w: -c for w, c in self._t.items()})

    def __sub__(self, other: "FreeYElement") -> "FreeYElement":
        return self + (-other)

    def __mul__(self, other) -> "FreeYElement":
        if isinstance(other, FreeYElement):
            out: dict = {}
            for w1, c1 in self._t.items():
                for w2, c2 in other._t.items():
                    w = w1 + w2
                    out[w] = out.get(w, 0) + c1 * c2
            return FreeYElement(self.N, out)
        c = Fraction(other)
        return FreeYElement(self.N, {w: c * v for w, v in self._t.items()})

    def __rmul__(self, other) -> "FreeYElement":
        c = Fraction(other)
        return FreeYElement(self.N, {w: c * v for w, v in self._t.items()})

    def parity_components(self) -> dict[int, "FreeYElement"]:
        comp: dict[int, dict] = {}
        for w, c in self._t.items():
            comp.setdefault(word_parity(w), {})[w] = c
        return {p: FreeYElement(self.N, t) for p, t in comp.items()}

    def supercommutator(self, other: "FreeYElement") -> "FreeYElement":
        out = FreeYElement(self.N)
        for p, x in self.parity_components().items():
            for q, y in other.parity_components().items():
                out = out + (x * y + y * x if p and q else x * y - y * x)
        return out

    def alphabets(self) -> set[str]:
        return {g.alphabet for w in self._t for g in w}

    def max_degree(self) -> int:
        return max((g.n for w in self._t for g in w), default=0)

    def map_words(self, fn) -> "FreeYElement":
        """Apply ``fn(word) -> FreeYElement`` linearly."""
        out = FreeYElement(self.N)
        for w, c in self._t.items():
            out = out + c * fn(w)
        return out

    def normalize_symmetry(self) -> "FreeYElement":
        """Rewrite every generator with negative first index.

        Uses ``F[n]_{-i,-j} = (-1)^(n-1) F[n]_ij`` and
        ``T[n]_{-i,-j} = (-1)^n T[n]_ij``.
        """
        out: dict = {}
        for w, c in self._t.items():
            sign = 1
            new = []
            for g in w:
                if g.i < 0:
                    flip = g.n - 1 if g.alphabet == "F" else g.n
                    if flip % 2:
                        sign = -sign
                    g = AbstractGen(g.alphabet, -g.i, -g.j, g.n)
                new.append(g)
            key = tuple(new)
            out[key] = out.get(key, 0) + sign * c
        return FreeYElement(self.N, out)

    def items(self):
        for w in sorted(self._t, key=_word_key):
            yield w, self._t[w]

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for w, c in self.items():
            body = "*".join(str(g) for g in w) if w else "1"
            if w and abs(c) == 1:
                parts.append(("-" if c < 0 else "+", body))
            else:
                parts.append(("-" if c < 0 else "+", f"{_fmt(abs(c))}*{body}" if w else _fmt(abs(c))))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return s + "".join(f" {sg} {b}" for sg, b in parts[1:])

    def __repr__(self) -> str:
        return f"FreeYElement(N={self.N}: {self})"

    def to_dict(self) -> dict:
        return {
            "algebra": {"family": "free", "size": self.N},
            "terms": [
                {
                    "coeff": _fmt(c),
                    "word": [{"gen": g.alphabet, "n": g.n, "i": g.i, "j": g.j} for g in w],
                }
                for w, c in self.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


class FreeTensor:
    """Element of a graded tensor power of a free superalgebra.

    Keys are tuples of words, one per leg.  Multiplication follows the
    graded rule ``(a1 (x) a2)(b1 (x) b2) = (-1)^{deg b1 deg a2} a1 b1 (x) a2 b2``
    extended to any number of legs.
    """

    __slots__ = ("legs", "_t")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, legs: int, terms: Mapping[tuple, Fraction] | None = None):
        self.legs = legs
        self._t = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, legs: int) -> "FreeTensor":
        return cls(legs, {((),) * legs: Fraction(1)})

    @property
    def terms(self) -> dict:
        return self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, FreeTensor):
            return NotImplemented
        return self.legs == other.legs and self._t == other._t

    def __add__(self, other: "FreeTensor") -> "FreeTensor":
        out = dict(self._t)
        for k, c in other._t.items():
            out[k] = out.get(k, 0) + c
        return FreeTensor(self.legs, out)

    def __neg__(self) -> "FreeTensor":
        return FreeTensor(self.legs, {k: -c for k, c in self._t.items()})

    def __sub__(self, other: "FreeTensor") -> "FreeTensor":
        return self + (-other)

    def __rmul__(self, c) -> "FreeTensor":
        c = Fraction(c)
        return FreeTensor(self.legs, {k: c * v for k, v in self._t.items()})

    def __mul__(self, other):
        if not isinstance(other, FreeTensor):
            return other * self if False else Fraction(other) * self
        out: dict = {}
        for ka, ca in self._t.items():
            pa = [word_parity(w) for w in ka]
            for kb, cb in other._t.items():
                pb = [word_parity(w) for w in kb]
                exp = 0
                for p in range(self.legs):
                    if pb[p]:
                        exp += sum(pa[p + 1:])
                key = tuple(a + b for a, b in zip(ka, kb))
                c = ca * cb
                out[key] = out.get(key, 0) + (-c if exp % 2 else c)
        return FreeTensor(self.legs, out)

    def leg_parities(self):
        for k in self._t:
            yield tuple(word_parity(w) for w in k)

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for k in sorted(self._t, key=lambda k: tuple(_word_key(w) for w in k)):
            c = self._t[k]
            legs = " (x) ".join("*".join(str(g) for g in w) if w else "1" for w in k)
            parts.append(f"{_fmt(c)}*({legs})")
        return " + ".join(parts)

    def to_dict(self) -> dict:
        return {
            "legs": self.legs,
            "terms": [
                {
                    "coeff": _fmt(self._t[k]),
                    "tensor": [
                        [{"gen": g.alphabet, "n": g.n, "i": g.i, "j": g.j} for g in w]
                        for w in k
                    ],
                }
                for k in sorted(self._t, key=lambda k: tuple(_word_key(w) for w in k))
            ],
        }

"""Pure-Python PBW straightening kernel.

Generators are integer ranks in the active order; a monomial is a
non-decreasing tuple of ranks in which odd ranks occur at most once.  All
structure constants met during straightening are integers (the odd-square
rule contributes ``[x, x] / 2`` and ``[x, x]`` is always even), so every
coefficient handled here is a Python ``int``.

Returned dicts are shared with the memo tables and must not be mutated.
"""

import sys

BACKEND = "python"

if sys.getrecursionlimit() < 10000:
    sys.setrecursionlimit(10000)


class Straightener:
    def __init__(self, parity, bracket, square):
        # bracket[x][g]: tuple of (rank, coeff) for [x, g]
        # square[x]: tuple of (rank, coeff) for x*x with x odd
        self.parity = list(parity)
        self.bracket = bracket
        self.square = square
        self._rmul = {}
        self._mono = {}

    def clear(self):
        self._rmul.clear()
        self._mono.clear()

    def cache_size(self):
        return len(self._rmul) + len(self._mono)

    def rmul(self, mono, g):
        """Normal form of ``mono * g``."""
        key = (mono, g)
        hit = self._rmul.get(key)
        if hit is not None:
            return hit
        if not mono:
            out = {(g,): 1}
        else:
            x = mono[-1]
            if x < g or (x == g and not self.parity[g]):
                out = {mono + (g,): 1}
            elif x == g:
                prefix = mono[:-1]
                out = {}
                for h, c in self.square[g]:
                    for t, v in self.rmul(prefix, h).items():
                        out[t] = out.get(t, 0) + c * v
            else:
                prefix = mono[:-1]
                sign = -1 if (self.parity[x] and self.parity[g]) else 1
                out = {}
                for t, v in self.rmul(prefix, g).items():
                    for u, w in self.rmul(t, x).items():
                        out[u] = out.get(u, 0) + sign * v * w
                for h, c in self.bracket[x][g]:
                    for t, v in self.rmul(prefix, h).items():
                        out[t] = out.get(t, 0) + c * v
            out = {t: v for t, v in out.items() if v}
        self._rmul[key] = out
        return out

    def mul_monomials(self, m1, m2):
        key = (m1, m2)
        hit = self._mono.get(key)
        if hit is not None:
            return hit
        acc = {m1: 1}
        for g in m2:
            nxt = {}
            for t, v in acc.items():
                for u, w in self.rmul(t, g).items():
                    nxt[u] = nxt.get(u, 0) + v * w
            acc = {t: v for t, v in nxt.items() if v}
        self._mono[key] = acc
        return acc

    def mul_word(self, word):
        """Normal form of a product of generators given in any order."""
        acc = {(): 1}
        for g in word:
            nxt = {}
            for t, v in acc.items():
                for u, w in self.rmul(t, g).items():
                    nxt[u] = nxt.get(u, 0) + v * w
            acc = {t: v for t, v in nxt.items() if v}
        return acc

    def mul_terms(self, a, b):
        """Product of two integer-coefficient linear combinations."""
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                c = c1 * c2
                for t, v in self.mul_monomials(m1, m2).items():
                    out[t] = out.get(t, 0) + c * v
        return {t: v for t, v in out.items() if v}

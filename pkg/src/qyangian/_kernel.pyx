# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled PBW straightening kernel.

Same algorithm and interface as ``_kernel_py``; see that module for the
monomial encoding.  Returned dicts are shared with the memo tables and must
not be mutated.
"""

import sys

BACKEND = "cython"

if sys.getrecursionlimit() < 10000:
    sys.setrecursionlimit(10000)


cdef class Straightener:
    cdef public list parity
    cdef public list bracket
    cdef public list square
    cdef dict _rmul
    cdef dict _mono
    cdef char *_odd
    cdef bytes _odd_buf

    def __init__(self, parity, bracket, square):
        self.parity = list(parity)
        self.bracket = list(bracket)
        self.square = list(square)
        self._rmul = {}
        self._mono = {}
        self._odd_buf = bytes(bytearray(self.parity))
        self._odd = self._odd_buf

    def clear(self):
        self._rmul.clear()
        self._mono.clear()

    def cache_size(self):
        return len(self._rmul) + len(self._mono)

    cpdef dict rmul(self, tuple mono, int g):
        cdef tuple key = (mono, g)
        cdef object hit = self._rmul.get(key)
        if hit is not None:
            return <dict>hit
        cdef dict out
        cdef dict part
        cdef tuple prefix
        cdef int x, h, sign
        cdef object c, v, w, t, u
        if len(mono) == 0:
            out = {(g,): 1}
        else:
            x = mono[len(mono) - 1]
            if x < g or (x == g and not self._odd[g]):
                out = {mono + (g,): 1}
            elif x == g:
                prefix = mono[:len(mono) - 1]
                out = {}
                for h, c in self.square[g]:
                    part = self.rmul(prefix, h)
                    for t, v in part.items():
                        out[t] = out.get(t, 0) + c * v
            else:
                prefix = mono[:len(mono) - 1]
                sign = -1 if (self._odd[x] and self._odd[g]) else 1
                out = {}
                for t, v in self.rmul(prefix, g).items():
                    for u, w in self.rmul(<tuple>t, x).items():
                        out[u] = out.get(u, 0) + sign * v * w
                for h, c in self.bracket[x][g]:
                    for t, v in self.rmul(prefix, h).items():
                        out[t] = out.get(t, 0) + c * v
            out = {t: v for t, v in out.items() if v}
        self._rmul[key] = out
        return out

    cpdef dict mul_monomials(self, tuple m1, tuple m2):
        cdef tuple key = (m1, m2)
        cdef object hit = self._mono.get(key)
        if hit is not None:
            return <dict>hit
        cdef dict acc = {m1: 1}
        cdef dict nxt
        cdef int g
        cdef object t, v, u, w
        for g in m2:
            nxt = {}
            for t, v in acc.items():
                for u, w in self.rmul(<tuple>t, g).items():
                    nxt[u] = nxt.get(u, 0) + v * w
            acc = {t: v for t, v in nxt.items() if v}
        self._mono[key] = acc
        return acc

    def mul_word(self, word):
        cdef dict acc = {(): 1}
        cdef dict nxt
        cdef int g
        cdef object t, v, u, w
        for g in word:
            nxt = {}
            for t, v in acc.items():
                for u, w in self.rmul(<tuple>t, g).items():
                    nxt[u] = nxt.get(u, 0) + v * w
            acc = {t: v for t, v in nxt.items() if v}
        return acc

    cpdef dict mul_terms(self, dict a, dict b):
        cdef dict out = {}
        cdef object m1, c1, m2, c2, c, t, v
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                c = c1 * c2
                for t, v in self.mul_monomials(<tuple>m1, <tuple>m2).items():
                    out[t] = out.get(t, 0) + c * v
        return {t: v for t, v in out.items() if v}

"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from qyangian.pbw import Element


def index(K: int):
    return st.integers(1, K).flatmap(lambda a: st.sampled_from([a, -a]))


def words(K: int, max_len: int):
    return st.lists(st.tuples(index(K), index(K)), min_size=0, max_size=max_len)


def elements(K: int, max_len: int = 2, max_terms: int = 3):
    term = st.tuples(st.integers(-3, 3).filter(bool), words(K, max_len))

    def build(terms):
        out = Element.zero(K)
        for c, w in terms:
            out = out + Element.from_word(K, w, c)
        return out

    return st.lists(term, min_size=1, max_size=max_terms).map(build)

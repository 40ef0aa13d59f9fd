import random

import pytest

from qyangian.centralizer import (
    CentralizerContext,
    alpha_projection,
    centralizer_check,
    centralizer_generators,
    verify_alpha_homomorphism,
    verify_prop14,
)
from qyangian.errors import ConfigurationError, NotInCentralizerError, SizeMismatchError
from qyangian.fgen import c_element, f_element
from qyangian.pbw import Element, GeneratorOrder, algebra, filtration_degree, multiply, reorder, z2_degree

CTX = CentralizerContext(1, 1)


def test_context_validation():
    with pytest.raises(ConfigurationError):
        CentralizerContext(1, 0)
    with pytest.raises(ConfigurationError):
        CentralizerContext(-1, 2)
    assert CentralizerContext(0, 1).K == 1


def test_membership_examples():
    assert centralizer_check(c_element(1, 2), CTX)
    assert centralizer_check(Element.parse("F[1,1]", 2), CTX)
    assert not centralizer_check(Element.parse("F[1,2]", 2), CTX)


def test_alpha_examples():
    assert alpha_projection(Element.parse("F[1,1]", 2), CTX) == Element.parse("F[1,1]", 1)
    assert alpha_projection(c_element(1, 2), CTX) == c_element(1, 1)
    assert alpha_projection(f_element(1, 1, 2, 2), CTX) == f_element(1, 1, 2, 1)


def test_alpha_rejects_non_members():
    with pytest.raises(NotInCentralizerError):
        alpha_projection(Element.parse("F[1,2]", 2), CTX)


def test_alpha_size_checked():
    with pytest.raises((SizeMismatchError, ConfigurationError)):
        alpha_projection(Element.parse("F[1,1]", 1), CTX)


def test_alpha_unit_and_interior():
    assert alpha_projection(Element.one(2), CTX) == Element.one(1)
    x = Element.parse("F[1,1]^2 - 3*F[1,-1]*F[1,1] + 1/2", 2)
    assert alpha_projection(x, CTX) == Element.parse("F[1,1]^2 - 3*F[1,-1]*F[1,1] + 1/2", 1)


@pytest.mark.parametrize("N,M", [(0, 1), (1, 1), (1, 2), (2, 1)])
def test_prop14(N, M):
    assert verify_prop14(N, M, 3).ok


def test_prop14_n0_has_only_c_checks():
    rep = verify_prop14(0, 1, 3)
    assert rep.checked == 2


def test_alpha_homomorphism_11():
    rep = verify_alpha_homomorphism(1, 1, 25, seed=7)
    assert rep.ok and rep.checked == 50


def test_split_uniqueness_and_degree():
    ctx = CentralizerContext(1, 2)
    alg = algebra(GeneratorOrder.hc(3))
    for label, x in centralizer_generators(ctx, 3):
        a = alpha_projection(x, ctx)
        y = reorder(x, GeneratorOrder.hc(3))
        lifted = Element.zero(3, GeneratorOrder.hc(3))
        for mono, c in a.items():
            word = [(g.i, g.j) for g, e in mono.factors for _ in range(e)]
            lifted = lifted + Element.from_word(3, word, c, GeneratorOrder.hc(3))
        rest = y - lifted
        for m in rest.raw:
            assert any(3 in map(abs, alg.pairs[r]) for r in m), label
        if a:
            assert filtration_degree(a) <= filtration_degree(x)
            assert z2_degree(a) == z2_degree(x)


def test_tower_consistency():
    # projecting twice walks down the tower F(n)_{ij|3} -> |2 -> |1
    for n in (1, 2, 3):
        x = f_element(1, -1, n, 3)
        y = alpha_projection(x, CentralizerContext(1, 2))
        assert y == f_element(1, -1, n, 2)
        assert alpha_projection(y, CentralizerContext(1, 1)) == f_element(1, -1, n, 1)


def test_alpha_multiplicative_on_random_pairs():
    rng = random.Random(3)
    pool = centralizer_generators(CTX, 2)
    for _ in range(10):
        (_, x), (_, y) = rng.choice(pool), rng.choice(pool)
        assert alpha_projection(multiply(x, y), CTX) == multiply(
            alpha_projection(x, CTX), alpha_projection(y, CTX)
        )

import itertools

import pytest

from qyangian.errors import InvalidIndexError
from qyangian.fgen import (
    Evaluator,
    c_element,
    defrel_in_u,
    f_element,
    f_element_direct,
    indices,
    verify_central,
    verify_centrality,
    verify_defrel,
    verify_fnr,
    verify_prop31,
)
from qyangian.free import FreeYElement
from qyangian.pbw import Element, filtration_degree, supercommutator, z2_degree
from qyangian.relations import F, defrel_rhs, prop31_rhs


def test_f_examples():
    assert f_element(1, 1, 1, 1) == Element.parse("F[1,1]", 1)
    assert str(f_element(1, 1, 2, 1)) == "F[1,1]^2 - F[1,1]"
    assert f_element(-1, -1, 2, 1) == -f_element(1, 1, 2, 1)


def test_f_invalid():
    with pytest.raises(InvalidIndexError):
        f_element(3, 1, 2, 2)
    with pytest.raises(ValueError):
        f_element(1, 1, 0, 1)


@pytest.mark.parametrize("K", [1, 2])
def test_sign_law(K):
    for i, j in itertools.product(indices(K), repeat=2):
        for n in range(1, 5):
            sign = -1 if (n - 1) % 2 else 1
            assert f_element(-i, -j, n, K) == sign * f_element(i, j, n, K)


@pytest.mark.parametrize("K,n", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_recursion_matches_chain_sum(K, n):
    for i, j in itertools.product(indices(K), repeat=2):
        assert f_element(i, j, n, K) == f_element_direct(i, j, n, K)


def test_degrees_and_parity():
    for i, j in itertools.product(indices(2), repeat=2):
        for n in (1, 2, 3):
            x = f_element(i, j, n, 2)
            assert filtration_degree(x) <= n
            assert z2_degree(x) == (i < 0) ^ (j < 0)
    assert z2_degree(c_element(3, 2)) == 0


def test_c_examples():
    assert c_element(1, 1) == Element.parse("2*F[1,1]", 1)
    for K in (1, 2, 3):
        assert not c_element(2, K)
        assert not c_element(4, K)
    c3 = c_element(3, 1)
    assert c3
    for g in ("F[1,1]", "F[1,-1]"):
        assert not supercommutator(c3, Element.parse(g, 1))


def test_verify_central_examples():
    assert verify_central(2, 1)
    assert verify_central(2, 3)
    assert verify_central(2, 2)
    assert verify_centrality(2).ok


def test_fnr_small():
    assert verify_fnr(1, 3).ok
    assert verify_fnr(2, 3).ok


@pytest.mark.parametrize("slot", range(4))
def test_fnr_mutations(slot):
    assert not verify_fnr(1, 2, mutate=slot).ok


def test_prop31_small():
    assert verify_prop31(1, 3, 3).ok
    assert verify_prop31(2, 2, 3).ok


def test_prop31_m1_is_fnr():
    from qyangian.relations import fnr_rhs

    for i, j, k, l in itertools.product(indices(2), repeat=4):
        for n in (1, 2, 3):
            assert prop31_rhs(1, n, i, j, k, l, 2) == fnr_rhs(i, j, k, l, n, 2)


@pytest.mark.parametrize("slot", range(8))
def test_prop31_mutations(slot):
    assert not verify_prop31(1, 3, 3, mutate=slot).ok


def test_defrel_small():
    rep = verify_defrel(1, 3, 2)
    assert rep.ok
    # m > n pairs: (2,1), (3,1), (3,2), each over 16 index tuples
    assert rep.info["rewritten_instances"] == 48
    assert verify_defrel(2, 3, 2).ok


def test_defrel_identical_terms_when_m_le_n():
    for i, j, k, l in itertools.product(indices(1), repeat=4):
        for m, n in ((1, 1), (1, 3), (2, 2), (2, 3), (3, 3)):
            assert defrel_rhs(m, n, i, j, k, l, 1) == prop31_rhs(m, n, i, j, k, l, 1)


@pytest.mark.parametrize("slot", range(8))
def test_defrel_mutations(slot):
    assert not verify_defrel(1, 3, 3, mutate=slot).ok


def test_defrel_in_u_vanishes():
    assert not defrel_in_u(2, 1, 1, -1, -1, 1, 2)


def test_evaluator_sign_law():
    ev = Evaluator(2)
    x = F(-1, 2, 3, 2) * F(2, -2, 2, 2)
    assert ev(x) == f_element(-1, 2, 3, 2) * f_element(2, -2, 2, 2)
    assert ev(FreeYElement.one(2, 5)) == Element.scalar(2, 5)

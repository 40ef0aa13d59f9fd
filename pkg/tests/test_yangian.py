import itertools

import pytest

from qyangian.errors import ConfigurationError, InvalidIndexError
from qyangian.fgen import indices
from qyangian.free import AbstractGen, FreeTensor, FreeYElement
from qyangian.pbw import Element, z2_degree
from qyangian.relations import F, T, yang37_element, yangrel_series
from qyangian.yangian import (
    TauEvaluator,
    comult_coeff,
    comultiply,
    defrel_element,
    omega_image,
    omega_inverse,
    tau_image,
    verify_coassociativity,
    verify_omega_correspondence,
    verify_primitive,
    verify_series_equivalence,
    verify_tau_relations,
    yang_relation_coeff,
)


def test_collapse_rules():
    assert T(1, 1, 0, 1) == FreeYElement.one(1)
    assert not T(1, -1, 0, 1)
    assert not T(1, 1, -1, 1)
    with pytest.raises(InvalidIndexError):
        T(1, 1, -2, 1)
    with pytest.raises(InvalidIndexError):
        F(1, 1, 0, 1)
    with pytest.raises(InvalidIndexError):
        T(2, 1, 1, 1)


def test_no_collapsed_generators_stored():
    for m, n in itertools.product(range(1, 4), repeat=2):
        for a, b, c, d in itertools.product(indices(1), repeat=4):
            for w in yang_relation_coeff(m, n, a, b, c, d, 1).terms:
                assert all(g.n >= 1 for g in w)


def test_defrel_11_example():
    x = defrel_element(1, 1, 1, 1, 1, 1, 1)
    # [F11, F11] = 0 and the four degree-1 terms cancel in pairs
    assert not x
    y = defrel_element(1, 1, 1, -1, -1, 1, 1)
    assert len(y) > 0


def test_defrel_sign_flip():
    # (i,j) -> (-i,-j) multiplies the instance by (-1)^(m-1) after the sign law
    for m, n in ((1, 1), (2, 1), (2, 2), (3, 1)):
        for i, j, k, l in itertools.product(indices(1), repeat=4):
            a = defrel_element(m, n, i, j, k, l, 1).normalize_symmetry()
            b = defrel_element(m, n, -i, -j, k, l, 1).normalize_symmetry()
            sign = -1 if (m - 1) % 2 else 1
            assert a == sign * b


def test_relation_vanishes_at_zero_degree_substitution():
    for a, b, c, d in itertools.product(indices(1), repeat=4):
        rel = yang_relation_coeff(2, 1, a, b, c, d, 1)
        assert all(w for w in rel.terms)


def test_relation_matches_series_coefficient():
    # the x^{-1} y^0 coefficient of the series relation is the (2, 1) relation
    for i, j, k, l in itertools.product(indices(1), repeat=4):
        s = yangrel_series(l, k, j, i, 4, 1)
        assert s.coeff(-1, 0) == yang37_element(2, 1, i, j, k, l, 1)


def _sigma(i, j, k):
    p = [int(x < 0) for x in (i, j, k)]
    return (-1) ** (p[0] * p[1] + p[0] * p[2] + p[1] * p[2])


@pytest.mark.parametrize("N", [1, 2])
def test_relation_reflection_compatibility(N):
    # [T(m)_{-a,-b}, -] = (-1)^m [T(m)_ab, -]; the relation's parity prefactor changes too
    for m, n in ((1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)):
        for a, b, c, d in itertools.product(indices(N), repeat=4):
            x = yang_relation_coeff(m, n, a, b, c, d, N).normalize_symmetry()
            y = yang_relation_coeff(m, n, -a, -b, c, d, N).normalize_symmetry()
            sign = (-1) ** m * _sigma(b, a, d) * _sigma(-b, -a, d)
            assert x == sign * y


def test_omega_examples():
    assert omega_image(F(1, 2, 3, 2)) == T(2, 1, 3, 2)
    assert omega_image(F(1, 2, 1, 2) * F(2, 1, 1, 2)) == T(1, 2, 1, 2) * T(2, 1, 1, 2)
    x = F(-1, 2, 2, 2) * F(1, -2, 1, 2) - 3 * F(2, 2, 1, 2)
    assert omega_inverse(omega_image(x)) == x
    with pytest.raises(ValueError):
        omega_image(T(1, 1, 1, 1))


def test_omega_correspondence():
    rep = verify_omega_correspondence(1, 2, 2)
    assert rep.ok
    assert rep.info["verbatim_matches"] == 48
    assert verify_omega_correspondence(2, 2, 1).ok


@pytest.mark.parametrize("mutation", ["generator", "reversal"])
def test_omega_mutations(mutation):
    assert not verify_omega_correspondence(1, 2, 2, mutate_omega=mutation).ok


@pytest.mark.parametrize("slot", range(5))
def test_yang37_mutations_omega(slot):
    assert not verify_omega_correspondence(1, 2, 2, mutate_37=slot).ok


def test_series_equivalence():
    rep = verify_series_equivalence(1, 4)
    assert rep.ok
    assert rep.info["unshifted_degrees"] == [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]


def test_series_degmax_2():
    rep = verify_series_equivalence(1, 2)
    assert rep.ok and rep.info["unshifted_degrees"] == [(1, 1)]
    with pytest.raises(ConfigurationError):
        verify_series_equivalence(1, 1)


@pytest.mark.parametrize("slot", range(5))
def test_yang37_mutations_series(slot):
    assert not verify_series_equivalence(1, 3, mutate_37=slot).ok


def test_tau_examples():
    assert tau_image(1, 1, 1, 1, 0) == Element.parse("-F[1,1]", 1)
    assert tau_image(1, -1, 1, 1, 1) == Element.parse("F[1,-1]", 2)
    assert tau_image(1, -1, 0, 1, 1) == Element.zero(2)
    assert tau_image(1, 1, 0, 1, 1) == Element.one(2)
    with pytest.raises(InvalidIndexError):
        tau_image(2, 1, 1, 1, 1)


def test_tau_evaluator_is_multiplicative():
    ev = TauEvaluator(1, 1)
    x = T(1, -1, 2, 1) * T(-1, 1, 1, 1)
    assert ev(x) == tau_image(1, -1, 2, 1, 1) * tau_image(-1, 1, 1, 1, 1)


@pytest.mark.parametrize("M", [0, 1])
def test_tau_relations(M):
    assert verify_tau_relations(1, M, 3).ok


@pytest.mark.parametrize("slot", range(5))
def test_yang37_mutations_tau(slot):
    assert not verify_tau_relations(1, 1, 3, mutate_37=slot).ok


def test_comult_primitive_and_parity():
    assert verify_primitive(1).ok and verify_primitive(2).ok
    for i, j in itertools.product(indices(2), repeat=2):
        for n in (1, 2, 3):
            want = (i < 0) ^ (j < 0)
            for pars in comult_coeff(i, j, n, 2).leg_parities():
                assert sum(pars) % 2 == want


def test_comult_counit_like_evaluation():
    # drop every term with a positive-degree factor in both legs: delta_ij remains
    for i, j in itertools.product(indices(1), repeat=2):
        d = comult_coeff(i, j, 2, 1)
        both_empty = {k: c for k, c in d.terms.items() if k == ((), ())}
        assert both_empty == {}
        assert d.terms.get((((AbstractGen("T", i, j, 2),)), ()), 0) == 1


def test_comult_t2_expansion():
    d = comult_coeff(1, 1, 2, 1)
    one = ()
    t = lambda i, j, n: (AbstractGen("T", i, j, n),)  # noqa: E731
    assert d.terms[(t(1, 1, 2), one)] == 1
    assert d.terms[(one, t(1, 1, 2))] == 1
    assert d.terms[(t(1, 1, 1), t(1, 1, 1))] == 1
    assert d.terms[(t(1, -1, 1), t(-1, 1, 1))] == -1
    assert len(d.terms) == 4


def test_coassociativity():
    assert verify_coassociativity(1, 3).ok
    assert verify_coassociativity(2, 2).ok


def test_comultiply_product():
    a = T(1, -1, 1, 1)
    b = T(-1, 1, 1, 1)
    got = comultiply(a * b)
    assert got == comultiply(a) * comultiply(b)
    assert isinstance(got, FreeTensor)


def test_free_rendering_and_json():
    x = T(1, -1, 2, 1) * T(1, 1, 1, 1) - FreeYElement.one(1, 3)
    assert str(x) == "-3 + T2[1,-1]*T1[1,1]"
    d = x.to_dict()
    assert d["terms"][0]["coeff"] == "-3"

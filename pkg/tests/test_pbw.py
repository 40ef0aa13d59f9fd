import pytest
from hypothesis import given

from qyangian.errors import InvalidIndexError, SizeMismatchError, UndefinedDegreeError
from qyangian.fgen import f_element
from qyangian.pbw import (
    Element,
    GeneratorOrder,
    filtration_degree,
    multiply,
    principal_antiautomorphism,
    reorder,
    supercommutator,
    z2_degree,
)

from strategies import elements

K2 = 2


def E(text, K=K2):
    return Element.parse(text, K)


def test_unit_law():
    x = E("F[2,1]*F[1,-2] + 3")
    one = Element.one(K2)
    assert multiply(one, x) == x
    assert multiply(x, one) == x


def test_transposition_example():
    got = multiply(E("F[2,1]"), E("F[1,2]"))
    assert got == E("F[1,2]*F[2,1] - F[1,1] + F[2,2]")
    assert str(got) == "F[1,2]*F[2,1] - F[1,1] + F[2,2]"


def test_odd_square():
    assert multiply(E("F[1,-1]"), E("F[1,-1]")) == E("F[1,1]")


def test_supercommutator_examples():
    assert supercommutator(E("F[1,2]"), E("F[2,1]")) == E("F[1,1] - F[2,2]")
    assert not supercommutator(E("F[1,1]", 1), f_element(1, 1, 2, 1))
    x = E("F[1,2]*F[2,1] + F[2,-2]*F[1,-1]")
    assert not supercommutator(x, x)


def test_filtration_degree():
    assert filtration_degree(E("F[1,1]")) == 1
    assert filtration_degree(f_element(1, 1, 3, 1)) <= 3
    assert filtration_degree(Element.one(K2)) == 0
    with pytest.raises(UndefinedDegreeError):
        filtration_degree(Element.zero(K2))


def test_z2_degree():
    assert z2_degree(E("F[1,-2]")) == 1
    assert z2_degree(E("F[1,2]*F[2,1]")) == 0
    assert z2_degree(E("F[1,1] + F[1,-1]")) is None


def test_antiautomorphism_examples():
    assert principal_antiautomorphism(E("F[1,2]")) == E("-F[1,2]")
    assert principal_antiautomorphism(E("F[1,2]*F[2,1]")) == multiply(E("F[2,1]"), E("F[1,2]"))


def test_reorder_examples():
    hc = GeneratorOrder.hc(2)
    assert reorder(E("F[1,1]"), hc) == E("F[1,1]")
    # hc(2) places F[2,1] before F[1,2]
    got = reorder(multiply(E("F[1,2]"), E("F[2,1]")), hc)
    want = Element.parse("F[2,1]*F[1,2] + F[1,1] - F[2,2]", 2, hc)
    assert got.order == hc
    assert got.raw == want.raw
    assert str(got) == "F[2,1]*F[1,2] - F[2,2] + F[1,1]"


def test_hc_blocks():
    assert GeneratorOrder.hc(2).pairs() == [
        (2, -1), (2, 1), (2, -2), (2, 2), (1, -1), (1, 1), (1, -2), (1, 2)
    ]


def test_size_mismatch():
    with pytest.raises(SizeMismatchError):
        multiply(E("F[1,1]", 1), E("F[1,1]", 2))
    with pytest.raises(SizeMismatchError):
        reorder(E("F[1,1]", 1), GeneratorOrder.hc(2))


def test_invalid_generator():
    with pytest.raises(InvalidIndexError):
        Element.generator(1, 2, 1)


def test_json_round_trip_and_schema():
    x = E("3/2*F[1,-2]*F[2,1]^2 - F[1,1] + 1")
    d = x.to_dict()
    assert d["algebra"] == {"family": "q", "size": 2}
    assert d["order"] == "lex"
    assert Element.from_json(x.to_json()) == x
    assert x.to_json() == Element.from_json(x.to_json()).to_json()


def test_text_rendering_round_trip():
    x = E("3/2*F[1,-2]*F[2,1]^2 - F[1,1] + 1")
    assert Element.parse(str(x), 2) == x


def test_odd_exponent_capped():
    x = multiply(E("F[1,-2]"), E("F[1,-2]"))
    for mono, _ in x.items():
        for g, e in mono.factors:
            assert e == 1 or g.parity == 0


@given(elements(2), elements(2), elements(2))
def test_associativity(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@given(elements(2), elements(2))
def test_filtration_submultiplicative(a, b):
    ab = multiply(a, b)
    if ab:
        assert filtration_degree(ab) <= filtration_degree(a) + filtration_degree(b)
    comm = supercommutator(a, b)
    if comm:
        assert filtration_degree(comm) <= filtration_degree(a) + filtration_degree(b) - 1


@given(elements(2, max_terms=1), elements(2, max_terms=1))
def test_z2_additive(a, b):
    pa, pb = z2_degree(a), z2_degree(b)
    ab = multiply(a, b)
    if pa is not None and pb is not None and ab:
        assert z2_degree(ab) == (pa + pb) % 2


@given(elements(2, max_terms=1), elements(2, max_terms=1))
def test_antiautomorphism_reverses(a, b):
    pa, pb = z2_degree(a), z2_degree(b)
    if pa is None or pb is None:
        return
    w = principal_antiautomorphism
    sign = -1 if pa and pb else 1
    assert w(multiply(a, b)) == sign * multiply(w(b), w(a))
    assert w(w(a)) == a


@given(elements(2), elements(2))
def test_reorder_commutes_with_multiply(a, b):
    hc = GeneratorOrder.hc(2)
    left = reorder(multiply(a, b), hc)
    right = multiply(reorder(a, hc), reorder(b, hc))
    assert left.raw == right.raw
    assert reorder(reorder(a, hc), GeneratorOrder.lex(2)).raw == a.raw

import pytest
from hypothesis import given, settings, strategies as st

from hvlab.borel import (
    MonIdeal,
    NotBorelError,
    borel_regularity,
    count_standard,
    enumerate_borel,
    format_monomial,
    gotzmann_decomposition,
    gotzmann_number,
    hilbert_numerator,
    is_borel,
    parse_monomial,
    quotient_hilbert,
    restrict_section,
    saturate,
)
from hvlab.hseq import IntPoly

from oracles import brute_borel_sets, brute_hilbert

J1 = "x0,x1,x2^4,x2^3*x3"
J2 = "x0,x1^2,x1*x2,x1*x3,x2^3"
J3 = "x0,x1^2,x1*x2,x2^2"


def ideal(text, nvars=5):
    return MonIdeal.parse(text, nvars)


def test_parse_and_print_roundtrip():
    for text in (J1, J2, J3, "x0^2*x3"):
        assert str(ideal(text)) == text
        assert ideal(str(ideal(text))) == ideal(text)
    assert parse_monomial("1", 3) == (0, 0, 0)
    assert format_monomial((0, 2, 1)) == "x1^2*x2"
    with pytest.raises(ValueError):
        MonIdeal.parse("x5", 5)
    with pytest.raises(ValueError):
        MonIdeal.parse("y1", 5)


def test_minimal_generators():
    assert str(ideal("x1*x2,x1,x0")) == "x0,x1"


def test_borel_certificate():
    for text in (J1, J2, J3):
        assert is_borel(ideal(text)).is_borel
    cert = is_borel(MonIdeal.parse("x0,x2", 4))
    assert not cert.is_borel and cert.witness == ((0, 0, 1, 0), 2, 1)


def test_hilbert_polynomials_of_the_three_gins():
    for text in (J1, J2, J3):
        assert quotient_hilbert(ideal(text)).tail == IntPoly.linear(3, 1)


def test_hilbert_numerator_vs_brute_force():
    for text in (J1, J2, J3, "x0^2,x0*x1,x1^3", "x0*x1*x2,x3^2"):
        i = ideal(text)
        data = quotient_hilbert(i)
        for d in range(8):
            assert data.value(d) == count_standard(i, d) == brute_hilbert(list(i.generators), 5, d)


monomial = st.lists(st.integers(0, 3), min_size=4, max_size=4).map(tuple)


@settings(max_examples=60, deadline=None)
@given(st.lists(monomial, min_size=1, max_size=5))
def test_random_monomial_ideals_vs_brute_force(gens):
    i = MonIdeal(4, tuple(gens))
    data = quotient_hilbert(i)
    for d in range(7):
        assert data.value(d) == brute_hilbert(list(i.generators), 4, d)


def test_saturation_and_sections():
    assert saturate(ideal("x0,x1^2,x1*x2,x1*x3,x1*x4")) == ideal("x0,x1")
    assert saturate(ideal(J3)) == ideal(J3)
    with pytest.raises(NotBorelError):
        saturate(MonIdeal.parse("x3", 4))
    s1 = restrict_section(ideal(J1))
    assert str(s1) == "x0,x1,x2^3" and s1.nvars == 4
    assert quotient_hilbert(s1).hvector() == (1, 1, 1)
    assert quotient_hilbert(restrict_section(ideal(J3))).hvector() != (1, 1, 1)


def test_regularity():
    assert [borel_regularity(ideal(t)) for t in (J1, J2, J3)] == [4, 3, 2]


@pytest.mark.parametrize("poly,r", [(IntPoly.linear(3, 1), 4), (IntPoly.linear(3, 0), 3),
                                    (IntPoly.linear(0, 1), 1), (IntPoly.linear(0, 2), 2),
                                    (IntPoly.linear(1, 1), 1), (IntPoly((1, 2, 1)), 1)])
def test_gotzmann(poly, r):
    assert gotzmann_number(poly) == r
    assert len(gotzmann_decomposition(poly)) == r


def test_gotzmann_rejects_non_hilbert_polynomials():
    with pytest.raises(ValueError):
        gotzmann_decomposition(IntPoly.linear(-1, 0))


def test_enumerate_reference_cases():
    assert enumerate_borel(5, IntPoly.linear(3, 1)) == [ideal(J1), ideal(J2), ideal(J3)]
    assert [str(i) for i in enumerate_borel(5, IntPoly.linear(3, 0))] == ["x0,x1,x2^3"]
    assert [str(i) for i in enumerate_borel(3, IntPoly.linear(0, 2))] == ["x0,x1^2"]


def _oracle(nvars, poly):
    r = gotzmann_number(poly)
    found = set()
    for borel_set in brute_borel_sets(nvars, r, poly(r)):
        sat = saturate(MonIdeal(nvars, tuple(borel_set)))
        if quotient_hilbert(sat).tail == poly:
            found.add(sat)
    return found


def _in_range(poly):
    try:
        return gotzmann_number(poly) <= 5
    except ValueError:
        return False


ORACLE_CASES = [(n, IntPoly.linear(0, b)) for n in (2, 3, 4) for b in range(1, 6)] + [
    (n, IntPoly.linear(a, b))
    for n in (3, 4, 5)
    for a in (1, 2, 3)
    for b in range(-2, 4)
] + [(5, IntPoly((1, 2, 1))), (5, IntPoly((1, 3, 1)))]
ORACLE_CASES = [(n, p) for n, p in ORACLE_CASES if _in_range(p)]


@pytest.mark.parametrize("nvars,poly", ORACLE_CASES, ids=lambda x: str(x))
def test_enumerate_matches_brute_force(nvars, poly):
    assert set(enumerate_borel(nvars, poly)) == _oracle(nvars, poly)

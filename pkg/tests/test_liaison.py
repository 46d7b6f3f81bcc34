import pytest
from hypothesis import assume, given, settings, strategies as st

from hvlab.hseq import check_osequence, genus_from_h, hilbert_from_h
from hvlab.liaison import (
    CIType,
    LinkageError,
    basic_double_link,
    bdl_genus,
    ci_curve_genus,
    ci_curve_poly,
    ci_hvector,
    compute_tk,
    dgo_link,
    genus_diff,
    linked_genus,
    linked_genus_from_poly,
    parse_chain_script,
    run_chain,
)


def test_ci_type_normalises():
    ci = CIType((3, 2))
    assert ci.betas == (2, 3) and ci.codim == 2 and ci.degree == 6 and ci.reg == 4
    assert str(ci) == "2,3"
    with pytest.raises(ValueError):
        CIType((0, 2))


@pytest.mark.parametrize("betas,h", [((2, 3), (1, 2, 2, 1)), ((3, 3), (1, 2, 3, 2, 1)), ((1, 4), (1, 1, 1, 1)),
                                     ((2, 2, 2), (1, 3, 3, 1))])
def test_ci_hvector(betas, h):
    assert ci_hvector(betas) == h


def test_ci_curve_genus():
    assert ci_curve_genus((2, 3), 3) == 4
    assert ci_curve_genus((2, 2), 3) == 1
    assert ci_curve_genus((1, 2), 3) == 0
    with pytest.raises(ValueError):
        ci_curve_genus((2, 2), 4)


def test_dgo_examples():
    res = dgo_link((1, 1), (2, 3))
    assert res.h_linked == (1, 2, 1) and res.deg_linked == 4 and res.reg_Y == 4
    assert (res.alpha_bar, res.alpha_bar_prime) == (1, 2)
    assert dgo_link((1, 2, 3, 2), (3, 6)).h_linked == (1, 2, 3, 3, 1)


def test_dgo_errors():
    with pytest.raises(LinkageError):
        dgo_link((1, 2, 2, 1), (2, 3))  # improper
    with pytest.raises(LinkageError):
        dgo_link((1, 1, 1, 1, 1), (2, 3))  # does not fit
    with pytest.raises(LinkageError):
        dgo_link((1, 3), (2, 3))  # exceeds h_Y


def test_genus_diff():
    assert genus_diff((1, 1), 3, 1, 0) == -1
    assert genus_diff((6, 6), 3, 26, 10) == 64
    with pytest.raises(ValueError):
        genus_diff((2, 3), 3, 2, 2)


def _aCM_linked_pairs():
    for betas in [(2, 3), (3, 3), (3, 4), (4, 5), (2, 6)]:
        ci = CIType(betas)
        h_Y = ci_hvector(ci)
        for h in [(1,), (1, 1), (1, 2), (1, 2, 1), (1, 1, 1), (1, 2, 2), (1, 2, 3)]:
            try:
                yield ci, h, dgo_link(h, ci)
            except LinkageError:
                continue


def test_linked_genus_agrees_with_hvector_genus():
    # for aCM curves the section h-vector is the curve h-vector
    for ci, h, res in _aCM_linked_pairs():
        p_c = hilbert_from_h(h, 1).tail
        for t in range(max(ci.reg - 2, hilbert_from_h(h, 1).rho), ci.reg + 4):
            g = linked_genus_from_poly(ci, res.deg_linked, p_c, t)
            assert g == genus_from_h(res.h_linked), (ci, h, t)
        # and with the classical genus difference
        assert genus_from_h(h) - genus_from_h(res.h_linked) == genus_diff(ci, 3, sum(h), res.deg_linked)


def test_linked_genus_quoted_instances():
    ci = CIType((4, 7))
    assert linked_genus(ci, 5, 11, ci.reg - 1) == 2
    ci3 = CIType((2, 3, 3))
    assert linked_genus(ci3, 3, 2, ci3.reg - 2) == 0
    assert linked_genus(ci3, 3, 8, ci3.reg - 1) == 3


def test_ci_curve_poly():
    assert ci_curve_poly((2, 3))(0) == 1 - 4
    assert ci_curve_poly((2, 3)) == hilbert_from_h(ci_hvector((2, 3)), 1).tail


def test_basic_double_link():
    assert basic_double_link((1, 2, 2, 2, -2), 1, 7) == (1, 2, 3, 3, 3, -1, 1)
    assert bdl_genus(0, 5, 1, 7) == 19
    with pytest.raises(ValueError):
        basic_double_link((1,), 0, 2)


def test_example_chain():
    steps = parse_chain_script("bdl 1,7\nbdl 1,7  # again\n\nbdl 1,9\n")
    trace = run_chain((1, 2, 2, 2, -2), 0, steps)
    last = trace.last
    assert last.h == (1, 2, 3, 4, 5, 5, 5, 1, 2)
    assert last.degree == 28 and last.genus == 91 == genus_from_h(last.h)
    v = check_osequence(last.h)
    assert v.positive and not v.admissible


def test_chain_script_errors():
    with pytest.raises(ValueError):
        parse_chain_script("twist 1,2")
    with pytest.raises(ValueError):
        parse_chain_script("bdl 1,2,3")
    with pytest.raises(ValueError):
        parse_chain_script("link a,b")


def test_veronese_chain_to_ten():
    trace = run_chain((1, 2, 1), 0, [("link", (3, 4)), ("link", (3, 6)), ("link", (6, 6))])
    assert [s.h for s in trace.steps[1:3]] == [(1, 2, 3, 2), (1, 2, 3, 3, 1)]
    assert [s.genus for s in trace.steps] == [0, 6, 11, 75]
    assert trace.last.degree == 26


def test_compute_tk():
    assert compute_tk((1, 2, 1), (1, 2, 2, 1)) == 2
    assert compute_tk((1, 2, 2, 1), (1, 2, 2, 1)) is None


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.lists(st.integers(0, 4), max_size=6))
def test_link_involution(b1, b2, tail):
    ci = CIType((b1, b2))
    h = [1]
    for v in tail:
        if v == 0:
            break
        h.append(v)
    assume(check_osequence(h).admissible)
    try:
        res = dgo_link(h, ci)
    except LinkageError:
        return
    back = dgo_link(res.h_linked, ci)
    assert back.h_linked == tuple(h)
    assert sum(h) + res.deg_linked == ci.degree

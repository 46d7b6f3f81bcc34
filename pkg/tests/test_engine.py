import pytest

from hvlab.engine import (
    ACM_FORCED,
    EXCLUDED_CITED,
    EXCLUDED_EXTREMAL,
    EXCLUDED_GENUS,
    EXCLUDED_PLANE,
    NO_LCM,
    OUTSIDE,
    POSITIVITY_ACM,
    ConfigError,
    DavisType,
    EnumerationLimit,
    ScenarioConfig,
    classify,
    cubic_gin_exclusions,
    davis_params,
    davis_section,
    davis_type_of_section,
    dominates,
    enumerate_candidates,
    enumerate_hx,
    extremal_invariants,
    genus_data_for,
    has_maximal_rank,
    is_extremal_section,
    iter_ci_types,
    maximal_rank_hvector,
    paper_table,
    prop26_chain,
    prop26_covered,
    prop26_recipe,
)
from hvlab.hseq import check_osequence, partial_sums
from hvlab.liaison import CIType, ci_hvector


def test_config_validation():
    with pytest.raises(ConfigError):
        ScenarioConfig(1, 3, (2, 3), 2)
    with pytest.raises(ConfigError):
        ScenarioConfig(1, 2, (2, 3), 6)
    with pytest.raises(ConfigError):
        ScenarioConfig(1, 2, (3, 3), 3, (1, 1))
    with pytest.raises(ConfigError):
        ScenarioConfig(2, 2, (3, 3), 3, profile="curve")
    with pytest.raises(ConfigError):
        ScenarioConfig(1, 2, (3, 3), 3, (1, 3, -1))
    cfg = ScenarioConfig(2, 2, (3, 3), 3)
    assert cfg.profile == "general" and cfg.depth == 2


def test_extremal_invariants():
    assert extremal_invariants(5, 0) == (-2, 5, 3)
    assert extremal_invariants(4, 1) == (1, 1, 0)
    assert extremal_invariants(3, 0) == (1, 0, 0)


def test_is_extremal_section():
    assert is_extremal_section((1, 2, 1, 1))
    assert not is_extremal_section((1, 2, 2))
    assert not is_extremal_section((1, 2, 1))


def test_maximal_rank():
    assert maximal_rank_hvector(6, 2) == (1, 2, 3)
    assert maximal_rank_hvector(7, 2) == (1, 2, 3, 1)
    assert maximal_rank_hvector(5, 3) == (1, 3, 1)
    assert has_maximal_rank((1, 2, 2), 2) and not has_maximal_rank((1, 2, 1, 1), 2)


def test_dominates_is_exact():
    assert dominates((1, 2, 2), (1, 2, 1, 1), 1)
    assert not dominates((1, 2, 1, 1), (1, 2, 2), 1)
    # depth-2 sums of (1,1,0,2) fall behind those of (1,1,1,1) only at large t
    assert not dominates((1, 1, 0, 2), (1, 1, 1, 1), 2)
    assert dominates((2,), (1, 1), 2)


def test_enumeration_respects_constraints():
    ci = CIType((4, 5))
    h_Y = ci_hvector(ci)
    h_Z = (1, 2, 3, 4, 3, 2, 1, 1)
    for depth in (1, 2, 3):
        for h_X in enumerate_hx(h_Y, h_Z, 5, depth):
            assert h_X[:5] == h_Y[:5] and sum(h_X) == sum(h_Z)
            assert all(v > 0 for v in h_X)
            for t in range(len(h_Y) + 3):
                assert partial_sums(h_Z, depth)(t) <= partial_sums(h_X, depth)(t) <= partial_sums(h_Y, depth)(t)


def test_enumeration_cap(monkeypatch):
    monkeypatch.setenv("HVLAB_MAX_CANDIDATES", "1")
    with pytest.raises(EnumerationLimit):
        enumerate_candidates(ScenarioConfig(1, 2, (5, 6), 5, (1, 1, 1, 1, 1)))
    with pytest.raises(EnumerationLimit):
        enumerate_candidates(ScenarioConfig(1, 2, (10, 12), 2), max_reg=20)


def test_single_point_forces_equality():
    for ci in iter_ci_types(2, 9, min_beta=1):
        if ci.degree < 2:
            continue
        for rep in enumerate_candidates(ScenarioConfig(1, 2, ci, 1)):
            assert rep.equals_section and rep.classification == ACM_FORCED


def test_degenerate_quintic_route():
    cfg = ScenarioConfig(1, 2, (2, 7), 5, (1, 1, 1, 1, 1))
    reports = enumerate_candidates(cfg)
    others = [r for r in reports if not r.equals_section]
    assert others and all(r.classification == EXCLUDED_PLANE for r in others)
    r = cfg.ci.reg
    tails = {tuple(r_.h_X[r - 5:r]) + (0,) * (5 - len(r_.h_X[r - 5:r])) for r_ in others}
    assert (2, 2, 0, 0, 0) in tails
    # the printed (2,2,1) tail has the wrong total and cannot occur
    assert not any(t[:3] == (2, 2, 1) for t in tails)
    best = min(x.genus_data.d_t for x in others)
    assert best == 11
    assert all(x.genus_data.g_linked == x.genus_data.d_t - 9 >= 2 for x in others)


def test_collinear_triple_route_c3():
    cfg = ScenarioConfig(2, 3, (3, 3, 3), 3, (1, 1, 1))
    others = [r for r in enumerate_candidates(cfg) if not r.equals_section]
    assert len(others) == 1
    rep = others[0]
    r = cfg.ci.reg
    assert rep.h_X[r - 2] == 1 and rep.classification == EXCLUDED_GENUS
    assert rep.genus_data.g_linked == 0 and rep.genus_data.d_t == 2
    # every candidate here is in fact admissible
    assert check_osequence(rep.h_X).admissible


def test_cubic_gin_exclusions():
    reasons = dict(cubic_gin_exclusions(3, 0))
    assert set(reasons) == {"x0,x1,x2^4,x2^3*x3", "x0,x1^2,x1*x2,x1*x3,x2^3", "x0,x1^2,x1*x2,x2^2"}
    assert "genus 1" in reasons["x0,x1,x2^4,x2^3*x3"]
    assert "differs" in reasons["x0,x1^2,x1*x2,x2^2"]
    assert "collinear" in reasons["x0,x1^2,x1*x2,x1*x3,x2^3"]
    planar = dict(cubic_gin_exclusions(4, 1))
    assert list(planar) == ["x0,x1,x2,x3^3"] and "aCM" in planar["x0,x1,x2,x3^3"]


def test_classify_examples():
    assert classify(ScenarioConfig(2, 2, (5, 6), 5, (1, 2, 2))).verdict == POSITIVITY_ACM
    assert classify(ScenarioConfig(2, 2, (4, 6), 6, (1, 2, 1, 1, 1))).verdict == NO_LCM
    assert classify(ScenarioConfig(1, 2, (4, 6), 6, (1, 2, 2, 1))).verdict == OUTSIDE
    assert classify(ScenarioConfig(1, 2, (4, 6), 6, (1, 2, 3))).verdict == POSITIVITY_ACM
    assert classify(ScenarioConfig(1, 2, (4, 6), 6, (1, 1, 1, 1, 1, 1))).verdict == POSITIVITY_ACM
    # extremal section of a space curve: nothing covers it
    assert classify(ScenarioConfig(1, 2, (4, 6), 6, (1, 2, 1, 1, 1))).verdict == OUTSIDE


def test_extremal_routes():
    reports = enumerate_candidates(ScenarioConfig(2, 2, (4, 5), 5, (1, 2, 1, 1)))
    assert {r.classification for r in reports if not r.equals_section} == {EXCLUDED_EXTREMAL}
    reports = enumerate_candidates(ScenarioConfig(1, 2, (4, 5), 5, (1, 2, 1, 1)))
    assert {r.classification for r in reports if not r.equals_section} == {EXCLUDED_CITED}


def test_genus_is_independent_of_t():
    cfg = ScenarioConfig(1, 2, (5, 6), 5, (1, 1, 1, 1, 1))
    for rep in enumerate_candidates(cfg):
        base = genus_data_for(cfg.ci, rep.h_X, 5)
        assert all(genus_data_for(cfg.ci, rep.h_X, 5, base.t + s).g_linked == base.g_linked for s in range(4))


def test_davis():
    p = davis_params(10)
    assert (p.e, p.f, str(p.dtype), p.consistent) == (5, 0, "[3,1]", True)
    p = davis_params(9)
    assert (p.e, p.f, str(p.dtype), p.consistent) == (4, 3, "[[3,2]]", True)
    p = davis_params(19)
    assert (p.e, p.f, str(p.dtype), sum(p.section), p.consistent) == (6, 4, "[[5,2]]", 18, False)
    for bad in (5, 7, 8, 12):
        with pytest.raises(ValueError):
            davis_params(bad)
    assert davis_section(DavisType("bracket-1", 3, 1)) == (1, 2, 3, 3, 1)
    assert davis_section(DavisType("bracket-2", 3, 2)) == (1, 2, 3, 2, 1)
    assert davis_section(DavisType("bracket-1", 2, 1)) == (1, 2, 2, 1)
    with pytest.raises(ValueError):
        DavisType("bracket-2", 3, 1)
    assert str(davis_type_of_section((1, 2, 3, 4, 5, 3, 1))) == "[[5,3]]"


def test_prop26():
    rec = prop26_chain(10)
    assert rec.ok and rec.final_degree == 26 and rec.final_genus == 75
    assert rec.xprime.h == (1, 2, 3, 3, 1) and rec.xprime.genus == 11
    assert rec.trace.last.h == (1, 2, 3, 4, 5, 6, 4, 1)
    links, further = prop26_recipe(14)
    assert links[-2:] == [(4, 6), (4, 7)] and further == (6, 6)
    links, further = prop26_recipe(28)
    assert further == (9, 9) and links[-2:] == [(6, 7), (6, 9)]
    links, further = prop26_recipe(27)
    assert further == (8, 8) and links[-2:] == [(6, 8), (6, 9)]
    assert not prop26_covered(11) and not prop26_covered(18)
    with pytest.raises(ValueError):
        prop26_chain(11)
    for d in (25, 26, 27, 28, 29, 33, 37):
        assert prop26_chain(d).ok


def test_tables_that_match():
    for name in ("thm3.2-c3", "thm3.2-c4", "prop2.6", "davis-catalog"):
        assert paper_table(name).all_match, name
    with pytest.raises(ValueError):
        paper_table("nope")


def test_thm22_table_differences_are_the_impossible_rows():
    t = paper_table("thm2.2")
    bad = {(t.expected[i][0], t.expected[i][1], tuple(t.expected[i][2:])) for i, _, _, _ in t.mismatches()}
    assert bad == {("2", "C", (2, 2, 1, 0, 0)), (">=5", "C", (4, 6, 0, 0, 0))}

"""Candidate h-vectors of subschemes near a complete intersection, and the
case analysis deciding whether a positive h-vector forces the arithmetically
Cohen-Macaulay property.

The setting: X of dimension k and codimension c lies in a complete
intersection Y of the same codimension with deg(Y) - deg(X) = d'.  Cutting
down to zero-dimensional sections, the section Z of X is linked by the
section of Y to a scheme Z' of degree d'.  For each possible h-vector of Z'
we enumerate every integer sequence that could be the h-vector of X and
route each one through the rule that disposes of it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from . import borel
from .hseq import (
    HSeq,
    IntPoly,
    at,
    check_osequence,
    genus_from_h,
    hilbert_from_h,
    hseq,
    is_degenerate_section,
    partial_sums,
    point_hvectors,
)
from .liaison import (
    ChainTrace,
    CIType,
    LinkageError,
    as_ci,
    ci_curve_poly,
    ci_hvector,
    compute_tk,
    dgo_link,
    genus_diff,
    linked_genus,
    run_chain,
)

DEFAULT_MAX_REG = 20
DEFAULT_MAX_CANDIDATES = 10**7


class ConfigError(ValueError):
    pass


class EnumerationLimit(RuntimeError):
    pass


# classification labels
ACM_FORCED = "aCM-forced"
EXCLUDED_GENUS = "excluded-by-genus"
EXCLUDED_PLANE = "excluded-by-plane-curve-rule"
EXCLUDED_EXTREMAL = "excluded-extremal"
EXCLUDED_CITED = "excluded-by-cited-rule"
CM_POSTULATION = "CM-postulation-non-aCM"
INDETERMINATE = "indeterminate"

# summary verdicts
POSITIVITY_ACM = "positivity => aCM"
NO_LCM = "no lCM codimension-two X exists with this section"
OUTSIDE = "outside theorem hypotheses"


@dataclass(frozen=True)
class Rule:
    name: str
    statement: str
    source: str


# Results imported from the literature.  They are applied, never re-proved.
RULES = {
    "plane-curve": Rule(
        "plane-curve",
        "char 0: a curve of degree >= 3 whose general hyperplane section is "
        "collinear is a plane curve, hence aCM",
        "[H94, Thm 2.1]",
    ),
    "cm-postulation": Rule(
        "cm-postulation",
        "a space curve in a complete intersection with d' <= 5 and Cohen-"
        "Macaulay postulation is aCM (admissible h-vector gives CM postulation)",
        "[CDG, Thm 4.2] with Valla's theorem",
    ),
    "extremal": Rule(
        "extremal",
        "section (1,2,1,...,1) of degree >= 5 makes the linked curve extremal; "
        "an extremal curve is aCM or lifts to no lCM surface",
        "[E95, Thm 8], [CGN02, Thm 1.1, Cor 3.6]",
    ),
    "degree-3-genus": Rule(
        "degree-3-genus",
        "an lCM curve of degree 3 has genus <= 1, with equality iff it is planar",
        "[H94]",
    ),
    "degenerate-section": Rule(
        "degenerate-section",
        "char 0: a non-degenerate space curve has non-degenerate general "
        "hyperplane section",
        "[H94, Thm 2.1]",
    ),
    "gin-section": Rule(
        "gin-section",
        "gin of the general hyperplane section is (gin(X), x_n)^sat / (x_n)",
        "[BS, Thm 4.2], [Gr]",
    ),
    "section-equality": Rule(
        "section-equality",
        "h_X = h_Z forces every successive section to have the expected "
        "Hilbert function, hence X is aCM",
        "hyperplane-section exact sequence; [HU, Prop 2.1]",
    ),
}


def max_candidates() -> int:
    return int(os.environ.get("HVLAB_MAX_CANDIDATES", DEFAULT_MAX_CANDIDATES))


# ---------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class ScenarioConfig:
    k: int
    c: int
    ci: CIType
    defect: int
    h_Zprime: HSeq | None = None
    profile: str | None = None  # "curve" or "general"; default by k

    def __post_init__(self):
        object.__setattr__(self, "ci", as_ci(self.ci))
        if self.h_Zprime is not None:
            object.__setattr__(self, "h_Zprime", hseq(self.h_Zprime))
        profile = self.profile or ("curve" if self.k == 1 else "general")
        object.__setattr__(self, "profile", profile)
        if self.k < 1:
            raise ConfigError("k must be >= 1")
        if self.c < 2:
            raise ConfigError("codimension must be >= 2")
        if self.ci.codim != self.c:
            raise ConfigError(f"complete intersection {self.ci} has codimension {self.ci.codim}, not {self.c}")
        if not 1 <= self.defect < self.ci.degree:
            raise ConfigError(f"defect must lie in [1, {self.ci.degree - 1}]")
        if profile not in ("curve", "general"):
            raise ConfigError(f"unknown profile {profile!r}")
        if profile == "curve" and self.k != 1:
            raise ConfigError("the curve profile needs k = 1")
        if self.h_Zprime is not None:
            if sum(self.h_Zprime) != self.defect:
                raise ConfigError("h_Zprime must have degree equal to the defect")
            if self.h_Zprime not in point_hvectors(self.defect, self.c):
                raise ConfigError(f"{self.h_Zprime} is not a zero-dimensional h-vector in P^{self.c}")

    @property
    def depth(self) -> int:
        """Depth of the partial-sum domination between h_X and h_Z."""
        return 1 if self.profile == "curve" else self.k

    def zprimes(self) -> list[HSeq]:
        if self.h_Zprime is not None:
            return [self.h_Zprime]
        return point_hvectors(self.defect, self.c)


# ---------------------------------------------------------------------------
# section shapes


def is_extremal_section(h_Z: Sequence[int]) -> bool:
    """(1, 2, 1, ..., 1) of degree >= 5."""
    h = hseq(h_Z)
    return len(h) >= 2 and h[:2] == (1, 2) and all(v == 1 for v in h[2:]) and sum(h) >= 5


def maximal_rank_hvector(degree: int, ambient: int) -> HSeq:
    """h-vector of points with H(t) = min(degree, C(t + ambient, ambient))."""
    values = []
    t = 0
    while True:
        hf = min(degree, comb(t + ambient, ambient))
        values.append(hf - (values and min(degree, comb(t - 1 + ambient, ambient)) or 0))
        if hf == degree:
            break
        t += 1
    return hseq(values)


def has_maximal_rank(h_Z: Sequence[int], ambient: int) -> bool:
    return hseq(h_Z) == maximal_rank_hvector(sum(h_Z), ambient)


def extremal_invariants(d: int, g: int) -> tuple[int, int, int]:
    """(r_a, r_0, h^1 value) of an extremal space curve of degree d, genus g."""
    if d < 3:
        raise ValueError("extremal curves have degree >= 3")
    base = (d - 2) * (d - 3) // 2
    return g + 1 - base, d * (d - 3) // 2 - g, base - g


# ---------------------------------------------------------------------------
# enumeration


def dominates(hi: Sequence[int], lo: Sequence[int], depth: int) -> bool:
    """True if the depth-fold partial sums of ``hi`` are >= those of ``lo`` at
    every t >= 0 (checked exactly, including the polynomial tail)."""
    n = max(len(hi), len(lo))
    diff = [at(hi, t) - at(lo, t) for t in range(n)]
    f = partial_sums(diff, depth)
    values = [f(t) for t in range(n + depth + 1)]
    if min(values, default=0) < 0:
        return False
    if depth == 0:
        return True
    tail = IntPoly.from_values(values[n:n + depth + 1])
    mono = tail.monomial_coeffs()
    while mono and mono[-1] == 0:
        mono.pop()
    if not mono:
        return True
    if mono[-1] < 0:
        return False
    bound = 1 + max(abs(c / mono[-1]) for c in mono)
    return all(tail(u) >= 0 for u in range(int(bound) + 2))


def enumerate_hx(h_Y: HSeq, h_Z: HSeq, t_k: int | None, depth: int, limit: int | None = None) -> list[HSeq]:
    """Positive sequences h_X with h_X = h_Y below t_k, sum h_X = sum h_Z and
    Sigma^depth h_Z <= Sigma^depth h_X <= Sigma^depth h_Y everywhere.

    Candidates come out in lexicographic order of the sequences.
    """
    limit = max_candidates() if limit is None else limit
    if t_k is None:
        return [h_Y]
    prefix = list(h_Y[:t_k])
    total = sum(h_Z) - sum(prefix)
    if total < 0:
        return []
    moment_z = sum(i * v for i, v in enumerate(h_Z))
    sz = partial_sums(h_Z, depth)
    sy = partial_sums(h_Y, depth)
    out: list[HSeq] = []

    def grow(seq: list[int], remaining: int, moment: int) -> None:
        p = len(seq)
        if remaining == 0:
            cand = tuple(seq)
            if dominates(cand, h_Z, depth) and dominates(h_Y, cand, depth):
                out.append(cand)
                if len(out) > limit:
                    raise EnumerationLimit(f"more than {limit} candidates")
            return
        # asymptotic domination needs sum i*h_X(i) <= sum i*h_Z(i)
        if moment + remaining * p > moment_z:
            return
        for v in range(1, remaining + 1):
            seq.append(v)
            s = partial_sums(seq, depth)(p)
            if sz(p) <= s <= sy(p):
                grow(seq, remaining - v, moment + v * p)
            seq.pop()

    grow(prefix, total, sum(i * v for i, v in enumerate(prefix)))
    return sorted(out)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class GenusData:
    d_t: int
    t: int
    g_linked: int


@dataclass
class CandidateReport:
    h_X: HSeq
    h_Z: HSeq
    h_Zprime: HSeq
    positive: bool
    admissible: bool
    equals_section: bool
    t_k: int | None
    genus_data: GenusData | None
    classification: str
    rule_citation: str
    notes: list[str] = field(default_factory=list)


def curve_poly(h: Sequence[int]) -> IntPoly:
    """Hilbert polynomial of the curve section of a scheme with h-vector h."""
    return hilbert_from_h(h, 1).tail


def genus_data_for(ci: CIType, h_X: HSeq, defect: int, t: int | None = None) -> GenusData:
    r = ci.reg
    if t is None:
        rho_c = hilbert_from_h(h_X, 1).rho
        t = max(rho_c, r - 2)
    d_t = ci_curve_poly(ci)(t) - curve_poly(h_X)(t)
    return GenusData(d_t, t, linked_genus(ci, defect, d_t, t))


def _gin_of_collinear_triple(c: int) -> borel.MonIdeal:
    """gin of three collinear points in P^c: (x_0, ..., x_{c-2}, x_{c-1}^3)."""
    gens = []
    for i in range(c - 1):
        gens.append(tuple(1 if j == i else 0 for j in range(c + 1)))
    gens.append(tuple(3 if j == c - 1 else 0 for j in range(c + 1)))
    return borel.MonIdeal(c + 1, tuple(gens))


def _linear_forms(ideal: borel.MonIdeal) -> int:
    return sum(1 for g in ideal.generators if sum(g) == 1)


@lru_cache(maxsize=None)
def cubic_gin_exclusions(c: int, g_linked: int) -> tuple[tuple[str, str | None], ...]:
    """For each saturated Borel ideal that could be gin(C'), C' a degree-3
    curve of genus ``g_linked`` in P^(c+1) with collinear section, the reason
    it cannot occur (None when no rule applies)."""
    nvars = c + 2
    p = IntPoly.linear(3, 1 - g_linked)
    section_gin = _gin_of_collinear_triple(c)
    out = []
    for ideal in borel.enumerate_borel(nvars, p):
        planar = _linear_forms(ideal) >= c - 1
        if planar and g_linked != 1:
            reason = f"planar lCM cubic has genus 1, not {g_linked}"
        elif planar:
            reason = "C' is a plane cubic, hence aCM, so X would be aCM"
        elif borel.restrict_section(ideal) != section_gin:
            reason = f"section gin {borel.restrict_section(ideal)} differs from {section_gin}"
        else:
            reason = "non-degenerate cubic with collinear general section"
        out.append((str(ideal), reason))
    return tuple(out)


def _route_candidate(cfg: ScenarioConfig, zp: HSeq, h_X: HSeq, h_Z: HSeq, t_k) -> CandidateReport:
    ci = cfg.ci
    verdict = check_osequence(h_X)
    report = CandidateReport(
        h_X=h_X,
        h_Z=h_Z,
        h_Zprime=zp,
        positive=verdict.positive,
        admissible=verdict.admissible,
        equals_section=h_X == h_Z,
        t_k=t_k,
        genus_data=None,
        classification=INDETERMINATE,
        rule_citation="no rule applies",
    )
    if report.equals_section:
        rule = RULES["section-equality"]
        report.classification = ACM_FORCED
        report.rule_citation = f"{rule.statement} {rule.source}"
        return report

    d = cfg.defect
    if cfg.c == 2 and is_degenerate_section(zp) and d >= 3:
        if d == 5:
            report.genus_data = genus_data_for(ci, h_X, d, t=ci.reg - 1)
        rule = RULES["plane-curve"]
        report.classification = EXCLUDED_PLANE
        report.rule_citation = f"{rule.statement} {rule.source}"
        return report

    if cfg.c == 2 and is_extremal_section(zp):
        if cfg.k >= 2:
            rule = RULES["extremal"]
            report.classification = EXCLUDED_EXTREMAL
            report.rule_citation = f"{rule.statement} {rule.source}"
            return report
        if d <= 5 and report.admissible:
            rule = RULES["cm-postulation"]
            report.classification = EXCLUDED_CITED
            report.rule_citation = f"{rule.statement} {rule.source}"
            return report

    if cfg.c == 2 and cfg.k == 1 and d <= 5 and report.admissible:
        rule = RULES["cm-postulation"]
        report.classification = EXCLUDED_CITED
        report.rule_citation = f"{rule.statement} {rule.source}"
        return report

    if cfg.c >= 3 and zp == (1, 1, 1):
        gd = genus_data_for(ci, h_X, d)
        report.genus_data = gd
        rule = RULES["degree-3-genus"]
        if gd.g_linked > 1:
            report.classification = EXCLUDED_GENUS
            report.rule_citation = f"g' = {gd.g_linked} > 1: {rule.statement} {rule.source}"
            return report
        if gd.g_linked in (0, 1):
            reasons = cubic_gin_exclusions(cfg.c, gd.g_linked)
            report.notes = [f"{ideal}: {why}" for ideal, why in reasons]
            if all(why is not None for _, why in reasons):
                report.classification = EXCLUDED_GENUS
                report.rule_citation = (
                    f"g' = {gd.g_linked}, so P(C') = 3t+{1 - gd.g_linked}; every saturated "
                    f"Borel ideal with that polynomial is ruled out ({rule.source}; "
                    f"{RULES['gin-section'].source}; {RULES['degenerate-section'].source})"
                )
                return report
    if report.admissible:
        report.classification = CM_POSTULATION
        report.rule_citation = "admissible h-vector differing from the section: no rule excludes it"
    return report


def section_of_link(zp: HSeq, ci: CIType) -> HSeq | None:
    try:
        return dgo_link(zp, ci).h_linked
    except LinkageError:
        return None


def enumerate_candidates(cfg: ScenarioConfig, max_reg: int = DEFAULT_MAX_REG) -> list[CandidateReport]:
    if cfg.ci.reg > max_reg:
        raise EnumerationLimit(f"reg(Y) = {cfg.ci.reg} exceeds the cap {max_reg}")
    h_Y = ci_hvector(cfg.ci)
    reports = []
    budget = max_candidates()
    for zp in cfg.zprimes():
        h_Z = section_of_link(zp, cfg.ci)
        if h_Z is None:
            continue
        t_k = compute_tk(h_Z, h_Y)
        for h_X in enumerate_hx(h_Y, h_Z, t_k, cfg.depth, budget - len(reports)):
            if not check_osequence(h_X).positive:
                continue
            reports.append(_route_candidate(cfg, zp, h_X, h_Z, t_k))
    return reports


# ---------------------------------------------------------------------------
# classification


@dataclass
class SectionVerdict:
    h_Zprime: HSeq
    linkable: bool
    verdict: str
    route: str
    counts: dict[str, int]


@dataclass
class ClassifySummary:
    verdict: str
    sections: list[SectionVerdict]
    candidates: list[CandidateReport]


def _hypothesis(cfg: ScenarioConfig, zp: HSeq) -> tuple[str | None, str]:
    """(verdict when covered or None, route description)."""
    d = cfg.defect
    if cfg.c == 2 and d <= 5:
        if is_degenerate_section(zp) and d >= 3:
            return POSITIVITY_ACM, "degenerate Z': plane-curve rule"
        if is_extremal_section(zp):
            return POSITIVITY_ACM, "extremal Z' (1,2,1,...,1)"
        return POSITIVITY_ACM, "forced equality of h_X and h_Z"
    if cfg.c >= 3 and d <= 3:
        if zp == (1, 1, 1):
            return POSITIVITY_ACM, "Z' collinear triple: genus and Borel route"
        return POSITIVITY_ACM, "forced equality of h_X and h_Z"
    if cfg.c == 2:
        if is_extremal_section(zp):
            if cfg.k >= 2:
                return NO_LCM, "extremal Z' (1,2,1,...,1): no lCM lift"
            return None, "extremal section of a space curve"
        if is_degenerate_section(zp):
            return POSITIVITY_ACM, "degenerate Z': plane-curve rule"
        if has_maximal_rank(zp, 2):
            return POSITIVITY_ACM, "Z' of maximal rank"
        return None, "Z' neither degenerate nor of maximal rank"
    if has_maximal_rank(zp, cfg.c):
        return POSITIVITY_ACM, f"Z' of maximal rank in P^{cfg.c}"
    return None, f"defect {d} too large for codimension {cfg.c}"


def classify(cfg: ScenarioConfig, max_reg: int = DEFAULT_MAX_REG) -> ClassifySummary:
    reports = enumerate_candidates(cfg, max_reg)
    sections = []
    for zp in cfg.zprimes():
        verdict, route = _hypothesis(cfg, zp)
        mine = [r for r in reports if r.h_Zprime == zp]
        counts: dict[str, int] = {}
        for r in mine:
            counts[r.classification] = counts.get(r.classification, 0) + 1
        linkable = section_of_link(zp, cfg.ci) is not None
        if not linkable:
            verdict_here = "not linkable in this complete intersection"
        elif verdict is None:
            verdict_here = OUTSIDE
        elif verdict == NO_LCM:
            verdict_here = NO_LCM
        elif any(r.classification in (INDETERMINATE, CM_POSTULATION) for r in mine):
            verdict_here = INDETERMINATE
        else:
            verdict_here = POSITIVITY_ACM
        sections.append(SectionVerdict(zp, linkable, verdict_here, route, counts))
    live = [s for s in sections if s.linkable]
    if any(s.verdict == INDETERMINATE for s in live):
        overall = INDETERMINATE
    elif any(s.verdict == OUTSIDE for s in live):
        overall = OUTSIDE
    elif live and all(s.verdict == NO_LCM for s in live):
        overall = NO_LCM
    else:
        overall = POSITIVITY_ACM
    return ClassifySummary(overall, sections, reports)


# ---------------------------------------------------------------------------
# Davis curves


@dataclass(frozen=True)
class DavisType:
    kind: str  # "bracket-1" for [a,r], "bracket-2" for [[a,r]]
    a: int
    r: int

    def __post_init__(self):
        if self.kind == "bracket-1":
            ok = self.a > self.r > 0
        elif self.kind == "bracket-2":
            ok = self.a > self.r > 1
        else:
            raise ValueError(f"unknown Davis kind {self.kind!r}")
        if not ok:
            raise ValueError(f"invalid Davis type {self}")

    def __str__(self) -> str:
        if self.kind == "bracket-1":
            return f"[{self.a},{self.r}]"
        return f"[[{self.a},{self.r}]]"


def davis_section(dtype: DavisType) -> HSeq:
    """Section h-vector forced by the type: maximal growth up to degree a-1,
    then the two prescribed values, then zero."""
    grow = list(range(1, dtype.a + 1))
    if dtype.kind == "bracket-1":
        return hseq(grow + [dtype.a, dtype.r])
    return hseq(grow + [dtype.r, 1])


def davis_type_of_section(h: Sequence[int]) -> DavisType | None:
    """Inverse of davis_section, or None when h has neither shape."""
    h = hseq(h)
    if len(h) < 3:
        return None
    a = len(h) - 2
    if h[:a] != tuple(range(1, a + 1)):
        return None
    for kind, tail in (("bracket-1", (a, h[-1])), ("bracket-2", (h[-2], 1))):
        if h[a:] == tail:
            try:
                return DavisType(kind, a, tail[1] if kind == "bracket-1" else tail[0])
            except ValueError:
                pass
    return None


@dataclass(frozen=True)
class DavisParams:
    defect: int
    e: int
    f: int
    dtype: DavisType
    section: HSeq
    consistent: bool


def davis_params(d_prime: int) -> DavisParams:
    if d_prime < 6 or d_prime in (7, 8, 12):
        raise ValueError(f"no Davis curve recipe for d' = {d_prime}")
    e = 2
    while comb(e + 1, 2) <= d_prime:
        e += 1
    f = d_prime - comb(e, 2)
    gap = e - f
    if gap == 1:
        dtype = DavisType("bracket-2", e - 1, f - 1)
    elif gap == 2:
        dtype = DavisType("bracket-2", e - 1, 2)
    elif gap == 3:
        dtype = DavisType("bracket-2", e - 1, f)
    else:
        dtype = DavisType("bracket-1", e - 2, f + 1)
    section = davis_section(dtype)
    return DavisParams(d_prime, e, f, dtype, section, sum(section) == d_prime)


# ---------------------------------------------------------------------------
# surfaces with CM postulation from the Veronese surface

VERONESE_SECTION = (1, 2, 1)
VERONESE_GENUS = 0

# Printed construction table, kept as the expected copy: defect -> (start
# surface, liaisons, further liaison, listed h-vector of X).  The engine
# regenerates the first three columns from the general rule below.
PROP26_ROWS = {
    10: ("V", [(3, 4), (3, 6)], (6, 6), (1, 2, 3, 4, 5, 6, 5)),
    14: (10, [(4, 6), (4, 7)], (6, 6), (1, 2, 3, 4, 5, 6, 1)),
    15: ("V", [(3, 3), (3, 4), (4, 5), (4, 7)], (7, 7), (1, 2, 3, 4, 5, 6, 7, 6)),
    19: (14, [(5, 7), (5, 8)], (7, 7), (1, 2, 3, 4, 5, 6, 7, 2)),
    20: (15, [(5, 7), (5, 8)], (7, 7), (1, 2, 3, 4, 5, 6, 7, 1)),
    21: ("V", [(3, 3), (3, 4), (4, 4), (4, 5), (5, 6), (5, 8)], (8, 8), (1, 2, 3, 4, 5, 6, 7, 8, 7)),
    22: ("V", [(3, 4), (4, 5), (5, 6), (5, 8)], (8, 8), (1, 2, 3, 4, 5, 6, 7, 8, 6)),
}


def _family(d_prime: int) -> tuple[str, int]:
    """(kind, t) with C(t,2) - 3 <= d' <= C(t,2) + 1; kind is "recursive"
    for the three values below C(t,2), else "binomial" or "binomial+1"."""
    t = 2
    while comb(t + 1, 2) - 3 <= d_prime:
        t += 1
    offset = d_prime - comb(t, 2)
    if offset < -3 or offset > 1:
        raise ValueError(f"d' = {d_prime} is not within 3 below or 1 above a binomial C(t,2)")
    kind = "recursive" if offset < 0 else ("binomial" if offset == 0 else "binomial+1")
    return kind, t


def prop26_covered(d_prime: int) -> bool:
    if d_prime in PROP26_ROWS:
        return True
    try:
        _, t = _family(d_prime)
    except ValueError:
        return False
    return t >= 8


def prop26_step(d_prime: int) -> tuple[int | None, list[tuple[int, int]], tuple[int, int]]:
    """One row of the construction: (start defect or None for the Veronese
    surface, liaisons, further liaison)."""
    if not prop26_covered(d_prime):
        raise ValueError(f"d' = {d_prime} is not covered by the construction")
    kind, t = _family(d_prime)
    if kind == "recursive":
        d_bar = comb(t - 1, 2) + (d_prime - comb(t, 2)) + 1
        return d_bar, [(t - 2, t), (t - 2, t + 1)], (t, t)
    links: list[tuple[int, int]] = []
    if kind == "binomial":
        for j in range(3, t - 2):
            links += [(j, j), (j, j + 1)]
        links += [(t - 2, t - 1), (t - 2, t + 1)]
    else:
        for j in range(3, t - 4):
            links += [(j, j), (j, j + 1)]
        links += [(t - 4, t - 3), (t - 3, t - 2), (t - 2, t - 1), (t - 2, t + 1)]
    return None, links, (t + 1, t + 1)


def prop26_recipe(d_prime: int) -> tuple[list[tuple[int, int]], tuple[int, int]]:
    """All liaisons from the Veronese surface to X'_{d'}, and the further link."""
    start, links, further = prop26_step(d_prime)
    before = [] if start is None else prop26_recipe(start)[0]
    return before + links, further


@dataclass
class Prop26Record:
    defect: int
    trace: ChainTrace
    xprime_index: int  # trace step holding X'_{d'}
    further: tuple[int, int]
    final_degree: int
    final_genus: int
    checks: dict[str, bool]
    davis: DavisParams | None = None
    davis_match: bool | None = None  # None when the Davis row itself is inconsistent
    listed_hvector: HSeq | None = None

    @property
    def xprime(self):
        return self.trace.steps[self.xprime_index]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def prop26_chain(d_prime: int) -> Prop26Record:
    links, further = prop26_recipe(d_prime)
    steps = [("link", l) for l in links] + [("link", further)]
    trace = run_chain(VERONESE_SECTION, VERONESE_GENUS, steps)
    xprime = trace.steps[-2]
    final = trace.last
    checks = {
        "xprime_degree": xprime.degree == d_prime,
        "final_degree": final.degree == as_ci(further).degree - d_prime,
        "genus_law": all(
            before.genus - after.genus == genus_diff(after.params, 3, before.degree, after.degree)
            for before, after in zip(trace.steps, trace.steps[1:])
        ),
    }
    listed = PROP26_ROWS[d_prime][3] if d_prime in PROP26_ROWS else None
    if listed is not None:
        checks["listed_admissible"] = check_osequence(listed).admissible
        checks["listed_degree"] = sum(listed) == final.degree
        checks["listed_genus"] = genus_from_h(listed) == final.genus
    record = Prop26Record(d_prime, trace, len(trace.steps) - 2, further, final.degree, final.genus, checks,
                          listed_hvector=listed)
    try:
        record.davis = davis_params(d_prime)
    except ValueError:
        return record
    if record.davis.consistent:
        record.davis_match = xprime.h == record.davis.section
    return record


def prop26_defects(limit: int) -> list[int]:
    """All defects <= limit covered by the construction."""
    return [d for d in range(1, limit + 1) if prop26_covered(d)]


def iter_ci_types(c: int, max_reg: int, min_beta: int = 1) -> Iterator[CIType]:
    """All complete intersection types of codimension c with reg <= max_reg."""
    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == c:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else min_beta
        remaining = c - len(prefix) - 1
        b = lo
        while sum(prefix) + b + remaining * b - c + 1 <= max_reg:
            yield from rec(prefix + [b])
            b += 1

    for betas in rec([]):
        yield CIType(betas)


# ---------------------------------------------------------------------------
# printed tables: regenerated rows against embedded expected copies


@dataclass
class ReferenceTable:
    name: str
    columns: list[str]
    regenerated: list[list]
    expected: list[list]
    matches: list[list[bool]]
    notes: list[str] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(all(row) for row in self.matches)

    def mismatches(self) -> list[tuple[int, str, object, object]]:
        out = []
        for i, row in enumerate(self.matches):
            for j, ok in enumerate(row):
                if not ok:
                    reg = self.regenerated[i][j] if i < len(self.regenerated) else None
                    exp = self.expected[i][j] if i < len(self.expected) else None
                    out.append((i, self.columns[j], reg, exp))
        return out


def _cell_matches(regenerated: list[list], expected: list[list], width: int) -> list[list[bool]]:
    out = []
    for i in range(max(len(regenerated), len(expected))):
        reg = regenerated[i] if i < len(regenerated) else [None] * width
        exp = expected[i] if i < len(expected) else [None] * width
        out.append([reg[j] is not None and reg[j] == exp[j] for j in range(width)])
    return out


def _align(regenerated: list[list], expected: list[list], key_width: int) -> tuple[list[list], list[list]]:
    """Pair rows by their first ``key_width`` cells (k-th occurrence with k-th
    occurrence); unpaired rows face a row of None."""
    width = len((expected or regenerated)[0])
    pool: dict[tuple, list[list]] = {}
    for row in regenerated:
        pool.setdefault(tuple(row[:key_width]), []).append(row)
    reg_out, exp_out = [], []
    for row in expected:
        bucket = pool.get(tuple(row[:key_width]), [])
        reg_out.append(bucket.pop(0) if bucket else [None] * width)
        exp_out.append(row)
    for bucket in pool.values():
        for row in bucket:
            reg_out.append(row)
            exp_out.append([None] * width)
    return reg_out, exp_out


# Degenerate quintic section, curves (c=2, k=1): rows over reg(Y)-5 .. reg(Y)-1,
# transcribed as printed, including the two rows that cannot occur (see notes).
THM22_EXPECTED = [
    ["2", "Y", 2, 2, 2, 2, 1],
    ["2", "C", 2, 2, 1, 0, 0],
    ["2", "Z", 1, 1, 1, 1, 0],
    ["3", "Y", 3, 3, 3, 2, 1],
    ["3", "C", 3, 3, 1, 0, 0],
    ["3", "Z", 2, 2, 2, 1, 0],
    ["4", "Y", 4, 4, 3, 2, 1],
    ["4", "C", 4, 4, 1, 0, 0],
    ["4", "Z", 3, 3, 2, 1, 0],
    [">=5", "Y", 5, 4, 3, 2, 1],
    [">=5", "C", 5, 4, 1, 0, 0],
    [">=5", "C", 4, 6, 0, 0, 0],
    [">=5", "Z", 4, 3, 2, 1, 0],
]

# Collinear triple section, c = 3; cells over reg(Y)-3 .. reg(Y), with
# a = h_Y(reg(Y) - 3).
THM32_C3_EXPECTED = [
    [1, "Y", "a", 3, 1, 0],
    [1, "X", "a", 1, 0, 0],
    [1, "Z", "a-1", 2, 0, 0],
]

# Same for c >= 4, first and second case; c-relative entries are symbolic.
THM32_C4_EXPECTED = [
    [1, "Y", "a", "c", 1, 0],
    [1, "X", "a", "c-2", 0, 0],
    [1, "Z", "a-1", "c-1", 0, 0],
    [2, "Y", "a", "c", 1, 0],
    [2, "X", "a", "c-3", 1, 0],
    [2, "Z", "a-1", "c-1", 0, 0],
]

# Davis curve types by e - f, as printed.
DAVIS_RULES = {1: ("bracket-2", "e-1", "f-1"), 2: ("bracket-2", "e-1", "2"), 3: ("bracket-2", "e-1", "f"),
               4: ("bracket-1", "e-2", "f+1")}


def _sym(value: int, base: int, name: str) -> str:
    off = value - base
    return name if off == 0 else f"{name}{off:+d}"


def _thm22_rows() -> tuple[list[list], list[str]]:
    notes = []
    zp = (1, 1, 1, 1, 1)
    by_class: dict[str, set] = {}
    mins = set()
    for ci in iter_ci_types(2, 14, min_beta=2):
        if ci.betas[1] < 5:
            continue  # window reaches the rising part of h_Y
        cfg = ScenarioConfig(1, 2, ci, 5, zp)
        reports = [r for r in enumerate_candidates(cfg) if not r.equals_section]
        if not reports:
            continue
        best = min(r.genus_data.d_t for r in reports)
        mins.add(best)
        r = ci.reg
        window = range(r - 5, r)
        h_Y = ci_hvector(ci)
        h_Z = reports[0].h_Z
        crow = tuple(sorted({tuple(at(rep.h_X, t) for t in window) for rep in reports
                             if rep.genus_data.d_t == best}, reverse=True))
        key = str(ci.betas[0]) if ci.betas[0] < 5 else ">=5"
        sig = (tuple(at(h_Y, t) for t in window), crow, tuple(at(h_Z, t) for t in window))
        by_class.setdefault(key, set()).add(sig)
    rows = []
    for key in ("2", "3", "4", ">=5"):
        sigs = by_class.get(key, set())
        if len(sigs) != 1:
            notes.append(f"beta_1 = {key}: {len(sigs)} distinct row patterns")
        for y, cs, z in sorted(sigs):
            rows.append([key, "Y", *y])
            rows.extend([key, "C", *c] for c in cs)
            rows.append([key, "Z", *z])
    notes.append(f"minimum D over all types: {sorted(mins)}")
    return rows, notes


def _thm32_cases(c_values: Sequence[int], max_reg: int = 12) -> tuple[list[tuple], list[str]]:
    """Symbolic (Y, X, Z) tails for non-equal candidates with Z' collinear."""
    cases: dict[tuple, set] = {}
    extra = []
    for c in c_values:
        for ci in iter_ci_types(c, max_reg, min_beta=2):
            for k in (2, 3):
                cfg = ScenarioConfig(k, c, ci, 3, (1, 1, 1))
                for rep in enumerate_candidates(cfg):
                    if rep.equals_section:
                        continue
                    r = ci.reg
                    h_Y = ci_hvector(ci)
                    a = at(h_Y, r - 3)
                    if any(at(rep.h_X, t) != at(h_Y, t) or at(rep.h_Z, t) != at(h_Y, t) for t in range(r - 3)):
                        extra.append(f"{ci} k={k}: prefix differs from h_Y")
                    rows = []
                    for seq in (h_Y, rep.h_X, rep.h_Z):
                        rows.append((_sym(at(seq, r - 3), a, "a"), at(seq, r - 2) - c,
                                     at(seq, r - 1), at(seq, r)))
                    key = tuple(rows)
                    cases.setdefault(key, set()).add((c, rep.genus_data.g_linked if rep.genus_data else None))
                    if at(rep.h_X, r - 2) < c - 3:
                        extra.append(f"{ci} k={k}: h_X = {rep.h_X}, g' = {rep.genus_data.g_linked}")
    ordered = sorted(cases, key=lambda key: (-key[1][1], key))
    notes = [f"case {i + 1}: (c, g') in {sorted(cases[key])}" for i, key in enumerate(ordered)]
    notes += extra or ["no candidate with h_X(reg(Y)-2) < c-3"]
    return ordered, notes


def _thm32_table(name: str, c_values: Sequence[int], expected: list[list], symbolic_c: bool) -> ReferenceTable:
    cases, notes = _thm32_cases(c_values)
    rows = []
    for i, case in enumerate(cases, 1):
        for label, (a_cell, c_off, v1, v2) in zip("YXZ", case):
            if symbolic_c:
                mid = "c" if c_off == 0 else f"c{c_off:+d}"
            else:
                mid = c_values[0] + c_off
            rows.append([i, label, a_cell, mid, v1, v2])
    columns = ["case", "row", "reg-3", "reg-2", "reg-1", "reg"]
    return ReferenceTable(name, columns, rows, expected, _cell_matches(rows, expected, len(columns)), notes)


def _prop26_table() -> ReferenceTable:
    columns = ["d'", "S", "liaisons", "further", "h-vector check"]
    regenerated, expected = [], []
    notes = []
    for d, (start, links, further, listed) in PROP26_ROWS.items():
        s, ls, fu = prop26_step(d)
        rec = prop26_chain(d)
        verified = all(rec.checks.get(k) for k in ("listed_admissible", "listed_degree", "listed_genus"))
        regenerated.append([d, "V" if s is None else f"X'{s}", ls, fu, list(listed) if verified else None])
        expected.append([d, "V" if start == "V" else f"X'{start}", links, further, list(listed)])
        notes.append(f"d'={d}: section of X {rec.trace.last.h}, degree {rec.final_degree}, genus {rec.final_genus}")
    return ReferenceTable("prop2.6", columns, regenerated, expected,
                      _cell_matches(regenerated, expected, len(columns)), notes)


def _davis_table(limit: int = 30) -> ReferenceTable:
    columns = ["d'", "e", "f", "e-f", "type", "section", "consistent"]
    regenerated, expected = [], []
    for d in range(6, limit + 1):
        if d in (7, 8, 12):
            continue
        p = davis_params(d)
        gap = p.e - p.f
        kind, a_expr, r_expr = DAVIS_RULES[min(gap, 4)]
        env = {"e": p.e, "f": p.f}
        a = eval(a_expr, {}, env)  # noqa: S307 - fixed arithmetic strings
        r = eval(r_expr, {}, env)  # noqa: S307
        want = str(DavisType(kind, a, r)) if (a > r > (1 if kind == "bracket-2" else 0)) else None
        row = [d, p.e, p.f, gap, str(p.dtype), ",".join(map(str, p.section)), p.consistent]
        regenerated.append(row)
        expected.append(row[:4] + [want] + row[5:])
    notes = []
    for r in regenerated:
        if r[6]:
            continue
        note = f"d'={r[0]}: type {r[4]} has section degree {sum(map(int, r[5].split(',')))}"
        if prop26_covered(r[0]):
            built = prop26_chain(r[0]).xprime.h
            note += f"; the liaison construction yields section {','.join(map(str, built))}"
            found = davis_type_of_section(built)
            if found is not None:
                note += f" = type {found}"
        notes.append(note)
    return ReferenceTable("davis-catalog", columns, regenerated, expected,
                      _cell_matches(regenerated, expected, len(columns)), notes)


TABLE_NAMES = ("thm2.2", "thm3.2-c3", "thm3.2-c4", "prop2.6", "davis-catalog")


def paper_table(name: str) -> ReferenceTable:
    if name == "thm2.2":
        rows, notes = _thm22_rows()
        columns = ["beta_1", "row", "reg-5", "reg-4", "reg-3", "reg-2", "reg-1"]
        rows, expected = _align(rows, THM22_EXPECTED, 2)
        return ReferenceTable(name, columns, rows, expected, _cell_matches(rows, expected, len(columns)), notes)
    if name == "thm3.2-c3":
        return _thm32_table(name, [3], THM32_C3_EXPECTED, symbolic_c=False)
    if name == "thm3.2-c4":
        return _thm32_table(name, [4, 5], THM32_C4_EXPECTED, symbolic_c=True)
    if name == "prop2.6":
        return _prop26_table()
    if name == "davis-catalog":
        return _davis_table()
    raise ValueError(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}")

"""Seeded randomized consistency checks shared by the test suite and the CLI."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .hseq import HSeq, at, check_osequence, hseq, macaulay_bound
from .liaison import CIType, LinkageError, ci_hvector, dgo_link, section_reg
from .engine import ScenarioConfig, enumerate_candidates, genus_data_for

DEFAULT_SEED = 20240611


@dataclass
class CheckResult:
    name: str
    seed: int
    trials: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.trials > 0 and not self.failures


def random_ci(rng: random.Random, codim: int, max_reg: int) -> CIType:
    while True:
        betas = sorted(rng.randint(1, max_reg) for _ in range(codim))
        ci = CIType(tuple(betas))
        if ci.reg <= max_reg and ci.degree > 1:
            return ci


def random_section(rng: random.Random, bound: HSeq) -> HSeq:
    """A random O-sequence lying pointwise below ``bound``."""
    h = [1]
    for t in range(1, len(bound)):
        cap = min(at(bound, t), macaulay_bound(h[-1], t - 1)[0] if t > 1 else at(bound, 1))
        v = rng.randint(0, cap) if cap > 0 else 0
        if v == 0:
            break
        h.append(v)
    return hseq(h)


def check_dgo(seed: int = DEFAULT_SEED, count: int = 1000, max_reg: int = 14) -> CheckResult:
    """Linking twice returns the start, degrees add up and regularities match."""
    rng = random.Random(seed)
    res = CheckResult("dgo", seed)
    attempts = 0
    while res.trials < count:
        attempts += 1
        if attempts > 200 * count:
            res.failures.append(f"only {res.trials} linkable pairs in {attempts} attempts")
            break
        ci = random_ci(rng, rng.randint(2, 4), max_reg)
        h_Y = ci_hvector(ci)
        h_Z = random_section(rng, h_Y)
        try:
            first = dgo_link(h_Z, ci)
        except LinkageError:
            continue
        res.trials += 1
        back = dgo_link(first.h_linked, ci).h_linked
        if back != h_Z:
            res.failures.append(f"{h_Z} in {ci}: relinks to {back}")
        if sum(h_Z) + sum(first.h_linked) != ci.degree:
            res.failures.append(f"{h_Z} in {ci}: degrees do not add up")
        reg_z, reg_zp = section_reg(h_Z), section_reg(first.h_linked)
        if not reg_z + first.alpha_bar_prime == reg_zp + first.alpha_bar == ci.reg:
            res.failures.append(f"{h_Z} in {ci}: regularity identity fails")
        if not check_osequence(first.h_linked).admissible:
            res.failures.append(f"{h_Z} in {ci}: residual not an O-sequence")
    return res


def check_genus_t(seed: int = DEFAULT_SEED, count: int = 200, max_reg: int = 10) -> CheckResult:
    """g' of the linked curve does not depend on the t used to compute it."""
    rng = random.Random(seed)
    res = CheckResult("genus-t", seed)
    while res.trials < count:
        c = rng.randint(2, 4)
        ci = random_ci(rng, c, max_reg)
        defect = rng.randint(1, min(5 if c == 2 else 3, ci.degree - 1))
        k = rng.randint(1, 3) if c == 2 else rng.randint(2, 3)
        reports = enumerate_candidates(ScenarioConfig(k, c, ci, defect))
        if not reports:
            continue
        rep = rng.choice(reports)
        first = genus_data_for(ci, rep.h_X, defect)
        later = genus_data_for(ci, rep.h_X, defect, first.t + rng.randint(1, 5))
        res.trials += 1
        if first.g_linked != later.g_linked:
            res.failures.append(f"{rep.h_X} in {ci}: g' {first.g_linked} at t={first.t}, "
                                f"{later.g_linked} at t={later.t}")
    return res


CHECKS = {"dgo": check_dgo, "genus-t": check_genus_t}

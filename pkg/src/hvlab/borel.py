"""Monomial ideals in x_0 > x_1 > ... > x_n and Borel-fixed combinatorics.

Exponent vectors always carry all ``nvars`` entries.  Characteristic 0 is
assumed throughout, so Borel-fixed means strongly stable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Iterator, Sequence

from .hseq import HilbertData, IntPoly, gbinom, hilbert_from_numerator

Monomial = tuple  # tuple[int, ...]


class NotBorelError(ValueError):
    pass


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    out: list[Monomial] = []
    for m in sorted(set(gens), key=_key):
        if not any(divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


@dataclass(frozen=True)
class MonIdeal:
    nvars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = [tuple(int(e) for e in g) for g in self.generators]
        for g in gens:
            if len(g) != self.nvars or min(g, default=0) < 0:
                raise ValueError(f"bad exponent vector {g} for {self.nvars} variables")
        object.__setattr__(self, "generators", minimalize(gens))

    @classmethod
    def parse(cls, text: str, nvars: int) -> "MonIdeal":
        return cls(nvars, tuple(parse_monomial(tok, nvars) for tok in _split_gens(text)))

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.generators)

    def __str__(self) -> str:
        if not self.generators:
            return "0"
        return ",".join(format_monomial(g) for g in self.generators)


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def _split_gens(text: str) -> list[str]:
    text = re.sub(r"\s+", "", text)
    if text in ("", "0"):
        return []
    return text.split(",")


def parse_monomial(text: str, nvars: int) -> Monomial:
    exps = [0] * nvars
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        var = int(m.group(1))
        if var >= nvars:
            raise ValueError(f"variable x{var} out of range for {nvars} variables")
        exps[var] += int(m.group(2) or 1)
    return tuple(exps)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


# ---------------------------------------------------------------------------
# Borel moves


@dataclass(frozen=True)
class BorelCertificate:
    is_borel: bool
    # (generator, j, i): generator * x_i / x_j is not in the ideal
    witness: tuple[Monomial, int, int] | None = None


def _up(m: Monomial, j: int, i: int) -> Monomial:
    out = list(m)
    out[j] -= 1
    out[i] += 1
    return tuple(out)


def is_borel(ideal: MonIdeal) -> BorelCertificate:
    for g in ideal.generators:
        for j, e in enumerate(g):
            if not e:
                continue
            for i in range(j):
                if not ideal.contains(_up(g, j, i)):
                    return BorelCertificate(False, (g, j, i))
    return BorelCertificate(True)


def _require_borel(ideal: MonIdeal) -> None:
    cert = is_borel(ideal)
    if not cert.is_borel:
        g, j, i = cert.witness
        raise NotBorelError(f"not Borel: {format_monomial(g)} * x{i}/x{j} is missing")


# ---------------------------------------------------------------------------
# Hilbert functions


@lru_cache(maxsize=None)
def _numerator(gens: frozenset, nvars: int) -> tuple[int, ...]:
    """Numerator N(z) of the Hilbert series N(z)/(1-z)^nvars of S/(gens)."""
    gens = frozenset(minimalize(gens))
    # base case: pairwise coprime generators
    support_seen = [0] * nvars
    coprime = True
    for g in gens:
        for i, e in enumerate(g):
            if e:
                support_seen[i] += 1
                if support_seen[i] > 1:
                    coprime = False
    if coprime:
        poly = [1]
        for g in gens:
            d = sum(g)
            out = poly + [0] * d
            for i, c in enumerate(poly):
                out[i + d] -= c
            poly = out
        return tuple(poly)
    var = max(range(nvars), key=lambda i: support_seen[i])
    pivot = tuple(1 if i == var else 0 for i in range(nvars))
    # N(I) = N(I + (x)) + z * N(I : x)
    plus = frozenset(g for g in gens if not g[var]) | {pivot}
    colon = frozenset(tuple(e - 1 if (i == var and e) else e for i, e in enumerate(g)) for g in gens)
    a = _numerator(plus, nvars)
    b = _numerator(colon, nvars)
    out = [0] * max(len(a), len(b) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + 1] += c
    return tuple(out)


def hilbert_numerator(ideal: MonIdeal) -> tuple[int, ...]:
    return _numerator(frozenset(ideal.generators), ideal.nvars)


def quotient_hilbert(ideal: MonIdeal) -> HilbertData:
    """Hilbert function and polynomial of S/I."""
    return hilbert_from_numerator(hilbert_numerator(ideal), ideal.nvars)


def monomials(nvars: int, degree: int) -> Iterator[Monomial]:
    """Monomials of a given degree, in decreasing lex order."""
    for combo in combinations_with_replacement(range(nvars), degree):
        m = [0] * nvars
        for v in combo:
            m[v] += 1
        yield tuple(m)


def count_standard(ideal: MonIdeal, degree: int) -> int:
    """Brute-force count of degree-``degree`` monomials outside the ideal."""
    return sum(1 for m in monomials(ideal.nvars, degree) if not ideal.contains(m))


# ---------------------------------------------------------------------------
# Saturation, sections, regularity


def saturate(ideal: MonIdeal) -> MonIdeal:
    """I : x_n^infinity, which is the saturation for Borel-fixed I."""
    _require_borel(ideal)
    n = ideal.nvars - 1
    return MonIdeal(ideal.nvars, tuple(g[:n] + (0,) for g in ideal.generators))


def restrict_section(ideal: MonIdeal) -> MonIdeal:
    """(I, x_n)^sat / (x_n): the ideal of the general hyperplane section."""
    _require_borel(ideal)
    if ideal.nvars < 2:
        raise ValueError("need at least two variables to restrict")
    n = ideal.nvars - 1
    dropped = MonIdeal(n, tuple(g[:n] for g in ideal.generators if not g[n]))
    return saturate(dropped)


def borel_regularity(ideal: MonIdeal) -> int:
    """Castelnuovo-Mumford regularity of a Borel-fixed ideal: top generator degree."""
    _require_borel(ideal)
    return max((sum(g) for g in ideal.generators), default=0)


# ---------------------------------------------------------------------------
# Hilbert polynomials and enumeration


def gotzmann_decomposition(p: IntPoly) -> list[int]:
    """Return a_1 >= ... >= a_r with P(t) = sum_i C(t + a_i - i + 1, a_i)."""
    rest = p
    out: list[int] = []
    while rest.coeffs:
        a = rest.degree
        if rest.coeffs[-1] < 0 or (out and a > out[-1]):
            raise ValueError(f"{p} is not a Hilbert polynomial")
        i = len(out) + 1
        shift = a - i + 1
        term = IntPoly(tuple(gbinom(shift, a - j) for j in range(a + 1)))
        rest = rest - term
        out.append(a)
        if len(out) > 10_000:
            raise ValueError("Gotzmann decomposition does not terminate")
    return out


def gotzmann_number(p: IntPoly) -> int:
    return len(gotzmann_decomposition(p))


def _lower_neighbours(m: Monomial) -> Iterator[Monomial]:
    """Elementary moves towards smaller variables: x_i -> x_{i+1}."""
    for i in range(len(m) - 1):
        if m[i]:
            yield _up(m, i, i + 1)


def _upper_neighbours(m: Monomial) -> Iterator[Monomial]:
    for j in range(1, len(m)):
        if m[j]:
            yield _up(m, j, j - 1)



def _standard_sets(nvars: int, degree: int, size: int) -> Iterator[frozenset]:
    """Borel order ideals of ``size`` degree-``degree`` monomials, i.e. sets
    closed under moves towards smaller variables.  Grown one minimal
    element at a time, deduplicated level by level."""
    last = tuple([0] * (nvars - 1) + [degree])
    level = {frozenset([last])} if size > 0 else {frozenset()}
    for _ in range(size - 1):
        nxt = set()
        for s in level:
            for m in s:
                for up in _upper_neighbours(m):
                    if up in s:
                        continue
                    if all(low in s for low in _lower_neighbours(up)):
                        nxt.add(s | {up})
        level = nxt
    return iter(sorted(level, key=lambda s: sorted(s)))


def _next_degree_size(nvars: int, ideal_gens: Sequence[Monomial]) -> int:
    """Number of degree d+1 monomials in the ideal generated by a Borel set of
    degree-d monomials (Eliahou-Kervaire decomposition)."""
    total = 0
    for u in ideal_gens:
        top = max((i for i, e in enumerate(u) if e), default=0)
        total += nvars - top
    return total


def enumerate_borel(nvars: int, p: IntPoly, max_gotzmann: int = 8) -> list[MonIdeal]:
    """All saturated Borel-fixed ideals in ``nvars`` variables with Hilbert
    polynomial ``p``, in canonical order."""
    if nvars < 2:
        raise ValueError("need at least two variables")
    r = gotzmann_number(p)
    if r > max_gotzmann:
        raise ValueError(f"Gotzmann number {r} exceeds the bound {max_gotzmann}")
    if p.degree > nvars - 2:
        return []
    total_r = comb(r + nvars - 1, nvars - 1)
    total_next = comb(r + nvars, nvars - 1)
    size = p(r)
    if size < 0 or size > total_r:
        return []
    found = {}
    for std in _standard_sets(nvars, r, size):
        gens = [m for m in monomials(nvars, r) if m not in std]
        if total_next - _next_degree_size(nvars, gens) != p(r + 1):
            continue
        sat = saturate(MonIdeal(nvars, tuple(gens)))
        found[sat.generators] = sat
    result = []
    for ideal in found.values():
        if quotient_hilbert(ideal).tail == p:
            result.append(ideal)
    return sorted(result, key=ideal_sort_key)


def ideal_sort_key(ideal: MonIdeal):
    return tuple(_key(g) for g in ideal.generators)

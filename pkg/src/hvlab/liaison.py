"""Complete intersections, linkage of h-vectors, basic double links and the
genus bookkeeping that goes with them."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Sequence

from .hseq import HSeq, IntPoly, at, check_osequence, hseq


class LinkageError(ValueError):
    """Raised when a requested link cannot exist."""


@dataclass(frozen=True, order=True)
class CIType:
    """Degrees beta_1 <= ... <= beta_c of a complete intersection."""

    betas: tuple[int, ...]

    def __post_init__(self):
        betas = tuple(sorted(int(b) for b in self.betas))
        if not betas or betas[0] < 1:
            raise ValueError(f"invalid complete intersection type {self.betas!r}")
        object.__setattr__(self, "betas", betas)

    @property
    def codim(self) -> int:
        return len(self.betas)

    @property
    def degree(self) -> int:
        return prod(self.betas)

    @property
    def reg(self) -> int:
        return sum(self.betas) - self.codim + 1

    def __str__(self) -> str:
        return ",".join(map(str, self.betas))


def as_ci(ci) -> CIType:
    return ci if isinstance(ci, CIType) else CIType(tuple(ci))


def ci_hvector(ci) -> HSeq:
    """Coefficients of prod_i (1 + z + ... + z^(beta_i - 1))."""
    ci = as_ci(ci)
    coeffs = [1]
    for b in ci.betas:
        out = [0] * (len(coeffs) + b - 1)
        for i, c in enumerate(coeffs):
            for j in range(b):
                out[i + j] += c
        coeffs = out
    return hseq(coeffs)


def section_reg(h: Sequence[int]) -> int:
    """Regularity of a zero-dimensional scheme with h-vector ``h``."""
    return len(hseq(h))


def ci_curve_genus(ci, n: int) -> int:
    """Arithmetic genus of a complete intersection curve of type ``ci`` in P^n."""
    ci = as_ci(ci)
    if ci.codim != n - 1:
        raise ValueError(f"type {ci} does not cut a curve in P^{n}")
    twice = ci.degree * (sum(ci.betas) - n - 1)
    return twice // 2 + 1


@dataclass(frozen=True)
class LinkResult:
    h_linked: HSeq
    reg_Y: int
    alpha_bar: int
    alpha_bar_prime: int
    deg_linked: int


def dgo_link(h_Z: Sequence[int], ci) -> LinkResult:
    """Link a zero-dimensional scheme with h-vector ``h_Z`` inside a complete
    intersection: h'(s) = h_Y(r - 1 - s) - h_Z(r - 1 - s) for 0 <= s < r."""
    ci = as_ci(ci)
    h_Z = hseq(h_Z)
    h_Y = ci_hvector(ci)
    r = ci.reg
    if h_Z == h_Y:
        raise LinkageError("improper inclusion: h_Z equals the complete intersection")
    if len(h_Z) > r:
        raise LinkageError(f"h-vector {h_Z} does not fit below reg(Y) = {r}")
    if sum(h_Z) >= ci.degree:
        raise LinkageError("degree of Z must be smaller than the complete intersection")
    raw = [at(h_Y, r - 1 - s) - at(h_Z, r - 1 - s) for s in range(r)]
    if any(v < 0 for v in raw):
        raise LinkageError(f"not linkable: {h_Z} exceeds {h_Y} in type {ci}")
    linked = hseq(raw)
    if not check_osequence(linked).admissible:
        raise LinkageError(f"not linkable: residual {linked} is not an O-sequence")
    return LinkResult(
        h_linked=linked,
        reg_Y=r,
        alpha_bar=r - section_reg(linked),
        alpha_bar_prime=r - section_reg(h_Z),
        deg_linked=ci.degree - sum(h_Z),
    )


def genus_diff(ci, n: int, d: int, d_linked: int) -> int:
    """g - g' for curves of degrees d, d' linked by a complete intersection in P^n."""
    ci = as_ci(ci)
    if ci.codim != n - 1:
        raise ValueError(f"type {ci} does not cut a curve in P^{n}")
    if d + d_linked != ci.degree:
        raise ValueError(f"degrees {d} + {d_linked} do not add up to {ci.degree}")
    twice = (sum(ci.betas) - n - 1) * (d - d_linked)
    if twice % 2:
        raise ValueError("non-integral genus difference")
    return twice // 2


def linked_genus(ci, deg_linked: int, d_t: int, t: int, c: int | None = None) -> int:
    """Genus of the linked curve: g' = D_t + deg(C') (-t + sum beta - (c+1) - 1) + 1.

    Valid for t >= max(rho_C, reg(Y) - 2); D_t is the difference of the
    curve-section Hilbert polynomials of Y and C at t.
    """
    ci = as_ci(ci)
    c = ci.codim if c is None else c
    return d_t + deg_linked * (-t + sum(ci.betas) - (c + 1) - 1) + 1


def ci_curve_poly(ci) -> IntPoly:
    """Hilbert polynomial of the curve section of a complete intersection."""
    ci = as_ci(ci)
    return IntPoly.linear(ci.degree, 1 - ci_curve_genus(ci, ci.codim + 1))


def linked_genus_from_poly(ci, deg_linked: int, p_c: IntPoly, t: int) -> int:
    """As :func:`linked_genus`, with D_t computed from the curve polynomial ``p_c``."""
    return linked_genus(ci, deg_linked, ci_curve_poly(ci)(t) - p_c(t), t)


def basic_double_link(h: Sequence[int], a: int, b: int) -> HSeq:
    """h_new(t) = h(t - a) + h_CI(a,b)(t)."""
    a, b = sorted((a, b))
    if a < 1:
        raise ValueError("basic double link degrees must be positive")
    h = hseq(h)
    h_ci = ci_hvector((a, b))
    n = max(len(h) + a, len(h_ci))
    return hseq(at(h, t - a) + at(h_ci, t) for t in range(n))


def bdl_genus(g: int, d: int, a: int, b: int) -> int:
    """Genus after a basic double link of type (a, b) of a degree-d genus-g curve."""
    return g + a * d + ci_curve_genus((a, b), 3) - 1


def compute_tk(h_Z: Sequence[int], h_Y: Sequence[int]) -> int | None:
    """First index where h_Z drops strictly below h_Y, or None."""
    n = max(len(h_Z), len(h_Y))
    for t in range(n):
        if at(h_Z, t) < at(h_Y, t):
            return t
    return None


@dataclass(frozen=True)
class ChainStep:
    kind: str  # "start", "link" or "bdl"
    params: tuple[int, ...]
    h: HSeq
    degree: int
    genus: int


@dataclass
class ChainTrace:
    steps: list[ChainStep] = field(default_factory=list)

    @property
    def last(self) -> ChainStep:
        return self.steps[-1]


def run_chain(h0: Sequence[int], g0: int, steps: Sequence[tuple[str, Sequence[int]]], n: int = 3) -> ChainTrace:
    """Follow a sequence of links and basic double links on curves in P^n.

    ``h`` along the trace is the h-vector of the general hyperplane section
    for link steps.  Basic double links act on whichever h-vector is carried.
    """
    h = hseq(h0)
    trace = ChainTrace([ChainStep("start", (), h, sum(h), g0)])
    g = g0
    for kind, params in steps:
        params = tuple(params)
        d = sum(h)
        if kind == "link":
            ci = as_ci(params)
            res = dgo_link(h, ci)
            g = g - genus_diff(ci, n, d, res.deg_linked)
            h = res.h_linked
        elif kind == "bdl":
            a, b = sorted(params)
            h = basic_double_link(h, a, b)
            g = bdl_genus(g, d, a, b)
        else:
            raise ValueError(f"unknown chain step {kind!r}")
        trace.steps.append(ChainStep(kind, params, h, sum(h), g))
    return trace


def parse_chain_script(text: str) -> list[tuple[str, tuple[int, ...]]]:
    """Parse ``link b1,b2`` / ``bdl a,b`` lines; ``#`` starts a comment."""
    steps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        if len(parts) != 2 or parts[0] not in ("link", "bdl"):
            raise ValueError(f"line {lineno}: expected 'link b1,b2' or 'bdl a,b'")
        try:
            params = tuple(int(x) for x in parts[1].replace(" ", "").split(","))
        except ValueError:
            raise ValueError(f"line {lineno}: bad integer list {parts[1]!r}") from None
        if parts[0] == "bdl" and len(params) != 2:
            raise ValueError(f"line {lineno}: bdl takes two degrees")
        steps.append((parts[0], params))
    return steps

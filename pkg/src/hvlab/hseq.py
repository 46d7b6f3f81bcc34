"""Integer sequences, Macaulay bounds and Hilbert function conversions.

An h-vector (or any difference function) is stored as a plain tuple of
ints indexed from 0, with trailing zeros stripped.  Equalities are always
taken on the zero-extended sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Iterator, Sequence

HSeq = tuple  # tuple[int, ...]


def hseq(values: Iterable[int]) -> HSeq:
    """Return the canonical form of ``values``: a tuple without trailing zeros."""
    out = [int(v) for v in values]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def at(h: Sequence[int], t: int) -> int:
    """Zero-extended access ``h(t)``."""
    return h[t] if 0 <= t < len(h) else 0


def differences(h: Sequence[int], times: int = 1) -> HSeq:
    """Apply the first-difference operator ``times`` times (h(-1) taken as 0)."""
    seq = list(h)
    for _ in range(times):
        seq = [seq[i] - (seq[i - 1] if i else 0) for i in range(len(seq))] + (
            [-seq[-1]] if seq else []
        )
    return hseq(seq)


def gbinom(x: int, k: int) -> int:
    """Binomial ``x choose k`` as a polynomial in ``x``; valid for negative ``x``."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= x - i
    return num // factorial(k)


def cbinom(x: int, k: int) -> int:
    """Combinatorial binomial: zero whenever ``x < k`` or ``x < 0``."""
    if k < 0 or x < k or x < 0:
        return 0
    return comb(x, k)


# ---------------------------------------------------------------------------
# Macaulay expansions


def macaulay_expansion(a: int, d: int) -> list[int]:
    """Return the exponents k(d) > k(d-1) > ... > k(j) >= j of the d-binomial
    expansion of ``a``."""
    if a < 1 or d < 1:
        raise ValueError("macaulay_expansion needs a >= 1 and d >= 1")
    tops = []
    rest = a
    j = d
    while rest > 0:
        k = j
        while comb(k + 1, j) <= rest:
            k += 1
        tops.append(k)
        rest -= comb(k, j)
        j -= 1
    return tops


def macaulay_bound(a: int, d: int) -> tuple[int, list[int]]:
    """Return ``(a^<d>, expansion)``.

    ``a^<d>`` is the largest value a Hilbert function may take in degree
    d + 1 when it equals ``a`` in degree d.  By convention ``0^<d> = 0``.
    """
    if a == 0:
        return 0, []
    tops = macaulay_expansion(a, d)
    bound = sum(comb(k + 1, d - i + 1) for i, k in enumerate(tops))
    return bound, tops


@dataclass(frozen=True)
class OSeqVerdict:
    admissible: bool
    positive: bool
    # (t, H(t), bound) at the first failure; bound is None when H(0) != 1
    first_violation: tuple[int, int, int | None] | None = None


def is_positive(h: Sequence[int]) -> bool:
    """h_0 = 1 and every entry up to the last nonzero one is > 0."""
    h = hseq(h)
    return bool(h) and h[0] == 1 and all(v > 0 for v in h)


def check_osequence(h: Sequence[int]) -> OSeqVerdict:
    h = hseq(h)
    positive = is_positive(h)
    if at(h, 0) != 1:
        return OSeqVerdict(False, positive, (0, at(h, 0), None))
    for t in range(1, len(h) + 1):
        value = at(h, t)
        if value < 0:
            return OSeqVerdict(False, positive, (t, value, 0))
        if t >= 2:
            bound, _ = macaulay_bound(at(h, t - 1), t - 1)
            if value > bound:
                return OSeqVerdict(False, positive, (t, value, bound))
    return OSeqVerdict(True, positive, None)


def is_admissible(h: Sequence[int]) -> bool:
    return check_osequence(h).admissible


# ---------------------------------------------------------------------------
# Partial sums and polynomials


def partial_sums(h: Sequence[int], depth: int) -> Callable[[int], int]:
    """Return ``t -> (depth-fold iterated partial sum of h)(t)``.

    Closed form: sum_i h_i * C(t - i + depth - 1, depth - 1).
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    h = tuple(h)
    if depth == 0:
        return lambda t: at(h, t)

    def value(t: int) -> int:
        return sum(v * cbinom(t - i + depth - 1, depth - 1) for i, v in enumerate(h) if i <= t)

    return value


def partial_sum_list(h: Sequence[int], depth: int, length: int) -> list[int]:
    f = partial_sums(h, depth)
    return [f(t) for t in range(length)]


@dataclass(frozen=True)
class IntPoly:
    """Integer-valued polynomial P(t) = sum c_i * C(t, i) (binomial basis)."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", hseq(self.coeffs))

    def __call__(self, t: int) -> int:
        return sum(c * gbinom(t, i) for i, c in enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "IntPoly":
        """Newton interpolation from P(0), ..., P(m)."""
        coeffs = []
        row = list(values)
        while row:
            coeffs.append(row[0])
            row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        return cls(tuple(coeffs))

    @classmethod
    def linear(cls, a: int, b: int) -> "IntPoly":
        """a*t + b."""
        return cls((b, a))

    def shift(self, m: int) -> "IntPoly":
        """The polynomial t -> P(t + m)."""
        return IntPoly.from_values([self(t + m) for t in range(len(self.coeffs))])

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(at(self.coeffs, i) + at(other.coeffs, i) for i in range(n)))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(at(self.coeffs, i) - at(other.coeffs, i) for i in range(n)))

    def difference(self) -> "IntPoly":
        """P(t) - P(t-1)."""
        return IntPoly(self.coeffs[1:]).shift(-1) if self.coeffs else IntPoly()

    def monomial_coeffs(self) -> list[Fraction]:
        """Coefficients in the basis 1, t, t^2, ... (ascending)."""
        out = [Fraction(0)] * max(len(self.coeffs), 1)
        for i, c in enumerate(self.coeffs):
            # C(t, i) = t(t-1)...(t-i+1)/i!
            poly = [Fraction(1)]
            for r in range(i):
                poly = [Fraction(0)] + poly
                for j in range(len(poly) - 1):
                    poly[j] -= r * poly[j + 1]
            for j, p in enumerate(poly):
                out[j] += c * p / factorial(i)
        return out

    def __str__(self) -> str:
        mono = self.monomial_coeffs()
        terms = []
        for power in range(len(mono) - 1, -1, -1):
            c = mono[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "t" if power == 1 else f"t^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f"{sign}{body}"
        return text


@dataclass(frozen=True)
class HilbertData:
    """Hilbert function prefix, polynomial tail and regularity index."""

    prefix: tuple[int, ...]
    tail: IntPoly
    rho: int
    dim_k: int

    def value(self, t: int) -> int:
        if t < 0:
            return 0
        if t < len(self.prefix):
            return self.prefix[t]
        return self.tail(t)

    def values(self, n: int) -> list[int]:
        return [self.value(t) for t in range(n)]

    def hvector(self) -> HSeq:
        """The (k+1)-st difference of the function (the h-vector)."""
        if self.dim_k < 0:
            return ()
        n = self.rho + self.dim_k + 2
        return hseq(differences(self.values(n), self.dim_k + 1)[:n])


def _regularity_index(values: Callable[[int], int], poly: IntPoly, start: int) -> int:
    """Smallest t >= 0 such that values(t') == poly(t') for all t' >= t, given
    agreement is known for t' >= start."""
    rho = max(start, 0)
    while rho > 0 and values(rho - 1) == poly(rho - 1):
        rho -= 1
    return rho


def hilbert_from_numerator(numer: Sequence[int], nvars: int) -> HilbertData:
    """Hilbert data of the series numer(z) / (1 - z)^nvars."""
    numer = hseq(numer)
    if not numer:
        return HilbertData((), IntPoly(), 0, -1)
    m = nvars - 1

    def hf(t: int) -> int:
        return sum(c * cbinom(t - i + m, m) for i, c in enumerate(numer))

    # the polynomial agrees with hf for t >= len(numer) - 1 - m
    poly = IntPoly.from_values(
        [sum(c * gbinom(t - i + m, m) for i, c in enumerate(numer)) for t in range(len(numer) + nvars)]
    )
    rho = _regularity_index(hf, poly, len(numer) - 1 - m)
    prefix = tuple(hf(t) for t in range(rho + nvars + 2))
    return HilbertData(prefix, poly, rho, poly.degree)


def hilbert_from_h(h: Sequence[int], k: int) -> HilbertData:
    """Hilbert function of a dimension-k scheme with h-vector ``h``:
    H(t) = sum_i h_i C(t - i + k, k)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    data = hilbert_from_numerator(h, k + 1)
    return HilbertData(data.prefix, data.tail, data.rho, k)


def genus_from_h(h: Sequence[int]) -> int:
    """Arithmetic genus of a curve with h-vector ``h``: 1 + sum (i - 1) h_i."""
    h = hseq(h)
    if not h or h[0] != 1:
        raise ValueError("genus_from_h needs a nonempty h-vector with h_0 = 1")
    return 1 + sum((i - 1) * v for i, v in enumerate(h))


# ---------------------------------------------------------------------------
# h-vectors of zero-dimensional schemes


def _point_hvectors(degree: int, ambient: int) -> Iterator[HSeq]:
    def grow(prefix: list[int], remaining: int) -> Iterator[HSeq]:
        if remaining == 0:
            yield tuple(prefix)
            return
        t = len(prefix)
        if t == 1:
            cap = ambient
        else:
            cap, _ = macaulay_bound(prefix[-1], t - 1)
        for v in range(1, min(cap, remaining) + 1):
            prefix.append(v)
            yield from grow(prefix, remaining - v)
            prefix.pop()

    yield from grow([1], degree - 1)


def point_hvectors(degree: int, ambient: int) -> list[HSeq]:
    """All h-vectors of zero-dimensional schemes of the given degree spanning at
    most a P^ambient: positive admissible sequences with h_1 <= ambient.

    Ordered lexicographically on the sequences.
    """
    if degree <= 0:
        raise ValueError("degree must be positive")
    if ambient < 1:
        raise ValueError("ambient must be positive")
    return sorted(_point_hvectors(degree, ambient))


def is_degenerate_section(h: Sequence[int]) -> bool:
    """A zero-dimensional h-vector (1, 1, ..., 1): the scheme lies on a line."""
    h = hseq(h)
    return bool(h) and all(v == 1 for v in h)

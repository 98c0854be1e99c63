"""Eigenvalue structure, inertia, energy and spectral radius from closed forms.

The residual polynomial splits analytically: repeated part sizes m (k copies)
contribute 3m-4 exactly with multiplicity k-1, and what remains is a secular
function with simple poles at the distinct 3m-4 and exactly one simple root
per gap.  Those simple roots are isolated by bisection with exact integer
sign evaluation, so every bracket is certified, not heuristic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .charpoly import IntPolynomial, ONE, Sign, lambda_s1_sign, linear
from .errors import BracketFailure
from .partitions import Partition

BRACKET_WIDTH = Fraction(1, 10**12)
BISECT_STEPS = 60
_EXACT_NUDGE = Fraction(1, 2**60)


@dataclass(frozen=True)
class IsolatedRoot:
    """A simple root with a certified isolating bracket.

    lo_exact/hi_exact are dyadic rationals where the residual polynomial has
    opposite signs; value is the float midpoint.  poly is the deflated
    residual the bracket certifies against.
    """

    value: float
    lo_exact: Fraction
    hi_exact: Fraction
    poly: IntPolynomial

    @property
    def lo(self) -> float:
        return float(self.lo_exact)

    @property
    def hi(self) -> float:
        return float(self.hi_exact)

    def refined(self, steps: int) -> "IsolatedRoot":
        lo, hi = _bisect(self.poly, self.lo_exact, self.hi_exact, steps, Fraction(0))
        return IsolatedRoot(float((lo + hi) / 2), lo, hi, self.poly)

    def to_json(self) -> dict:
        return {"value": self.value, "lo": self.lo, "hi": self.hi}


@dataclass(frozen=True)
class SpectrumReport:
    """Closed-form spectrum: exact rational part plus isolated simple roots."""

    exact: tuple[tuple[Fraction, int], ...]
    isolated: tuple[IsolatedRoot, ...]

    def eigenvalues(self) -> list[float]:
        """All eigenvalues with multiplicity, descending."""
        vals: list[float] = []
        for v, mult in self.exact:
            vals.extend([float(v)] * mult)
        vals.extend(r.value for r in self.isolated)
        return sorted(vals, reverse=True)

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.exact) + len(self.isolated)

    def to_json(self) -> dict:
        return {
            "exact": [{"value": str(v), "mult": m} for v, m in self.exact],
            "isolated": [r.to_json() for r in self.isolated],
        }


@dataclass(frozen=True)
class InertiaTriple:
    n_plus: int
    n_zero: int
    n_minus: int
    derivation: str

    def to_json(self) -> dict:
        return {
            "n_plus": self.n_plus,
            "n_zero": self.n_zero,
            "n_minus": self.n_minus,
            "derivation": self.derivation,
        }


@dataclass(frozen=True)
class EnergyReport:
    """Energy = integer_part + 2*theta; theta present iff lambda_{s+1} < 0."""

    integer_part: int
    theta: Optional[float]
    theta_root: Optional[IsolatedRoot]  # the negative root itself
    value: float

    @property
    def theta_bracket(self) -> Optional[tuple[float, float]]:
        if self.theta_root is None:
            return None
        return (-self.theta_root.hi, -self.theta_root.lo)

    def to_json(self) -> dict:
        return {
            "integer_part": str(self.integer_part),
            "theta": self.theta,
            "value": self.value,
        }


def _distinct_sizes(p: Partition) -> list[tuple[int, int]]:
    """(size, count) over the parts >= 2, size ascending."""
    counts: dict[int, int] = {}
    for m in p.big_parts:
        counts[m] = counts.get(m, 0) + 1
    return sorted(counts.items())


def deflated_residual(p: Partition) -> IntPolynomial:
    """The simple-root part of the residual polynomial.

    Repeated poles are removed analytically; what remains has one simple root
    per secular sign change.
    """
    sizes = _distinct_sizes(p)
    prod_all = ONE
    for m, _ in sizes:
        prod_all = prod_all * linear(4 - 3 * m)
    secular = prod_all
    for i, (m, k) in enumerate(sizes):
        partial = ONE
        for j, (mj, _) in enumerate(sizes):
            if j != i:
                partial = partial * linear(4 - 3 * mj)
        secular = secular - partial.scale(k * m)
    if p.h == 0:
        return secular
    if p.s == 0:
        return linear(1 - p.h)
    return linear(1) * secular - prod_all.scale(p.h)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _bisect(
    poly: IntPolynomial,
    lo: Fraction,
    hi: Fraction,
    max_steps: int,
    width: Fraction,
) -> tuple[Fraction, Fraction]:
    """Shrink [lo, hi] around the single sign change of poly inside it."""
    s_lo = _sign(poly(lo))
    s_hi = _sign(poly(hi))
    if s_lo == 0 or s_hi == 0:
        mid = lo if s_lo == 0 else hi
        return mid - _EXACT_NUDGE, mid + _EXACT_NUDGE
    if s_lo == s_hi:
        raise BracketFailure(
            f"no sign change of {poly.coeffs} on [{lo}, {hi}]"
        )
    for _ in range(max_steps):
        if hi - lo <= width:
            break
        mid = (lo + hi) / 2
        s_mid = _sign(poly(mid))
        if s_mid == 0:
            return mid - _EXACT_NUDGE, mid + _EXACT_NUDGE
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _isolate(poly: IntPolynomial, lo: Fraction, hi: Fraction) -> IsolatedRoot:
    lo2, hi2 = _bisect(poly, lo, hi, BISECT_STEPS, BRACKET_WIDTH)
    return IsolatedRoot(float((lo2 + hi2) / 2), lo2, hi2, poly)


def _upper_bound(p: Partition) -> int:
    """Max-row-sum bound on the Perron value: 3*n1 + n - 4."""
    return 3 * p.parts[0] + p.n - 4


def secular_roots(p: Partition) -> list[IsolatedRoot]:
    """All simple roots of the deflated residual, ascending, with brackets.

    Bracket layout: one root per gap between consecutive distinct poles
    3m-4, one above the largest pole, and (when singletons are present) one
    extra root in (-1, smallest pole).
    """
    poly = deflated_residual(p)
    if p.s == 0:
        # complete graph: single exact root h-1
        root = Fraction(p.h - 1)
        return [
            IsolatedRoot(
                float(root), root - _EXACT_NUDGE, root + _EXACT_NUDGE, poly
            )
        ]
    poles = [Fraction(3 * m - 4) for m, _ in _distinct_sizes(p)]
    upper = Fraction(_upper_bound(p))
    brackets: list[tuple[Fraction, Fraction]] = []
    if p.h >= 1:
        brackets.append((Fraction(-1), poles[0]))
    for a, b in zip(poles, poles[1:]):
        brackets.append((a, b))
    brackets.append((poles[-1], upper))
    return [_isolate(poly, lo, hi) for lo, hi in brackets]


def full_spectrum(p: Partition) -> SpectrumReport:
    """Assemble the exact and isolated parts; multiplicities sum to n."""
    exact: list[tuple[Fraction, int]] = []
    for m, k in _distinct_sizes(p):
        if k >= 2:
            exact.append((Fraction(3 * m - 4), k - 1))
    if p.h >= 2:
        exact.append((Fraction(-1), p.h - 1))
    if p.n - p.t > 0:
        exact.append((Fraction(-4), p.n - p.t))
    report = SpectrumReport(exact=tuple(exact), isolated=tuple(secular_roots(p)))
    assert report.total_multiplicity() == p.n
    return report


def inertia(p: Partition) -> InertiaTriple:
    """Signature decided exactly; no floats involved."""
    n, t, s, h = p.n, p.t, p.s, p.h
    if h == 0:
        return InertiaTriple(t, 0, n - t, "all-parts-ge-2")
    if s == 0:
        # complete graph: lambda_1 = n-1 > 0, so the positive case applies
        return InertiaTriple(1, 0, n - 1, "singleton-case-positive")
    sign = lambda_s1_sign(p)
    if sign is Sign.POSITIVE:
        return InertiaTriple(s + 1, 0, n - s - 1, "singleton-case-positive")
    if sign is Sign.ZERO:
        return InertiaTriple(s, 1, n - s - 1, "singleton-case-zero")
    return InertiaTriple(s, 0, n - s, "singleton-case-negative")


def energy(p: Partition) -> EnergyReport:
    """Closed-form energy, exact except for the optional theta correction."""
    n, t, s, h = p.n, p.t, p.s, p.h
    if h == 0:
        ip = 8 * (n - t)
        return EnergyReport(ip, None, None, float(ip))
    ip = 8 * (n - t) + 2 * (h - 1)
    if s == 0 or lambda_s1_sign(p) is not Sign.NEGATIVE:
        return EnergyReport(ip, None, None, float(ip))
    lam = secular_roots(p)[0]  # the unique root in (-1, 0)
    if not (Fraction(-1) < lam.lo_exact and lam.hi_exact < 0):
        lam = lam.refined(40)
    theta = -lam.value
    return EnergyReport(ip, theta, lam, ip + 2 * theta)


def spectral_radius(p: Partition) -> tuple[float, tuple[float, float]]:
    """Largest eigenvalue via bisection on a certified Perron bracket."""
    root = spectral_radius_root(p)
    return root.value, (root.lo, root.hi)


def spectral_radius_root(p: Partition) -> IsolatedRoot:
    poly = deflated_residual(p)
    if p.s == 0:
        r = Fraction(p.h - 1)
        return IsolatedRoot(float(r), r - _EXACT_NUDGE, r + _EXACT_NUDGE, poly)
    lower = Fraction(max(4 * (p.parts[0] - 1), 3 * p.parts[0] - 4))
    return _isolate(poly, lower, Fraction(_upper_bound(p)))


def radius_bipartite_closed(n1: int, n2: int) -> float:
    """Closed-form Perron value for the bipartite case."""
    if n1 < 1 or n2 < 1:
        raise ValueError("part sizes must be >= 1")
    return 2 * (n1 + n2) + math.sqrt(4 * (n1 - n2) ** 2 + n1 * n2) - 4

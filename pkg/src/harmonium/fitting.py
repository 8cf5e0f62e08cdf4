"""Period detection and quasipolynomial fitting from exact count samples.

A candidate period p is accepted when, for every residue class mod p, the
degree-<=n polynomial interpolated through the first n+1 class samples also
reproduces two held-out samples of that class.  Accepted fits additionally
reproduce every cached oracle sample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import (
    Polynomial,
    Quasipolynomial,
    RationalGeneratingFunction,
    gf_from_counts,
    interpolate,
    quasi_eval,
)


class FitError(RuntimeError):
    pass


@dataclass
class CountOracle:
    """Memoized exact counting function m -> count, with graph metadata."""

    fn: Callable[[int], int]
    degree: int
    connected: bool = True
    _cache: dict[int, int] = field(default_factory=dict, repr=False)

    def __call__(self, m: int) -> int:
        if m not in self._cache:
            self._cache[m] = self.fn(m)
        return self._cache[m]


@dataclass(frozen=True)
class FitReport:
    quasipolynomial: Quasipolynomial
    period_tested: tuple[int, ...]  # rejected candidates, in trial order
    samples_used: int
    holdout_verified: bool
    caveat: str = (
        "period is the minimal candidate consistent with all samples; "
        "the true minimal period could be smaller if the candidate list is incomplete"
    )

    @property
    def period(self) -> int:
        return self.quasipolynomial.period

    @property
    def degree(self) -> int:
        return self.quasipolynomial.degree

    def to_json_dict(self) -> dict:
        return {
            "quasipolynomial": self.quasipolynomial.to_json_dict(),
            "period_tested": list(self.period_tested),
            "samples_used": self.samples_used,
            "holdout_verified": self.holdout_verified,
            "caveat": self.caveat,
        }


def default_period_candidates(n: int, cap_multiple: int = 8) -> list[int]:
    """Divisors of lcm(1..n-1) ascending, then small multiples of that lcm."""
    if n < 2:
        raise ValueError("n must be >= 2")
    base = math.lcm(*range(1, n)) if n > 2 else 1
    divisors = sorted(d for d in range(1, base + 1) if base % d == 0)
    extra = [k * base for k in range(2, cap_multiple + 1)]
    return divisors + extra


def fit_quasipolynomial(
    oracle: CountOracle,
    degree: int | None = None,
    period_candidates: list[int] | None = None,
) -> FitReport:
    """Fit the counting quasipolynomial, trying candidate periods in order."""
    n = oracle.degree if degree is None else degree
    if period_candidates is None:
        period_candidates = default_period_candidates(n)
    if not period_candidates:
        raise FitError("candidate list is empty")

    rejected: list[int] = []
    worst_residual = None
    for p in period_candidates:
        top = p * (n + 3)  # n+1 fit samples plus 2 holdouts per residue class
        samples = {m: oracle(m) for m in range(1, top + 1)}
        constituents: list[Polynomial] = []
        ok = True
        for r in range(p):
            ms = [m for m in range(1, top + 1) if m % p == r]
            fit_pts = [(m, Fraction(samples[m])) for m in ms[: n + 1]]
            poly = interpolate(fit_pts)
            for m in ms[n + 1 :]:
                residual = abs(poly(m) - samples[m])
                if residual != 0:
                    ok = False
                    if worst_residual is None or residual > worst_residual:
                        worst_residual = residual
                    break
            if not ok:
                break
            constituents.append(poly)
        if not ok:
            rejected.append(p)
            continue
        quasi = Quasipolynomial(p, n, tuple(constituents))
        if oracle.connected:
            for poly in quasi.constituents:
                if poly.degree != n or poly.coeffs[-1] != 1:
                    raise FitError(
                        "fit violates the connected-graph invariant: every "
                        "constituent must have degree n and leading coefficient 1"
                    )
        # accepted fits must reproduce every cached sample, not just holdouts
        for m, val in oracle._cache.items():
            if m >= 1 and quasi_eval(quasi, m) != val:
                raise FitError(f"accepted fit disagrees with sample at m={m}")
        return FitReport(
            quasipolynomial=quasi,
            period_tested=tuple(rejected),
            samples_used=top,
            holdout_verified=True,
        )
    raise FitError(
        f"period not found within candidate set {period_candidates}; "
        f"largest holdout residual {worst_residual}"
    )


def evaluate_negative(report: FitReport, m: int) -> int:
    """(-1)^n * quasipolynomial(-m); an integer for any genuine counting fit."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if not report.holdout_verified:
        raise FitError("fit was not holdout-verified")
    val = quasi_eval(report.quasipolynomial, -m) * (-1) ** report.degree
    if val.denominator != 1:
        raise FitError("fit inconsistent with reciprocity integrality")
    return int(val)


def generating_function(report: FitReport, oracle: CountOracle) -> RationalGeneratingFunction:
    """Unreduced generating function over (1 - z^p)^(n+1) from oracle counts."""
    p, n = report.period, report.degree
    counts = [oracle(m) for m in range(1, p * (n + 3) + 1)]
    return gf_from_counts(counts, p, n)

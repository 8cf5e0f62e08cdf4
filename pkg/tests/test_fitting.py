"""Period detection, quasipolynomial fitting and negative-argument evaluation."""

import math
from fractions import Fraction

import pytest

from harmonium.algebra import Polynomial, RationalGeneratingFunction
from harmonium.colorings import count_nowhere_harmonic, reciprocity_rhs
from harmonium.fitting import (
    CountOracle,
    FitError,
    default_period_candidates,
    evaluate_negative,
    fit_quasipolynomial,
    generating_function,
)
from harmonium.graphs import Graph, family


def graph_oracle(g, budget=10**11):
    return CountOracle(
        fn=lambda m: count_nowhere_harmonic(g, m, budget=budget),
        degree=g.n,
        connected=g.is_connected(),
    )


class TestDefaultPeriodCandidates:
    def test_small_n(self):
        assert default_period_candidates(2)[:1] == [1]
        assert default_period_candidates(3)[:2] == [1, 2]
        # lcm(1,2,3) = 6 with divisors first, then multiples
        assert default_period_candidates(4, cap_multiple=3) == [
            1, 2, 3, 6, 12, 18,
        ]

    def test_ascending_and_distinct(self):
        for n in range(2, 7):
            cs = default_period_candidates(n)
            assert cs == sorted(set(cs))

    def test_validation(self):
        with pytest.raises(ValueError):
            default_period_candidates(1)


class TestFitQuasipolynomial:
    def test_edge_graph_is_polynomial(self):
        # K2 counts ordered unequal pairs: m^2 - m, period 1
        rep = fit_quasipolynomial(graph_oracle(family("path", 2)))
        assert rep.period == 1
        assert rep.quasipolynomial.constituents[0] == Polynomial([0, -1, 1])
        assert rep.period_tested == ()

    def test_path3_period_two(self):
        rep = fit_quasipolynomial(graph_oracle(family("path", 3)))
        assert rep.period == 2
        assert rep.period_tested == (1,)
        assert rep.holdout_verified
        q = rep.quasipolynomial
        for m in range(1, 12):
            assert q(m) == count_nowhere_harmonic(family("path", 3), m)

    def test_synthetic_oracle(self):
        # period 3 by construction: floor(m/3) * m
        oracle = CountOracle(fn=lambda m: (m // 3) * m, degree=2, connected=False)
        rep = fit_quasipolynomial(oracle, period_candidates=[1, 2, 3])
        assert rep.period == 3
        assert rep.quasipolynomial(10) == 30

    def test_failure_reports_residual(self):
        # 2^m is not a quasipolynomial of any period/degree
        oracle = CountOracle(fn=lambda m: 2**m, degree=2, connected=False)
        with pytest.raises(FitError, match="period not found.*residual"):
            fit_quasipolynomial(oracle, period_candidates=[1, 2])

    def test_connected_invariant_enforced(self):
        # a connected-graph oracle whose fit has the wrong leading coefficient
        oracle = CountOracle(fn=lambda m: 2 * m**3, degree=3, connected=True)
        with pytest.raises(FitError, match="leading coefficient"):
            fit_quasipolynomial(oracle, period_candidates=[1])

    def test_empty_candidates(self):
        with pytest.raises(FitError, match="empty"):
            fit_quasipolynomial(graph_oracle(family("path", 3)), period_candidates=[])

    def test_memoization(self):
        calls = []

        def fn(m):
            calls.append(m)
            return m**2

        oracle = CountOracle(fn=fn, degree=2, connected=False)
        fit_quasipolynomial(oracle, period_candidates=[1])
        assert len(calls) == len(set(calls))


class TestEvaluateNegative:
    def test_path3(self):
        rep = fit_quasipolynomial(graph_oracle(family("path", 3)))
        # sign-corrected negative values must equal the compatibility sums
        g = family("path", 3)
        for m in range(1, 7):
            assert evaluate_negative(rep, m) == reciprocity_rhs(g, m)

    def test_at_minus_one(self):
        for kind, n in (("path", 3), ("cycle", 3), ("path", 4), ("star", 4)):
            rep = fit_quasipolynomial(graph_oracle(family(kind, n)))
            assert evaluate_negative(rep, 1) == 2**n - 2

    def test_validation(self):
        rep = fit_quasipolynomial(graph_oracle(family("path", 3)))
        with pytest.raises(ValueError):
            evaluate_negative(rep, 0)


class TestGeneratingFunction:
    def test_path3_unreduced(self):
        g = family("path", 3)
        oracle = graph_oracle(g)
        rep = fit_quasipolynomial(oracle)
        gf = generating_function(rep, oracle)
        assert gf.denominator_factors == ((2, 4),)
        series = gf.series(12)
        for m in range(1, 12):
            assert series[m] == count_nowhere_harmonic(g, m)

    def test_polynomial_case(self):
        g = family("path", 2)
        oracle = graph_oracle(g)
        rep = fit_quasipolynomial(oracle)
        gf = generating_function(rep, oracle)
        # m^2 - m sums to 2z^2/(1-z)^3
        assert gf == RationalGeneratingFunction(
            Polynomial([0, 0, 2]), ((1, 3),)
        )

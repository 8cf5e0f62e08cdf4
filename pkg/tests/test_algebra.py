"""Exact polynomial, quasipolynomial and generating-function algebra."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmonium.algebra import (
    AlgebraError,
    Polynomial,
    Quasipolynomial,
    RationalGeneratingFunction,
    gf_from_counts,
    interpolate,
    one_minus_z_pow,
    poly_gcd,
    quasi_eval,
    reduce_gf,
)

F = Fraction


def poly(*coeffs):
    return Polynomial(coeffs)


class TestPolynomial:
    def test_trimming_and_degree(self):
        assert poly(1, 2, 0, 0).coeffs == (F(1), F(2))
        assert poly().degree == -1
        assert poly(0, 0).is_zero()
        assert poly(3).degree == 0

    def test_arithmetic(self):
        a, b = poly(1, 2), poly(3, 0, 1)
        assert a + b == poly(4, 2, 1)
        assert a - b == poly(-2, 2, -1)
        assert a * b == poly(3, 6, 1, 2)
        assert 2 * a == poly(2, 4)

    def test_evaluation_horner(self):
        p = poly(1, -3, 2)  # 2m^2 - 3m + 1 = (2m-1)(m-1)
        assert p(1) == 0
        assert p(F(1, 2)) == 0
        assert p(-2) == 15

    def test_divmod_exact_and_remainder(self):
        num = poly(-1, 0, 0, 1)  # z^3 - 1
        q, r = num.divmod(poly(-1, 1))  # / (z - 1)
        assert r.is_zero()
        assert q == poly(1, 1, 1)
        q2, r2 = poly(1, 1, 1).divmod(poly(1, 1))
        assert poly(1, 1) * q2 + r2 == poly(1, 1, 1)
        assert r2.degree < 1

    def test_exact_div_raises_on_remainder(self):
        with pytest.raises(AlgebraError):
            poly(1, 1, 1).exact_div(poly(1, 1))

    def test_divides(self):
        assert one_minus_z_pow(1).divides(one_minus_z_pow(3))
        assert not one_minus_z_pow(2).divides(one_minus_z_pow(3))

    def test_one_minus_z_pow(self):
        assert one_minus_z_pow(3) == poly(1, 0, 0, -1)
        with pytest.raises(AlgebraError):
            one_minus_z_pow(0)

    @given(
        st.lists(st.integers(-9, 9), max_size=6),
        st.lists(st.integers(-9, 9), min_size=1, max_size=5),
    )
    def test_divmod_identity_property(self, acs, bcs):
        a, b = Polynomial(acs), Polynomial(bcs)
        if b.is_zero():
            return
        q, r = a.divmod(b)
        assert b * q + r == a
        assert r.degree < b.degree


class TestGcd:
    def test_cyclotomic_pair(self):
        # gcd(1-z^2, 1-z^3) is 1-z, up to a unit; result is monic
        g = poly_gcd(one_minus_z_pow(2), one_minus_z_pow(3))
        assert g == poly(-1, 1)

    def test_coprime(self):
        g = poly_gcd(poly(1, 1), poly(1, 0, 1))
        assert g.degree == 0

    def test_zero_arguments(self):
        assert poly_gcd(poly(), poly(-2, 2)) == poly(-1, 1)
        assert poly_gcd(poly(), poly()).is_zero()

    @given(
        st.lists(st.integers(-5, 5), min_size=1, max_size=4),
        st.lists(st.integers(-5, 5), min_size=1, max_size=4),
        st.lists(st.integers(-5, 5), min_size=1, max_size=3),
    )
    @settings(max_examples=60)
    def test_gcd_divides_both_property(self, acs, bcs, ccs):
        c = Polynomial(ccs)
        a, b = Polynomial(acs) * c, Polynomial(bcs) * c
        if a.is_zero() and b.is_zero():
            return
        g = poly_gcd(a, b)
        assert not g.is_zero()
        assert g.divides(a) and g.divides(b)
        if not c.is_zero():
            assert c.divides(g)


class TestInterpolate:
    def test_recovers_binomial(self):
        # oracle: the falling-factorial count m(m-1)(m-2)/6 = C(m, 3)
        pts = [(m, F(math.comb(m, 3))) for m in range(1, 5)]
        p = interpolate(pts)
        assert p == Polynomial([0, F(1, 3), F(-1, 2), F(1, 6)])
        for m in range(5, 12):
            assert p(m) == math.comb(m, 3)

    def test_degenerate_nodes(self):
        with pytest.raises(AlgebraError, match="degenerate"):
            interpolate([(1, F(1)), (1, F(2))])

    def test_empty(self):
        with pytest.raises(AlgebraError):
            interpolate([])

    @given(st.lists(st.integers(-20, 20), min_size=1, max_size=6))
    @settings(max_examples=60)
    def test_roundtrip_property(self, coeffs):
        p = Polynomial(coeffs)
        pts = [(m, p(m)) for m in range(len(coeffs))]
        q = interpolate(pts)
        assert q == p or (p.degree < len(coeffs) - 1 and q == p)


class TestQuasipolynomial:
    def setup_method(self):
        # period 2: even arguments give m^2, odd give m^2 - 1
        self.q = Quasipolynomial(
            period=2,
            degree=2,
            constituents=(poly(0, 0, 1), poly(-1, 0, 1)),
        )

    def test_residue_convention(self):
        assert quasi_eval(self.q, 4) == 16
        assert quasi_eval(self.q, 3) == 8
        assert quasi_eval(self.q, -3) == 8  # -3 mod 2 -> residue 1
        assert quasi_eval(self.q, -4) == 16

    def test_callable(self):
        assert self.q(5) == 24

    def test_validation(self):
        with pytest.raises(AlgebraError):
            Quasipolynomial(period=2, degree=2, constituents=(poly(1),))
        with pytest.raises(AlgebraError):
            Quasipolynomial(period=1, degree=1, constituents=(poly(0, 0, 1),))

    def test_json_roundtrip(self):
        d = self.q.to_json_dict()
        assert Quasipolynomial.from_json_dict(d) == self.q


class TestRationalGeneratingFunction:
    def test_series_geometric(self):
        g = RationalGeneratingFunction(poly(1), ((1, 1),))
        assert g.series(5) == [1, 1, 1, 1, 1]

    def test_series_oracle_binomials(self):
        # 1/(1-z)^3 has series C(i+2, 2)
        g = RationalGeneratingFunction(poly(1), ((1, 3),))
        assert g.series(8) == [math.comb(i + 2, 2) for i in range(8)]

    def test_series_with_leftover(self):
        # 1/(1+z) = 1 - z + z^2 - ...
        g = RationalGeneratingFunction(poly(1), (), leftover=poly(1, 1))
        assert g.series(6) == [1, -1, 1, -1, 1, -1]

    def test_cross_multiplied_equality(self):
        a = RationalGeneratingFunction(poly(0, 2), ((1, 2),))
        # same function written over (1-z)^3 with numerator 2z(1-z)
        b = RationalGeneratingFunction(poly(0, 2, -2), ((1, 3),))
        assert a == b
        assert a != RationalGeneratingFunction(poly(0, 2), ((1, 3),))

    def test_factor_merge_and_validation(self):
        g = RationalGeneratingFunction(poly(1), ((2, 1), (1, 1), (2, 1)))
        assert g.denominator_factors == ((1, 1), (2, 2))
        with pytest.raises(AlgebraError):
            RationalGeneratingFunction(poly(1), ((0, 1),))

    def test_json_roundtrip(self):
        g = RationalGeneratingFunction(
            poly(0, 1, 2), ((1, 2), (3, 1)), leftover=poly(1, 1),
            reduced_warning=True,
        )
        d = g.to_json_dict()
        h = RationalGeneratingFunction.from_json_dict(d)
        assert h.numerator == g.numerator
        assert h.denominator_factors == g.denominator_factors
        assert h.leftover == g.leftover
        assert h.reduced_warning

    @given(
        st.lists(st.integers(-6, 6), min_size=1, max_size=5),
        st.lists(st.tuples(st.integers(1, 4), st.integers(1, 2)),
                 min_size=1, max_size=3),
    )
    @settings(max_examples=50)
    def test_series_times_denominator_is_numerator(self, ncs, factors):
        g = RationalGeneratingFunction(Polynomial(ncs), tuple(factors))
        den = g.denominator_polynomial()
        nterms = g.numerator.degree + den.degree + 5
        s = Polynomial(g.series(nterms))
        prod = s * den
        # the product agrees with the numerator below the truncation horizon
        for i in range(nterms - den.degree):
            assert prod[i] == g.numerator[i]


class TestGfFromCounts:
    def test_pair_counts(self):
        # oracle: sum_m m(m-1) z^m = 2 z^2 / (1-z)^3, a period-1 degree-2 fit
        counts = [m * (m - 1) for m in range(1, 9)]
        g = gf_from_counts(counts, period=1, degree=2)
        assert g == RationalGeneratingFunction(poly(0, 0, 2), ((1, 3),))

    def test_series_reproduces_counts(self):
        counts = [m**3 for m in range(1, 10)]
        g = gf_from_counts(counts, period=1, degree=3)
        assert g.series(10)[1:] == counts

    def test_period_two(self):
        # a_m = m for even m, 0 for odd m: period 2, degree 1
        counts = [m if m % 2 == 0 else 0 for m in range(1, 13)]
        g = gf_from_counts(counts, period=2, degree=1)
        assert g.denominator_factors == ((2, 2),)
        assert g.series(13)[1:] == counts

    def test_inconsistent_sequence(self):
        counts = [m**2 for m in range(1, 12)]
        with pytest.raises(AlgebraError, match="inconsistent"):
            gf_from_counts(counts, period=1, degree=1)

    def test_too_few_counts(self):
        with pytest.raises(AlgebraError, match="need at least"):
            gf_from_counts([1, 2], period=2, degree=2)


class TestReduceGf:
    def test_cancels_common_factor(self):
        # 2z(1-z)/(1-z)^3 reduces to 2z/(1-z)^2
        g = RationalGeneratingFunction(poly(0, 2, -2), ((1, 3),))
        r = reduce_gf(g)
        assert r.numerator == poly(0, 2)
        assert r.denominator_factors == ((1, 2),)
        assert not r.reduced_warning
        assert r == g

    def test_extracts_larger_cycle_factors(self):
        # (1-z^6)/(1-z^2)(1-z^3): numerator and denominator share everything
        g = RationalGeneratingFunction(
            one_minus_z_pow(6) * poly(0, 1), ((2, 1), (3, 1))
        )
        r = reduce_gf(g)
        assert r == g
        assert not r.reduced_warning

    def test_leftover_path(self):
        # (1-z)/(1-z^3) = 1/(1+z+z^2): not a product of (1 - z^k) factors
        g = RationalGeneratingFunction(one_minus_z_pow(1), ((3, 1),))
        r = reduce_gf(g)
        assert r.reduced_warning
        assert r.leftover == poly(1, 1, 1)
        assert r == g

    def test_already_reduced_fixed_point(self):
        g = RationalGeneratingFunction(poly(0, 0, 2, 4, 6), ((1, 3), (2, 1)))
        r = reduce_gf(g)
        assert r.numerator == g.numerator
        assert r.denominator_factors == g.denominator_factors

    @given(
        st.lists(st.integers(-5, 5), min_size=1, max_size=4),
        st.lists(st.tuples(st.integers(1, 4), st.integers(1, 2)),
                 min_size=1, max_size=2),
    )
    @settings(max_examples=40)
    def test_reduction_preserves_value(self, ncs, factors):
        num = Polynomial(ncs)
        if num.is_zero():
            return
        g = RationalGeneratingFunction(num, tuple(factors))
        assert reduce_gf(g) == g

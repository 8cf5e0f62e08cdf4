"""Exact rational polynomials, quasipolynomials and rational generating functions.

All arithmetic in this module is exact: coefficients are ``fractions.Fraction``
values and no floating point is used anywhere.  Generating functions are kept
in the form N(z) / prod_k (1 - z^k)^{e_k}; equality between two such values is
always decided by cross-multiplied polynomial identity, never by textual form.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class AlgebraError(ValueError):
    pass


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of z^i; the highest-index coefficient is
    nonzero unless the polynomial is zero (empty tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def monomial(cls, coeff, degree: int) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self, s) -> "Polynomial":
        return self * _as_fraction(s)

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Exact polynomial division with remainder over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.coeffs[-1]
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            f = rem[i] / lead
            q[i - d] = f
            for j, c in enumerate(other.coeffs):
                rem[i - d + j] -= f * c
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Divide, raising AlgebraError when the division is not exact."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise AlgebraError("polynomial division not exact")
        return q

    def divides(self, other: "Polynomial") -> bool:
        return other.divmod(self)[1].is_zero()

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{i}")
        return "Polynomial(" + " + ".join(terms) + ")"


def one_minus_z_pow(k: int) -> Polynomial:
    """The factor 1 - z^k."""
    if k < 1:
        raise AlgebraError("factor exponent must be positive")
    return Polynomial([1] + [0] * (k - 1) + [-1])


def _int_content(coeffs: Sequence[int]) -> int:
    g = 0
    for c in coeffs:
        g = math.gcd(g, abs(c))
        if g == 1:
            break
    return g or 1


def _to_primitive_int(p: Polynomial) -> list[int]:
    """Clear denominators and divide out the content; sign-normalized."""
    den = math.lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1
    ints = [int(c * den) for c in p.coeffs]
    g = _int_content(ints)
    ints = [c // g for c in ints]
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # pseudo-remainder of integer polynomials, primitive-part normalized
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        la = a[-1]
        g = math.gcd(la, lb)
        mul_a, mul_b = lb // g, la // g
        for i in range(len(a)):
            a[i] *= mul_a
        off = len(a) - 1 - db
        for j in range(db + 1):
            a[off + j] -= mul_b * b[j]
        while a and a[-1] == 0:
            a.pop()
    g = _int_content(a)
    return [c // g for c in a]


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over the rationals, via a primitive integer remainder sequence."""
    if a.is_zero():
        x, y = _to_primitive_int(b), []
    else:
        x, y = _to_primitive_int(a), _to_primitive_int(b)
    while y:
        x, y = y, _pseudo_rem(x, y)
    if not x:
        return Polynomial.zero()
    lead = x[-1]
    return Polynomial([Fraction(c, lead) for c in x])


def interpolate(points: Sequence[tuple[int, Fraction]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Uses Newton divided differences with exact rationals.
    """
    if not points:
        raise AlgebraError("at least one interpolation point required")
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise AlgebraError("degenerate interpolation nodes")
    ys = [_as_fraction(p[1]) for p in points]
    # divided-difference coefficients
    coef = list(ys)
    for j in range(1, len(points)):
        for i in range(len(points) - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form
    result = Polynomial.zero()
    basis = Polynomial([1])
    for i, c in enumerate(coef):
        result = result + basis * c
        basis = basis * Polynomial([-xs[i], 1])
    return result


@dataclass(frozen=True)
class Quasipolynomial:
    """A function of period p given by p constituent polynomials.

    Evaluation at m uses the constituent indexed by ((m mod p) + p) mod p,
    which also fixes the convention for negative arguments.
    """

    period: int
    degree: int
    constituents: tuple[Polynomial, ...]

    def __post_init__(self):
        if self.period < 1 or len(self.constituents) != self.period:
            raise AlgebraError("constituent count must equal the period")
        for c in self.constituents:
            if c.degree > self.degree:
                raise AlgebraError("constituent degree exceeds declared degree")

    def __call__(self, m: int) -> Fraction:
        return quasi_eval(self, m)

    def to_json_dict(self) -> dict:
        return {
            "period": self.period,
            "degree": self.degree,
            "constituents": [
                [f"{c.numerator}/{c.denominator}" for c in p.coeffs]
                for p in self.constituents
            ],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "Quasipolynomial":
        return cls(
            period=d["period"],
            degree=d["degree"],
            constituents=tuple(Polynomial(cs) for cs in d["constituents"]),
        )


def quasi_eval(f: Quasipolynomial, m: int) -> Fraction:
    """Evaluate f at any integer m (negative arguments allowed)."""
    r = ((m % f.period) + f.period) % f.period
    return f.constituents[r](m)


@dataclass(frozen=True)
class RationalGeneratingFunction:
    """N(z) over a product of (1 - z^k)^e factors, with optional leftover.

    ``denominator_factors`` is a sorted tuple of (k, e) pairs.  ``leftover`` is
    an extra polynomial denominator factor used only when reduction cannot
    express the full denominator through (1 - z^k) factors; ``reduced_warning``
    flags that case.
    """

    numerator: Polynomial
    denominator_factors: tuple[tuple[int, int], ...]
    leftover: Polynomial = field(default_factory=lambda: Polynomial([1]))
    reduced_warning: bool = False

    def __post_init__(self):
        factors: dict[int, int] = {}
        for k, e in self.denominator_factors:
            if k < 1 or e < 1:
                raise AlgebraError("denominator factors must have positive k and e")
            factors[k] = factors.get(k, 0) + e
        object.__setattr__(
            self, "denominator_factors", tuple(sorted(factors.items()))
        )

    def denominator_polynomial(self) -> Polynomial:
        den = self.leftover
        for k, e in self.denominator_factors:
            f = one_minus_z_pow(k)
            for _ in range(e):
                den = den * f
        return den

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalGeneratingFunction):
            return NotImplemented
        return (
            self.numerator * other.denominator_polynomial()
            == other.numerator * self.denominator_polynomial()
        )

    def __hash__(self):
        return hash((self.numerator, self.denominator_factors))

    def series(self, nterms: int) -> list[Fraction]:
        """Power-series coefficients of z^0 .. z^(nterms-1)."""
        out = [self.numerator[i] for i in range(nterms)]
        for k, e in self.denominator_factors:
            for _ in range(e):
                # divide by (1 - z^k): b[i] += b[i-k]
                for i in range(k, nterms):
                    out[i] += out[i - k]
        if self.leftover.degree > 0 or self.leftover[0] != 1:
            # long division by the leftover factor
            c0 = self.leftover[0]
            if c0 == 0:
                raise AlgebraError("leftover factor has zero constant term")
            for i in range(nterms):
                acc = out[i]
                for j in range(1, min(i, self.leftover.degree) + 1):
                    acc -= self.leftover[j] * out[i - j]
                out[i] = acc / c0
        return out

    def to_json_dict(self) -> dict:
        d = {
            "numerator": [
                f"{c.numerator}/{c.denominator}" for c in self.numerator.coeffs
            ],
            "denominator": [[k, e] for k, e in self.denominator_factors],
        }
        if self.leftover != Polynomial([1]):
            d["leftover"] = [
                f"{c.numerator}/{c.denominator}" for c in self.leftover.coeffs
            ]
            d["reduced_warning"] = self.reduced_warning
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "RationalGeneratingFunction":
        return cls(
            numerator=Polynomial(d["numerator"]),
            denominator_factors=tuple((k, e) for k, e in d["denominator"]),
            leftover=Polynomial(d.get("leftover", [1])),
            reduced_warning=d.get("reduced_warning", False),
        )

    def __repr__(self) -> str:
        den = " ".join(f"(1-z^{k})^{e}" for k, e in self.denominator_factors)
        return f"RGF({self.numerator!r} / {den or 1})"


def gf_from_counts(
    counts: Sequence[int], period: int, degree: int
) -> RationalGeneratingFunction:
    """Assemble N(z)/(1-z^p)^(n+1) from the coefficient sequence a_1..a_N.

    The numerator is the finite convolution of the series with (1-z^p)^(n+1).
    All convolution coefficients beyond degree p*(n+1)-1+p must vanish; a
    nonzero one means the sequence is not a quasipolynomial of the claimed
    period and degree.
    """
    p, n = period, degree
    nterms = len(counts)
    if nterms < p * (n + 1):
        raise AlgebraError(
            f"need at least {p * (n + 1)} counts for period {p}, degree {n}"
        )
    series = Polynomial([0] + [Fraction(c) for c in counts])
    den = RationalGeneratingFunction(Polynomial([1]), ((p, n + 1),))
    num = series * den.denominator_polynomial()
    cutoff = p * (n + 1) - 1 + p
    # convolution coefficients above the sample horizon are truncation
    # artifacts (they would need counts we do not have); check up to nterms
    for i in range(cutoff + 1, min(num.degree, nterms) + 1):
        if num[i] != 0:
            raise AlgebraError(
                "sequence inconsistent with claimed period/degree"
            )
    return RationalGeneratingFunction(
        Polynomial(num.coeffs[: cutoff + 1]), ((p, n + 1),)
    )


def reduce_gf(g: RationalGeneratingFunction) -> RationalGeneratingFunction:
    """Cancel the gcd of numerator and denominator, then greedily re-express
    the remaining denominator as a product of (1 - z^k) factors, k descending.

    If a nontrivial polynomial factor remains that is not a product of such
    factors, it is kept as ``leftover`` and ``reduced_warning`` is set.
    """
    num = g.numerator
    den = g.denominator_polynomial()
    common = poly_gcd(num, den)
    if common.degree > 0:
        num = num.exact_div(common)
        den = den.exact_div(common)
    factors: list[tuple[int, int]] = []
    k = den.degree
    while k >= 1:
        e = 0
        f = one_minus_z_pow(k)
        while den.degree >= k and f.divides(den):
            den = den.exact_div(f)
            e += 1
        if e:
            factors.append((k, e))
        k -= 1
    if den.degree == 0:
        # fold the residual constant into the numerator
        num = num * (1 / den[0])
        return RationalGeneratingFunction(num, tuple(factors))
    # normalize the leftover to constant term 1, matching the (1 - z^k) form
    c0 = den[0]
    if c0 == 0:
        raise AlgebraError("leftover denominator factor has zero constant term")
    return RationalGeneratingFunction(
        num * (1 / c0),
        tuple(factors),
        leftover=den * (1 / c0),
        reduced_warning=True,
    )


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def dumps_json(obj) -> str:
    """Serialize a Quasipolynomial or RationalGeneratingFunction to JSON."""
    return json.dumps(obj.to_json_dict(), sort_keys=True)

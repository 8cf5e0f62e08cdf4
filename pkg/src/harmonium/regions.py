"""Region systems D(eps)L inside the unit cube: lattice counts, nonempty-region
search, the star orbit identity, and exact vertex verification.

A region is never asserted empty from a failed witness search; orientations
with no witness up to the dilation bound are reported as unresolved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .colorings import _check_budget
from .graphs import (
    Graph,
    family,
    is_nonconstant,
    laplacian,
    matrix_rank_exact,
    nonconstant_vertex_orientations,
)
from .stars import count_star


@dataclass(frozen=True)
class RegionSystem:
    """Strict system D(eps) L x < 0 together with 0 < x_i < 1."""

    matrix: np.ndarray  # rows are eps_v * (Laplacian row v)
    eps: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


def region_system(g: Graph, eps: tuple[int, ...]) -> RegionSystem:
    if len(eps) != g.n or any(s not in (-1, 1) for s in eps):
        raise ValueError("eps must be a +-1 vector of length n")
    if not is_nonconstant(eps):
        raise ValueError(
            "empty region: constant orientations correspond to the positive "
            "and negative orthants, which the image of L avoids"
        )
    L = laplacian(g)
    D = np.diag(np.array(eps, dtype=np.int64))
    return RegionSystem(matrix=D @ L, eps=tuple(eps))


def count_region_points(sys: RegionSystem, t: int, budget: int | None = None) -> int:
    """Lattice points of t^{-1} Z^n strictly inside the cube and the region.

    Equivalently: integer vectors in {1..t-1}^n with sign-correct strict
    defects.
    """
    if t < 1:
        raise ValueError("dilation must be >= 1")
    if t > 1:
        _check_budget((t - 1) ** sys.n, budget)
    return kernels.count_region_points_kernel(sys.matrix, t)


def region_witness(sys: RegionSystem, t: int) -> list[Fraction] | None:
    """A point of t^{-1} Z^n interior to the region, or None."""
    w = kernels.region_witness_kernel(sys.matrix, t)
    if w is None:
        return None
    return [Fraction(int(x), t) for x in w]


@dataclass(frozen=True)
class NonemptyRegionReport:
    found: int
    unresolved: tuple[tuple[int, ...], ...]
    witnesses: dict  # eps -> (t, point)


def count_nonempty_regions(
    g: Graph, max_dilation: int | None = None, budget: int | None = None
) -> NonemptyRegionReport:
    """Search dilations t = 2..max_dilation for a witness in every region."""
    if not g.is_connected():
        raise ValueError("region census requires a connected graph")
    if max_dilation is None:
        max_dilation = 4 * g.n
    found = 0
    unresolved = []
    witnesses = {}
    for eps in nonconstant_vertex_orientations(g.n):
        sys = region_system(g, eps)
        hit = None
        for t in range(2, max_dilation + 1):
            _check_budget((t - 1) ** g.n, budget)
            w = region_witness(sys, t)
            if w is not None:
                hit = (t, w)
                break
        if hit is None:
            unresolved.append(eps)
        else:
            found += 1
            witnesses[eps] = hit
    return NonemptyRegionReport(found, tuple(unresolved), witnesses)


def star_region(n: int, j: int) -> RegionSystem:
    """The orbit representative region of the star arrangement: -1 on the
    center and the first j-1 leaves, +1 elsewhere (1 <= j <= n-1)."""
    if not 1 <= j <= n - 1:
        raise ValueError("j must be in 1..n-1")
    eps = tuple(-1 if v < j else 1 for v in range(n))
    return region_system(family("star", n), eps)


@dataclass(frozen=True)
class OrbitIdentityReport:
    n: int
    offset: int  # delta with weighted region sums A(t) == count(t - 1 + delta)
    table: tuple[tuple[int, int, int], ...]  # (t, A(t), matched count)


def star_orbit_identity(
    n: int, t_max: int, budget: int | None = None
) -> OrbitIdentityReport:
    """Check the weighted orbit decomposition of the star counting series.

    A(t) = 2 * sum_j C(n-1, j-1) * count(P_n^j, t) is compared against the
    star count at t-1+delta for delta in {0, 1}; the consistent offset is
    reported, and an error raised if neither offset matches every t.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    systems = [(math.comb(n - 1, j - 1), star_region(n, j)) for j in range(1, n)]
    a_vals = {}
    for t in range(1, t_max + 1):
        a_vals[t] = 2 * sum(
            w * count_region_points(sys, t, budget) for w, sys in systems
        )
    for delta in (0, 1):
        rows = []
        ok = True
        for t in range(1, t_max + 1):
            m = t - 1 + delta
            h = count_star(n, m) if m >= 1 else 0
            rows.append((t, a_vals[t], h))
            if a_vals[t] != h:
                ok = False
                break
        if ok:
            return OrbitIdentityReport(n=n, offset=delta, table=tuple(rows))
    raise RuntimeError("orbit identity violated: no consistent index offset")


def star_region_vertices(n: int) -> list[tuple[Fraction, ...]]:
    """Candidate vertices of the j = 2 star region: for i = 0..n-2 the vector
    with first coordinate 1/(n-1-i), second coordinate 1, then i coordinates
    equal to 1/(n-1-i) and zeros (the last entry is the all-ones vector)."""
    out = []
    for i in range(n - 1):
        q = Fraction(1, n - 1 - i)
        v = [q, Fraction(1)] + [q] * i + [Fraction(0)] * (n - 2 - i)
        out.append(tuple(v))
    return out


def verify_vertex(sys: RegionSystem, p: tuple[Fraction, ...]) -> str:
    """Classify p as "vertex", "feasible-not-vertex" or "infeasible".

    The point must satisfy the closed system (weak region inequalities plus
    0 <= x <= 1); it is a vertex when the tight constraint rows have exact
    rational rank n.
    """
    n = sys.n
    if len(p) != n:
        raise ValueError("point dimension mismatch")
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for r in range(n):
        rows.append([Fraction(int(x)) for x in sys.matrix[r]])
        rhs.append(Fraction(0))
    for i in range(n):
        unit = [Fraction(0)] * n
        unit[i] = Fraction(1)
        rows.append(unit)
        rhs.append(Fraction(1))
        rows.append([-u for u in unit])
        rhs.append(Fraction(0))
    tight = []
    for row, b in zip(rows, rhs):
        val = sum(a * x for a, x in zip(row, p))
        if val > b:
            return "infeasible"
        if val == b:
            tight.append(row)
    if tight and matrix_rank_exact(tight) == n:
        return "vertex"
    return "feasible-not-vertex"

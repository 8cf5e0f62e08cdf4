"""Brute-force coloring enumeration and the reciprocity machinery.

Harmonicity at a vertex v is tested in integer form, deg(v)*c(v) versus the
neighbor sum: the entry (L c)_v is zero exactly when c is harmonic at v, so
no rational division ever happens in the inner loops.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graphs import Graph, laplacian

DEFAULT_BUDGET = 10**9


class BudgetExceeded(RuntimeError):
    """Raised when a brute-force instance exceeds the coloring budget."""


def resolve_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("HARMONIUM_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check_budget(cost: int, budget: int | None) -> None:
    limit = resolve_budget(budget)
    if cost > limit:
        raise BudgetExceeded(
            f"instance too large for brute force ({cost} > budget {limit}); "
            "raise the budget via --budget or HARMONIUM_BUDGET"
        )


@dataclass(frozen=True)
class Coloring:
    """A labeling of vertices 1..n with values from {1..m}."""

    values: tuple[int, ...]
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("palette size must be positive")
        for v in self.values:
            if not 1 <= v <= self.m:
                raise ValueError(f"color {v} outside 1..{self.m}")


def harmonic_defect(g: Graph, c: Coloring) -> np.ndarray:
    """L @ c; entry v is zero iff c is harmonic at vertex v."""
    return laplacian(g) @ np.array(c.values, dtype=np.int64)


def count_nowhere_harmonic(g: Graph, m: int, budget: int | None = None) -> int:
    """Number of m-colorings whose harmonic defect has no zero entry."""
    if m < 1:
        raise ValueError("m must be >= 1")
    _check_budget(m**g.n, budget)
    return kernels.count_nowhere_harmonic_kernel(laplacian(g), m)


def beta(g: Graph, c: Coloring) -> int:
    """Number of nonconstant vertex orientations compatible with c.

    Closed form: product over vertices of (2 if harmonic at v else 1), minus
    one for each constant orientation that happens to be compatible (all-ones
    iff c is subharmonic everywhere, all-minus-ones iff superharmonic
    everywhere).  Sub/superharmonic use weak inequalities.
    """
    if g.has_isolated_vertex():
        raise ValueError("compatibility undefined: graph has an isolated vertex")
    d = harmonic_defect(g, c)
    prod = 1
    for dv in d:
        if dv == 0:
            prod *= 2
    if np.all(d <= 0):
        prod -= 1
    if np.all(d >= 0):
        prod -= 1
    return prod


def reciprocity_rhs(g: Graph, m: int, budget: int | None = None) -> int:
    """Sum of beta(c) over all m-colorings; the right side of reciprocity."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if not g.is_connected():
        raise ValueError("reciprocity sum requires a connected graph")
    _check_budget(m**g.n, budget)
    return kernels.reciprocity_sum_kernel(laplacian(g), m)


def chromatic_count(g: Graph, m: int, budget: int | None = None) -> int:
    """Number of proper m-colorings, by exhaustive enumeration."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return 0
    _check_budget(m**g.n, budget)
    return kernels.count_proper_kernel(g.edges, g.n, m)


def _is_acyclic(n: int, directed: list[tuple[int, int]]) -> bool:
    # Kahn's algorithm on the oriented edge set
    indeg = [0] * (n + 1)
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in directed:
        adj[u].append(v)
        indeg[v] += 1
    queue = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while queue:
        u = queue.pop()
        seen += 1
        for w in adj[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


def count_compatible_acyclic(g: Graph, c: Coloring) -> int:
    """alpha(c): acyclic edge orientations compatible with the coloring."""
    ne = g.num_edges
    count = 0
    for mask in range(2**ne):
        directed = []
        ok = True
        for e, (i, j) in enumerate(g.edges):
            sign = 1 if mask & (1 << e) else -1
            diff = c.values[j - 1] - c.values[i - 1]
            if diff != 0 and (diff > 0) != (sign > 0):
                ok = False
                break
            directed.append((i, j) if sign > 0 else (j, i))
        if ok and _is_acyclic(g.n, directed):
            count += 1
    return count


def acyclic_reciprocity_rhs(g: Graph, m: int, budget: int | None = None) -> int:
    """Sum of alpha(c) over all m-colorings (Stanley's right-hand side)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    _check_budget(m**g.n * 2**g.num_edges, budget)
    total = 0
    values = [1] * g.n
    while True:
        total += count_compatible_acyclic(g, Coloring(tuple(values), m))
        j = 0
        while j < g.n and values[j] == m:
            values[j] = 1
            j += 1
        if j == g.n:
            return total
        values[j] += 1


def construct_two_coloring(g: Graph) -> Coloring:
    """A nowhere-harmonic 2-coloring from breadth-first depth parity.

    Each component is rooted at its lowest-index vertex; the root gets label 1
    and labels alternate with tree depth.  The result is verified before it is
    returned.
    """
    labels = [0] * (g.n + 1)
    for comp in g.components():
        if len(comp) == 1:
            raise ValueError(
                "no nowhere-harmonic coloring exists: single-vertex component"
            )
        root = comp[0]
        labels[root] = 1
        queue = [(root, 0)]
        seen = {root}
        while queue:
            v, depth = queue.pop(0)
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    labels[w] = 1 if (depth + 1) % 2 == 0 else 2
                    queue.append((w, depth + 1))
    c = Coloring(tuple(labels[1:]), 2)
    if np.any(harmonic_defect(g, c) == 0):
        raise AssertionError("constructed 2-coloring is not nowhere-harmonic")
    return c


def involute(c: Coloring) -> Coloring:
    """The pairing c(v) -> m + 1 - c(v); applying it twice is the identity."""
    return Coloring(tuple(c.m + 1 - v for v in c.values), c.m)

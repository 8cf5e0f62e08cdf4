"""Shared helpers: random graph generators and slow independent oracles.

The oracles here are deliberately naive (full enumeration, dict-based DP,
orientation listing) so that the fast library code is always checked against
an implementation with no shared logic.
"""

from __future__ import annotations

import itertools
import random

from harmonium.colorings import Coloring, harmonic_defect
from harmonium.graphs import Graph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """Erdos-Renyi graph on 1..n with edge probability p."""
    edges = tuple(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < p
    )
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree (random parent links) plus extra random edges."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = set()
    for idx in range(1, n):
        parent = order[rng.randrange(idx)]
        child = order[idx]
        edges.add((min(parent, child), max(parent, child)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < extra:
                edges.add((i, j))
    return Graph(n, tuple(sorted(edges)))


def random_no_isolated_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """Random graph resampled until every vertex has at least one edge."""
    while True:
        g = random_graph(rng, n, p)
        if n >= 2 and not g.has_isolated_vertex():
            return g


def brute_beta(g: Graph, c: Coloring) -> int:
    """Orientation-enumeration oracle for the compatibility count.

    A sign vector eps is compatible with c when eps_v * defect_v >= 0 at every
    vertex; count the nonconstant compatible ones by listing all 2^n vectors.
    """
    d = harmonic_defect(g, c)
    count = 0
    for eps in itertools.product((-1, 1), repeat=g.n):
        if all(e == eps[0] for e in eps):
            continue
        if all(e * dv >= 0 for e, dv in zip(eps, d)):
            count += 1
    return count


def enumerate_nowhere_harmonic(g: Graph, m: int) -> list[Coloring]:
    """All nowhere-harmonic m-colorings by direct product enumeration."""
    out = []
    for values in itertools.product(range(1, m + 1), repeat=g.n):
        c = Coloring(values, m)
        if all(dv != 0 for dv in harmonic_defect(g, c)):
            out.append(c)
    return out


def brute_count_nowhere_harmonic(g: Graph, m: int) -> int:
    """Independent slow counter used to validate the fast kernels."""
    return len(enumerate_nowhere_harmonic(g, m))

"""Graphs, standard families, the boundary map and the Laplacian L = D - A.

Vertices are the dense integers 1..n, ordered by index.  Edges are unordered
pairs stored as (i, j) with i < j; directing each edge from its lower to its
higher endpoint is the standard orientation.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"loop edge ({i},{j}) not allowed")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise GraphError(f"edge ({i},{j}) out of range 1..{self.n}")
            if i > j:
                raise GraphError("edges must be stored with i < j")
            if (i, j) in seen:
                raise GraphError(f"duplicate edge ({i},{j})")
            seen.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i - 1] += 1
            deg[j - 1] += 1
        return deg

    def neighbors(self, v: int) -> list[int]:
        out = []
        for i, j in self.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        return out

    def has_isolated_vertex(self) -> bool:
        return 0 in self.degrees()

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists (breadth-first)."""
        adj = {v: [] for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = [False] * (self.n + 1)
        comps = []
        for root in range(1, self.n + 1):
            if seen[root]:
                continue
            seen[root] = True
            queue = [root]
            comp = []
            while queue:
                v = queue.pop(0)
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1


def family(kind: str, n: int) -> Graph:
    """Standard families: path, cycle, complete, star (= K_{1,n-1})."""
    if kind == "cycle":
        if n < 3:
            raise GraphError("cycle needs n >= 3")
    elif n < 2:
        raise GraphError(f"{kind} needs n >= 2")
    if kind == "path":
        edges = [(j, j + 1) for j in range(1, n)]
    elif kind == "cycle":
        edges = [(j, j + 1) for j in range(1, n)] + [(1, n)]
    elif kind == "complete":
        edges = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    elif kind == "star":
        edges = [(1, j) for j in range(2, n + 1)]
    else:
        raise GraphError(f"unknown family {kind!r}")
    return Graph(n, tuple(edges))


def laplacian(g: Graph) -> np.ndarray:
    """The vertex Laplacian L = D - A as an int64 matrix."""
    L = np.zeros((g.n, g.n), dtype=np.int64)
    for i, j in g.edges:
        L[i - 1, i - 1] += 1
        L[j - 1, j - 1] += 1
        L[i - 1, j - 1] -= 1
        L[j - 1, i - 1] -= 1
    return L


def boundary_map(g: Graph) -> np.ndarray:
    """Signed vertex-edge incidence matrix; column for edge (i<j) is e_j - e_i."""
    B = np.zeros((g.n, g.num_edges), dtype=np.int64)
    for col, (i, j) in enumerate(g.edges):
        B[i - 1, col] = -1
        B[j - 1, col] = 1
    return B


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: first line n, then "i j" lines, '#' comments."""
    n = None
    edges: list[tuple[int, int]] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphParseError(f"line {lineno}: expected vertex count")
            if n < 1:
                raise GraphParseError(f"line {lineno}: vertex count must be positive")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'i j'")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: malformed edge")
        if i == j:
            raise GraphParseError(f"line {lineno}: loop edge ({i},{j})")
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphParseError(f"line {lineno}: vertex index out of range")
        e = (min(i, j), max(i, j))
        if e in seen:
            warnings.warn(f"duplicate edge {e} collapsed")
            continue
        seen.add(e)
        edges.append(e)
    if n is None:
        raise GraphParseError("empty input: missing vertex count")
    g = Graph(n, tuple(edges))
    if g.has_isolated_vertex() and g.num_edges:
        warnings.warn(
            "graph has a degree-0 vertex: it is harmonic under every coloring"
        )
    return g


def is_nonconstant(signs: tuple[int, ...]) -> bool:
    """A vertex orientation is nonconstant if both signs occur."""
    return 1 in signs and -1 in signs


def nonconstant_vertex_orientations(n: int):
    """All 2^n - 2 nonconstant sign vectors, in a fixed deterministic order."""
    for mask in range(1, 2**n - 1):
        yield tuple(1 if mask & (1 << (n - 1 - v)) else -1 for v in range(n))


def laplacian_rank(g: Graph) -> int:
    """Exact rank of the Laplacian via rational Gaussian elimination."""
    rows = [[Fraction(int(x)) for x in row] for row in laplacian(g)]
    return _rank(rows)


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [row[:] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        rank += 1
    return rank


def matrix_rank_exact(rows: list[list[Fraction]]) -> int:
    """Rank of a rational matrix given as lists of Fractions."""
    if not rows:
        return 0
    return _rank([[Fraction(x) for x in row] for row in rows])

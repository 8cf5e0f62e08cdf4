"""Polynomial-time exact counter for star graphs K_{1,n-1}.

On a star, a coloring is nowhere-harmonic iff no leaf shares the center's
label and the leaf labels do not sum to (n-1) times the center label.  For a
fixed center label a this leaves (m-1)^(n-1) - N(a) leaf tuples, where N(a)
counts (n-1)-tuples over {1..m} \\ {a} with sum exactly (n-1)*a.  N(a) is
computed by dynamic programming over partial sums; total cost O(n * m^2).
"""

from __future__ import annotations

from . import kernels


def count_star(n: int, m: int) -> int:
    """Nowhere-harmonic m-colorings of the star on n vertices (center + n-1 leaves)."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return 0
    return kernels.star_count_kernel(n, m)


def leaf_sum_count(n: int, m: int, a: int) -> int:
    """N(a): (n-1)-tuples over {1..m} minus {a} summing to (n-1)*a.

    Reference DP used by tests for the leaf-sum bound; always big-int exact.
    """
    leaves = n - 1
    dp = {0: 1}
    for _ in range(leaves):
        new: dict[int, int] = {}
        for s, cnt in dp.items():
            for x in range(1, m + 1):
                if x == a:
                    continue
                new[s + x] = new.get(s + x, 0) + cnt
        dp = new
    return dp.get(leaves * a, 0)

"""Hot enumeration kernels with a numba fast path and a numpy fallback.

The backend is selected by the HARMONIUM_BACKEND environment variable
("numba" or "numpy"); default is numba when importable.  Both paths produce
identical integer results; the numpy path exists for environments without a
working JIT and as an independent cross-check (see benchmarks/).

All kernels stay within int64: callers guard instance sizes via the resource
budget, which keeps every intermediate quantity far below 2^63.
"""

from __future__ import annotations

import os

import numpy as np

_CHUNK = 1 << 16


def _env_backend() -> str:
    choice = os.environ.get("HARMONIUM_BACKEND", "").strip().lower()
    if choice in ("numba", "numpy"):
        return choice
    if choice:
        raise ValueError(f"HARMONIUM_BACKEND must be 'numba' or 'numpy', got {choice!r}")
    try:
        import numba  # noqa: F401

        return "numba"
    except ImportError:
        return "numpy"


_backend = _env_backend()


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    _backend = name


# ---------------------------------------------------------------------------
# numba fast path

if _env_backend() == "numba" or os.environ.get("HARMONIUM_BACKEND") != "numpy":
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        njit = None
else:  # pragma: no cover
    njit = None

if njit is not None:

    @njit(cache=True)
    def _nb_count_nowhere_harmonic(L, m):
        # Odometer over the first n-1 coordinates; the defect at each vertex
        # is linear in the last coordinate x, so the number of valid x in
        # 1..m is m minus the distinct in-range roots of base_v + a_v*x = 0.
        n = L.shape[0]
        k = n - 1
        a = np.empty(n, np.int64)
        base = np.zeros(n, np.int64)
        for v in range(n):
            a[v] = L[v, k]
            s = np.int64(0)
            for j in range(k):
                s += L[v, j]
            base[v] = s
        c = np.ones(k, np.int64)
        forb = np.empty(n, np.int64)
        count = np.int64(0)
        while True:
            nf = 0
            dead = False
            for v in range(n):
                if a[v] == 0:
                    if base[v] == 0:
                        dead = True
                        break
                elif base[v] % a[v] == 0:
                    x0 = -(base[v] // a[v])
                    if 1 <= x0 <= m:
                        dup = False
                        for t in range(nf):
                            if forb[t] == x0:
                                dup = True
                                break
                        if not dup:
                            forb[nf] = x0
                            nf += 1
            if not dead:
                count += m - nf
            j = 0
            while j < k and c[j] == m:
                for v in range(n):
                    base[v] += L[v, j] * (1 - m)
                c[j] = 1
                j += 1
            if j == k:
                return count
            c[j] += 1
            for v in range(n):
                base[v] += L[v, j]

    @njit(cache=True)
    def _nb_reciprocity_sum(L, m):
        # Same prefix odometer as the counting kernel.  For a fixed prefix the
        # inner sum over the last coordinate x splits into: the product term
        # (2 per zero defect), which differs from the generic value 2^za only
        # at the finitely many x where some defect vanishes, and the two
        # constant-orientation corrections, each supported on an interval of x.
        n = L.shape[0]
        k = n - 1
        a = np.empty(n, np.int64)
        base = np.zeros(n, np.int64)
        for v in range(n):
            a[v] = L[v, k]
            s = np.int64(0)
            for j in range(k):
                s += L[v, j]
            base[v] = s
        c = np.ones(k, np.int64)
        cand = np.empty(n, np.int64)
        total = np.int64(0)
        while True:
            za = 0
            nc = 0
            for v in range(n):
                if a[v] == 0:
                    if base[v] == 0:
                        za += 1
                elif base[v] % a[v] == 0:
                    x0 = -(base[v] // a[v])
                    if 1 <= x0 <= m:
                        dup = False
                        for t in range(nc):
                            if cand[t] == x0:
                                dup = True
                                break
                        if not dup:
                            cand[nc] = x0
                            nc += 1
            pow2 = np.int64(1) << za
            total += pow2 * m
            for t in range(nc):
                x = cand[t]
                prod = np.int64(1)
                for v in range(n):
                    if base[v] + a[v] * x == 0:
                        prod *= 2
                total += prod - pow2
            # all defects <= 0 holds on an interval of x
            lo = np.int64(1)
            hi = np.int64(m)
            for v in range(n):
                if a[v] == 0:
                    if base[v] > 0:
                        hi = np.int64(0)
                        break
                elif a[v] > 0:
                    ub = (-base[v]) // a[v]
                    if ub < hi:
                        hi = ub
                else:
                    lb = -(base[v] // a[v])
                    if lb > lo:
                        lo = lb
            if hi >= lo:
                total -= hi - lo + 1
            # all defects >= 0 holds on an interval of x
            lo = np.int64(1)
            hi = np.int64(m)
            for v in range(n):
                if a[v] == 0:
                    if base[v] < 0:
                        hi = np.int64(0)
                        break
                elif a[v] > 0:
                    lb = -(base[v] // a[v])
                    if lb > lo:
                        lo = lb
                else:
                    ub = (-base[v]) // a[v]
                    if ub < hi:
                        hi = ub
            if hi >= lo:
                total -= hi - lo + 1
            j = 0
            while j < k and c[j] == m:
                for v in range(n):
                    base[v] += L[v, j] * (1 - m)
                c[j] = 1
                j += 1
            if j == k:
                return total
            c[j] += 1
            for v in range(n):
                base[v] += L[v, j]

    @njit(cache=True)
    def _nb_count_proper(eu, ev, n, m):
        c = np.ones(n, np.int64)
        count = np.int64(0)
        ne = eu.shape[0]
        while True:
            ok = True
            for e in range(ne):
                if c[eu[e]] == c[ev[e]]:
                    ok = False
                    break
            if ok:
                count += 1
            j = 0
            while j < n and c[j] == m:
                c[j] = 1
                j += 1
            if j == n:
                return count
            c[j] += 1

    @njit(cache=True)
    def _nb_count_region_points(A, t):
        # points x in {1..t-1}^n with (A x)_v < 0 for all v
        n = A.shape[0]
        hi = t - 1
        if hi < 1:
            return np.int64(0)
        c = np.ones(n, np.int64)
        d = np.sum(A, axis=1)
        count = np.int64(0)
        while True:
            ok = True
            for v in range(n):
                if d[v] >= 0:
                    ok = False
                    break
            if ok:
                count += 1
            j = 0
            while j < n and c[j] == hi:
                for v in range(n):
                    d[v] += A[v, j] * (1 - hi)
                c[j] = 1
                j += 1
            if j == n:
                return count
            c[j] += 1
            for v in range(n):
                d[v] += A[v, j]

    @njit(cache=True)
    def _nb_region_witness(A, t):
        # first point (odometer order) strictly inside the region, else all -1
        n = A.shape[0]
        hi = t - 1
        out = -np.ones(n, np.int64)
        if hi < 1:
            return out
        c = np.ones(n, np.int64)
        d = np.sum(A, axis=1)
        while True:
            ok = True
            for v in range(n):
                if d[v] >= 0:
                    ok = False
                    break
            if ok:
                for v in range(n):
                    out[v] = c[v]
                return out
            j = 0
            while j < n and c[j] == hi:
                for v in range(n):
                    d[v] += A[v, j] * (1 - hi)
                c[j] = 1
                j += 1
            if j == n:
                return out
            c[j] += 1
            for v in range(n):
                d[v] += A[v, j]

    @njit(cache=True)
    def _nb_star_count(n, m):
        # sum over center labels a of (m-1)^(n-1) - N(a); N(a) by DP over
        # leaf-label partial sums with a sliding-window convolution.
        leaves = n - 1
        width = leaves * m + 1
        total = np.int64(0)
        free = np.int64(1)
        for _ in range(leaves):
            free *= m - 1
        dp = np.zeros(width, np.int64)
        new = np.zeros(width, np.int64)
        prefix = np.zeros(width + 1, np.int64)
        for a in range(1, m + 1):
            dp[:] = 0
            dp[0] = 1
            size = 1
            for _ in range(leaves):
                prefix[0] = 0
                for s in range(size):
                    prefix[s + 1] = prefix[s] + dp[s]
                new_size = size + m
                for s in range(new_size):
                    lo = max(0, s - m)
                    hi2 = min(size, s)  # window over dp[s-m .. s-1]
                    acc = prefix[hi2] - prefix[lo]
                    if s - a >= 0 and s - a < size:
                        acc -= dp[s - a]
                    new[s] = acc
                dp, new = new, dp
                size = new_size
            bad = dp[leaves * a] if leaves * a < size else np.int64(0)
            total += free - bad
        return total


# ---------------------------------------------------------------------------
# numpy fallback: chunked mixed-radix enumeration


def _np_chunks(n: int, m: int):
    """Yield (chunk_size, colorings array of shape (chunk, n), values 1..m)."""
    total = m**n
    radix = np.array([m ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        cols = (idx[:, None] // radix[None, :]) % m + 1
        yield cols


def _np_count_nowhere_harmonic(L, m):
    count = 0
    for cols in _np_chunks(L.shape[0], m):
        d = cols @ L.T
        count += int(np.count_nonzero(np.all(d != 0, axis=1)))
    return count


def _np_reciprocity_sum(L, m):
    total = 0
    for cols in _np_chunks(L.shape[0], m):
        d = cols @ L.T
        prod = np.prod(np.where(d == 0, 2, 1), axis=1)
        total += int(prod.sum())
        total -= int(np.count_nonzero(np.all(d <= 0, axis=1)))
        total -= int(np.count_nonzero(np.all(d >= 0, axis=1)))
    return total


def _np_count_proper(eu, ev, n, m):
    count = 0
    for cols in _np_chunks(n, m):
        ok = np.all(cols[:, eu] != cols[:, ev], axis=1)
        count += int(np.count_nonzero(ok))
    return count


def _np_count_region_points(A, t):
    if t < 2:
        return 0
    count = 0
    for cols in _np_chunks(A.shape[0], t - 1):
        d = cols @ A.T
        count += int(np.count_nonzero(np.all(d < 0, axis=1)))
    return count


def _np_region_witness(A, t):
    if t < 2:
        return None
    for cols in _np_chunks(A.shape[0], t - 1):
        d = cols @ A.T
        ok = np.all(d < 0, axis=1)
        w = np.argmax(ok)
        if ok[w]:
            return cols[w].copy()
    return None


def _py_star_count(n: int, m: int) -> int:
    """Arbitrary-precision DP; the normative implementation of the star count."""
    leaves = n - 1
    free = (m - 1) ** leaves
    total = 0
    for a in range(1, m + 1):
        dp = [1]
        for _ in range(leaves):
            size = len(dp)
            prefix = [0] * (size + 1)
            for s in range(size):
                prefix[s + 1] = prefix[s] + dp[s]
            new = [0] * (size + m)
            for s in range(size + m):
                lo = max(0, s - m)
                hi = min(size, s)
                acc = prefix[hi] - prefix[lo]
                if 0 <= s - a < size:
                    acc -= dp[s - a]
                new[s] = acc
            dp = new
        bad = dp[leaves * a] if leaves * a < len(dp) else 0
        total += free - bad
    return total


# ---------------------------------------------------------------------------
# dispatch


def _edge_arrays(edges):
    eu = np.array([i - 1 for i, _ in edges], dtype=np.int64)
    ev = np.array([j - 1 for _, j in edges], dtype=np.int64)
    return eu, ev


def count_nowhere_harmonic_kernel(L: np.ndarray, m: int) -> int:
    if m < 1:
        return 0
    if _backend == "numba" and njit is not None:
        return int(_nb_count_nowhere_harmonic(np.ascontiguousarray(L), m))
    return _np_count_nowhere_harmonic(L, m)


def reciprocity_sum_kernel(L: np.ndarray, m: int) -> int:
    if m < 1:
        return 0
    if _backend == "numba" and njit is not None:
        return int(_nb_reciprocity_sum(np.ascontiguousarray(L), m))
    return _np_reciprocity_sum(L, m)


def count_proper_kernel(edges, n: int, m: int) -> int:
    if m < 1:
        return 1 if (m == 0 and n == 0) else 0
    eu, ev = _edge_arrays(edges)
    if _backend == "numba" and njit is not None:
        return int(_nb_count_proper(eu, ev, n, m))
    return _np_count_proper(eu, ev, n, m)


def count_region_points_kernel(A: np.ndarray, t: int) -> int:
    if _backend == "numba" and njit is not None:
        return int(_nb_count_region_points(np.ascontiguousarray(A), t))
    return _np_count_region_points(A, t)


def region_witness_kernel(A: np.ndarray, t: int):
    """First interior lattice point of the dilated region, or None."""
    if _backend == "numba" and njit is not None:
        w = _nb_region_witness(np.ascontiguousarray(A), t)
        if w[0] < 0:
            return None
        return w
    return _np_region_witness(A, t)


def star_count_kernel(n: int, m: int) -> int:
    if m < 1:
        return 0
    # the numba path is exact only while m^n fits comfortably in int64
    if _backend == "numba" and njit is not None and m**n < 2**62:
        return int(_nb_star_count(n, m))
    return _py_star_count(n, m)

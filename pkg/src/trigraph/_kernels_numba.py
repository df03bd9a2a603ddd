"""Numba-jitted counting kernels over CSR adjacency and bit-packed rows."""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True, inline="always")
def _popcount64(x):
    # SWAR popcount; numba has no bit_count intrinsic for uint64
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def count_hybrid_matrix(indptr, indices, degrees, matrix):
    """Edge-iterator count: scan lower-degree endpoint, test third edge in the matrix.

    Returns (triangles, probes) where probes counts every (edge, neighbor) scan.
    """
    n = indptr.shape[0] - 1
    tri = 0
    probes = 0
    one = np.uint64(1)
    for i in range(n):
        for idx in range(indptr[i], indptr[i + 1]):
            j = indices[idx]
            if j <= i:
                continue
            if degrees[i] <= degrees[j]:
                x, y = i, j
            else:
                x, y = j, i
            for t in range(indptr[x], indptr[x + 1]):
                k = indices[t]
                probes += 1
                if k > j and (matrix[y, k >> 6] >> np.uint64(k & 63)) & one:
                    tri += 1
    return tri, probes


@njit(cache=True)
def count_hybrid_csr(indptr, indices, degrees):
    """Matrix-free hybrid count; third edge tested by binary search in the CSR row."""
    n = indptr.shape[0] - 1
    tri = 0
    probes = 0
    for i in range(n):
        for idx in range(indptr[i], indptr[i + 1]):
            j = indices[idx]
            if j <= i:
                continue
            if degrees[i] <= degrees[j]:
                x, y = i, j
            else:
                x, y = j, i
            lo0 = indptr[y]
            hi0 = indptr[y + 1]
            for t in range(indptr[x], indptr[x + 1]):
                k = indices[t]
                probes += 1
                if k <= j:
                    continue
                lo = lo0
                hi = hi0
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if indices[mid] < k:
                        lo = mid + 1
                    else:
                        hi = mid
                if lo < hi0 and indices[lo] == k:
                    tri += 1
    return tri, probes


@njit(cache=True)
def matrix_intersection_sum(indptr, indices, matrix):
    """Sum over edges u<v of |N(u) ∩ N(v)| via bit-row popcounts (3x triangle count)."""
    n = indptr.shape[0] - 1
    words = matrix.shape[1]
    total = 0
    for i in range(n):
        for idx in range(indptr[i], indptr[i + 1]):
            j = indices[idx]
            if j <= i:
                continue
            s = np.uint64(0)
            for w in range(words):
                s += _popcount64(matrix[i, w] & matrix[j, w])
            total += np.int64(s)
    return total

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: GF(p) rank and restricted Stanley-Reisner homology.

Mirrors ``_kernels_py``; sets are bitmasks over at most 62 vertices and the
characteristic must be a prime below 2^31.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

import numpy as np

ctypedef unsigned long long u64
ctypedef long long i64

cdef enum:
    MAX_BITS = 62
    MAX_CELLS = 400000000

cdef i64 BINOM[64][64]


cdef void _fill_binom():
    cdef int a, b
    for a in range(64):
        for b in range(64):
            BINOM[a][b] = 0
        BINOM[a][0] = 1
        for b in range(1, a + 1):
            BINOM[a][b] = BINOM[a - 1][b - 1] + BINOM[a - 1][b]

_fill_binom()


cdef inline int _popcount(u64 x) nogil:
    return __builtin_popcountll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef i64 _inv_mod(i64 a, i64 p) nogil:
    cdef i64 t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


cdef int _rank_buf(i64* A, Py_ssize_t rows, Py_ssize_t cols, i64 p) nogil:
    """In-place row reduction of a row-major buffer whose entries are in [0, p)."""
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 inv, f, v
    cdef i64* rowr
    cdef i64* rowi
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if A[i * cols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                v = A[r * cols + j]
                A[r * cols + j] = A[piv * cols + j]
                A[piv * cols + j] = v
        rowr = A + r * cols
        inv = _inv_mod(rowr[c], p)
        for j in range(c, cols):
            rowr[j] = (rowr[j] * inv) % p
        for i in range(r + 1, rows):
            rowi = A + i * cols
            f = rowi[c]
            if f != 0:
                for j in range(c, cols):
                    if rowr[j] != 0:
                        rowi[j] = (rowi[j] - f * rowr[j]) % p
                        if rowi[j] < 0:
                            rowi[j] += p
        r += 1
    return <int>r


def rank_mod_p(M, long long p):
    """Rank of an integer matrix over GF(p)."""
    if not (2 <= p < (1 << 31)):
        raise ValueError(f"characteristic must be a prime below 2^31, got {p}")
    A = np.ascontiguousarray(np.asarray(M, dtype=np.int64) % p)
    if A.ndim != 2 or A.size == 0:
        return 0
    cdef i64[:, ::1] view = A
    cdef Py_ssize_t rows = A.shape[0], cols = A.shape[1]
    cdef int r
    with nogil:
        r = _rank_buf(&view[0, 0], rows, cols, p)
    return r


cdef inline u64 _colex_rank(u64 mask):
    cdef u64 rank = 0
    cdef int t = 0, pos
    while mask:
        pos = __builtin_ctzll(mask)
        t += 1
        rank += BINOM[pos][t]
        mask &= mask - 1
    return rank


cdef Py_ssize_t _enumerate_faces(int N, int k, u64* nf, int nnf, u64** out) except -1:
    """All size-k subsets of N bits containing no nonface; caller frees *out."""
    cdef i64 total
    cdef Py_ssize_t count = 0
    cdef u64 x, c, rr, limit
    cdef int t
    cdef bint ok
    out[0] = NULL
    if k < 0 or k > N:
        return 0
    total = BINOM[N][k]
    if total > MAX_CELLS:
        raise MemoryError(f"{total} candidate faces is beyond the kernel's budget")
    out[0] = <u64*>malloc(max(total, 1) * sizeof(u64))
    if out[0] == NULL:
        raise MemoryError()
    if k == 0:
        ok = True
        for t in range(nnf):
            if nf[t] == 0:
                ok = False
        if ok:
            out[0][0] = 0
            count = 1
        return count
    x = (<u64>1 << k) - 1
    limit = <u64>1 << N
    while x < limit:
        ok = True
        for t in range(nnf):
            if (nf[t] & x) == nf[t]:
                ok = False
                break
        if ok:
            out[0][count] = x
            count += 1
        c = x & (~x + 1)
        rr = x + c
        x = (((rr ^ x) >> 2) // c) | rr
    return count


cdef i64 _boundary_rank(int N, int k, u64* top, Py_ssize_t ntop, u64* low, Py_ssize_t nlow, i64 p) except -1:
    """Rank of the boundary map from the size-k faces ``top`` to size-(k-1) faces ``low``."""
    cdef i64 nidx = BINOM[N][k - 1]
    cdef int* index
    cdef i64* A
    cdef Py_ssize_t i, r
    cdef u64 face, rest, bit
    cdef int t
    cdef i64 rank
    if ntop == 0 or nlow == 0:
        return 0
    if ntop * nlow > MAX_CELLS:
        raise MemoryError(f"boundary matrix {ntop}x{nlow} is beyond the kernel's budget")
    index = <int*>malloc(nidx * sizeof(int))
    A = <i64*>calloc(ntop * nlow, sizeof(i64))
    if index == NULL or A == NULL:
        free(index)
        free(A)
        raise MemoryError()
    for i in range(nidx):
        index[i] = -1
    for i in range(nlow):
        index[_colex_rank(low[i])] = <int>i
    for r in range(ntop):
        face = top[r]
        rest = face
        t = 0
        while rest:
            bit = rest & (~rest + 1)
            i = index[_colex_rank(face ^ bit)]
            A[r * nlow + i] = (p - 1) if (t & 1) else 1
            rest ^= bit
            t += 1
    with nogil:
        rank = _rank_buf(A, ntop, nlow, p)
    free(index)
    free(A)
    return rank


cdef i64 _rank_from(int N, int k, int min_nf, u64* nf, int nnf, i64 p) except -1:
    cdef u64* top = NULL
    cdef u64* low = NULL
    cdef Py_ssize_t ntop, nlow
    cdef i64 rank
    if k <= 0 or k > N:
        return 0
    if k < min_nf:
        return BINOM[N - 1][k - 1]
    try:
        ntop = _enumerate_faces(N, k, nf, nnf, &top)
        if ntop == 0:
            return 0
        nlow = _enumerate_faces(N, k - 1, nf, nnf, &low)
        rank = _boundary_rank(N, k, top, ntop, low, nlow, p)
    finally:
        free(top)
        free(low)
    return rank


def reduced_homology_dim(sigma, nonfaces, int d, long long p):
    """dim of reduced H_d over GF(p) of {F subset of sigma : F contains no nonface}."""
    cdef u64 s
    cdef int N = 0, t, nnf = 0, min_nf, b
    cdef int positions[64]
    cdef u64* nf
    cdef u64* faces = NULL
    cdef u64 rel, m
    cdef i64 dim_c
    if not (2 <= p < (1 << 31)):
        raise ValueError(f"characteristic must be a prime below 2^31, got {p}")
    if sigma < 0 or sigma.bit_length() > MAX_BITS:
        raise ValueError(f"vertex masks are limited to {MAX_BITS} bits")
    if d < -1:
        return 0
    s = sigma
    for b in range(MAX_BITS):
        if (s >> b) & 1:
            positions[N] = b
            N += 1
    nonfaces = [int(x) for x in nonfaces if int(x) & ~sigma == 0]
    nf = <u64*>malloc(max(len(nonfaces), 1) * sizeof(u64))
    if nf == NULL:
        raise MemoryError()
    try:
        min_nf = N + 1
        for x in nonfaces:
            m = x
            rel = 0
            for t in range(N):
                if (m >> positions[t]) & 1:
                    rel |= (<u64>1) << t
            nf[nnf] = rel
            nnf += 1
            if _popcount(rel) < min_nf:
                min_nf = _popcount(rel)
        if d + 1 > N:
            return 0
        if d + 1 < min_nf:
            dim_c = BINOM[N][d + 1]
        else:
            dim_c = _enumerate_faces(N, d + 1, nf, nnf, &faces)
            free(faces)
            faces = NULL
        if dim_c == 0:
            return 0
        return int(dim_c - _rank_from(N, d + 1, min_nf, nf, nnf, p) - _rank_from(N, d + 2, min_nf, nf, nnf, p))
    finally:
        free(nf)

"""Pure-Python reference kernels: rank over GF(p) or Q, and reduced homology
of a restricted Stanley-Reisner complex.  Same API as the compiled module."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

MAX_PRIME = 1 << 31


def rank_mod_p(M, p: int) -> int:
    """Rank of an integer matrix over GF(p); p = 0 means the rationals."""
    if p == 0:
        return _rank_rational(M)
    if not 2 <= p < MAX_PRIME:
        raise ValueError(f"characteristic must be 0 or a prime below 2^31, got {p}")
    A = np.array(M, dtype=np.int64)
    if A.ndim != 2 or A.size == 0:
        return 0
    A %= p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = np.flatnonzero(A[r + 1:, c]) + r + 1
        if below.size:
            A[below, c:] = (A[below, c:] - np.outer(A[below, c], A[r, c:])) % p
        r += 1
    return r


def _rank_rational(M) -> int:
    A = [[Fraction(int(x)) for x in row] for row in M]
    if not A or not A[0]:
        return 0
    rows, cols = len(A), len(A[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pr = A[r]
        for i in range(r + 1, rows):
            f = A[i][c] / pr[c]
            if f:
                row = A[i]
                for j in range(c, cols):
                    row[j] -= f * pr[j]
        r += 1
        if r == rows:
            break
    return r


def _compress(mask: int, positions: list[int]) -> int:
    out = 0
    for t, pos in enumerate(positions):
        if mask >> pos & 1:
            out |= 1 << t
    return out


def _faces(N: int, k: int, nonfaces: list[int]) -> list[int]:
    """Size-k subsets of range(N) (as bitmasks) containing no nonface, in colex order."""
    if k < 0 or k > N:
        return []
    out = []
    for combo in itertools.combinations(range(N), k):
        m = 0
        for t in combo:
            m |= 1 << t
        if not any(nf & m == nf for nf in nonfaces):
            out.append(m)
    return out


def _boundary_rank(rows: list[int], cols: list[int], p: int) -> int:
    index = {m: c for c, m in enumerate(cols)}
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for r, face in enumerate(rows):
        t = 0
        rest = face
        while rest:
            low = rest & -rest
            M[r, index[face ^ low]] = -1 if t & 1 else 1
            rest ^= low
            t += 1
    return rank_mod_p(M, p)


def reduced_homology_dim(sigma: int, nonfaces, d: int, p: int) -> int:
    """dim of reduced H_d of {F subset of sigma : F contains no nonface} over GF(p) (Q if p = 0)."""
    if d < -1:
        return 0
    positions = [b for b in range(sigma.bit_length()) if sigma >> b & 1]
    N = len(positions)
    nf = sorted({_compress(m, positions) for m in nonfaces if m & ~sigma == 0}, key=int.bit_count)
    min_nf = nf[0].bit_count() if nf else N + 1

    def count_faces(k: int) -> int:
        if k < 0 or k > N:
            return 0
        if k < min_nf:
            return math.comb(N, k)
        return len(_faces(N, k, nf))

    def rank_from(k: int) -> int:
        # rank of the boundary map from size-k faces to size-(k-1) faces
        if k <= 0 or k > N:
            return 0
        if k < min_nf:
            return math.comb(N - 1, k - 1)
        top = _faces(N, k, nf)
        if not top:
            return 0
        return _boundary_rank(top, _faces(N, k - 1, nf), p)

    dim_c = count_faces(d + 1)
    if dim_c == 0:
        return 0
    return dim_c - rank_from(d + 1) - rank_from(d + 2)

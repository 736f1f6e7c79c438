"""Numba hot path for Monte Carlo satisfiability trials.

One trial = sample a random width-k formula and decide consistency of
its GF(2) system.  The clause sampling consumes the generator stream in
exactly the order documented in ``xorsat.model.sample_formula`` (k
``integers(i, n)`` draws then one ``integers(0, 2)`` draw per clause),
so a trial here is bit-for-bit the same formula the pure-Python sampler
would produce from the same stream.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def sat_trial(rng, n, L, k):  # pragma: no cover - exercised via sweep tests
    """Sample one random (n, L, k) system and return True iff consistent."""
    width = n + 1  # rhs bit rides at column position n
    n_words = (width + 63) >> 6
    M = np.zeros((L, n_words), dtype=np.uint64)
    perm = np.arange(n)
    js = np.empty(k, dtype=np.int64)
    one = np.uint64(1)

    for row in range(L):
        for i in range(k):
            j = rng.integers(i, n)
            js[i] = j
            tmp = perm[i]
            perm[i] = perm[j]
            perm[j] = tmp
        for i in range(k):
            c = perm[i]
            M[row, c >> 6] |= one << np.uint64(c & 63)
        if rng.integers(0, 2) == 1:
            M[row, n >> 6] |= one << np.uint64(n & 63)
        for i in range(k - 1, -1, -1):
            j = js[i]
            tmp = perm[i]
            perm[i] = perm[j]
            perm[j] = tmp

    # forward elimination on the packed augmented matrix
    pivot_row = 0
    for col in range(n):
        if pivot_row == L:
            break
        w = col >> 6
        sh = np.uint64(col & 63)
        p = -1
        for r in range(pivot_row, L):
            if (M[r, w] >> sh) & one:
                p = r
                break
        if p < 0:
            continue
        if p != pivot_row:
            for ww in range(w, n_words):
                tmp64 = M[p, ww]
                M[p, ww] = M[pivot_row, ww]
                M[pivot_row, ww] = tmp64
        for r in range(p + 1, L):
            if (M[r, w] >> sh) & one:
                for ww in range(w, n_words):
                    M[r, ww] ^= M[pivot_row, ww]
        pivot_row += 1

    # rows that never produced a pivot are all-zero on the A side; a set
    # rhs bit there means 0 = 1
    w_rhs = n >> 6
    sh_rhs = np.uint64(n & 63)
    for r in range(pivot_row, L):
        if (M[r, w_rhs] >> sh_rhs) & one:
            return False
    return True

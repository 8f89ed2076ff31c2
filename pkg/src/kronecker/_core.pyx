# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernel: dense Gaussian elimination over GF(p), p < 2**31."""

import numpy as np

ctypedef long long i64


cdef i64 _inv_mod(i64 a, i64 p):
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


def rank_dense_mod_p(i64[:, ::1] m, i64 p):
    """Rank of ``m`` over GF(p); ``m`` must hold values in [0, p) and is overwritten."""
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t rank = 0, c, r, k, j, nnz
    cdef i64 inv, f, v, t
    cdef i64[::1] nzcols = np.empty(ncols, dtype=np.int64)
    for c in range(ncols):
        if rank == nrows:
            break
        r = rank
        while r < nrows and m[r, c] == 0:
            r += 1
        if r == nrows:
            continue
        if r != rank:
            for k in range(c, ncols):
                t = m[r, k]
                m[r, k] = m[rank, k]
                m[rank, k] = t
        inv = _inv_mod(m[rank, c], p)
        nnz = 0
        for k in range(c, ncols):
            v = m[rank, k]
            if v != 0:
                m[rank, k] = (v * inv) % p
                nzcols[nnz] = k
                nnz += 1
        for r in range(rank + 1, nrows):
            f = m[r, c]
            if f == 0:
                continue
            for j in range(nnz):
                k = nzcols[j]
                v = m[r, k] - (f * m[rank, k]) % p
                if v < 0:
                    v += p
                m[r, k] = v
        rank += 1
    return rank

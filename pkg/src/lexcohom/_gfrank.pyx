# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled row-reduction rank over GF(p).

Mirrors linalg.rank_mod_p_python exactly; the caller passes a fresh
C-contiguous int64 matrix already reduced mod p.
"""

import numpy as np


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long t = 0, newt = 1, r = p, newr = a % p
    cdef long long q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(long long[:, ::1] a, long long p):
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, tmp
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(n):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod(a[r, c], p)
        for j in range(n):
            a[r, j] = a[r, j] * inv % p
        for i in range(r + 1, m):
            f = a[i, c]
            if f != 0:
                for j in range(n):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
                    if a[i, j] < 0:
                        a[i, j] += p
        r += 1
    return r

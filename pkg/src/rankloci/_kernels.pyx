# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels.

Gauss-Jordan reduction in two flavors: C-integer arithmetic modulo a prime
(``modp_rref``) and generic Python objects with exact field arithmetic
(``obj_rref``).  ``_pykernels`` is the pure twin with the same contract;
``backend`` picks one at import time.  Pivoting is always "first nonzero",
so both backends produce bit-identical output.
"""


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a must be nonzero mod p
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
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


def modp_rref(long long[:, :] a, long long p):
    """Reduce ``a`` (entries in [0, p)) in place to reduced row echelon form
    mod p.  Returns (rank, pivot_columns)."""
    cdef Py_ssize_t rows = a.shape[0]
    cdef Py_ssize_t cols = a.shape[1]
    cdef Py_ssize_t r = 0, i, j, k, piv
    cdef long long f, inv, v
    pivots = []
    for j in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, j] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(cols):
                v = a[r, k]
                a[r, k] = a[piv, k]
                a[piv, k] = v
        if a[r, j] != 1:
            inv = _inv_mod(a[r, j], p)
            for k in range(j, cols):
                a[r, k] = (a[r, k] * inv) % p
        for i in range(rows):
            if i == r:
                continue
            f = a[i, j]
            if f == 0:
                continue
            for k in range(j, cols):
                v = (a[i, k] - f * a[r, k]) % p
                if v < 0:
                    v += p
                a[i, k] = v
        pivots.append(j)
        r += 1
    return r, pivots


def obj_rref(list m):
    """Reduce a list-of-lists matrix of exact field elements in place to
    reduced row echelon form.  Elements need +, -, *, /, == and truthiness
    (Fraction, Fp, ...).  Returns (rank, pivot_columns)."""
    cdef Py_ssize_t rows = len(m)
    cdef Py_ssize_t cols, r = 0, i, j, k, piv
    cdef list rr, ri
    if rows == 0:
        return 0, []
    cols = len(<list> m[0])
    pivots = []
    for j in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if (<list> m[i])[j]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        rr = <list> m[r]
        f = rr[j]
        if not f == 1:
            for k in range(j, cols):
                if rr[k]:
                    rr[k] = rr[k] / f
        for i in range(rows):
            if i == r:
                continue
            ri = <list> m[i]
            g = ri[j]
            if g:
                for k in range(j, cols):
                    v = rr[k]
                    if v:
                        ri[k] = ri[k] - g * v
        pivots.append(j)
        r += 1
    return r, pivots

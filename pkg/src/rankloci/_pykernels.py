"""Pure-Python twin of the compiled elimination kernels.

Same contract and same pivot choices as ``_kernels``: first-nonzero pivoting,
reduced row echelon output, (rank, pivot_columns) return.  The mod-p kernel
leans on numpy for the row updates; the object kernel is plain loops.
"""

from __future__ import annotations

import numpy as np


def modp_rref(a, p):
    """Reduce numpy int64 matrix ``a`` (entries in [0, p)) in place to RREF
    mod p.  Returns (rank, pivot_columns)."""
    rows, cols = a.shape
    r = 0
    pivots = []
    for j in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, j])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        x = int(a[r, j])
        if x != 1:
            a[r, j:] = (a[r, j:] * pow(x, p - 2, p)) % p
        colv = a[:, j].copy()
        colv[r] = 0
        mask = colv != 0
        if mask.any():
            a[mask, j:] = (a[mask, j:] - np.outer(colv[mask], a[r, j:])) % p
        pivots.append(j)
        r += 1
    return r, pivots


def obj_rref(m):
    """Reduce a list-of-lists matrix of exact field elements in place to
    RREF.  Returns (rank, pivot_columns)."""
    rows = len(m)
    if rows == 0:
        return 0, []
    cols = len(m[0])
    r = 0
    pivots = []
    for j in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if m[i][j]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        rr = m[r]
        f = rr[j]
        if not f == 1:
            for k in range(j, cols):
                if rr[k]:
                    rr[k] = rr[k] / f
        for i in range(rows):
            if i == r:
                continue
            ri = m[i]
            g = ri[j]
            if g:
                for k in range(j, cols):
                    v = rr[k]
                    if v:
                        ri[k] = ri[k] - g * v
        pivots.append(j)
        r += 1
    return r, pivots

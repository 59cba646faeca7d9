"""Exact dense matrices over Q and F_p.

Rank, kernel, solve and inverse go through reduced row echelon form with
deterministic first-nonzero pivoting (exact arithmetic needs no magnitude
pivoting, and fixed pivots make kernel bases reproducible).  The determinant
uses fraction-free Bareiss elimination so the identical routine lifts to
polynomial entries.  Matrices are immutable after construction and all
operations are pure.
"""

from __future__ import annotations

import json

import numpy as np

from . import backend
from .errors import DimensionError, InputError
from .fields import QQ, field_by_char


def rref_of_rows(field, rows):
    """RREF of a list-of-lists of field scalars.  Returns (R, pivots) with R
    a fresh list of lists; input is not modified."""
    if not rows or not rows[0]:
        return [list(r) for r in rows], []
    if field.char:
        a = np.array([[x.v for x in row] for row in rows], dtype=np.int64)
        _, pivots = backend.modp_rref(a, field.char)
        red = [[field.of(int(v)) for v in row] for row in a]
        return red, list(pivots)
    red = [list(row) for row in rows]
    _, pivots = backend.obj_rref(red)
    return red, list(pivots)


def rank_of_rows(field, rows) -> int:
    """Exact rank of a list-of-lists of field scalars."""
    if not rows or not rows[0]:
        return 0
    if field.char:
        a = np.array([[x.v for x in row] for row in rows], dtype=np.int64)
        rank, _ = backend.modp_rref(a, field.char)
        return rank
    red = [list(row) for row in rows]
    rank, _ = backend.obj_rref(red)
    return rank


def kernel_of_rows(field, rows, cols=None):
    """Basis of the right null space of the matrix given by ``rows``.

    Returns a list of tuples (column vectors), one per free column, ordered
    by free column index; empty list when the rank equals the column count.
    ``cols`` must be given when ``rows`` is empty.
    """
    if not rows:
        if cols is None:
            raise InputError("kernel of empty matrix needs an explicit column count")
        return [
            tuple(field.one if k == f else field.zero for k in range(cols))
            for f in range(cols)
        ]
    ncols = len(rows[0])
    red, pivots = rref_of_rows(field, rows)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        vec = [field.zero] * ncols
        vec[f] = field.one
        for i, pj in enumerate(pivots):
            c = red[i][f]
            if c:
                vec[pj] = -c
        basis.append(tuple(vec))
    return basis


class Matrix:
    """Immutable dense matrix of exact scalars over a fixed field."""

    __slots__ = ("field", "rows", "cols", "_e")

    def __init__(self, field, entries):
        entries = tuple(tuple(row) for row in entries)
        if entries:
            w = len(entries[0])
            if any(len(r) != w for r in entries):
                raise DimensionError("ragged rows")
        self.field = field
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        self._e = entries

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, field, rows):
        return cls(field, [[field.of(x) for x in row] for row in rows])

    @classmethod
    def zero(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i):
        return self._e[i]

    def row_lists(self):
        return [list(r) for r in self._e]

    def column(self, j):
        return tuple(r[j] for r in self._e)

    def submatrix(self, row_idx, col_idx):
        return Matrix(self.field, [[self._e[i][j] for j in col_idx] for i in row_idx])

    def take_columns(self, col_idx):
        return self.submatrix(range(self.rows), col_idx)

    def take_rows(self, row_idx):
        return self.submatrix(row_idx, range(self.cols))

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field is other.field
            and self._e == other._e
        )

    def __hash__(self):
        return hash(self._e)

    def __neg__(self):
        return Matrix(self.field, [[-x for x in row] for row in self._e])

    def __add__(self, other):
        self._shape_check(other, same=True)
        return Matrix(
            self.field,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._e, other._e)
            ],
        )

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        z = self.field.zero
        bt = other.transpose()._e
        out = []
        for ra in self._e:
            out.append(
                [
                    sum((a * b for a, b in zip(ra, rb) if a and b), z)
                    for rb in bt
                ]
            )
        return Matrix(self.field, out)

    def scale(self, c):
        c = self.field.of(c)
        return Matrix(self.field, [[c * x for x in row] for row in self._e])

    def transpose(self):
        return Matrix(self.field, list(zip(*self._e)) if self._e else [])

    def apply_vector(self, vec):
        z = self.field.zero
        return tuple(sum((a * b for a, b in zip(row, vec) if a and b), z) for row in self._e)

    def _shape_check(self, other, same=False):
        if same and (self.rows != other.rows or self.cols != other.cols):
            raise DimensionError("shape mismatch")

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.to_str(x) for x in row) for row in self._e
        )
        return f"Matrix({self.field.name}, [{body}])"

    # -- exact linear algebra -------------------------------------------------

    def rref(self):
        red, pivots = rref_of_rows(self.field, self.row_lists())
        return Matrix(self.field, red), pivots

    def rank(self) -> int:
        return rank_of_rows(self.field, self.row_lists())

    def kernel_basis(self):
        return kernel_of_rows(self.field, self.row_lists(), cols=self.cols)

    def determinant(self):
        if self.rows != self.cols:
            raise DimensionError("determinant needs a square matrix")
        return bareiss_det(self.row_lists(), self.field.zero, self.field.one)

    def solve(self, b):
        """One exact solution of M x = b (free variables set to zero), or
        None when the system is inconsistent."""
        b = tuple(self.field.of(x) for x in b)
        if len(b) != self.rows:
            raise DimensionError("right-hand side length mismatch")
        aug = [list(row) + [bv] for row, bv in zip(self._e, b)]
        if not aug:
            return ()
        red, pivots = rref_of_rows(self.field, aug)
        if self.cols in pivots:
            return None
        x = [self.field.zero] * self.cols
        for i, pj in enumerate(pivots):
            x[pj] = red[i][-1]
        return tuple(x)

    def inverse(self):
        """Exact inverse, or None when singular."""
        if self.rows != self.cols:
            raise DimensionError("inverse needs a square matrix")
        n = self.rows
        z, o = self.field.zero, self.field.one
        aug = [
            list(row) + [o if i == j else z for j in range(n)]
            for i, row in enumerate(self._e)
        ]
        red, pivots = rref_of_rows(self.field, aug)
        if pivots != list(range(n)):
            return None
        return Matrix(self.field, [row[n:] for row in red])

    def is_zero(self) -> bool:
        return all(not x for row in self._e for x in row)


def bareiss_det(grid, zero, one):
    """Fraction-free determinant (Bareiss).  All divisions are exact, so the
    same routine works over fields and over polynomial rings whose elements
    implement ``/`` as exact division."""
    n = len(grid)
    if any(len(r) != n for r in grid):
        raise DimensionError("determinant needs a square matrix")
    if n == 0:
        return one
    m = [list(r) for r in grid]
    sign_flip = False
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign_flip = not sign_flip
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - mik * m[k][j]) / prev
            m[i][k] = zero
        prev = pivot
    d = m[n - 1][n - 1]
    return -d if sign_flip else d


def random_matrix(field, rows, cols, rng, bound: int = 100) -> Matrix:
    return Matrix(field, [[field.rand(rng, bound) for _ in range(cols)] for _ in range(rows)])


# -- JSON interchange -----------------------------------------------------
#
# A matrix file is {"entries": [["1", "2/3"], ...]} with one string per
# entry; prime-field matrices carry a top-level "p".


def matrix_to_json(m: Matrix) -> dict:
    d = {"entries": [[m.field.to_str(x) for x in row] for row in m._e]}
    if m.field.char:
        d["p"] = m.field.char
    return d


def matrix_from_json(obj) -> Matrix:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise InputError("matrix JSON must be an object with an 'entries' grid")
    field = field_by_char(obj.get("p", 0))
    grid = obj["entries"]
    if not isinstance(grid, list) or any(not isinstance(r, list) for r in grid):
        raise InputError("'entries' must be a grid (list of lists) of strings")
    return Matrix(field, [[field.parse(str(x)) for x in row] for row in grid])


def load_matrix(path) -> Matrix:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise InputError(f"{path}: invalid JSON ({e})") from None
    return matrix_from_json(data)


def dump_matrix(m: Matrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_json(m), fh, indent=2, sort_keys=True)
        fh.write("\n")

"""Small exact linear algebra over the rationals.

Everything the package needs reduces to ranks, nullspaces and linear
solves of modest integer matrices, so fractions from the stdlib are
plenty: no tolerances, no floating point anywhere.  Matrices are lists of
row lists; entries may be ints or Fractions.
"""

from __future__ import annotations

from fractions import Fraction


def copy_matrix(rows):
    return [list(r) for r in rows]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    cols = len(b[0])
    out = []
    for row in a:
        acc = [0] * cols
        for x, brow in zip(row, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def mat_vec(a, v):
    nz = [(j, x) for j, x in enumerate(v) if x]
    if not nz:
        return [0] * len(a)
    out = []
    for row in a:
        acc = 0
        for j, x in nz:
            rj = row[j]
            if rj:
                acc += rj * x
        out.append(acc)
    return out


def row_echelon(rows):
    """In-place fraction Gauss; returns the list of pivot columns."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = Fraction(rows[r][c])
        rows[r] = [Fraction(x) / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = Fraction(rows[i][c])
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(rows) -> int:
    return len(row_echelon(copy_matrix(rows)))


def nullspace(rows, ncols=None):
    """Basis of the right kernel, as a list of column vectors."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    work = copy_matrix(rows)
    pivots = row_echelon(work)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -Fraction(work[r][fc])
        basis.append(vec)
    return basis


def solve_columns(a_rows, b_cols):
    """Solve A X = B column-wise; None when some column is unsolvable.

    ``b_cols`` is a list of column vectors; the result is a list of
    solution column vectors.
    """
    nrows = len(a_rows)
    ncols = len(a_rows[0]) if a_rows else 0
    k = len(b_cols)
    aug = [
        [Fraction(a_rows[i][j]) for j in range(ncols)]
        + [Fraction(col[i]) for col in b_cols]
        for i in range(nrows)
    ]
    pivots = row_echelon(aug)
    if any(c >= ncols for c in pivots):
        return None  # a pivot in the right block: inconsistent system
    sols = []
    for t in range(k):
        vec = [Fraction(0)] * ncols
        for r, pc in enumerate(pivots):
            vec[pc] = aug[r][ncols + t]
        sols.append(vec)
    return sols


class ColumnSpace:
    """Incremental echelon basis of a span of integer/rational vectors."""

    def __init__(self, dim):
        self.dim = dim
        self.rows = []  # echelonized, leading entry 1
        self.lead = []  # pivot position of each row

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        # entries stay int until a genuine division happens; no floats ever
        v = list(vec)
        for row, lead in zip(self.rows, self.lead):
            f = v[lead]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert a vector; True when it enlarged the span."""
        v = self.reduce(vec)
        for i, x in enumerate(v):
            if x:
                if x != 1:
                    inv = Fraction(1) / x
                    v = [y * inv if y else 0 for y in v]
                self.rows.append(v)
                self.lead.append(i)
                return True
        return False

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))

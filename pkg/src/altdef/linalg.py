"""Dense exact linear algebra over the rationals.

Scalars are ``fractions.Fraction`` throughout: always in lowest terms with a
positive denominator, so every result is canonical without extra
normalisation.  Matrices are small (a few thousand rows at most) and mostly
sparse with entries 0 and +-1, so the elimination loops skip zero entries but
the storage stays dense.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class Matrix:
    """Dense rational matrix stored as a list of row lists."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix data does not match declared shape")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        return cls(rows, cols, [[Fraction(x) for x in row] for row in rows_list])

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        m = cls.zero(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    def column(self, j):
        return [row[j] for row in self.data]

    def mul_vector(self, v):
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        out = []
        for row in self.data:
            s = ZERO
            for a, b in zip(row, v):
                if a and b:
                    s += a * b
            out.append(s)
        return out

    def mul(self, other):
        """Matrix product, iterating only over nonzero entries of self."""
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        out = Matrix.zero(self.rows, other.cols)
        for i, row in enumerate(self.data):
            out_row = out.data[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in enumerate(other.data[k]):
                    if b:
                        out_row[j] += a * b
        return out

    def is_zero(self):
        return all(not x for row in self.data for x in row)

    def copy(self):
        return Matrix(self.rows, self.cols, [row[:] for row in self.data])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


def rref(m: Matrix):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where pivots is the strictly increasing list of
    pivot column indices.  RREF is unique, so the pivot search order only
    affects speed; rows whose pivot entry is already +-1 are preferred to
    keep intermediate fractions small.
    """
    data = [row[:] for row in m.data]
    rows, cols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pivot_row = -1
        for i in range(r, rows):
            x = data[i][c]
            if x:
                if x == ONE or x == -ONE:
                    pivot_row = i
                    break
                if pivot_row < 0:
                    pivot_row = i
        if pivot_row < 0:
            continue
        data[r], data[pivot_row] = data[pivot_row], data[r]
        piv = data[r][c]
        if piv != ONE:
            inv = ONE / piv
            data[r] = [x * inv if x else ZERO for x in data[r]]
        prow = data[r]
        tail = [(j, prow[j]) for j in range(c, cols) if prow[j]]
        for i in range(rows):
            if i == r:
                continue
            f = data[i][c]
            if not f:
                continue
            row_i = data[i]
            for j, pv in tail:
                row_i[j] -= f * pv
        pivots.append(c)
        r += 1
    return Matrix(rows, cols, data), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix):
    """Basis of the nullspace via the standard free-variable parametrization.

    Each basis vector has a 1 in its free-column slot and zeros in the other
    free columns; basis vectors are ordered by free column index.
    """
    R, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r_idx, c in enumerate(pivots):
            if R.data[r_idx][f]:
                v[c] = -R.data[r_idx][f]
        basis.append(v)
    return basis


def column_space_basis(m: Matrix):
    """The pivot columns of the original matrix; a basis of the column space."""
    _, pivots = rref(m)
    return [m.column(c) for c in pivots]


def solve(m: Matrix, b):
    """One exact solution of m*x = b, or None when b is not in the column space.

    Returning None is a legitimate mathematical outcome (it decides
    coboundary and obstruction-solvability questions), not a failure.  When
    solvable, the particular solution with all free variables set to zero is
    returned, which makes the choice deterministic.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    aug = Matrix(m.rows, m.cols + 1, [row + [Fraction(v)] for row, v in zip(m.data, b)])
    R, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r_idx, c in enumerate(pivots):
        x[c] = R.data[r_idx][m.cols]
    return x


class _Echelon:
    """Incremental echelon basis used for rank-extension tests."""

    def __init__(self, length):
        self.length = length
        self.rows = []  # list of (pivot index, reduced vector)

    def reduce(self, v):
        v = list(v)
        for p, row in self.rows:
            f = v[p]
            if f:
                for j in range(p, self.length):
                    if row[j]:
                        v[j] -= f * row[j]
        return v

    def add(self, v):
        """Reduce v against the basis; if independent, insert and return True."""
        v = self.reduce(v)
        for p in range(self.length):
            if v[p]:
                inv = ONE / v[p]
                v = [x * inv if x else ZERO for x in v]
                self.rows.append((p, v))
                self.rows.sort(key=lambda t: t[0])
                return True
        return False

    def contains(self, v):
        return all(not x for x in self.reduce(v))

    @property
    def dim(self):
        return len(self.rows)


def quotient_representatives(space, subspace):
    """Vectors of ``space`` whose cosets form a basis of span(space)/span(subspace).

    Candidates are admitted greedily in input order via a rank test, so the
    selection is deterministic.  Raises ValueError when a subspace vector
    falls outside span(space), which signals an inconsistent
    cocycle/coboundary pair upstream.
    """
    if not space and not subspace:
        return []
    length = len(space[0]) if space else len(subspace[0])
    span = _Echelon(length)
    for v in space:
        span.add(v)
    for i, w in enumerate(subspace):
        if not span.contains(w):
            raise ValueError(f"subspace vector {i} is not in the span of the ambient space")
    acc = _Echelon(length)
    for w in subspace:
        acc.add(w)
    reps = []
    for v in space:
        if acc.add(v):
            reps.append(list(v))
    return reps

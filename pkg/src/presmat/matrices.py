"""Exact linear algebra over the polynomial ring.

Determinants and rank use fraction-free (Bareiss) elimination, so every
intermediate value stays a polynomial; pivots prefer the lowest-degree
nonzero entry to limit swell. Pfaffians expand recursively along the
first row, which is fine at the sizes that occur here.
"""

from __future__ import annotations

from .ring import NEG_INF, Polynomial, RingContext, exact_div


class PolyMatrix:
    """Immutable matrix of polynomials, optionally graded by shifts.

    When row_shifts/col_shifts are present, entry (i,j) is expected to be
    zero or homogeneous of degree col_shifts[j] - row_shifts[i]; that is
    checked by check_graded, not by the constructor.
    """

    __slots__ = ("ring", "rows", "cols", "entries", "row_shifts", "col_shifts")

    def __init__(self, ring: RingContext, entries, row_shifts=None, col_shifts=None):
        entries = tuple(tuple(row) for row in entries)
        if not entries or not entries[0]:
            raise ValueError("matrix needs at least one row and one column")
        cols = len(entries[0])
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged rows")
            for p in row:
                if not isinstance(p, Polynomial) or p.ring != ring:
                    raise ValueError("entries must share the matrix ring")
        self.ring = ring
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries
        if row_shifts is not None:
            row_shifts = tuple(row_shifts)
            if len(row_shifts) != self.rows:
                raise ValueError("row_shifts length mismatch")
        if col_shifts is not None:
            col_shifts = tuple(col_shifts)
            if len(col_shifts) != self.cols:
                raise ValueError("col_shifts length mismatch")
        self.row_shifts = row_shifts
        self.col_shifts = col_shifts

    @classmethod
    def from_text(cls, ring: RingContext, rows, **kw) -> "PolyMatrix":
        return cls(ring, [[ring.parse(s) for s in row] for row in rows], **kw)

    @classmethod
    def identity(cls, ring: RingContext, n: int) -> "PolyMatrix":
        one, zero = ring.one(), ring.zero()
        return cls(ring, [[one if i == j else zero for j in range(n)]
                          for i in range(n)])

    @classmethod
    def diagonal(cls, ring: RingContext, diag) -> "PolyMatrix":
        zero = ring.zero()
        n = len(diag)
        return cls(ring, [[diag[i] if i == j else zero for j in range(n)]
                          for i in range(n)])

    def entry(self, i: int, j: int) -> Polynomial:
        return self.entries[i][j]

    def row(self, i: int):
        return self.entries[i]

    def column(self, j: int):
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring,
                          [self.column(j) for j in range(self.cols)],
                          row_shifts=self.col_shifts,
                          col_shifts=self.row_shifts)

    def submatrix(self, rows, cols) -> "PolyMatrix":
        rows, cols = sorted(rows), sorted(cols)
        return PolyMatrix(self.ring,
                          [[self.entries[i][j] for j in cols] for i in rows])

    def delete(self, row: int | None = None, col: int | None = None) -> "PolyMatrix":
        rows = [i for i in range(self.rows) if i != row]
        cols = [j for j in range(self.cols) if j != col]
        return self.submatrix(rows, cols)

    def with_shifts(self, row_shifts, col_shifts) -> "PolyMatrix":
        return PolyMatrix(self.ring, self.entries, row_shifts, col_shifts)

    def map_entries(self, f) -> "PolyMatrix":
        return PolyMatrix(self.ring,
                          [[f(p) for p in row] for row in self.entries])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows or self.ring != other.ring:
            raise ValueError("incompatible shapes or rings")
        zero = self.ring.zero()
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                s = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix)
                and self.ring == other.ring
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.ring, self.entries))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_alternating(self) -> bool:
        if not self.is_square():
            return False
        for i in range(self.rows):
            if self.entries[i][i]:
                return False
            for j in range(i + 1, self.cols):
                if self.entries[i][j] != -self.entries[j][i]:
                    return False
        return True

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(p) for p in row) + "]"
                         for row in self.entries)

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols} over {self.ring!r})"


class DegreeMatrix:
    """Integer matrix d_ij = col_shift_j - row_shift_i of a graded matrix."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(tuple(int(d) for d in row) for row in entries)

    def is_monotone(self) -> bool:
        """Rows nonincreasing downward and columns nonincreasing rightward."""
        e = self.entries
        for i in range(len(e)):
            for j in range(len(e[0])):
                if i + 1 < len(e) and e[i][j] < e[i + 1][j]:
                    return False
                if j + 1 < len(e[0]) and e[i][j] < e[i][j + 1]:
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, DegreeMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"DegreeMatrix({[list(r) for r in self.entries]})"


# -- determinants ------------------------------------------------------------

def _degree_rank(p: Polynomial):
    d = p.degree()
    return (1, 0) if d is NEG_INF else (0, d)


def _det_small(rows) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def det(M: PolyMatrix) -> Polynomial:
    """Exact determinant; Bareiss elimination above size 3."""
    if not M.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n <= 3:
        return _det_small(M.entries)
    ring = M.ring
    a = [list(row) for row in M.entries]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        pivot_row = None
        best = None
        for i in range(k, n):
            p = a[i][k]
            if p:
                r = _degree_rank(p)
                if best is None or r < best:
                    best, pivot_row = r, i
        if pivot_row is None:
            return ring.zero()
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = pk * a[i][j] - aik * a[k][j]
                a[i][j] = exact_div(num, prev) if num else ring.zero()
            a[i][k] = ring.zero()
        prev = pk
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def minor(M: PolyMatrix, rows, cols) -> Polynomial:
    """Determinant of the submatrix selecting the given rows and columns."""
    rows, cols = sorted(rows), sorted(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs equally many rows and columns")
    if not rows:
        return M.ring.one()
    if not all(0 <= i < M.rows for i in rows) or not all(0 <= j < M.cols for j in cols):
        raise ValueError("index out of range")
    return det(M.submatrix(rows, cols))


def cofactor_matrix(M: PolyMatrix) -> PolyMatrix:
    """C_ij = (-1)^(i+j) * minor deleting row i and column j."""
    if not M.is_square():
        raise ValueError("cofactor matrix of a non-square matrix")
    n = M.rows
    if n == 1:
        return PolyMatrix(M.ring, [[M.ring.one()]])
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            m = det(M.delete(row=i, col=j))
            row.append(m if (i + j) % 2 == 0 else -m)
        out.append(row)
    return PolyMatrix(M.ring, out)


def rank(M: PolyMatrix) -> int:
    """Symbolic rank over the fraction field via fraction-free elimination."""
    ring = M.ring
    a = [list(row) for row in M.entries]
    nrows, ncols = M.rows, M.cols
    prev = ring.one()
    r = 0
    for col in range(ncols):
        pivot_row = None
        best = None
        for i in range(r, nrows):
            p = a[i][col]
            if p:
                dr = _degree_rank(p)
                if best is None or dr < best:
                    best, pivot_row = dr, i
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pk = a[r][col]
        for i in range(r + 1, nrows):
            aik = a[i][col]
            for j in range(col + 1, ncols):
                num = pk * a[i][j] - aik * a[r][j]
                a[i][j] = exact_div(num, prev) if num else ring.zero()
            a[i][col] = ring.zero()
        prev = pk
        r += 1
        if r == nrows:
            break
    return r


# -- pfaffians ---------------------------------------------------------------

def _pfaffian(M: PolyMatrix, idx: tuple) -> Polynomial:
    if not idx:
        return M.ring.one()
    i0 = idx[0]
    rest = idx[1:]
    total = M.ring.zero()
    for k, j in enumerate(rest):
        a = M.entries[i0][j]
        if a:
            sub = rest[:k] + rest[k + 1:]
            term = a * _pfaffian(M, sub)
            total = total + term if k % 2 == 0 else total - term
    return total


def pfaffians(M: PolyMatrix) -> list:
    """Submaximal pfaffians p_1..p_n of an odd-size alternating matrix.

    Signs follow the kernel convention: p_i = (-1)^i pf(M with row and
    column i deleted), zero-based, so M times the pfaffian column is 0.
    """
    if not M.is_alternating():
        raise ValueError("pfaffians need an alternating matrix")
    n = M.rows
    if n % 2 == 0:
        raise ValueError("submaximal pfaffians are defined here for odd size")
    out = []
    all_idx = tuple(range(n))
    for i in range(n):
        sub = all_idx[:i] + all_idx[i + 1:]
        p = _pfaffian(M, sub)
        out.append(p if i % 2 == 0 else -p)
    return out


def pfaffian(M: PolyMatrix) -> Polynomial:
    """Pfaffian of an even-size alternating matrix."""
    if not M.is_alternating():
        raise ValueError("pfaffian needs an alternating matrix")
    if M.rows % 2 == 1:
        return M.ring.zero()
    return _pfaffian(M, tuple(range(M.rows)))


# -- grading ----------------------------------------------------------------

def degree_matrix(M: PolyMatrix) -> DegreeMatrix:
    if M.row_shifts is None or M.col_shifts is None:
        raise ValueError("degree matrix needs row and column shifts")
    return DegreeMatrix([[M.col_shifts[j] - M.row_shifts[i]
                          for j in range(M.cols)] for i in range(M.rows)])


def check_graded(M: PolyMatrix) -> bool:
    """Every nonzero entry homogeneous of degree col_shift - row_shift."""
    if M.row_shifts is None or M.col_shifts is None:
        raise ValueError("check_graded needs row and column shifts")
    for i in range(M.rows):
        for j in range(M.cols):
            p = M.entries[i][j]
            if p.is_zero():
                continue
            if not p.is_homogeneous():
                return False
            if p.degree() != M.col_shifts[j] - M.row_shifts[i]:
                return False
    return True

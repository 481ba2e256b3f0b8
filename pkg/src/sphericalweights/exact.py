"""Exact rational matrices and linear solving over Q and Z.

Entries are Python ints or :class:`fractions.Fraction`; fractions with unit
denominator are normalized back to ints so integer-heavy products stay fast.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _norm(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    raise TypeError(f"non-exact matrix entry {x!r} of type {type(x).__name__}")


def parse_rational(s: str):
    return _norm(Fraction(s))


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Matrix:
    """Immutable exact matrix (rows of ints/Fractions).

    Indexing with ``M[i, j]`` is 0-based; :meth:`e` is the 1-based accessor
    matching the usual ``p_{ij}`` notation.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(_norm(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged rows")

    # construction -------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int | None = None) -> "Matrix":
        c = r if c is None else c
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def antidiag_ones(cls, n: int) -> "Matrix":
        return cls([[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        n = sum(b.nrows for b in blocks)
        rows = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[off + i][off + j] = b.rows[i][j]
            off += b.nrows
        return cls(rows)

    @classmethod
    def from_json(cls, data) -> "Matrix":
        return cls([[parse_rational(str(x)) for x in r] for r in data])

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.rows]

    # access -------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def e(self, i: int, j: int):
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self, cols: Sequence[int]) -> "Matrix":
        """Submatrix of the given 0-based columns (all rows)."""
        return Matrix([[r[j] for j in cols] for r in self.rows])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in cols] for i in rows])

    def minor(self, rows: Sequence[int], cols: Sequence[int]):
        """Determinant of the submatrix on 1-based ``rows`` x ``cols`` (in the given order)."""
        return self.submatrix([i - 1 for i in rows], [j - 1 for j in cols]).det()

    def replace(self, updates: dict) -> "Matrix":
        rows = [list(r) for r in self.rows]
        for (i, j), v in updates.items():
            rows[i][j] = v
        return Matrix(rows)

    # arithmetic ---------------------------------------------------------
    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a != 0]
            out.append([sum(a * c[k] for k, a in nz) if nz else 0 for c in cols])
        return Matrix(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.rows])

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def antitranspose(self) -> "Matrix":
        """Transpose with respect to the antidiagonal: ``X#[i,j] = X[n-1-j, n-1-i]``."""
        n, m = self.nrows, self.ncols
        return Matrix([[self.rows[n - 1 - j][m - 1 - i] for j in range(n)] for i in range(m)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"

    def is_upper_unitriangular(self) -> bool:
        n = self.nrows
        return all(
            self.rows[i][j] == (1 if i == j else 0)
            for i in range(n) for j in range(i + 1)
        )

    # determinants and inverses -------------------------------------------
    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return 1
        if n == 1:
            return self.rows[0][0]
        if n == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        a = [[Fraction(x) for x in r] for r in self.rows]
        sign = 1
        result = Fraction(1)
        for k in range(n):
            piv = next((i for i in range(k, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            if piv != k:
                a[k], a[piv] = a[piv], a[k]
                sign = -sign
            pk = a[k][k]
            result *= pk
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    f = a[i][k] / pk
                    ai, ak = a[i], a[k]
                    for j in range(k + 1, n):
                        ai[j] -= f * ak[j]
        return _norm(sign * result)

    def inv(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
             for i, r in enumerate(self.rows)]
        for k in range(n):
            piv = next((i for i in range(k, n) if a[i][k] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[k], a[piv] = a[piv], a[k]
            pk = a[k][k]
            a[k] = [x / pk for x in a[k]]
            for i in range(n):
                if i != k and a[i][k] != 0:
                    f = a[i][k]
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        return Matrix([r[n:] for r in a])


def omega(m: int) -> Matrix:
    """Skew form ``[[0, F_m], [-F_m, 0]]`` of order 2m."""
    n = 2 * m
    rows = [[0] * n for _ in range(n)]
    for i in range(m):
        rows[i][n - 1 - i] = 1
        rows[n - 1 - i][i] = -1
    return Matrix(rows)


# ---------------------------------------------------------------------------
# linear systems

def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q of a list of row vectors."""
    a = [[Fraction(x) for x in r] for r in rows if any(x != 0 for x in r)]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, len(a)):
            if a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def solve_rational(A: Sequence[Sequence], b: Sequence):
    """Solve ``A x = b`` over Q.

    Returns ``(x0, kernel)`` with ``x0`` a particular solution (free variables
    set to zero) and ``kernel`` a basis of the null space, or ``None`` when the
    system is inconsistent.
    """
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    a = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    if any(a[i][ncols] != 0 for i in range(r, nrows)):
        return None
    x0 = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x0[c] = a[i][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -a[i][fcol]
        kernel.append(v)
    return [_norm(x) for x in x0], [[_norm(x) for x in v] for v in kernel]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def column_echelon(A: Sequence[Sequence[int]]):
    """Unimodular column reduction ``A @ U = H`` with H in column echelon form.

    Returns ``(H, U, pivots)`` where ``pivots`` lists (row, col) pivot
    positions of H; columns of H past the last pivot are zero.
    """
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    H = [list(map(int, r)) for r in A]
    U = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def colop(j, k, a, b, c, d):
        # (col_j, col_k) <- (a*col_j + b*col_k, c*col_j + d*col_k)
        for M in (H, U):
            for row in M:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + d * y

    pivots = []
    col = 0
    for i in range(nrows):
        if col >= ncols:
            break
        for k in range(col + 1, ncols):
            if H[i][k] == 0:
                continue
            x, y = H[i][col], H[i][k]
            g, s, t = _ext_gcd(x, y)
            # det [[s, -y/g], [t, x/g]] = 1
            colop(col, k, s, t, -y // g, x // g)
        if H[i][col] != 0:
            if H[i][col] < 0:
                for M in (H, U):
                    for row in M:
                        row[col] = -row[col]
            pivots.append((i, col))
            col += 1
    return H, U, pivots


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int]):
    """All integer solutions of ``A x = b``.

    Returns ``(x0, kernel)`` where every integer solution is ``x0`` plus an
    integer combination of the ``kernel`` vectors (a Z-basis of the integer
    null space), or ``None`` if there is no integer solution.
    """
    nrows = len(A)
    ncols = len(A[0])
    H, U, pivots = column_echelon(A)
    y = [0] * ncols
    pivot_of_row = dict(pivots)
    for i in range(nrows):
        acc = sum(H[i][j] * y[j] for j in range(len(pivots)))
        if i in pivot_of_row:
            c = pivot_of_row[i]
            acc -= H[i][c] * y[c]
            rem = b[i] - acc
            if rem % H[i][c]:
                return None
            y[c] = rem // H[i][c]
        elif acc != b[i]:
            return None
    x0 = [sum(U[r][j] * y[j] for j in range(ncols)) for r in range(ncols)]
    kernel = [[U[r][j] for r in range(ncols)] for j in range(len(pivots), ncols)]
    return x0, kernel

"""Dense exact matrices and linear solving over a :class:`~isotopelab.fields.Field`.

Convention throughout: vectors are rows and matrices act from the right,
``v -> v @ M``, so row i of an operator matrix is the image of the i-th basis
vector.  All arithmetic is exact; there is no floating point anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    DomainError,
    FieldMismatchError,
    SingularMatrixError,
)
from .fields import Field, Scalar


class Matrix:
    """Immutable square matrix of scalars over one field."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(field.scalar(v) for v in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatchError("matrix must be square and nonempty")
        self.field = field
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def scalar_matrix(cls, field: Field, n: int, value) -> "Matrix":
        s = field.scalar(value)
        zero = field.zero
        return cls(field, [[s if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, field: Field, values) -> "Matrix":
        vals = [field.scalar(v) for v in values]
        zero = field.zero
        n = len(vals)
        return cls(field, [[vals[i] if i == j else zero for j in range(n)] for i in range(n)])

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.rows[i]

    def _check_compatible(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError("matrices over different fields")
        if self.n != other.n:
            raise DimensionMismatchError(f"dimension mismatch: {self.n} vs {other.n}")

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_compatible(other)
        n = self.n
        out = []
        for i in range(n):
            ri = self.rows[i]
            out.append(
                [
                    sum((ri[t] * other.rows[t][k] for t in range(n)), self.field.zero)
                    for k in range(n)
                ]
            )
        return Matrix(self.field, out)

    def __rmul__(self, other):
        # scalar * matrix
        if isinstance(other, (int, Fraction, Scalar)):
            s = self.field.scalar(other)
            return Matrix(self.field, [[s * v for v in row] for row in self.rows])
        return NotImplemented

    def scale(self, value) -> "Matrix":
        s = self.field.scalar(value)
        return Matrix(self.field, [[s * v for v in row] for row in self.rows])

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_compatible(other)
        return Matrix(
            self.field,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_compatible(other)
        return Matrix(
            self.field,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self):
        return Matrix(self.field, [[-v for v in row] for row in self.rows])

    def apply(self, coords) -> tuple[Scalar, ...]:
        """Row vector times matrix: image of ``coords`` under this operator."""
        coords = [self.field.scalar(v) for v in coords]
        if len(coords) != self.n:
            raise DimensionMismatchError("vector length does not match matrix size")
        n = self.n
        return tuple(
            sum((coords[t] * self.rows[t][k] for t in range(n)), self.field.zero)
            for k in range(n)
        )

    def transpose(self) -> "Matrix":
        n = self.n
        return Matrix(self.field, [[self.rows[j][i] for j in range(n)] for i in range(n)])

    def det(self) -> Scalar:
        n = self.n
        rows = [list(r) for r in self.rows]
        sign = self.field.one
        acc = self.field.one
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col]), None)
            if piv is None:
                return self.field.zero
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                sign = -sign
            pval = rows[col][col]
            acc = acc * pval
            for r in range(col + 1, n):
                if rows[r][col]:
                    factor = rows[r][col] / pval
                    for c in range(col, n):
                        rows[r][c] = rows[r][c] - factor * rows[col][c]
        return sign * acc

    def is_invertible(self) -> bool:
        return bool(self.det())

    def inverse(self) -> "Matrix":
        n = self.n
        one, zero = self.field.one, self.field.zero
        aug = [
            list(self.rows[i]) + [one if i == j else zero for j in range(n)]
            for i in range(n)
        ]
        row = 0
        for col in range(n):
            piv = next((r for r in range(row, n) if aug[r][col]), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            aug[row], aug[piv] = aug[piv], aug[row]
            inv = aug[row][col].inverse()
            aug[row] = [v * inv for v in aug[row]]
            for r in range(n):
                if r != row and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
            row += 1
        return Matrix(self.field, [r[n:] for r in aug])

    def rank(self) -> int:
        reduced, pivots = rref(self.field, [list(r) for r in self.rows])
        return len(pivots)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.rows) + "]"

    def __repr__(self) -> str:
        return f"Matrix({self}, {self.field})"


def rref(field: Field, rows: list[list[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    width = len(rows[0])
    pivots: list[int] = []
    row = 0
    for col in range(width):
        piv = next((r for r in range(row, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        inv = rows[row][col].inverse()
        rows[row] = [v * inv for v in rows[row]]
        for r in range(len(rows)):
            if r != row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[row])]
        pivots.append(col)
        row += 1
        if row == len(rows):
            break
    return rows[:row], pivots


def row_rank(field: Field, rows) -> int:
    return len(rref(field, [list(r) for r in rows])[1])


@dataclass(frozen=True)
class SolveResult:
    """Solution set of a consistent linear system: a point plus a kernel basis.

    The point is the canonical representative with all free coordinates set
    to zero; the kernel basis vectors are indexed by free column, ascending.
    An empty kernel means the solution is unique.
    """

    point: tuple[Scalar, ...]
    kernel: tuple[tuple[Scalar, ...], ...]

    @property
    def is_unique(self) -> bool:
        return not self.kernel


def solve(field: Field, rows, rhs) -> SolveResult | None:
    """Exact solution of ``x @ rows[i] ... `` -- i.e. of the system
    ``sum_j rows[i][j] * x_j = rhs[i]``.  Returns None when inconsistent.
    """

    rows = [list(r) for r in rows]
    rhs = [field.scalar(v) for v in rhs]
    if len(rows) != len(rhs):
        raise DimensionMismatchError("system rows and right-hand side differ in length")
    if not rows:
        raise DomainError("empty system")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DimensionMismatchError("ragged system")
    aug = [[field.scalar(v) for v in row] + [rhs[i]] for i, row in enumerate(rows)]
    pivots: list[int] = []
    row = 0
    for col in range(width):
        piv = next((r for r in range(row, len(aug)) if aug[r][col]), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [v * inv for v in aug[row]]
        for r in range(len(aug)):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == len(aug):
            break
    for r in range(row, len(aug)):
        if aug[r][width]:
            return None
    zero = field.zero
    point = [zero] * width
    for r, col in enumerate(pivots):
        point[col] = aug[r][width]
    free_cols = [c for c in range(width) if c not in pivots]
    kernel = []
    for fc in free_cols:
        vec = [zero] * width
        vec[fc] = field.one
        for r, col in enumerate(pivots):
            vec[col] = -aug[r][fc]
        kernel.append(tuple(vec))
    return SolveResult(tuple(point), tuple(kernel))


class SpanTracker:
    """Incremental row space over a field, kept in reduced echelon form.

    Deterministic: the resulting basis depends only on the insertion order.
    """

    def __init__(self, field: Field, width: int):
        self.field = field
        self.width = width
        self.rows: list[list[Scalar]] = []
        self.pivots: list[int] = []

    def _reduce(self, vec) -> list[Scalar]:
        vec = [self.field.scalar(v) for v in vec]
        for row, piv in zip(self.rows, self.pivots):
            if vec[piv]:
                f = vec[piv]
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec) -> bool:
        """Insert ``vec``; True if it enlarged the span."""
        red = self._reduce(vec)
        piv = next((i for i, v in enumerate(red) if v), None)
        if piv is None:
            return False
        inv = red[piv].inverse()
        red = [v * inv for v in red]
        for i, row in enumerate(self.rows):
            if row[piv]:
                f = row[piv]
                self.rows[i] = [a - f * b for a, b in zip(row, red)]
        pos = next((i for i, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(pos, red)
        self.pivots.insert(pos, piv)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_rows(self) -> list[tuple[Scalar, ...]]:
        return [tuple(r) for r in self.rows]


def random_invertible(field: Field, n: int, seed: int) -> Matrix:
    """Deterministic pseudo-random invertible matrix (rejection sampling)."""
    if n < 1:
        raise DomainError("dimension must be >= 1")
    rng = random.Random(seed)
    while True:
        if field.p is not None:
            entries = [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
        else:
            entries = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        m = Matrix(field, entries)
        if m.det():
            return m

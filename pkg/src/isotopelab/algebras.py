"""Finite-dimensional algebras given by structure constants, and their
structural predicates: commutativity, unit, Jordan identity, simplicity.

An algebra is a field, a dimension n, and a tensor ``c[i][j][k]`` with
``e_i e_j = sum_k c[i][j][k] e_k``.  Elements are row coordinate vectors.
Everything is immutable and exact.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    DomainError,
    FieldMismatchError,
    SearchBudgetExceededError,
    UnsupportedCharacteristicError,
)
from .fields import Field, Scalar
from .matrices import Matrix, SpanTracker, row_rank, solve


class Algebra:
    """Structure-constant algebra over an exact field."""

    __slots__ = ("field", "n", "table", "names")

    def __init__(self, field: Field, table, names=None):
        tab = tuple(
            tuple(tuple(field.scalar(v) for v in cell) for cell in row) for row in table
        )
        n = len(tab)
        if n == 0:
            raise DimensionMismatchError("dimension must be >= 1")
        for row in tab:
            if len(row) != n or any(len(cell) != n for cell in row):
                raise DimensionMismatchError("structure tensor must be n x n x n")
        self.field = field
        self.n = n
        self.table = tab
        self.names = tuple(names) if names is not None else None
        if self.names is not None and len(self.names) != n:
            raise DimensionMismatchError("need one name per basis element")

    @classmethod
    def from_products(cls, field: Field, n: int, products: dict, names=None) -> "Algebra":
        """Build from a sparse map ``(i, j) -> coordinate vector`` (0-based);
        missing pairs multiply to zero."""
        zero_vec = [field.zero] * n
        table = [[list(zero_vec) for _ in range(n)] for _ in range(n)]
        for (i, j), vec in products.items():
            table[i][j] = [field.scalar(v) for v in vec]
        return cls(field, table, names=names)

    def element(self, coords) -> "Element":
        return Element(self, coords)

    def zero(self) -> "Element":
        return Element(self, [self.field.zero] * self.n)

    def basis_element(self, i: int) -> "Element":
        coords = [self.field.zero] * self.n
        coords[i] = self.field.one
        return Element(self, coords)

    def basis(self) -> list["Element"]:
        return [self.basis_element(i) for i in range(self.n)]

    def mul_coords(self, u, v) -> tuple[Scalar, ...]:
        """Tensor contraction: coordinates of the product of two row vectors."""
        zero = self.field.zero
        out = [zero] * self.n
        for i, ui in enumerate(u):
            if not ui:
                continue
            row_i = self.table[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                coeff = ui * vj
                for k, c in enumerate(row_i[j]):
                    if c:
                        out[k] = out[k] + coeff * c
        return tuple(out)

    def name_of(self, i: int) -> str:
        return self.names[i] if self.names is not None else f"e{i + 1}"

    def relabel(self, perm, names=None) -> "Algebra":
        """Permuted copy: old basis element i becomes new basis element perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise DomainError("relabel requires a permutation of 0..n-1")
        zero = self.field.zero
        table = [[[zero] * self.n for _ in range(self.n)] for _ in range(self.n)]
        for i in range(self.n):
            for j in range(self.n):
                for k, c in enumerate(self.table[i][j]):
                    table[perm[i]][perm[j]][perm[k]] = c
        if names is None and self.names is not None:
            names = [None] * self.n
            for i in range(self.n):
                names[perm[i]] = self.names[i]
        return Algebra(self.field, table, names=names)

    def reduce_mod(self, p: int) -> "Algebra":
        """Reduction of a rational algebra mod an odd prime p (denominators
        must be invertible mod p)."""
        if not self.field.is_rational:
            raise DomainError("reduce_mod applies to rational algebras only")
        gf = Field.gf(p)
        table = [
            [[gf.scalar(c.value) for c in cell] for cell in row] for row in self.table
        ]
        return Algebra(gf, table, names=self.names)

    def has_nonzero_product(self) -> bool:
        return any(
            bool(c) for row in self.table for cell in row for c in cell
        )

    def nonzero_entries(self):
        """Yield ``(i, j, k, scalar)`` for every nonzero tensor entry (0-based)."""
        for i in range(self.n):
            for j in range(self.n):
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        yield i, j, k, c

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.table == other.table

    def __hash__(self):
        return hash((self.field, self.table))

    def __repr__(self) -> str:
        return f"Algebra(dim {self.n} over {self.field})"


class Element:
    """Element of an :class:`Algebra`, held as a row coordinate vector."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        coords = tuple(algebra.field.scalar(v) for v in coords)
        if len(coords) != algebra.n:
            raise DimensionMismatchError("coordinate length does not match the algebra")
        self.algebra = algebra
        self.coords = coords

    def _check_same(self, other: "Element"):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise DomainError("elements belong to different algebras")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_same(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_same(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_same(other)
            return Element(self.algebra, self.algebra.mul_coords(self.coords, other.coords))
        if isinstance(other, (int, Fraction, Scalar)):
            s = self.algebra.field.scalar(other)
            return Element(self.algebra, [s * a for a in self.coords])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            s = self.algebra.field.scalar(other)
            return Element(self.algebra, [s * a for a in self.coords])
        return NotImplemented

    def square(self) -> "Element":
        return self * self

    def apply(self, m: Matrix) -> "Element":
        """Image under a linear operator (row vector times matrix)."""
        if m.field != self.algebra.field:
            raise FieldMismatchError("operator over a different field")
        return Element(self.algebra, m.apply(self.coords))

    def right_mult_matrix(self) -> Matrix:
        """Matrix of x -> x * self; row i is the image of basis element i."""
        A = self.algebra
        zero = A.field.zero
        rows = []
        for i in range(A.n):
            acc = [zero] * A.n
            for j, vj in enumerate(self.coords):
                if vj:
                    for k, c in enumerate(A.table[i][j]):
                        if c:
                            acc[k] = acc[k] + vj * c
            rows.append(acc)
        return Matrix(A.field, rows)

    def left_mult_matrix(self) -> Matrix:
        """Matrix of x -> self * x; row i is the image of basis element i."""
        A = self.algebra
        zero = A.field.zero
        rows = []
        for i in range(A.n):
            acc = [zero] * A.n
            for j, vj in enumerate(self.coords):
                if vj:
                    for k, c in enumerate(A.table[j][i]):
                        if c:
                            acc[k] = acc[k] + vj * c
            rows.append(acc)
        return Matrix(A.field, rows)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((self.algebra, self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.coords) + ")"

    def __repr__(self) -> str:
        return f"Element{self}"


def right_mult_matrix(a: Element) -> Matrix:
    return a.right_mult_matrix()


def left_mult_matrix(a: Element) -> Matrix:
    return a.left_mult_matrix()


def associator(u: Element, v: Element, w: Element) -> Element:
    """(u, v, w) = (uv)w - u(vw)."""
    return (u * v) * w - u * (v * w)


def is_commutative(A: Algebra) -> bool:
    for i in range(A.n):
        for j in range(i + 1, A.n):
            if A.table[i][j] != A.table[j][i]:
                return False
    return True


def find_unit(A: Algebra) -> Element | None:
    """The two-sided unit, found by solving L_u = R_u = I as a linear system."""
    field, n = A.field, A.n
    rows = []
    rhs = []
    one, zero = field.one, field.zero
    for i in range(n):
        for k in range(n):
            rows.append([A.table[i][j][k] for j in range(n)])
            rhs.append(one if i == k else zero)
            rows.append([A.table[j][i][k] for j in range(n)])
            rhs.append(one if i == k else zero)
    sol = solve(field, rows, rhs)
    if sol is None:
        return None
    u = A.element(sol.point)
    ident = Matrix.identity(field, n)
    if u.right_mult_matrix() == ident and u.left_mult_matrix() == ident:
        return u
    return None


def is_jordan(A: Algebra) -> bool:
    """Whether the degree-4 identity ((x x) y) x = (x x) (y x) holds.

    Decided through the complete multilinearization evaluated on basis
    tuples, which is equivalent to the identity in characteristic 0 or
    p >= 5.  Characteristic 3 is rejected rather than silently weakened.
    """
    if not is_commutative(A):
        raise DomainError("Jordan check requires a commutative algebra")
    if A.field.p == 3:
        raise UnsupportedCharacteristicError(
            "degree-4 identity needs characteristic 0 or p >= 5"
        )
    basis = A.basis()

    def f(v: Element, y: Element) -> Element:
        v2 = v * v
        return (v2 * y) * v - v2 * (y * v)

    subsets = [s for r in (1, 2, 3) for s in itertools.combinations((0, 1, 2), r)]
    for idx in itertools.combinations_with_replacement(range(A.n), 3):
        xs = [basis[i] for i in idx]
        for y in basis:
            total = A.zero()
            for s in subsets:
                arg = xs[s[0]]
                for t in s[1:]:
                    arg = arg + xs[t]
                term = f(arg, y)
                total = total + term if (3 - len(s)) % 2 == 0 else total - term
            if not total.is_zero:
                return False
    return True


def _flatten(m: Matrix) -> list[Scalar]:
    return [v for row in m.rows for v in row]


def envelope_dimension(A: Algebra) -> int:
    """Dimension of the associative span-closure of all left and right
    multiplication operators under matrix products.

    The closure is computed by a worklist: every newly independent operator
    is multiplied on both sides by every generator.  The resulting dimension
    does not depend on the generator order.
    """
    gens = []
    for b in A.basis():
        gens.append(b.right_mult_matrix())
        gens.append(b.left_mult_matrix())
    tracker = SpanTracker(A.field, A.n * A.n)
    work = [g for g in gens if tracker.add(_flatten(g))]
    while work:
        m = work.pop(0)
        for g in gens:
            for prod in (m * g, g * m):
                if tracker.add(_flatten(prod)):
                    work.append(prod)
    return tracker.dim


def is_simple_closure(A: Algebra) -> bool:
    """Simplicity after base change to the algebraic closure: nonzero
    multiplication and a full multiplication envelope (dimension n^2)."""
    if not A.has_nonzero_product():
        return False
    return envelope_dimension(A) == A.n * A.n


def _int_tensor(A: Algebra) -> list[list[list[int]]]:
    # residues of a prime-field tensor, for tight enumeration loops
    return [[[c.value for c in cell] for cell in row] for row in A.table]


def _subspace_bases(p: int, n: int, k: int):
    """All k-dimensional subspaces of F_p^n, one reduced-echelon basis each,
    in deterministic order."""
    for pivots in itertools.combinations(range(n), k):
        free_positions = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, n)
            if c not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free_positions)):
            rows = [[0] * n for _ in range(k)]
            for r in range(k):
                rows[r][pivots[r]] = 1
            for (r, c), v in zip(free_positions, values):
                rows[r][c] = v
            yield [list(row) for row in rows]


def _int_reduce(vec: list[int], rows: list[list[int]], pivots: list[int], p: int) -> list[int]:
    vec = [v % p for v in vec]
    for row, piv in zip(rows, pivots):
        if vec[piv]:
            f = vec[piv]
            vec = [(a - f * b) % p for a, b in zip(vec, row)]
    return vec


def ideal_search_exhaustive(A: Algebra) -> list[tuple[Element, ...]]:
    """All proper nonzero ideals of a small prime-field algebra, found by
    enumerating every proper subspace.  Feasible range: n <= 4, p <= 7."""
    p = A.field.p
    if p is None:
        raise SearchBudgetExceededError("exhaustive ideal search needs a finite field")
    if A.n > 4 or p > 7:
        raise SearchBudgetExceededError(
            f"subspace enumeration infeasible for n = {A.n}, p = {p}"
        )
    n = A.n
    tensor = _int_tensor(A)
    found: list[tuple[Element, ...]] = []
    for k in range(1, n):
        for rows in _subspace_bases(p, n, k):
            # normalize to echelon form for membership reduction
            pivots = [next(c for c in range(n) if row[c]) for row in rows]
            closed = True
            for w in rows:
                if not closed:
                    break
                for i in range(n):
                    # w * e_i and e_i * w
                    prod_r = [0] * n
                    prod_l = [0] * n
                    for j in range(n):
                        if w[j]:
                            cell_r = tensor[j][i]
                            cell_l = tensor[i][j]
                            for t in range(n):
                                if cell_r[t]:
                                    prod_r[t] += w[j] * cell_r[t]
                                if cell_l[t]:
                                    prod_l[t] += w[j] * cell_l[t]
                    if any(_int_reduce(prod_r, rows, pivots, p)) or any(
                        _int_reduce(prod_l, rows, pivots, p)
                    ):
                        closed = False
                        break
            if closed:
                found.append(tuple(A.element(row) for row in rows))
    return found


def verify_isomorphism(A: Algebra, B: Algebra, xi: Matrix) -> bool:
    """Whether the invertible map sending basis element i of A to row i of
    ``xi`` (coordinates in B) is multiplicative on all basis pairs."""
    if A.field != B.field or A.n != B.n:
        return False
    if xi.field != A.field or xi.n != A.n:
        return False
    if not xi.is_invertible():
        return False
    for i in range(A.n):
        for j in range(A.n):
            lhs = xi.apply(A.table[i][j])
            rhs = B.mul_coords(xi.row(i), xi.row(j))
            if lhs != rhs:
                return False
    return True


def isomorphism_search(A: Algebra, B: Algebra) -> Matrix | None:
    """Exhaustive scan for an isomorphism between two small prime-field
    algebras, in lexicographic entry order.  Feasible range: n <= 3, p <= 5.

    Returns the first matrix that passes :func:`verify_isomorphism`, or None
    after the full scan.
    """
    if A.field != B.field:
        raise FieldMismatchError("isomorphism search requires one common field")
    p = A.field.p
    if p is None:
        raise SearchBudgetExceededError("isomorphism search needs a finite field")
    if A.n != B.n:
        return None
    n = A.n
    if n > 3 or p > 5:
        raise SearchBudgetExceededError(
            f"matrix enumeration infeasible for n = {n}, p = {p}"
        )
    ta = _int_tensor(A)
    tb = _int_tensor(B)
    for flat in itertools.product(range(p), repeat=n * n):
        xi = [list(flat[r * n : (r + 1) * n]) for r in range(n)]
        if _int_det(xi, p) == 0:
            continue
        if _int_is_multiplicative(xi, ta, tb, p, n):
            m = Matrix(A.field, xi)
            if verify_isomorphism(A, B, m):
                return m
    return None


def _int_det(rows: list[list[int]], p: int) -> int:
    n = len(rows)
    m = [[v % p for v in row] for row in rows]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pval = m[col][col]
        det = det * pval % p
        inv = pow(pval, p - 2, p)
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv % p
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[col])]
    return det % p


def _int_is_multiplicative(xi, ta, tb, p: int, n: int) -> bool:
    for i in range(n):
        xii = xi[i]
        for j in range(n):
            xij = xi[j]
            cell = ta[i][j]
            for k in range(n):
                lhs = sum(cell[t] * xi[t][k] for t in range(n))
                rhs = 0
                for a in range(n):
                    va = xii[a]
                    if va:
                        row = tb[a]
                        for b in range(n):
                            vb = xij[b]
                            if vb and row[b][k]:
                                rhs += va * vb * row[b][k]
                if (lhs - rhs) % p:
                    return False
    return True


def span_rank(elements) -> int:
    """Rank of a family of elements of one algebra."""
    elements = list(elements)
    if not elements:
        return 0
    field = elements[0].algebra.field
    return row_rank(field, [e.coords for e in elements])

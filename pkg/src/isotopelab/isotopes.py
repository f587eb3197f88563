"""Principal and standard isotopes, isotopy verification, and
right-multiplication operator analysis.

A principal isotope ``A^(f, g)`` carries the product ``x * y = (x f)(y g)``
on the same space, for invertible operators f, g.  An isotopy between two
algebras is a triple of invertible maps (phi, psi, xi) with
``(x phi) o (y psi) = (x y) xi``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import Algebra, Element
from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    SingularMatrixError,
)
from .fields import Scalar
from .matrices import Matrix, SolveResult, solve


@dataclass(frozen=True)
class Isotopy:
    """Triple of invertible linear maps; verified against a pair of algebras
    with :func:`verify_isotopy`."""

    phi: Matrix
    psi: Matrix
    xi: Matrix

    def __post_init__(self):
        for m in (self.psi, self.xi):
            if m.field != self.phi.field:
                raise FieldMismatchError("isotopy maps over different fields")
            if m.n != self.phi.n:
                raise DimensionMismatchError("isotopy maps of different sizes")
        for m in (self.phi, self.psi, self.xi):
            if not m.is_invertible():
                raise SingularMatrixError("isotopy maps must be invertible")

    @classmethod
    def isomorphism(cls, xi: Matrix) -> "Isotopy":
        """The isotopy (xi, xi, xi) attached to an isomorphism."""
        return cls(xi, xi, xi)

    @classmethod
    def into_isotope(cls, f: Matrix, g: Matrix) -> "Isotopy":
        """The canonical isotopy A -> A^(f, g), namely (f^-1, g^-1, 1)."""
        ident = Matrix.identity(f.field, f.n)
        return cls(f.inverse(), g.inverse(), ident)

    @classmethod
    def from_isotope(cls, f: Matrix, g: Matrix) -> "Isotopy":
        """The tautological isotopy A^(f, g) -> A, namely (f, g, 1)."""
        ident = Matrix.identity(f.field, f.n)
        return cls(f, g, ident)

    def inverse(self) -> "Isotopy":
        return Isotopy(self.phi.inverse(), self.psi.inverse(), self.xi.inverse())

    def then(self, other: "Isotopy") -> "Isotopy":
        """Composition: this isotopy A -> B followed by ``other`` B -> C."""
        return Isotopy(self.phi * other.phi, self.psi * other.psi, self.xi * other.xi)


@dataclass(frozen=True)
class RMultReport:
    """Right-multiplication operator of an element, with its determinant."""

    element: Element
    matrix: Matrix
    determinant: Scalar
    invertible: bool


def principal_isotope(A: Algebra, f: Matrix, g: Matrix) -> Algebra:
    """The algebra A^(f, g) on the same space: e_i * e_j = (e_i f)(e_j g)."""
    if f.field != A.field or g.field != A.field:
        raise FieldMismatchError("operators over a different field")
    if f.n != A.n or g.n != A.n:
        raise DimensionMismatchError("operator size does not match the algebra")
    if not f.is_invertible() or not g.is_invertible():
        raise SingularMatrixError("isotope operators must be invertible")
    table = [
        [A.mul_coords(f.row(i), g.row(j)) for j in range(A.n)] for i in range(A.n)
    ]
    return Algebra(A.field, table, names=A.names)


def standard_isotope(A: Algebra, f: Matrix) -> Algebra:
    """The standard isotope A^(f, f).  A proportional pair (s f, t f) yields
    an algebra isomorphic to this one via the homothety ((s t)^-1) 1."""
    return principal_isotope(A, f, f)


def verify_isotopy(A: Algebra, B: Algebra, lam: Isotopy) -> bool:
    """Whether (phi, psi, xi) satisfies (x phi) o (y psi) = (x y) xi on all
    basis pairs of A (enough, by bilinearity)."""
    if A.field != B.field or A.n != B.n:
        return False
    if lam.phi.field != A.field or lam.phi.n != A.n:
        return False
    for i in range(A.n):
        pi = lam.phi.row(i)
        for j in range(A.n):
            lhs = B.mul_coords(pi, lam.psi.row(j))
            rhs = lam.xi.apply(A.table[i][j])
            if lhs != rhs:
                return False
    return True


def r_mult_report(a: Element) -> RMultReport:
    m = a.right_mult_matrix()
    d = m.det()
    return RMultReport(element=a, matrix=m, determinant=d, invertible=bool(d))


def right_mult_fibre(A: Algebra, m: Matrix) -> SolveResult | None:
    """Solution set of R_g = m in the unknown element g, or None."""
    if m.field != A.field or m.n != A.n:
        raise DimensionMismatchError("matrix does not match the algebra")
    rows = []
    rhs = []
    for i in range(A.n):
        for k in range(A.n):
            rows.append([A.table[i][j][k] for j in range(A.n)])
            rhs.append(m.rows[i][k])
    return solve(A.field, rows, rhs)


def express_as_right_mult(A: Algebra, m: Matrix) -> Element | None:
    """An element g with R_g = m, when one exists.

    If the fibre is an affine family, the canonical representative with all
    free coordinates zero is returned; :func:`right_mult_fibre` exposes the
    kernel for uniqueness assertions.
    """
    sol = right_mult_fibre(A, m)
    if sol is None:
        return None
    return A.element(sol.point)

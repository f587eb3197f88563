"""Constructors for the named algebra families and normal forms for the
3-dimensional unital family C(alpha, beta, gamma).

Families:

* ``jordan_bilinear``: F1 + V with v w = f(v, w) 1 for a symmetric Gram
  matrix f; ``j2`` is the 2-dimensional symplectic case
  <1, x, y | x^2 = y^2 = 0, xy = 1>.
* ``c_family``: <1, x, y | x^2 = y^2 = 0, xy = a 1 + b x + g y>;
  ``c_rho`` is the symmetric member C(r, r, r).
* ``c2``: the non-unital algebra <a, b, c | a^2 = b, ab = a, ac = c,
  b^2 = c^2 = 0, bc = b>.
* ``c3``: the cyclic algebra <x, y, z | squares 0, xy = z, yz = x, zx = y>.
* ``g_n``: dimension n + 1, with an n-dimensional zero-multiplication
  subalgebra and one idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import Algebra, Element, find_unit, is_commutative, span_rank, verify_isomorphism
from .certificates import Certificate
from .errors import (
    DependentNilsError,
    DimensionMismatchError,
    DomainError,
    NonSimpleError,
    NotUnitalError,
)
from .fields import Field, Scalar
from .matrices import Matrix, solve


def jordan_bilinear(field: Field, gram) -> Algebra:
    """Unital algebra F1 + V of a symmetric bilinear form given by its Gram
    matrix: (a 1 + x)(b 1 + y) = (a b + f(x, y)) 1 + a y + b x."""
    rows = [[field.scalar(v) for v in row] for row in gram]
    m = len(rows)
    if m == 0 or any(len(r) != m for r in rows):
        raise DimensionMismatchError("Gram matrix must be square and nonempty")
    for i in range(m):
        for j in range(m):
            if rows[i][j] != rows[j][i]:
                raise DomainError("Gram matrix must be symmetric")
    n = m + 1
    zero, one = field.zero, field.one
    products = {}
    products[(0, 0)] = [one] + [zero] * m
    for i in range(m):
        vec = [zero] * n
        vec[i + 1] = one
        products[(0, i + 1)] = vec
        products[(i + 1, 0)] = list(vec)
        for j in range(m):
            products[(i + 1, j + 1)] = [rows[i][j]] + [zero] * m
    names = ["1"] + [f"v{i + 1}" for i in range(m)]
    return Algebra.from_products(field, n, products, names=names)


def j2(field: Field) -> Algebra:
    """<1, x, y | x^2 = y^2 = 0, xy = yx = 1>."""
    A = jordan_bilinear(field, [[0, 1], [1, 0]])
    return Algebra(field, A.table, names=("1", "x", "y"))


def c_family(field: Field, alpha, beta, gamma) -> Algebra:
    """<1, x, y | x^2 = y^2 = 0, xy = yx = alpha 1 + beta x + gamma y>."""
    a = field.scalar(alpha)
    b = field.scalar(beta)
    g = field.scalar(gamma)
    one, zero = field.one, field.zero
    products = {
        (0, 0): [one, zero, zero],
        (0, 1): [zero, one, zero],
        (1, 0): [zero, one, zero],
        (0, 2): [zero, zero, one],
        (2, 0): [zero, zero, one],
        (1, 2): [a, b, g],
        (2, 1): [a, b, g],
    }
    return Algebra.from_products(field, 3, products, names=("1", "x", "y"))


def c_rho(field: Field, rho) -> Algebra:
    r = field.scalar(rho)
    return c_family(field, r, r, r)


def c2(field: Field) -> Algebra:
    """<a, b, c | a^2 = b, ab = a, ac = c, b^2 = c^2 = 0, bc = b>, commutative."""
    one, zero = field.one, field.zero
    e = lambda i: [one if k == i else zero for k in range(3)]
    products = {
        (0, 0): e(1),
        (0, 1): e(0),
        (1, 0): e(0),
        (0, 2): e(2),
        (2, 0): e(2),
        (1, 2): e(1),
        (2, 1): e(1),
    }
    return Algebra.from_products(field, 3, products, names=("a", "b", "c"))


def c3(field: Field) -> Algebra:
    """<x, y, z | x^2 = y^2 = z^2 = 0, xy = z, yz = x, zx = y>, commutative."""
    one, zero = field.one, field.zero
    e = lambda i: [one if k == i else zero for k in range(3)]
    products = {
        (0, 1): e(2),
        (1, 0): e(2),
        (1, 2): e(0),
        (2, 1): e(0),
        (2, 0): e(1),
        (0, 2): e(1),
    }
    return Algebra.from_products(field, 3, products, names=("x", "y", "z"))


def g_n(field: Field, n: int) -> Algebra:
    """Commutative algebra on (x_1, ..., x_n, e): the x_i span a
    zero-multiplication subalgebra, e^2 = e, x_1 e = e + x_2,
    x_i e = x_i + x_{i+1} for 2 <= i <= n - 1, and x_n e = x_n + x_1."""
    if n < 2:
        raise DomainError("the family needs n >= 2")
    dim = n + 1
    one, zero = field.one, field.zero

    def vec(*idx):
        v = [zero] * dim
        for i in idx:
            v[i] = v[i] + one
        return v

    products = {(n, n): vec(n)}
    products[(0, n)] = vec(n, 1)
    for i in range(1, n - 1):
        products[(i, n)] = vec(i, i + 1)
    products[(n - 1, n)] = vec(n - 1, 0)
    for i in range(n):
        products[(n, i)] = list(products[(i, n)])
    names = tuple(f"x{i + 1}" for i in range(n)) + ("e",)
    return Algebra.from_products(field, dim, products, names=names)


@dataclass(frozen=True)
class CatalogSpec:
    """Configuration for :func:`construct`.

    ``family`` is one of Jn, J2, Cabg, Crho, C2, C3, Gn; ``gram`` (Jn),
    ``abg`` (Cabg), ``rho`` (Crho) and ``n`` (Gn) carry the parameters.
    """

    family: str
    field: Field
    gram: tuple | None = None
    abg: tuple | None = None
    rho: object = None
    n: int | None = None


def construct(spec: CatalogSpec) -> Algebra:
    fam = spec.family
    if fam == "Jn":
        if spec.gram is None:
            raise DomainError("Jn needs a Gram matrix")
        return jordan_bilinear(spec.field, spec.gram)
    if fam == "J2":
        return j2(spec.field)
    if fam == "Cabg":
        if spec.abg is None or len(spec.abg) != 3:
            raise DomainError("Cabg needs the parameter triple (alpha, beta, gamma)")
        return c_family(spec.field, *spec.abg)
    if fam == "Crho":
        if spec.rho is None:
            raise DomainError("Crho needs the parameter rho")
        return c_rho(spec.field, spec.rho)
    if fam == "C2":
        return c2(spec.field)
    if fam == "C3":
        return c3(spec.field)
    if fam == "Gn":
        if spec.n is None:
            raise DomainError("Gn needs the parameter n")
        return g_n(spec.field, spec.n)
    raise DomainError(f"unknown family {fam!r}")


def catalog_algebras(field: Field) -> dict[str, Algebra]:
    """The named small algebras used throughout the test pipelines."""
    return {
        "J2": j2(field),
        "C2": c2(field),
        "C3": c3(field),
        "C(-2)": c_rho(field, -2),
        "C(1)": c_rho(field, 1),
        "C(1,1,0)": c_family(field, 1, 1, 0),
        "G2": g_n(field, 2),
        "G3": g_n(field, 3),
    }


def to_canonical_C(A: Algebra, x: Element, y: Element):
    """Read a unital commutative 3-dimensional algebra in the basis
    (1, x, y) for two independent index-2 nil elements x, y.

    Returns (alpha, beta, gamma, S) where S has rows (1, x, y) in the
    coordinates of A, so S maps canonical coordinates into A.
    """
    if A.n != 3:
        raise DomainError("canonical C form needs dimension 3")
    if not is_commutative(A):
        raise DomainError("canonical C form needs a commutative algebra")
    unit = find_unit(A)
    if unit is None:
        raise NotUnitalError("the algebra has no unit")
    for v in (x, y):
        if v.is_zero or not v.square().is_zero:
            raise DomainError(f"{v} is not a nil element of index 2")
    if span_rank([x, y]) != 2:
        raise DependentNilsError("the nil elements are linearly dependent")
    if span_rank([unit, x, y]) != 3:
        raise DependentNilsError("the unit lies in the span of the nil elements")
    S = Matrix(A.field, [unit.coords, x.coords, y.coords])
    xy = x * y
    sol = solve(A.field, [list(r) for r in S.transpose().rows], list(xy.coords))
    alpha, beta, gamma = sol.point
    return alpha, beta, gamma, S


@dataclass(frozen=True)
class CanonicalizationResult:
    """Outcome of :func:`canonicalize_C`: the target normal form, its
    parameters, the verified base change, and the certificate."""

    certificate: Certificate
    source: Algebra
    target: Algebra
    kind: str
    params: tuple
    change: Matrix

    @property
    def verdict(self) -> bool:
        return self.certificate.verdict


def canonicalize_C(alpha: Scalar, beta: Scalar, gamma: Scalar) -> CanonicalizationResult:
    """Normal form of C(alpha, beta, gamma), alpha != 0, by basis rescaling:

    * beta, gamma both nonzero: C(rho) with rho = beta gamma / alpha;
    * exactly one of beta, gamma zero: C(1, 1, 0), swapping x and y first
      when needed;
    * beta = gamma = 0: C(1, 0, 0), via a square root of alpha
      (SquareRootUnavailableError when alpha is not a square).

    The returned base change maps target coordinates into the source and is
    verified by :func:`verify_isomorphism`.
    """
    field = alpha.field
    beta = field.scalar(beta)
    gamma = field.scalar(gamma)
    if not alpha:
        raise NonSimpleError("alpha = 0: the span of x and y is a proper ideal")
    source = c_family(field, alpha, beta, gamma)
    cert = Certificate(f"normal form of C({alpha}, {beta}, {gamma})")
    if beta and gamma:
        rho = beta * gamma / alpha
        target = c_rho(field, rho)
        kind, params = "Crho", (rho,)
        change = Matrix.diagonal(field, [field.one, beta / alpha, gamma / alpha])
        cert.check(f"rho = beta gamma / alpha = {rho}", True, actual=rho)
    elif not beta and not gamma:
        omega = field.sqrt(alpha)
        target = c_family(field, 1, 0, 0)
        kind, params = "C(1,0,0)", (field.one, field.zero, field.zero)
        change = Matrix.diagonal(field, [field.one, omega.inverse(), omega.inverse()])
        cert.expect_equal("omega^2 = alpha", alpha, omega * omega)
    else:
        target = c_family(field, 1, 1, 0)
        kind, params = "C(1,1,0)", (field.one, field.one, field.zero)
        if beta:
            change = Matrix.diagonal(field, [field.one, beta / alpha, beta.inverse()])
        else:
            swap = Matrix(
                field,
                [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
            )
            cert.check("swap the two nil basis elements", True)
            change = (
                Matrix.diagonal(field, [field.one, gamma / alpha, gamma.inverse()])
                * swap
            )
    cert.check(
        "base change to the normal form is an isomorphism",
        verify_isomorphism(target, source, change),
        actual=change,
    )
    return CanonicalizationResult(
        certificate=cert,
        source=source,
        target=target,
        kind=kind,
        params=params,
        change=change,
    )

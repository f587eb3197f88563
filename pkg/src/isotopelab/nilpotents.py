"""Index-2 nil elements and nil-rank: the dimension of the span of the set
of nonzero elements squaring to zero.

Two routes are provided.  The exact route covers the C(alpha, beta, gamma)
family, where eliminating the quadratic system for a nil element
``l 1 + s x + t y`` gives a closed criterion: a nil element with l != 0
exists iff beta gamma = -2 alpha (alpha != 0), with witness
``1 - x / gamma - y / beta``.  The brute-force route enumerates a prime
field; it carries a closure caveat because rational or prime-field points
can miss nil elements that only appear over the algebraic closure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebras import Algebra, Element, _int_tensor
from .catalog import c_family
from .errors import DomainError, SearchBudgetExceededError
from .fields import Scalar
from .matrices import SpanTracker

BRUTE_FORCE_BUDGET = 10**6

METHOD_EXACT_C = "exact-cfamily"
METHOD_BRUTE_FP = "bruteforce-fp"


@dataclass(frozen=True)
class NilReport:
    """Nil-rank with independent witnesses, each squaring to zero.

    ``closure_caveat`` is True when the result came from enumerating a
    field that is not algebraically closed.
    """

    rank: int
    witnesses: tuple[Element, ...]
    method: str
    closure_caveat: bool


def is_nil_index2(a: Element) -> bool:
    """Nonzero with zero square."""
    return not a.is_zero and a.square().is_zero


def nil_set_bruteforce(A: Algebra) -> list[Element]:
    """Every nonzero element with zero square, in lexicographic coordinate
    order.  Requires a prime field with p^n <= 10^6."""
    p = A.field.p
    if p is None:
        raise DomainError("brute-force nil enumeration needs a finite field")
    if p**A.n > BRUTE_FORCE_BUDGET:
        raise SearchBudgetExceededError(
            f"nil enumeration infeasible: {p}^{A.n} > {BRUTE_FORCE_BUDGET}"
        )
    n = A.n
    tensor = _int_tensor(A)
    out = []
    for vec in itertools.product(range(p), repeat=n):
        if not any(vec):
            continue
        sq = [0] * n
        for i in range(n):
            vi = vec[i]
            if vi:
                ti = tensor[i]
                for j in range(n):
                    vj = vec[j]
                    if vj:
                        row = ti[j]
                        c = vi * vj
                        for k in range(n):
                            if row[k]:
                                sq[k] += c * row[k]
        if all(s % p == 0 for s in sq):
            out.append(A.element(vec))
    return out


def nil_rank_bruteforce(A: Algebra) -> NilReport:
    """Rank of the span of the brute-force nil set, with witnesses extracted
    greedily in scan order."""
    nils = nil_set_bruteforce(A)
    tracker = SpanTracker(A.field, A.n)
    witnesses = []
    for el in nils:
        if tracker.add(el.coords):
            witnesses.append(el)
    return NilReport(
        rank=tracker.dim,
        witnesses=tuple(witnesses),
        method=METHOD_BRUTE_FP,
        closure_caveat=True,
    )


def nil_rank_exact_C(alpha: Scalar, beta, gamma) -> NilReport:
    """Closed-form nil-rank of C(alpha, beta, gamma), alpha != 0.

    Rank 3 iff beta gamma = -2 alpha, with the explicit third witness
    ``1 - x / gamma - y / beta``; rank 2 (witnesses x, y) otherwise.  The
    criterion is field-independent, so there is no closure caveat.
    """
    field = alpha.field
    beta = field.scalar(beta)
    gamma = field.scalar(gamma)
    if not alpha:
        raise DomainError("the exact nil-rank form needs alpha != 0")
    A = c_family(field, alpha, beta, gamma)
    x = A.basis_element(1)
    y = A.basis_element(2)
    if beta * gamma == -2 * alpha:
        third = A.element([field.one, -gamma.inverse(), -beta.inverse()])
        witnesses = (x, y, third)
        rank = 3
    else:
        witnesses = (x, y)
        rank = 2
    return NilReport(
        rank=rank, witnesses=witnesses, method=METHOD_EXACT_C, closure_caveat=False
    )


def _match_c_params(A: Algebra):
    """Parameters (alpha, beta, gamma) when the tensor is literally a
    C(alpha, beta, gamma) presentation in its given basis, else None."""
    if A.n != 3:
        return None
    cell = A.table[1][2]
    if A == c_family(A.field, cell[0], cell[1], cell[2]):
        return cell[0], cell[1], cell[2]
    return None


def nil_rank(A: Algebra, p: int | None = None) -> NilReport:
    """Dispatching front end used by the command line.

    Prime-field algebras are enumerated directly.  Rational algebras in
    literal C(alpha, beta, gamma) form use the exact criterion; any other
    rational algebra is reduced mod an odd prime (p, or the smallest
    feasible one) and enumerated, with the closure caveat set.
    """
    if A.field.p is not None:
        return nil_rank_bruteforce(A)
    params = _match_c_params(A)
    if params is not None and params[0]:
        return nil_rank_exact_C(*params)
    if p is None:
        p = 3
        while not _reducible(A, p):
            p += 2
    elif not _reducible(A, p):
        raise DomainError(f"structure constants are not reducible mod {p}")
    return nil_rank_bruteforce(A.reduce_mod(p))


def _reducible(A: Algebra, p: int) -> bool:
    from .fields import _is_prime

    if p == 2 or not _is_prime(p):
        return False
    return all(
        c.value.denominator % p != 0 for _, _, _, c in A.nonzero_entries()
    )

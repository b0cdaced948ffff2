"""Jordan chains and the generalized Weyr characteristic of a pencil.

The characteristic is computed two independent ways: directly from kernel
dimensions of stacked chain systems, and from the invariant data via the
closed formula; agreement of the two routes is the module's main
cross-check.

Everything here is about right chains; left chains are right chains of
the transposed pencil, so use :func:`pencilkit.pencil.pencil_transpose`
and these same functions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import linalg
from .partitions import Partition, add, conjugate
from .pencil import INFINITY, Eigenvalue, KroneckerInvariants, Pencil, eval_at
from .ratpoly import linear_multiplicity


def _chain_parts(a: Pencil, lam: Eigenvalue):
    # diagonal / subdiagonal blocks of the chain recurrence at lam
    if lam == INFINITY:
        return a.a1, a.a0
    return eval_at(a, lam), a.a1


def is_jordan_chain(a: Pencil, lam: Eigenvalue, vectors: Sequence[Sequence]) -> bool:
    """Whether ``vectors`` (ordered from deepest to bottom, the bottom
    last) is a right Jordan chain of the pencil at ``lam``: the bottom is
    a nonzero kernel vector of the diagonal part, and each deeper vector
    maps to the negated subdiagonal image of its predecessor."""
    if not vectors:
        return False
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    if any(len(v) != a.q for v in vecs):
        raise ValueError("chain vectors must have length q")
    diag, sub = _chain_parts(a, lam)

    def apply(m, v):
        return tuple(sum(c * x for c, x in zip(row, v)) for row in m)

    xs = list(reversed(vecs))  # xs[i] is the i-th vector above the bottom
    if not any(xs[0]):
        return False
    if any(apply(diag, xs[0])):
        return False
    for i in range(1, len(xs)):
        want = tuple(-y for y in apply(sub, xs[i - 1]))
        if apply(diag, xs[i]) != want:
            return False
    return True


def _stacked_rows(diag, sub, p: int, q: int, depth: int) -> list[list[Fraction]]:
    # block columns hold (x_{depth-1}, ..., x_0); block row i couples
    # column i (diagonal part) with column i+1 (subdiagonal part)
    rows = []
    for i in range(depth):
        for r in range(p):
            row = [Fraction(0)] * (q * depth)
            row[i * q : (i + 1) * q] = diag[r]
            if i + 1 < depth:
                start = (i + 1) * q
                for c in range(q):
                    row[start + c] = sub[r][c]
            rows.append(row)
    return rows


def l_space_dim(a: Pencil, lam: Eigenvalue, ell: int) -> int:
    """Dimension of the span of all vectors of all Jordan chains at
    ``lam`` of length at most ``ell``.

    Realized as the projection of the stacked chain kernel onto its top
    block: allowing a zero bottom vector embeds every shorter chain by
    padding, and prefixes of chains are chains, so each chain vector shows
    up as the top of some padded length-``ell`` stack.  The projection
    dimension is ``q - rank(full) + rank(without the top block)``.
    """
    if ell < 0:
        raise ValueError("chain length bound must be nonnegative")
    if ell == 0:
        return 0
    diag, sub = _chain_parts(a, lam)
    rows = _stacked_rows(diag, sub, a.p, a.q, ell)
    full = linalg.rank(rows)
    rest = linalg.rank([row[a.q :] for row in rows]) if ell > 1 else 0
    return a.q - full + rest


def weyr_direct(a: Pencil, lam: Eigenvalue) -> Partition:
    """Generalized Weyr characteristic at ``lam`` from kernel dimensions:
    successive differences of the chain-span dimensions."""
    out = []
    prev = 0
    for i in range(1, a.q + 1):
        cur = l_space_dim(a, lam, i)
        step = cur - prev
        if step == 0:
            break
        out.append(step)
        prev = cur
    assert all(x >= y for x, y in zip(out, out[1:])), "quotient dimensions must be nonincreasing"
    return Partition(tuple(out))


def partial_multiplicities(inv: KroneckerInvariants, lam: Eigenvalue) -> tuple:
    """Exponent sequence of ``lam`` down the invariant factor chain,
    largest first (the top factor carries the largest exponent)."""
    if lam == INFINITY:
        vals = [h.inf_exp for h in reversed(inv.hif)]
    else:
        vals = [linear_multiplicity(h.finite, lam) for h in reversed(inv.hif)]
    assert all(x >= y for x, y in zip(vals, vals[1:]))
    return tuple(vals)


def finite_weyr(inv: KroneckerInvariants, lam: Eigenvalue) -> Partition:
    """Regular-part contribution: conjugate of the partial multiplicities."""
    return conjugate(partial_multiplicities(inv, lam))


def weyr_from_invariants(inv: KroneckerInvariants, lam: Eigenvalue) -> Partition:
    """Closed formula: the regular-part conjugate plus the headed conjugate
    of the column minimal indices (head ``q - rank`` at position one)."""
    reg = finite_weyr(inv, lam)
    if inv.q == inv.rank:
        return reg
    tail = conjugate(inv.cmi)
    return add(reg, Partition((inv.q - inv.rank, *tail.parts)))

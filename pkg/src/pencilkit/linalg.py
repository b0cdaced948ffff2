"""Exact linear algebra kernels shared by the pencil routines.

Constant-matrix ranks use fraction-free (Bareiss) elimination on
denominator-cleared integer rows, which keeps every intermediate value a
minor of the input and so bounds coefficient growth.  Polynomial matrices
get their invariant factors from an elementary-operation Smith reduction
over the rational polynomial ring.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .ratpoly import (
    Poly,
    poly_add,
    poly_degree,
    poly_divides,
    poly_divmod,
    poly_monic,
    poly_mul,
    poly_sub,
)


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        den = 1
        for x in fracs:
            den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(x * den) for x in fracs])
    return out


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix with rational entries, by Bareiss elimination."""
    if not rows or not rows[0]:
        return 0
    m = _integer_rows(rows)
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            # every row below the pivot must be rescaled, zero pivot-column
            # entry or not, to keep the Bareiss divisions exact
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        r += 1
    return r


def nullity(rows: Sequence[Sequence], ncols: int) -> int:
    return ncols - rank(rows)


def _min_degree_entry(m: list[list[Poly]], k: int, p: int, q: int):
    best = None
    best_deg = -1
    for i in range(k, p):
        for j in range(k, q):
            if m[i][j]:
                d = poly_degree(m[i][j])
                if best is None or d < best_deg:
                    best, best_deg = (i, j), d
    return best


def smith_invariant_factors(mat: Sequence[Sequence[Poly]]) -> list[Poly]:
    """Nonzero diagonal of the Smith normal form over the rational
    polynomial ring, monic and in ascending divisibility order.

    The length of the result is the rank of the matrix over the field of
    rational functions.
    """
    if not mat or not mat[0]:
        return []
    m = [list(row) for row in mat]
    p, q = len(m), len(m[0])
    diag: list[Poly] = []
    for k in range(min(p, q)):
        pos = _min_degree_entry(m, k, p, q)
        if pos is None:
            break
        while True:
            i0, j0 = pos
            if i0 != k:
                m[k], m[i0] = m[i0], m[k]
            if j0 != k:
                for row in m:
                    row[k], row[j0] = row[j0], row[k]
            pivot = m[k][k]
            # sweep the pivot column, then the pivot row; a nonzero
            # remainder strictly drops the minimal degree, so this loops
            # only finitely often
            dirty = False
            for i in range(k + 1, p):
                if m[i][k]:
                    quo, _ = poly_divmod(m[i][k], pivot)
                    if quo:
                        for j in range(k, q):
                            m[i][j] = poly_sub(m[i][j], poly_mul(quo, m[k][j]))
                    if m[i][k]:
                        dirty = True
            if not dirty:
                for j in range(k + 1, q):
                    if m[k][j]:
                        quo, _ = poly_divmod(m[k][j], pivot)
                        if quo:
                            for i in range(k, p):
                                m[i][j] = poly_sub(m[i][j], poly_mul(quo, m[i][k]))
                        if m[k][j]:
                            dirty = True
            if dirty:
                pos = _min_degree_entry(m, k, p, q)
                continue
            # divisibility fix-up: fold an offending row into the pivot row
            offender = None
            for i in range(k + 1, p):
                for j in range(k + 1, q):
                    if m[i][j] and poly_divmod(m[i][j], pivot)[1]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(k, q):
                m[k][j] = poly_add(m[k][j], m[offender][j])
            pos = _min_degree_entry(m, k, p, q)
        diag.append(poly_monic(m[k][k]))
    for a, b in zip(diag, diag[1:]):
        assert poly_divides(a, b), "invariant factor chain broken"
    return diag

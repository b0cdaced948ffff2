"""Matrix pencils over exact rationals.

A pencil is the degree-one polynomial matrix ``A0 + s*A1``.  This module
builds pencils from complete strict-equivalence invariant data, extracts
that data back out (finite invariant factors, infinite exponents, column
and row minimal indices), and provides the seeded random generators used
for fuzzing.  The eigenvalue ``infinity`` is spelled ``math.inf``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import linalg
from .partitions import Chain
from .ratpoly import (
    HomogPoly,
    Poly,
    format_poly,
    hif_degree,
    hif_divides,
    hif_from_json,
    hif_to_json,
    poly,
    poly_from_roots,
    rational_roots,
)

INFINITY = math.inf
Eigenvalue = Union[Fraction, float]  # a rational number or INFINITY

Matrix = tuple  # tuple[tuple[Fraction, ...], ...]


def matrix(rows: Sequence[Sequence]) -> Matrix:
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if not out or not out[0]:
        raise ValueError("matrices must have at least one row and column")
    if len({len(r) for r in out}) != 1:
        raise ValueError("ragged matrix")
    return out


def zeros(p: int, q: int) -> Matrix:
    return tuple(tuple(Fraction(0) for _ in range(q)) for _ in range(p))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


@dataclass(frozen=True)
class Pencil:
    """The pencil ``a0 + s*a1`` with ``p x q`` rational matrices."""

    a0: Matrix
    a1: Matrix

    def __post_init__(self):
        object.__setattr__(self, "a0", matrix(self.a0))
        object.__setattr__(self, "a1", matrix(self.a1))
        if (len(self.a0), len(self.a0[0])) != (len(self.a1), len(self.a1[0])):
            raise ValueError("constant and degree-one parts disagree in shape")

    @property
    def p(self) -> int:
        return len(self.a0)

    @property
    def q(self) -> int:
        return len(self.a0[0])


def eval_at(a: Pencil, lam: Eigenvalue) -> Matrix:
    """``a0 + lam*a1`` for finite ``lam``; the degree-one part at infinity."""
    if lam == INFINITY:
        return a.a1
    lam = Fraction(lam)
    return tuple(
        tuple(x + lam * y for x, y in zip(r0, r1)) for r0, r1 in zip(a.a0, a.a1)
    )


def pencil_add(a: Pencil, b: Pencil) -> Pencil:
    if (a.p, a.q) != (b.p, b.q):
        raise ValueError("pencil shapes differ")
    return Pencil(mat_add(a.a0, b.a0), mat_add(a.a1, b.a1))


def pencil_transpose(a: Pencil) -> Pencil:
    return Pencil(mat_transpose(a.a0), mat_transpose(a.a1))


def poly_matrix(a: Pencil) -> list[list[Poly]]:
    return [
        [poly((x, y)) for x, y in zip(r0, r1)] for r0, r1 in zip(a.a0, a.a1)
    ]


def reversed_poly_matrix(a: Pencil) -> list[list[Poly]]:
    """Coefficients swapped: the pencil ``a1 + t*a0`` in the variable t."""
    return [
        [poly((y, x)) for x, y in zip(r0, r1)] for r0, r1 in zip(a.a0, a.a1)
    ]


def normal_rank(a: Pencil) -> int:
    """Rank over the rational-function field.

    The rank of ``a(lam)`` can only drop below the normal rank at finitely
    many points (at most ``min(p, q)`` of them), so the maximum over
    ``min(p, q) + 4`` distinct sample points is exact.
    """
    best = 0
    for k in range(min(a.p, a.q) + 4):
        best = max(best, linalg.rank(eval_at(a, Fraction(k))))
        if best == min(a.p, a.q):
            break
    return best


@dataclass(frozen=True)
class KroneckerInvariants:
    """Complete strict-equivalence class data of a ``p x q`` pencil.

    ``hif`` is the divisibility-increasing chain of homogeneous invariant
    factors; ``cmi`` and ``rmi`` are the column and row minimal index
    chains, of lengths ``q - rank`` and ``p - rank``.  The degree sum of
    ``hif`` plus the totals of both chains equals the rank.
    """

    p: int
    q: int
    rank: int
    hif: tuple
    cmi: Chain
    rmi: Chain

    def __post_init__(self):
        object.__setattr__(self, "hif", tuple(self.hif))
        if not (0 <= self.rank <= min(self.p, self.q)):
            raise ValueError("rank out of range")
        if len(self.hif) != self.rank:
            raise ValueError("need exactly one homogeneous factor per rank unit")
        if any(h.is_zero for h in self.hif):
            raise ValueError("homogeneous invariant factors must be nonzero")
        for a, b in zip(self.hif, self.hif[1:]):
            if not hif_divides(a, b):
                raise ValueError("homogeneous factors must form a divisibility chain")
        if len(self.cmi) != self.q - self.rank:
            raise ValueError("column minimal index count must be q - rank")
        if len(self.rmi) != self.p - self.rank:
            raise ValueError("row minimal index count must be p - rank")
        total = sum(hif_degree(h) for h in self.hif) + self.cmi.total() + self.rmi.total()
        if total != self.rank:
            raise ValueError("degree and minimal-index totals must equal the rank")


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------


def _jordan_block(lam: Fraction, k: int) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    a0 = [[Fraction(0)] * k for _ in range(k)]
    a1 = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        a0[i][i] = -lam
        a1[i][i] = Fraction(1)
        if i + 1 < k:
            a0[i][i + 1] = Fraction(1)
    return a0, a1


def _infinite_block(k: int):
    a0 = [[Fraction(0)] * k for _ in range(k)]
    a1 = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        a0[i][i] = Fraction(1)
        if i + 1 < k:
            a1[i][i + 1] = Fraction(1)
    return a0, a1


def _column_block(k: int):
    # k x (k+1), s on the diagonal and 1 on the superdiagonal
    a0 = [[Fraction(0)] * (k + 1) for _ in range(k)]
    a1 = [[Fraction(0)] * (k + 1) for _ in range(k)]
    for i in range(k):
        a1[i][i] = Fraction(1)
        a0[i][i + 1] = Fraction(1)
    return a0, a1


def canonical_pencil(inv: KroneckerInvariants) -> Pencil:
    """Block-diagonal canonical pencil realizing the given invariants.

    Every finite part must split into rational linear factors; an
    irreducible cofactor is reported in the raised error.  Zero minimal
    indices contribute empty blocks, i.e. plain zero columns or rows.
    """
    blocks: list[tuple[list[list[Fraction]], list[list[Fraction]], int, int]] = []
    for h in inv.hif:
        roots, remainder = rational_roots(h.finite)
        if len(remainder) > 1:
            raise ValueError(
                "finite part does not split over the rationals; "
                f"irreducible cofactor {format_poly(remainder)}"
            )
        for lam in sorted(roots):
            k = roots[lam]
            a0, a1 = _jordan_block(lam, k)
            blocks.append((a0, a1, k, k))
        if h.inf_exp:
            a0, a1 = _infinite_block(h.inf_exp)
            blocks.append((a0, a1, h.inf_exp, h.inf_exp))
    for c in inv.cmi:
        a0, a1 = _column_block(c)
        blocks.append((a0, a1, c, c + 1))
    for u in inv.rmi:
        a0, a1 = _column_block(u)
        a0t = [list(col) for col in zip(*a0)] if a0 else []
        a1t = [list(col) for col in zip(*a1)] if a1 else []
        blocks.append((a0t, a1t, u + 1, u))
    a0 = [[Fraction(0)] * inv.q for _ in range(inv.p)]
    a1 = [[Fraction(0)] * inv.q for _ in range(inv.p)]
    row = col = 0
    for b0, b1, nrow, ncol in blocks:
        for i in range(nrow):
            for j in range(ncol):
                a0[row + i][col + j] = b0[i][j]
                a1[row + i][col + j] = b1[i][j]
        row += nrow
        col += ncol
    assert row == inv.p and col == inv.q, "block sizes must tile the pencil"
    return Pencil(a0, a1)


# ---------------------------------------------------------------------------
# invariant extraction
# ---------------------------------------------------------------------------


def _t_valuation(p: Poly) -> int:
    for i, c in enumerate(p):
        if c != 0:
            return i
    raise ValueError("valuation of the zero polynomial")


def _minimal_index_chain(a: Pencil, count: int) -> Chain:
    """Column minimal indices via kernel dimensions of degree blow-ups.

    A polynomial kernel vector of degree <= k stacks into the right kernel
    of the block matrix with the constant part on the block diagonal and
    the degree-one part on the subdiagonal.  With ``mu_k`` that kernel's
    dimension, the second difference of ``mu`` counts the minimal indices
    equal to ``k`` (a degree-``c`` basis vector contributes ``k + 1 - c``
    independent shifts to ``mu_k``).
    """
    if count == 0:
        return Chain(())
    found: list[int] = []
    mu_prev2 = mu_prev = 0
    k = 0
    while len(found) < count:
        rows = []
        for block_row in range(k + 2):
            for i in range(a.p):
                row = [Fraction(0)] * (a.q * (k + 1))
                if block_row <= k:
                    row[block_row * a.q : (block_row + 1) * a.q] = a.a0[i]
                if 0 <= block_row - 1 <= k:
                    start = (block_row - 1) * a.q
                    for j in range(a.q):
                        row[start + j] = a.a1[i][j]
                rows.append(row)
        mu = linalg.nullity(rows, a.q * (k + 1))
        found.extend([k] * ((mu - mu_prev) - (mu_prev - mu_prev2)))
        mu_prev2, mu_prev = mu_prev, mu
        k += 1
        if k > a.q + 1:
            raise AssertionError("minimal index search exceeded the size bound")
    return Chain(tuple(sorted(found, reverse=True)))


def extract_invariants(a: Pencil) -> KroneckerInvariants:
    """Complete invariant data of a pencil.

    Finite invariant factors come from the Smith form of ``a0 + s*a1``;
    the infinite exponents are the ``t``-adic valuations of the Smith
    diagonal of the reversed pencil ``a1 + t*a0``; minimal indices come
    from kernel-dimension differences, on the pencil for columns and on
    its transpose for rows.
    """
    alphas = linalg.smith_invariant_factors(poly_matrix(a))
    betas = linalg.smith_invariant_factors(reversed_poly_matrix(a))
    rho = len(alphas)
    assert len(betas) == rho, "finite and reversed ranks disagree"
    hif = tuple(HomogPoly(_t_valuation(b), al) for b, al in zip(betas, alphas))
    cmi = _minimal_index_chain(a, a.q - rho)
    rmi = _minimal_index_chain(pencil_transpose(a), a.p - rho)
    return KroneckerInvariants(a.p, a.q, rho, hif, cmi, rmi)


def spectrum_from_invariants(inv: KroneckerInvariants) -> set:
    """Rational part of the spectrum, with ``INFINITY`` when present."""
    out: set = set()
    if inv.rank:
        top = inv.hif[-1]
        roots, _ = rational_roots(top.finite)
        out.update(roots)
        if top.inf_exp:
            out.add(INFINITY)
    return out


def spectrum(a: Pencil) -> set:
    """Rational eigenvalues of the pencil (plus ``INFINITY`` when the
    degree-one part drops rank).  Content at irrational or complex points
    is not enumerated; see :func:`nonrational_degree`."""
    return spectrum_from_invariants(extract_invariants(a))


def nonrational_degree(inv: KroneckerInvariants) -> int:
    """Total degree of spectral content invisible to rational root
    extraction (0 when every finite part splits over the rationals)."""
    gap = 0
    for h in inv.hif:
        _, remainder = rational_roots(h.finite)
        gap += len(remainder) - 1
    return gap


# ---------------------------------------------------------------------------
# seeded generators
# ---------------------------------------------------------------------------

EIGENVALUE_POOL = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2))


def _as_rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _random_partition(total: int, max_parts: int, rng: random.Random, cap=None) -> list[int]:
    if total == 0:
        return []
    assert max_parts >= 1
    cap = total if cap is None else min(cap, total)
    low = -(-total // max_parts)  # ceil: smallest feasible leading part
    first = rng.randint(max(1, low), cap)
    rest = _random_partition(total - first, max_parts - 1, rng, cap=first)
    return [first] + rest


def random_invariants(p: int, q: int, seed) -> KroneckerInvariants:
    """A uniformly-shaped (not uniformly-distributed) valid invariant
    record with all finite spectrum drawn from a small rational pool."""
    rng = _as_rng(seed)
    rho = rng.randint(0, min(p, q))
    buckets = [0, 0, 0, 0]  # finite degree, infinite degree, cmi mass, rmi mass
    allowed = [0, 1] + ([2] if q - rho > 0 else []) + ([3] if p - rho > 0 else [])
    for _ in range(rho):
        buckets[rng.choice(allowed)] += 1
    by_eig: dict[Fraction, int] = {}
    for _ in range(buckets[0]):
        lam = rng.choice(EIGENVALUE_POOL)
        by_eig[lam] = by_eig.get(lam, 0) + 1
    mult_rows = [_random_partition(m, rho, rng) for m in by_eig.values()]
    inf_parts = _random_partition(buckets[1], rho, rng)
    hif = []
    for i in range(rho):  # position rho - i in the ascending chain
        roots = []
        for lam, parts in zip(by_eig, mult_rows):
            if i < len(parts):
                roots.extend([lam] * parts[i])
        k = inf_parts[i] if i < len(inf_parts) else 0
        hif.append(HomogPoly(k, poly_from_roots(roots)))
    hif.reverse()
    cmi_parts = _random_partition(buckets[2], q - rho, rng) if q - rho else []
    rmi_parts = _random_partition(buckets[3], p - rho, rng) if p - rho else []
    cmi = Chain(tuple(cmi_parts) + (0,) * (q - rho - len(cmi_parts)))
    rmi = Chain(tuple(rmi_parts) + (0,) * (p - rho - len(rmi_parts)))
    return KroneckerInvariants(p, q, rho, tuple(hif), cmi, rmi)


def _random_unimodular(n: int, rng: random.Random) -> Matrix:
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        op = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if op == 0 and i != j:
            k = rng.choice((-3, -2, -1, 1, 2, 3))
            for col in range(n):
                m[i][col] += k * m[j][col]
        elif op == 1:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-x for x in m[i]]
    return tuple(tuple(row) for row in m)


def random_equiv(a: Pencil, seed) -> Pencil:
    """A random strictly equivalent pencil (unimodular transforms on both
    sides, integer entries)."""
    rng = _as_rng(seed)
    left = _random_unimodular(a.p, rng)
    right = _random_unimodular(a.q, rng)
    return Pencil(mat_mul(left, mat_mul(a.a0, right)), mat_mul(left, mat_mul(a.a1, right)))


@dataclass(frozen=True)
class RankOneSpec:
    """Factored form of a rank-one pencil.

    The degree-one factor is ``s * degree1_s + degree1_const``; it lives on
    the column (q) side for ``column`` orientation, where the pencil is the
    outer product of the constant vector with it, and on the row (p) side
    for ``row`` orientation.
    """

    orientation: str  # "column" | "row"
    degree1_const: tuple
    degree1_s: tuple
    constant: tuple

    def __post_init__(self):
        if self.orientation not in ("column", "row"):
            raise ValueError("orientation must be 'column' or 'row'")
        for name in ("degree1_const", "degree1_s", "constant"):
            object.__setattr__(self, name, tuple(Fraction(x) for x in getattr(self, name)))
        if not any(self.constant):
            raise ValueError("constant vector must be nonzero")
        if not (any(self.degree1_const) or any(self.degree1_s)):
            raise ValueError("degree-one factor must be nonzero")


def build_rank_one(spec: RankOneSpec, p: int, q: int) -> Pencil:
    def outer(u, v):
        return tuple(tuple(x * y for y in v) for x in u)

    if spec.orientation == "column":
        if len(spec.constant) != p or len(spec.degree1_const) != q or len(spec.degree1_s) != q:
            raise ValueError("vector lengths do not match the pencil shape")
        return Pencil(outer(spec.constant, spec.degree1_const), outer(spec.constant, spec.degree1_s))
    if len(spec.constant) != q or len(spec.degree1_const) != p or len(spec.degree1_s) != p:
        raise ValueError("vector lengths do not match the pencil shape")
    return Pencil(outer(spec.degree1_const, spec.constant), outer(spec.degree1_s, spec.constant))


def random_rank_one(p: int, q: int, seed) -> Pencil:
    """A random pencil of normal rank exactly one, small integer entries."""
    rng = _as_rng(seed)

    def vec(n):
        return tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))

    while True:
        orientation = rng.choice(("column", "row"))
        const_len, deg_len = (p, q) if orientation == "column" else (q, p)
        constant = vec(const_len)
        deg_const, deg_s = vec(deg_len), vec(deg_len)
        if not any(constant) or not (any(deg_const) or any(deg_s)):
            continue
        out = build_rank_one(RankOneSpec(orientation, deg_const, deg_s, constant), p, q)
        assert normal_rank(out) == 1
        return out


# ---------------------------------------------------------------------------
# serialization (bit-exact rational strings)
# ---------------------------------------------------------------------------


def _mat_to_json(m: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m]


def _mat_from_json(rows: Sequence[Sequence[str]]) -> Matrix:
    return matrix([[Fraction(x) for x in row] for row in rows])


def pencil_to_json(a: Pencil) -> dict:
    return {"p": a.p, "q": a.q, "A0": _mat_to_json(a.a0), "A1": _mat_to_json(a.a1)}


def pencil_from_json(obj: dict) -> Pencil:
    out = Pencil(_mat_from_json(obj["A0"]), _mat_from_json(obj["A1"]))
    if (out.p, out.q) != (int(obj["p"]), int(obj["q"])):
        raise ValueError("declared shape disagrees with the matrices")
    return out


def invariants_to_json(inv: KroneckerInvariants) -> dict:
    return {
        "p": inv.p,
        "q": inv.q,
        "rank": inv.rank,
        "hif": [hif_to_json(h) for h in inv.hif],
        "cmi": list(inv.cmi.entries),
        "rmi": list(inv.rmi.entries),
    }


def invariants_from_json(obj: dict) -> KroneckerInvariants:
    return KroneckerInvariants(
        int(obj["p"]),
        int(obj["q"]),
        int(obj["rank"]),
        tuple(hif_from_json(h) for h in obj["hif"]),
        Chain(tuple(int(x) for x in obj["cmi"])),
        Chain(tuple(int(x) for x in obj["rmi"])),
    )

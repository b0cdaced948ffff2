"""Reachability of one pencil from another by a rank-one pencil
perturbation, and per-index bound profiles for the resulting change of the
generalized Weyr characteristic.

The reachability test exists in two equivalent forms: one phrased on the
minimal index chains directly, one on their headed conjugate partitions.
Both are implemented and must agree on every input; the shared bookkeeping
(out-of-range factor conventions, truncated sums) lives in the accessor
helpers below so the two forms cannot drift apart.

Inputs that are strictly equivalent (identical invariants) get the verdict
``out-of-scope-equivalent``: the reachability characterization assumes the
two classes differ, so neither ``yes`` nor ``no`` would be honest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .partitions import (
    Chain,
    HeadedPartition,
    Partition,
    chain_indices,
    conj_majorized,
    headed_conjugate,
    headed_indices,
    onestep_majorized,
)
from .pencil import KroneckerInvariants
from .ratpoly import HomogPoly, hif_degree, hif_divides, hif_gcd, hif_lcm


# ---------------------------------------------------------------------------
# shared accessor layer
# ---------------------------------------------------------------------------


def _hif_at(hifs: Sequence[HomogPoly], i: int) -> HomogPoly:
    """1-based factor access with the out-of-range conventions: a unit
    below the chain and the zero value above it."""
    if i < 1:
        return HomogPoly.one()
    if i > len(hifs):
        return HomogPoly.zero()
    return hifs[i - 1]


def interlaces(hif_a: Sequence[HomogPoly], hif_b: Sequence[HomogPoly]) -> bool:
    """Two-sided divisibility interlacing of the factor chains: each factor
    of the first chain is sandwiched between its neighbours in the second,
    over the shorter rank (out-of-range values follow the conventions)."""
    rho = min(len(hif_a), len(hif_b))
    for i in range(1, rho + 1):
        if not hif_divides(_hif_at(hif_b, i - 1), _hif_at(hif_a, i)):
            return False
        if not hif_divides(_hif_at(hif_a, i), _hif_at(hif_b, i + 1)):
            return False
    return True


def _sum_gcd_shifted(hif_a, hif_b, upto: int) -> int:
    """Sum of ``deg gcd`` over factor pairs shifted one past the index."""
    return sum(
        hif_degree(hif_gcd(_hif_at(hif_a, i + 1), _hif_at(hif_b, i + 1)))
        for i in range(1, upto + 1)
    )


def _sum_lcm(hif_a, hif_b, upto: int) -> int:
    return sum(
        hif_degree(hif_lcm(_hif_at(hif_a, i), _hif_at(hif_b, i)))
        for i in range(1, upto + 1)
    )


def _head_sum(hp: HeadedPartition, upto: int) -> int:
    """Sum of the first ``upto`` tail parts."""
    return sum(hp.at(i) for i in range(1, upto + 1))


def _divisibility_flags(ka: KroneckerInvariants, kb: KroneckerInvariants) -> tuple[bool, bool]:
    rho = min(ka.rank, kb.rank)
    phi_div_psi = all(hif_divides(ka.hif[i], kb.hif[i]) for i in range(rho))
    psi_div_phi = all(hif_divides(kb.hif[i], ka.hif[i]) for i in range(rho))
    return phi_div_psi, psi_div_phi


def _check_pair(ka: KroneckerInvariants, kb: KroneckerInvariants) -> None:
    if (ka.p, ka.q) != (kb.p, kb.q):
        raise ValueError("invariant records describe different pencil shapes")


# ---------------------------------------------------------------------------
# the decision, chain form
# ---------------------------------------------------------------------------

YES = "yes"
NO = "no"
EQUIVALENT = "out-of-scope-equivalent"


@dataclass(frozen=True)
class DecisionResult:
    answer: str
    case_tag: Optional[str]
    trace: dict = field(default_factory=dict)


def _verdict(ok: bool) -> str:
    return YES if ok else NO


def decide_rank_one(ka: KroneckerInvariants, kb: KroneckerInvariants) -> DecisionResult:
    """Whether some rank-one pencil added to a pencil with invariants
    ``ka`` lands in the strict-equivalence class of ``kb``.

    Dispatches on which of the two minimal index chains agree; every case
    additionally requires the interlacing condition.  The trace records
    the quantities the verdict was computed from.
    """
    _check_pair(ka, kb)
    if ka == kb:
        return DecisionResult(EQUIVALENT, None)
    rho = min(ka.rank, kb.rank)
    inter = interlaces(ka.hif, kb.hif)
    c, d, u, v = ka.cmi, kb.cmi, ka.rmi, kb.rmi
    trace: dict = {"interlace": inter}

    if c == d and u == v:
        return DecisionResult(_verdict(inter), "1", trace)

    if c != d and u == v:
        idx = chain_indices(c, d)
        g_val = rho - 1 - _sum_gcd_shifted(ka.hif, kb.hif, rho - 1) - u.total()
        rhs = sum(min(c.at(i), d.at(i)) for i in range(1, len(c) + 1))
        crossing = max(c.at(idx.f), d.at(idx.f_prime))
        trace.update(ell=idx.ell, f=idx.f, f_prime=idx.f_prime, G=g_val,
                     min_sum=rhs, crossing_max=crossing)
        return DecisionResult(_verdict(inter and g_val <= rhs + crossing), "2", trace)

    if c == d and u != v:
        idx = chain_indices(u, v)
        g_bar = rho - 1 - _sum_gcd_shifted(ka.hif, kb.hif, rho - 1) - c.total()
        rhs = sum(min(u.at(i), v.at(i)) for i in range(1, len(u) + 1))
        crossing = max(u.at(idx.f), v.at(idx.f_prime))
        trace.update(ell=idx.ell, f=idx.f, f_prime=idx.f_prime, G_bar=g_bar,
                     min_sum=rhs, crossing_max=crossing)
        return DecisionResult(_verdict(inter and g_bar <= rhs + crossing), "3", trace)

    # both chains differ: only a rank shift of exactly one is reachable
    cd = len(c) == len(d) + 1 and onestep_majorized(c, d)
    uv = len(u) == len(v) + 1 and onestep_majorized(u, v)
    dc = len(d) == len(c) + 1 and onestep_majorized(d, c)
    vu = len(v) == len(u) + 1 and onestep_majorized(v, u)
    x_deg = rho - c.total() - v.total()
    y_deg = rho - d.total() - u.total()
    trace.update(c_onestep_d=cd, u_onestep_v=uv, d_onestep_c=dc, v_onestep_u=vu,
                 x_deg=x_deg, y_deg=y_deg)
    win_x = win_y = False
    if (cd and uv) or (dc and vu):
        lo = _sum_lcm(ka.hif, kb.hif, rho)
        hi = _sum_gcd_shifted(ka.hif, kb.hif, rho)
        win_x = lo <= x_deg <= hi
        win_y = lo <= y_deg <= hi
        trace.update(lcm_sum=lo, gcd_shifted_sum=hi)
    subcases = {
        "4a": cd and uv and win_x,
        "4b": dc and vu and win_y,
        "4c": cd and uv and win_y,
        "4d": dc and vu and win_x,
    }
    tag = next((name for name, ok in subcases.items() if ok), "4")
    return DecisionResult(_verdict(inter and tag != "4"), tag, trace)


# ---------------------------------------------------------------------------
# the decision, conjugate-partition form
# ---------------------------------------------------------------------------


def decide_rank_one_conj(ka: KroneckerInvariants, kb: KroneckerInvariants) -> DecisionResult:
    """The same decision phrased on headed conjugates of the minimal index
    chains.  Returns the same answer as :func:`decide_rank_one` on every
    input; the trace carries the conjugate-side quantities."""
    _check_pair(ka, kb)
    if ka == kb:
        return DecisionResult(EQUIVALENT, None)
    rho = min(ka.rank, kb.rank)
    rho_top = max(ka.rank, kb.rank)
    inter = interlaces(ka.hif, kb.hif)
    r = headed_conjugate(ka.cmi)
    s = headed_conjugate(kb.cmi)
    rp = headed_conjugate(ka.rmi)
    sp = headed_conjugate(kb.rmi)
    trace: dict = {"interlace": inter}

    if r == s and rp == sp:
        return DecisionResult(_verdict(inter), "c1", trace)

    if r != s and rp == sp:
        idx = headed_indices(r, s)
        g_val = rho - 1 - _sum_gcd_shifted(ka.hif, kb.hif, rho - 1) - _head_sum(rp, rho)
        rhs = sum(min(r.at(i), s.at(i)) for i in range(1, rho + 1))
        reach = max(idx.e, idx.e_prime)
        trace.update(x_idx=idx.x, e=idx.e, e_prime=idx.e_prime, G=g_val,
                     min_sum=rhs, reach=reach)
        return DecisionResult(_verdict(inter and g_val <= rhs + reach), "c2", trace)

    if r == s and rp != sp:
        idx = headed_indices(rp, sp)
        g_bar = rho - 1 - _sum_gcd_shifted(ka.hif, kb.hif, rho - 1) - _head_sum(r, rho)
        rhs = sum(min(rp.at(i), sp.at(i)) for i in range(1, rho + 1))
        reach = max(idx.e, idx.e_prime)
        trace.update(x_idx=idx.x, e=idx.e, e_prime=idx.e_prime, G_bar=g_bar,
                     min_sum=rhs, reach=reach)
        return DecisionResult(_verdict(inter and g_bar <= rhs + reach), "c3", trace)

    ang_sr = conj_majorized(s, r) and conj_majorized(sp, rp)
    ang_rs = conj_majorized(r, s) and conj_majorized(rp, sp)
    x_deg = rho - _head_sum(r, rho) - _head_sum(sp, rho_top)
    y_deg = rho - _head_sum(s, rho) - _head_sum(rp, rho_top)
    trace.update(s_conj_r=ang_sr, r_conj_s=ang_rs, x_deg=x_deg, y_deg=y_deg)
    win_x = win_y = False
    if ang_sr or ang_rs:
        lo = _sum_lcm(ka.hif, kb.hif, rho)
        hi = _sum_gcd_shifted(ka.hif, kb.hif, rho)
        win_x = lo <= x_deg <= hi
        win_y = lo <= y_deg <= hi
        trace.update(lcm_sum=lo, gcd_shifted_sum=hi)
    subcases = {
        "c4a": ang_sr and win_x,
        "c4b": ang_rs and win_y,
        "c4c": ang_sr and win_y,
        "c4d": ang_rs and win_x,
    }
    tag = next((name for name, ok in subcases.items() if ok), "c4")
    return DecisionResult(_verdict(inter and tag != "c4"), tag, trace)


# ---------------------------------------------------------------------------
# bound profiles
# ---------------------------------------------------------------------------


class Segment(NamedTuple):
    start: int
    end: Optional[int]  # inclusive; None = unbounded
    lo: int
    hi: int


@dataclass(frozen=True)
class BoundsProfile:
    """Piecewise-constant interval bound on per-index Weyr differences.

    ``interval(i)`` returns the closed interval guaranteed to contain
    ``w_i(after) - w_i(before)`` at every eigenvalue, for a perturbation
    realizing the case.  ``a`` and ``b`` are the breakpoints (``b`` only in
    the two-breakpoint case); the flags record which one-sided factor
    divisibility held, which is what sharpens the first segment.
    """

    case_tag: str
    a: Optional[int]
    b: Optional[int]
    segments: tuple
    phi_divides_psi: bool
    psi_divides_phi: bool

    def interval(self, i: int) -> tuple[int, int]:
        if i < 1:
            raise IndexError("intervals are indexed from 1")
        for seg in self.segments:
            if seg.start <= i and (seg.end is None or i <= seg.end):
                return (seg.lo, seg.hi)
        raise AssertionError("segments must cover all indices")


def _max_excess(r: HeadedPartition, s: HeadedPartition) -> int:
    """Last index (head included) where ``r`` exceeds ``s``."""
    top = max(r.support(), s.support())
    return max(i for i in range(top + 1) if r.at(i) > s.at(i))


def bounds_profile(ka: KroneckerInvariants, kb: KroneckerInvariants) -> BoundsProfile:
    """Bound profile for the Weyr change from class ``ka`` to class ``kb``.

    Only meaningful along realizable perturbations: raises unless the
    decision for the pair is ``yes`` or the classes coincide.
    """
    decision = decide_rank_one(ka, kb)
    if decision.answer == NO:
        raise ValueError("bounds require a reachable or equivalent pair")
    phi_div, psi_div = _divisibility_flags(ka, kb)
    regular_a = ka.p == ka.q == ka.rank
    regular_b = kb.p == kb.q == kb.rank

    def profile(tag, a, b, segs):
        return BoundsProfile(tag, a, b, tuple(Segment(*s) for s in segs), phi_div, psi_div)

    if regular_a and regular_b:
        return profile("i", None, None, [(1, None, -1, 1)])
    if regular_a:
        a = kb.cmi.at(1) + 1
        return profile("ii", a, None, [(1, a, -1, 1), (a + 1, None, -2, 0)])
    if regular_b:
        a = ka.cmi.at(1) + 1
        return profile("iii", a, None, [(1, a, -1, 1), (a + 1, None, 0, 2)])

    r = headed_conjugate(ka.cmi)
    s = headed_conjugate(kb.cmi)
    if ka.rank == kb.rank:
        if ka.cmi == kb.cmi:
            return profile("iv-same-cmi", None, None, [(1, None, -1, 1)])
        idx = headed_indices(r, s)
        a = idx.x
        b = max(idx.e, idx.e_prime) + 1
        assert b > a >= 1
        if phi_div and psi_div:
            head = (0, 0)
        elif psi_div:
            head = (-1, 0)
        elif phi_div:
            head = (0, 1)
        else:
            head = (-1, 1)
        return profile("iv-diff-cmi", a, b,
                       [(1, a, *head), (a + 1, b, -(a + 1), a + 1), (b + 1, None, -b, b)])

    rho = min(ka.rank, kb.rank)
    lo = _sum_lcm(ka.hif, kb.hif, rho)
    hi = _sum_gcd_shifted(ka.hif, kb.hif, rho)
    if kb.rank == ka.rank + 1:
        g = _max_excess(r, s)
        a = g + 1
        y_deg = rho - kb.cmi.total() - ka.rmi.total()
        head = (-1, 1) if (lo <= y_deg <= hi or not psi_div) else (-1, 0)
        return profile("iv-rank-up", a, None, [(1, a, *head), (a + 1, None, 0, a + 1)])
    g = _max_excess(s, r)
    a = g + 1
    x_deg = rho - ka.cmi.total() - kb.rmi.total()
    head = (-1, 1) if (lo <= x_deg <= hi or not phi_div) else (0, 1)
    return profile("iv-rank-down", a, None, [(1, a, *head), (a + 1, None, -(a + 1), 0)])


def check_bounds(profile: BoundsProfile, w_before: Partition, w_after: Partition) -> bool:
    """Whether the componentwise Weyr difference stays inside the profile,
    up to the largest index where either characteristic is nonzero."""
    for i in range(1, max(len(w_before), len(w_after)) + 1):
        lo, hi = profile.interval(i)
        if not lo <= w_after.at(i) - w_before.at(i) <= hi:
            return False
    return True


# ---------------------------------------------------------------------------
# conjugate-difference ranges (same-rank, same-rmi, different-cmi pairs)
# ---------------------------------------------------------------------------


class GapRange(NamedTuple):
    start: int
    end: Optional[int]  # inclusive; None = unbounded
    lo: int
    hi: int
    divides_at_lo: Optional[str]  # factor-chain consequence if lo is attained
    divides_at_hi: Optional[str]


@dataclass(frozen=True)
class GapBounds:
    x: int
    e: int
    e_prime: int
    ranges: tuple


def conjugate_gap_ranges(ka: KroneckerInvariants, kb: KroneckerInvariants) -> GapBounds:
    """Per-range inequalities for the conjugate cmi differences
    ``s_i - r_i`` on a same-rank, same-rmi, different-cmi pair satisfying
    the reachability inequality.

    Attaining an annotated extreme forces the named one-sided divisibility
    of the whole factor chains ("phi|psi" means every factor of ``ka``
    divides the matching factor of ``kb``).
    """
    _check_pair(ka, kb)
    r = headed_conjugate(ka.cmi)
    s = headed_conjugate(kb.cmi)
    if r == s or headed_conjugate(ka.rmi) != headed_conjugate(kb.rmi):
        raise ValueError("hypothesis not satisfied")
    rho = min(ka.rank, kb.rank)
    idx = headed_indices(r, s)
    g_val = rho - 1 - _sum_gcd_shifted(ka.hif, kb.hif, rho - 1) - _head_sum(
        headed_conjugate(ka.rmi), rho
    )
    reachable = g_val <= sum(min(r.at(i), s.at(i)) for i in range(1, rho + 1)) + max(
        idx.e, idx.e_prime
    )
    if not reachable:
        raise ValueError("hypothesis not satisfied")
    x, e, ep = idx.x, idx.e, idx.e_prime
    if e > ep:
        ranges = (
            GapRange(x, e, -x - 1, -1, "phi|psi", None),
            GapRange(e + 1, None, -x, e + 1, None, "psi|phi"),
        )
    else:
        ranges = (
            GapRange(x, ep, 1, x + 1, None, "psi|phi"),
            GapRange(ep + 1, None, -(ep + 1), x, "phi|psi", None),
        )
    return GapBounds(x, e, ep, ranges)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def decision_to_json(res: DecisionResult) -> dict:
    return {"answer": res.answer, "case": res.case_tag, "trace": dict(res.trace)}


def profile_to_json(profile: BoundsProfile) -> dict:
    return {
        "case": profile.case_tag,
        "a": profile.a,
        "b": profile.b,
        "segments": [
            {"from": seg.start, "to": seg.end, "lo": seg.lo, "hi": seg.hi}
            for seg in profile.segments
        ],
        "phi_divides_psi": profile.phi_divides_psi,
        "psi_divides_phi": profile.psi_divides_phi,
    }

import random
from fractions import Fraction

import pytest

from pencilkit.partitions import Chain, Partition
from pencilkit.pencil import (
    INFINITY,
    KroneckerInvariants,
    Pencil,
    extract_invariants,
    random_invariants,
)
from pencilkit.perturb import (
    EQUIVALENT,
    NO,
    YES,
    bounds_profile,
    check_bounds,
    conjugate_gap_ranges,
    decide_rank_one,
    decide_rank_one_conj,
    interlaces,
)
from pencilkit.ratpoly import HomogPoly, poly
from pencilkit.weyr import weyr_from_invariants

ONE_H = HomogPoly.one()


def hs(k, *coeffs):
    return HomogPoly(k, poly(coeffs))


def inv(p, q, rank, hif, cmi=(), rmi=()):
    return KroneckerInvariants(p, q, rank, tuple(hif), Chain(tuple(cmi)), Chain(tuple(rmi)))


K_L1 = inv(1, 2, 1, [ONE_H], cmi=(1,))
K_S0 = inv(1, 2, 1, [hs(0, 0, 1)], cmi=(0,))


def test_interlaces_examples():
    assert interlaces([ONE_H, hs(0, 0, 1)], [ONE_H, hs(0, 0, 0, 1)])
    assert interlaces([ONE_H, hs(0, 0, 0, 0, 1)], [ONE_H, hs(0, 0, 1)])
    assert not interlaces([hs(0, 0, 1), hs(0, 0, 1)], [ONE_H, ONE_H])


def test_equivalent_is_out_of_scope():
    res = decide_rank_one(K_L1, K_L1)
    assert res.answer == EQUIVALENT and res.case_tag is None
    assert decide_rank_one_conj(K_L1, K_L1).answer == EQUIVALENT


def test_shape_mismatch_rejected():
    other = inv(2, 2, 2, [ONE_H, hs(0, 0, 0, 1)])
    with pytest.raises(ValueError):
        decide_rank_one(K_L1, other)
    with pytest.raises(ValueError):
        decide_rank_one_conj(K_L1, other)


def test_worked_pair_chain_form():
    res = decide_rank_one(K_L1, K_S0)
    assert res.answer == YES and res.case_tag == "2"
    assert res.trace["ell"] == 1 and res.trace["f"] == 1 and res.trace["f_prime"] == 1
    assert res.trace["G"] == 0
    assert res.trace["min_sum"] == 0 and res.trace["crossing_max"] == 1


def test_worked_pair_conjugate_form():
    res = decide_rank_one_conj(K_L1, K_S0)
    assert res.answer == YES and res.case_tag == "c2"
    assert res.trace["x_idx"] == 1
    assert res.trace["e"] == 1 and res.trace["e_prime"] == 0
    assert res.trace["G"] == 0


def test_case1_interlacing_decides():
    k_j02 = inv(2, 2, 2, [ONE_H, hs(0, 0, 0, 1)])
    k_ss = inv(2, 2, 2, [hs(0, 0, 1), hs(0, 0, 1)])
    res = decide_rank_one(k_j02, k_ss)
    assert res.answer == YES and res.case_tag == "1"
    # interlacing failure in case 1: s^2 cannot divide into (s-1) content
    k_other = inv(2, 2, 2, [hs(0, -1, 1), hs(0, -1, 1)])
    res = decide_rank_one(k_j02, k_other)
    assert res.answer == NO and res.case_tag == "1"
    assert decide_rank_one_conj(k_j02, k_other).answer == NO


def test_case3_row_side():
    res = decide_rank_one(
        inv(2, 1, 1, [ONE_H], rmi=(1,)), inv(2, 1, 1, [hs(0, 0, 1)], rmi=(0,))
    )
    assert res.answer == YES and res.case_tag == "3"
    assert res.trace["G_bar"] == 0


def test_case4_rank_change():
    zero = inv(1, 1, 0, [], cmi=(0,), rmi=(0,))
    full = inv(1, 1, 1, [hs(0, 0, 1)])
    res = decide_rank_one(zero, full)
    assert res.answer == YES and res.case_tag in ("4a", "4b", "4c", "4d")
    conj = decide_rank_one_conj(zero, full)
    assert conj.answer == YES
    # rank cannot move by two under a rank-one perturbation
    wide_zero = inv(2, 2, 0, [], cmi=(0, 0), rmi=(0, 0))
    wide_full = inv(2, 2, 2, [ONE_H, hs(0, 0, 0, 1)])
    assert decide_rank_one(wide_zero, wide_full).answer == NO
    assert decide_rank_one_conj(wide_zero, wide_full).answer == NO


def test_forms_agree_on_random_pairs():
    rng = random.Random(314159)
    seen = {YES: 0, NO: 0, EQUIVALENT: 0}
    for _ in range(1000):
        p, q = rng.randint(1, 6), rng.randint(1, 6)
        ka = random_invariants(p, q, rng)
        kb = random_invariants(p, q, rng)
        a = decide_rank_one(ka, kb)
        b = decide_rank_one_conj(ka, kb)
        assert a.answer == b.answer, (ka, kb, a, b)
        seen[a.answer] += 1
    assert seen[YES] and seen[NO]  # both kinds of instances exercised


def test_profile_case_i():
    k_j02 = inv(2, 2, 2, [ONE_H, hs(0, 0, 0, 1)])
    k_ss = inv(2, 2, 2, [hs(0, 0, 1), hs(0, 0, 1)])
    profile = bounds_profile(k_j02, k_ss)
    assert profile.case_tag == "i"
    assert profile.interval(1) == (-1, 1) and profile.interval(99) == (-1, 1)
    assert check_bounds(profile, Partition((2, 1)), Partition((2, 2)))
    assert not check_bounds(profile, Partition((3,)), Partition((1,)))


def test_profile_case_ii_and_iii():
    reg = inv(1, 1, 1, [hs(0, 0, 1)])
    sing = inv(1, 1, 0, [], cmi=(0,), rmi=(0,))
    prof = bounds_profile(reg, sing)
    assert prof.case_tag == "ii" and prof.a == 1
    assert prof.interval(1) == (-1, 1) and prof.interval(2) == (-2, 0)
    w_reg = weyr_from_invariants(reg, Fraction(0))
    w_sing = weyr_from_invariants(sing, Fraction(0))
    assert w_reg == Partition((1,)) and w_sing == Partition((1,))
    assert check_bounds(prof, w_reg, w_sing)
    back = bounds_profile(sing, reg)
    assert back.case_tag == "iii" and back.a == 1
    assert back.interval(2) == (0, 2)


def test_profile_case_iv_same_cmi():
    a = inv(1, 2, 1, [hs(0, 0, 1)], cmi=(0,))
    b = inv(1, 2, 1, [hs(0, -1, 1)], cmi=(0,))
    profile = bounds_profile(a, b)
    assert profile.case_tag == "iv-same-cmi"
    assert profile.interval(5) == (-1, 1)


def test_profile_worked_pair():
    profile = bounds_profile(K_L1, K_S0)
    assert profile.case_tag == "iv-diff-cmi"
    assert (profile.a, profile.b) == (1, 2)
    # refined head: every factor of the first chain divides the second
    assert profile.phi_divides_psi and not profile.psi_divides_phi
    assert profile.interval(1) == (0, 1)
    assert profile.interval(2) == (-2, 2)
    assert profile.interval(3) == (-2, 2)
    w_a = weyr_from_invariants(K_L1, Fraction(0))
    w_b = weyr_from_invariants(K_S0, Fraction(0))
    assert (w_a, w_b) == (Partition((1, 1)), Partition((2,)))
    assert check_bounds(profile, w_a, w_b)


def test_profile_rank_change_cases():
    zero = inv(1, 1, 0, [], cmi=(0,), rmi=(0,))
    full = inv(1, 1, 1, [hs(0, 0, 1)])
    up = bounds_profile(zero, full)
    assert up.case_tag == "iii"  # becoming regular takes priority
    wide_zero = inv(1, 2, 0, [], cmi=(0, 0), rmi=(0,))
    wide_one = inv(1, 2, 1, [hs(0, 0, 1)], cmi=(0,))
    up = bounds_profile(wide_zero, wide_one)
    assert up.case_tag == "iv-rank-up" and up.a >= 1
    assert up.interval(up.a + 1) == (0, up.a + 1)
    down = bounds_profile(wide_one, wide_zero)
    assert down.case_tag == "iv-rank-down"
    assert down.interval(down.a + 1) == (-(down.a + 1), 0)


def test_profile_requires_reachable_pair():
    wide_zero = inv(2, 2, 0, [], cmi=(0, 0), rmi=(0, 0))
    wide_full = inv(2, 2, 2, [ONE_H, hs(0, 0, 0, 1)])
    with pytest.raises(ValueError):
        bounds_profile(wide_zero, wide_full)


def test_gap_ranges_worked_pair():
    gaps = conjugate_gap_ranges(K_L1, K_S0)
    assert (gaps.x, gaps.e, gaps.e_prime) == (1, 1, 0)
    first, second = gaps.ranges
    assert (first.start, first.end, first.lo, first.hi) == (1, 1, -2, -1)
    assert (second.start, second.end, second.lo, second.hi) == (2, None, -1, 2)
    # realized differences: s_1 - r_1 = -1, then zero
    r = (1,)
    s = (0,)
    assert first.lo <= s[0] - r[0] <= first.hi
    assert second.lo <= 0 <= second.hi


def test_gap_ranges_hypothesis_guard():
    with pytest.raises(ValueError, match="hypothesis"):
        conjugate_gap_ranges(K_L1, K_L1)  # same conjugates
    # same-rank, same-rmi pair that fails the reachability inequality:
    # disjoint factor content makes G = 2 exceed min-sum 0 plus reach 1
    a = inv(3, 5, 3, [ONE_H, ONE_H, hs(0, 0, 0, 0, 1)], cmi=(0, 0))
    b = inv(3, 5, 3, [ONE_H, ONE_H, hs(1, 1)], cmi=(1, 1))
    assert decide_rank_one(a, b).answer == NO
    assert decide_rank_one_conj(a, b).answer == NO
    with pytest.raises(ValueError, match="hypothesis"):
        conjugate_gap_ranges(a, b)

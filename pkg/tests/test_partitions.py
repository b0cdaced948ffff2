import pytest
from hypothesis import given, strategies as st

from pencilkit.partitions import (
    Chain,
    HeadedPartition,
    Partition,
    add,
    chain_indices,
    chain_min,
    conj_majorized,
    conjugate,
    dominates_shifted,
    drop_indices,
    headed_conjugate,
    headed_indices,
    majorizes,
    onestep_majorized,
    union,
)


def C(*entries):
    return Chain(tuple(entries))


def P(*parts):
    return Partition(tuple(parts))


def H(head, *tail):
    return HeadedPartition(head, Partition(tuple(tail)))


def test_value_validation():
    with pytest.raises(ValueError):
        C(1, 2)
    with pytest.raises(ValueError):
        C(-1)
    with pytest.raises(ValueError):
        P(1, 3)
    with pytest.raises(ValueError):
        HeadedPartition(1, P(2))
    # trailing zeros are trimmed in partitions but preserved in chains
    assert P(2, 1, 0, 0) == P(2, 1)
    assert C(0, 0) != C(0)
    assert len(C(0, 0)) == 2


def test_chain_sentinels():
    c = C(3, 1)
    assert c.at(0) == float("inf")
    assert c.at(1) == 3
    assert c.at(3) == float("-inf")
    assert P(3, 1).at(5) == 0


def test_conjugate_examples():
    assert conjugate(C(3, 1)) == P(2, 1, 1)
    assert conjugate(C(0, 0, 0)) == P()
    assert conjugate(C(2, 2)) == P(2, 2)


@given(st.lists(st.integers(0, 8), min_size=0, max_size=8))
def test_conjugate_involution(entries):
    p = Partition(tuple(sorted(entries, reverse=True)))
    assert conjugate(conjugate(p)) == p


def test_union_sum_majorize_examples():
    assert union(P(2, 1), P(3)) == P(3, 2, 1)
    a, b = P(2, 1), P(1, 1)
    assert conjugate(union(a, b)) == add(conjugate(a), conjugate(b)) == P(4, 1)
    assert majorizes(P(2, 2), P(3, 1))
    assert not majorizes(P(3, 1), P(2, 2))
    assert not majorizes(P(2), P(1))  # unequal totals


def test_onestep_examples():
    assert onestep_majorized(C(3, 2, 1), C(2, 1))
    assert not onestep_majorized(C(3, 1, 0), C(2, 2))
    assert onestep_majorized(C(0, 0), C(0))  # vacuous: first drop at the sentinel
    with pytest.raises(ValueError):
        onestep_majorized(C(1, 1), C(1, 0))


def test_conj_majorized_examples():
    # frozen against the one-step oracle through the conjugate
    # correspondence (chains (2,1,1)/(2,1), (2,2,1)/(2,2), (2,2,2)/(2,1))
    assert conj_majorized(H(2, 2, 1), H(3, 3, 1))
    assert conj_majorized(H(2, 2, 2), H(3, 3, 2))
    assert not conj_majorized(H(2, 2, 1), H(3, 3, 3))
    assert conj_majorized(H(0), H(1))
    assert not conj_majorized(H(2, 1), H(2, 2))  # heads must differ by one


def test_headed_conjugate():
    hp = headed_conjugate(C(2, 1, 1))
    assert hp == H(3, 3, 1)
    assert headed_conjugate(C(0, 0)) == H(2)


def test_chain_indices_examples():
    assert chain_indices(C(1), C(0)) == (1, 1, 1)
    assert chain_indices(C(2, 1), C(2, 0)) == (2, 2, 2)
    assert chain_indices(C(3, 0), C(1, 1)) == (2, 2, 2)
    with pytest.raises(ValueError):
        chain_indices(C(1), C(1))
    with pytest.raises(ValueError):
        chain_indices(C(1), C(1, 0))


def test_headed_indices_examples():
    assert headed_indices(H(1, 1), H(1)) == (1, 1, 0)
    assert headed_indices(H(2, 2, 1), H(2, 1, 1)) == (1, 1, 0)
    assert headed_indices(H(2, 1), H(2, 2)) == (1, 0, 1)
    with pytest.raises(ValueError):
        headed_indices(H(2, 1), H(1, 1))
    with pytest.raises(ValueError):
        headed_indices(H(2, 1), H(2, 1))


def test_drop_indices_examples():
    assert drop_indices(C(2, 1, 1), C(2, 1)) == (1, 3)
    assert drop_indices(C(2, 2), C(1)) == (2, 1)
    assert drop_indices(C(1, 0), C(1)) == (0, 2)
    with pytest.raises(ValueError):
        drop_indices(C(1), C(1))


def test_chain_min_examples():
    assert chain_min(C(3, 1), C(2, 2)) == C(2, 1)
    assert chain_min(C(0, 0), C(5, 0)) == C(0, 0)
    assert conjugate(chain_min(C(3, 1), C(2, 2))) == P(2, 1)
    with pytest.raises(ValueError):
        chain_min(C(1), C(1, 0))


def test_dominates_shifted_examples():
    assert dominates_shifted(P(2, 1), P(3, 2, 1), 1)
    assert dominates_shifted(P(1), P(3), 1)
    assert not dominates_shifted(P(1), P(3), 0)
    assert dominates_shifted(P(9, 9), P(), 2)

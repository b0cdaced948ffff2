"""Chains and partitions of nonnegative integers.

Two distinct value kinds, per the conventions this library relies on:

* a :class:`Chain` is a nonincreasing sequence of fixed length -- appending
  a zero produces a *different* chain;
* a :class:`Partition` is a nonincreasing sequence up to trailing zeros,
  stored trimmed.

Out-of-range accessors implement the sentinel conventions used by the
comparison predicates (``c_0 = +oo`` and ``c_{m+1} = -oo`` for chains,
zero beyond the support for partitions) so the index formulas below can be
transcribed literally.  Sentinels are never stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple


@dataclass(frozen=True)
class Chain:
    """Fixed-length nonincreasing sequence of nonnegative integers."""

    entries: tuple

    def __post_init__(self):
        ent = tuple(int(e) for e in self.entries)
        if any(e < 0 for e in ent):
            raise ValueError("chain entries must be nonnegative")
        if any(ent[i] < ent[i + 1] for i in range(len(ent) - 1)):
            raise ValueError("chain entries must be nonincreasing")
        object.__setattr__(self, "entries", ent)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def at(self, i: int):
        """1-based entry with sentinels: +oo for i < 1, -oo past the end."""
        if i < 1:
            return math.inf
        if i > len(self.entries):
            return -math.inf
        return self.entries[i - 1]

    def total(self) -> int:
        return sum(self.entries)


@dataclass(frozen=True)
class Partition:
    """Finitely supported nonincreasing sequence, stored trimmed."""

    parts: tuple = ()

    def __post_init__(self):
        ps = [int(e) for e in self.parts]
        while ps and ps[-1] == 0:
            ps.pop()
        if any(e < 0 for e in ps):
            raise ValueError("partition parts must be nonnegative")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError("partition parts must be nonincreasing")
        object.__setattr__(self, "parts", tuple(ps))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def at(self, i: int) -> int:
        """1-based part; zero beyond the stored support."""
        if i < 1:
            raise IndexError("partition parts are indexed from 1")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def total(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class HeadedPartition:
    """A partition with a distinguished head term at index 0.

    The head counts all entries of an underlying chain (zeros included),
    while the tail's first part counts only the entries >= 1, so the head
    always dominates the tail.
    """

    head: int
    tail: Partition

    def __post_init__(self):
        if self.head < 0:
            raise ValueError("head must be nonnegative")
        if self.head < self.tail.at(1):
            raise ValueError("head must dominate the first tail part")

    def at(self, i: int) -> int:
        """0-based: index 0 is the head, index i >= 1 reads the tail."""
        return self.head if i == 0 else self.tail.at(i)

    def support(self) -> int:
        """Largest index that may hold a nonzero value."""
        return len(self.tail)


def conjugate(values: Iterable[int] | Chain | Partition) -> Partition:
    """Conjugate partition: k-th part counts the entries >= k."""
    ent = list(values)
    if not ent or ent[0] == 0:
        return Partition(())
    return Partition(tuple(sum(1 for e in ent if e >= k) for k in range(1, ent[0] + 1)))


def union(a: Partition, b: Partition) -> Partition:
    """Multiset union: all parts of both, sorted decreasingly."""
    return Partition(tuple(sorted([*a.parts, *b.parts], reverse=True)))


def add(a: Partition, b: Partition) -> Partition:
    """Componentwise sum."""
    n = max(len(a), len(b))
    return Partition(tuple(a.at(i) + b.at(i) for i in range(1, n + 1)))


def majorizes(a: Partition, b: Partition) -> bool:
    """Whether ``a`` is majorized by ``b``: equal totals and every prefix
    sum of ``a`` at most the corresponding prefix sum of ``b``."""
    if a.total() != b.total():
        return False
    pa = pb = 0
    for i in range(1, max(len(a), len(b)) + 1):
        pa += a.at(i)
        pb += b.at(i)
        if pa > pb:
            return False
    return True


def onestep_majorized(d: Chain, c: Chain) -> bool:
    """One-step chain majorization ``d < c``: with ``h`` the first index
    where ``c`` drops below ``d``, the tail of ``d`` past ``h`` must
    replicate ``c`` shifted by one.

    ``d`` must be one entry longer than ``c``; ``h`` always exists because
    ``c`` reads ``-oo`` past its end.
    """
    if len(d) != len(c) + 1:
        raise ValueError("first chain must be exactly one entry longer")
    m = len(c)
    h = next(i for i in range(1, m + 2) if c.at(i) < d.at(i))
    return all(c.at(i) == d.at(i + 1) for i in range(h, m + 1))


def conj_majorized(s: HeadedPartition, r: HeadedPartition) -> bool:
    """Conjugate majorization ``s < r``: heads differ by one and
    ``r_i = s_i + 1`` holds up to the last index where ``r`` exceeds ``s``.
    """
    if r.at(0) != s.at(0) + 1:
        return False
    g = 0
    for i in range(1, max(r.support(), s.support()) + 1):
        if r.at(i) > s.at(i):
            g = i
    return all(r.at(i) == s.at(i) + 1 for i in range(g + 1))


def headed_conjugate(c: Chain) -> HeadedPartition:
    """Conjugate of a chain with its length as the head term."""
    return HeadedPartition(len(c), conjugate(c))


class ChainIndices(NamedTuple):
    ell: int
    f: int
    f_prime: int


def chain_indices(c: Chain, d: Chain) -> ChainIndices:
    """Crossing indices of two unequal chains of the same length.

    ``ell`` is the last index where the chains differ; ``f`` (``f_prime``)
    is the last index up to ``ell`` where ``c`` (``d``) falls strictly below
    the other chain's previous entry.  Both exist because index 0 reads +oo.
    """
    if len(c) != len(d):
        raise ValueError("chains must have equal length")
    if c.entries == d.entries:
        raise ValueError("chains must differ")
    ell = max(i for i in range(1, len(c) + 1) if c.at(i) != d.at(i))
    f = max(i for i in range(1, ell + 1) if c.at(i) < d.at(i - 1))
    f_prime = max(i for i in range(1, ell + 1) if d.at(i) < c.at(i - 1))
    return ChainIndices(ell, f, f_prime)


class HeadedIndices(NamedTuple):
    x: int
    e: int
    e_prime: int


def headed_indices(r: HeadedPartition, s: HeadedPartition) -> HeadedIndices:
    """First-disagreement indices of two headed partitions with equal heads.

    ``x`` is the first index where they differ; ``e`` (``e_prime``) is the
    first index >= x-1 after which ``s`` (``r``) catches up at the next
    position.  Exactly one of ``e``, ``e_prime`` equals ``x - 1``.
    """
    if r.at(0) != s.at(0):
        raise ValueError("heads must be equal")
    top = max(r.support(), s.support()) + 1
    try:
        x = next(i for i in range(top + 1) if r.at(i) != s.at(i))
    except StopIteration:
        raise ValueError("headed partitions must differ") from None
    e = next(i for i in range(x - 1, top + 1) if s.at(i + 1) >= r.at(i + 1))
    e_prime = next(i for i in range(x - 1, top + 1) if r.at(i + 1) >= s.at(i + 1))
    return HeadedIndices(x, e, e_prime)


class DropIndices(NamedTuple):
    g: int
    h: int


def drop_indices(c: Chain, d: Chain) -> DropIndices:
    """For ``c`` one entry longer than ``d``: ``h`` is the first index where
    ``d`` drops below ``c`` (``d`` reads -oo past its end, so ``h`` exists)
    and ``g`` is the last index where the headed conjugates differ.

    The identity ``g == c_h`` is asserted; it is what makes the two index
    systems interchangeable.
    """
    if len(c) != len(d) + 1:
        raise ValueError("first chain must be exactly one entry longer")
    m = len(d)
    h = next(i for i in range(1, m + 2) if d.at(i) < c.at(i))
    r = headed_conjugate(c)
    s = headed_conjugate(d)
    g = max(i for i in range(max(r.support(), s.support()) + 1) if r.at(i) > s.at(i))
    assert g == c.at(h), f"conjugate drop index {g} != chain entry {c.at(h)}"
    return DropIndices(g, h)


def chain_min(c: Chain, d: Chain) -> Chain:
    """Entrywise minimum of two chains of equal length."""
    if len(c) != len(d):
        raise ValueError("chains must have equal length")
    return Chain(tuple(min(x, y) for x, y in zip(c, d)))


def dominates_shifted(a: Partition, b: Partition, k: int) -> bool:
    """Whether ``a_j >= b_{j+k}`` for every j >= 1."""
    return all(a.at(j) >= b.at(j + k) for j in range(1, len(b) + 1))


def partition_to_json(p: Partition) -> list[int]:
    return list(p.parts)


def chain_to_json(c: Chain) -> list[int]:
    return list(c.entries)


def headed_to_json(hp: HeadedPartition) -> dict:
    return {"head": hp.head, "tail": list(hp.tail.parts)}

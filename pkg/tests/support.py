"""Shared enumeration helpers for the exhaustive test sweeps."""

from __future__ import annotations

from pencilkit.partitions import Chain
from pencilkit.pencil import KroneckerInvariants
from pencilkit.ratpoly import HomogPoly, poly


def partitions_of(n, maxpart=None):
    """All partitions of n with parts bounded by maxpart, largest first."""
    maxpart = n if maxpart is None else maxpart
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_at_most(n, parts):
    """Partitions of n into at most the given number of parts."""
    if n == 0:
        yield ()
        return
    if parts == 0:
        return

    def rec(rem, maxpart, slots):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rem, maxpart), 0, -1):
            for rest in rec(rem - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(n, n, parts)


def all_chains(length, max_entry):
    """All nonincreasing tuples of the given length with entries in
    [0, max_entry]."""
    if length == 0:
        yield ()
        return

    def rec(prefix, rem, cap):
        if rem == 0:
            yield tuple(prefix)
            return
        for v in range(cap, -1, -1):
            prefix.append(v)
            yield from rec(prefix, rem - 1, v)
            prefix.pop()

    yield from rec([], length, max_entry)


def chains_with_total(total, length):
    """Nonincreasing length-`length` chains of nonnegative integers with
    the given sum."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for p in partitions_at_most(total, length):
        yield p + (0,) * (length - len(p))


def monomial_factor(inf_exp, zero_mult):
    """Homogeneous factor with all finite content at the eigenvalue 0."""
    return HomogPoly(inf_exp, poly([0] * zero_mult + [1]))


def enumerate_invariants(p, q):
    """Every valid invariant record of shape (p, q) whose spectrum lies in
    {0, infinity}."""
    for rho in range(min(p, q) + 1):
        for deg_fin in range(rho + 1):
            for deg_inf in range(rho + 1 - deg_fin):
                for cmi_mass in range(rho + 1 - deg_fin - deg_inf):
                    rmi_mass = rho - deg_fin - deg_inf - cmi_mass
                    if cmi_mass and q - rho == 0:
                        continue
                    if rmi_mass and p - rho == 0:
                        continue
                    for nf in partitions_at_most(deg_fin, rho):
                        for ni in partitions_at_most(deg_inf, rho):
                            hif = [
                                monomial_factor(
                                    ni[i] if i < len(ni) else 0,
                                    nf[i] if i < len(nf) else 0,
                                )
                                for i in range(rho)
                            ]
                            hif.reverse()
                            for c in chains_with_total(cmi_mass, q - rho):
                                for u in chains_with_total(rmi_mass, p - rho):
                                    yield KroneckerInvariants(
                                        p, q, rho, tuple(hif), Chain(c), Chain(u)
                                    )

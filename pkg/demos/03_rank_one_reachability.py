"""Deciding whether a rank-one perturbation connects two pencil classes.

The worked pair here is [s 1] -> [s 0]: adding the rank-one pencil
[0 -1] turns one into the other, and the decision procedure confirms
reachability from the invariants alone.  Both formulations of the test
(minimal index chains, and their headed conjugate partitions) are shown.
"""

from pencilkit import (
    Pencil,
    decide_rank_one,
    decide_rank_one_conj,
    extract_invariants,
    normal_rank,
    pencil_add,
)

before = Pencil([[0, 1]], [[1, 0]])       # [s 1]
after = Pencil([[0, 0]], [[1, 0]])        # [s 0]
bump = Pencil([[0, -1]], [[0, 0]])        # the witness [0 -1]

print("witness has normal rank:", normal_rank(bump))
print("before + witness == after:", pencil_add(before, bump) == after)

ka = extract_invariants(before)
kb = extract_invariants(after)

chain = decide_rank_one(ka, kb)
print("\nchain form   :", chain.answer, "via case", chain.case_tag)
for key in ("ell", "f", "f_prime", "G", "min_sum", "crossing_max"):
    print(f"   {key:>12} = {chain.trace[key]}")

conj = decide_rank_one_conj(ka, kb)
print("conjugate form:", conj.answer, "via case", conj.case_tag)
for key in ("x_idx", "e", "e_prime", "G", "min_sum", "reach"):
    print(f"   {key:>12} = {conj.trace[key]}")

# an unreachable pair: a rank-one perturbation cannot move the rank by two
zero22 = Pencil([[0, 0], [0, 0]], [[0, 0], [0, 0]])
j02 = Pencil([[0, 1], [0, 0]], [[1, 0], [0, 1]])
verdict = decide_rank_one(extract_invariants(zero22), extract_invariants(j02))
print("\nzero pencil -> rank-two class:", verdict.answer)

# strictly equivalent inputs sit outside the characterization's scope
print("identical classes:", decide_rank_one(ka, ka).answer)

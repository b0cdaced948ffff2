"""Two independent routes to the generalized Weyr characteristic.

The direct route stacks the Jordan-chain recurrence into block matrices
and measures kernel projections; the formula route reads the same numbers
off the invariant data (conjugate partial multiplicities plus the headed
conjugate of the column minimal indices).  They agree everywhere,
including away from the spectrum, where only the singular column
structure survives.
"""

from fractions import Fraction

from pencilkit import (
    INFINITY,
    Pencil,
    extract_invariants,
    is_jordan_chain,
    l_space_dim,
    weyr_direct,
    weyr_from_invariants,
)

# diag(J_{0,2}, L_1): one eigenvalue-zero block, one singular column block
pen = Pencil(
    [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1]],
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]],
)
inv = extract_invariants(pen)

print("chain-space dimensions at 0:",
      [l_space_dim(pen, Fraction(0), ell) for ell in range(5)])

for lam in (Fraction(0), INFINITY, Fraction(7)):
    direct = weyr_direct(pen, lam)
    formula = weyr_from_invariants(inv, lam)
    label = "inf" if lam == INFINITY else str(lam)
    print(f"weyr at {label:>3}: direct {tuple(direct)}  formula {tuple(formula)}  "
          f"agree={direct == formula}")

# a Jordan chain of length 2 at the eigenvalue 0, checked against the
# defining recurrence (note the sign on the deeper vector)
chain = [(0, -1, 0, 0), (1, 0, 0, 0)]
print("\nis_jordan_chain(deep, bottom) at 0:", is_jordan_chain(pen, Fraction(0), chain))
print("flipping the sign breaks it      :",
      is_jordan_chain(pen, Fraction(0), [(0, 1, 0, 0), (1, 0, 0, 0)]))

"""Exact-arithmetic toolkit for matrix pencils: Kronecker invariants,
generalized Weyr characteristics, and rank-one perturbation analysis."""

from .partitions import (
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
from .pencil import (
    INFINITY,
    KroneckerInvariants,
    Pencil,
    RankOneSpec,
    build_rank_one,
    canonical_pencil,
    eval_at,
    extract_invariants,
    normal_rank,
    pencil_add,
    pencil_transpose,
    random_equiv,
    random_invariants,
    random_rank_one,
    spectrum,
    spectrum_from_invariants,
)
from .perturb import (
    BoundsProfile,
    DecisionResult,
    bounds_profile,
    check_bounds,
    conjugate_gap_ranges,
    decide_rank_one,
    decide_rank_one_conj,
    interlaces,
)
from .ratpoly import HomogPoly, hif_degree, hif_divides, hif_gcd, hif_lcm, poly, poly_gcd, poly_lcm
from .weyr import is_jordan_chain, l_space_dim, weyr_direct, weyr_from_invariants

__version__ = "0.1.0"

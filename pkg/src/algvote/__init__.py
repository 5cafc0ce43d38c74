"""Exact algebraic analysis of positional, pairwise and approval voting."""

from algvote.combinatorics import (
    Permutation,
    Shape,
    Tabloid,
    apply_permutation,
    enumerate_tabloids,
    rankings_of_tabloid,
    tabloid_index,
    tabloid_of_ranking,
)
from algvote.constructor import (
    OutcomeTarget,
    RankedApprovalProfile,
    approval_positional_paradox,
    approval_tally,
    construct_profile,
    normalize_to_counts,
)
from algvote.exactlinalg import (
    BACKEND,
    Subspace,
    kernel_basis,
    rank,
    row_space,
    rref,
    solve_affine,
    subspace_contains,
    subspace_intersection,
)
from algvote.pairsmaps import (
    borda_analogue,
    borda_analogue_tau,
    borda_vector,
    condorcet_winner,
    copeland_scores,
    pairs_matrix,
    pairs_vector,
    partial_pairs_matrix,
    phi_matrix,
    psi_matrix,
    recoverable,
    recoverable_weight_space,
    reversal_symmetric,
)
from algvote.positional import (
    WeightingVector,
    effective_space,
    effective_spaces_orthogonal,
    equivalent,
    lift_weights,
    ordinal,
    positional_matrix,
    sum_zero_decompose,
    tally,
)
from algvote.profiles import Profile, act_on_weights, lift, project

__version__ = "0.1.0"

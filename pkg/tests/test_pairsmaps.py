import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from algvote.combinatorics import Permutation, Shape, Tabloid, enumerate_tabloids
from algvote.exactlinalg import Subspace, matvec, row_space
from algvote.pairsmaps import (
    borda_analogue,
    borda_analogue_tau,
    borda_vector,
    condorcet_winner,
    copeland_scores,
    entry_sum_constant,
    head_to_head,
    pair_index,
    pairs_matrix,
    pairs_vector,
    partial_pairs_matrix,
    phi_matrix,
    psi_matrix,
    recoverable,
    recoverable_by_row_space,
    recoverable_sum_zero_dimension,
    recoverable_weight_space,
    reversal_symmetric,
)
from algvote.positional import lift_weights, ordinal, positional_matrix, tally
from algvote.profiles import Profile

from conftest import ELEVEN, brute_head_to_head, naive_rank, rankings

F = Fraction


def column(m, j):
    return [row[j] for row in m]


def pairs_at(n, col, value=1):
    idx = pair_index(n)
    return {pair for pair, i in idx.items() if col[i] == value}


def test_pair_order_lexicographic():
    assert list(pair_index(3)) == [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]


def test_column_of_ranking_3142():
    tabs = enumerate_tabloids(Shape.full(4))
    j = tabs.index(Tabloid([[3], [1], [4], [2]]))
    col = column(pairs_matrix(4), j)
    assert pairs_at(4, col) == {(3, 1), (3, 4), (3, 2), (1, 4), (1, 2), (4, 2)}
    assert sum(col) == 6


def test_two_candidates():
    assert pairs_matrix(2) == [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        pairs_matrix(1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_each_column_has_n_choose_2_ones(n):
    m = pairs_matrix(n)
    for j in range(math.factorial(n)):
        col = column(m, j)
        assert sorted(set(col)) == [0, 1]
        assert sum(col) == math.comb(n, 2)


def test_partial_column_example():
    tabs = enumerate_tabloids(Shape.top_k(4, 2))
    j = tabs.index(Tabloid([[2], [4], [1, 3]]))
    tau = F(1, 3)
    col = column(partial_pairs_matrix(4, 2, tau), j)
    assert pairs_at(4, col) == {(2, 4), (2, 1), (2, 3), (4, 1), (4, 3)}
    assert pairs_at(4, col, tau) == {(1, 3), (3, 1)}
    assert sum(1 for x in col if x) == 7


def test_partial_small_case():
    m = partial_pairs_matrix(3, 1, F(1, 2))
    j = enumerate_tabloids(Shape.top_k(3, 1)).index(Tabloid([[1], [2, 3]]))
    col = column(m, j)
    assert pairs_at(3, col) == {(1, 2), (1, 3)}
    assert pairs_at(3, col, F(1, 2)) == {(2, 3), (3, 2)}


def test_entry_sum_example():
    assert entry_sum_constant(4, 2, F(1, 2)) == 6
    assert all(sum(column(partial_pairs_matrix(4, 2, F(1, 2)), j)) == 6 for j in range(12))


@pytest.mark.parametrize("n, k", [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3)])
@pytest.mark.parametrize("tau", [0, F(1, 4), F(1, 2), 1])
def test_column_sums_constant(n, k, tau):
    m = partial_pairs_matrix(n, k, tau)
    e = entry_sum_constant(n, k, tau)
    assert all(sum(column(m, j)) == e for j in range(len(m[0])))


@pytest.mark.parametrize("args", [(4, 0, 0), (4, 3, 0), (2, 1, 0), (4, 2, F(3, 2)), (4, 2, -1)])
def test_partial_bad_arguments(args):
    with pytest.raises(ValueError):
        partial_pairs_matrix(*args)


def test_rank_of_pairs_matrix_four():
    m = pairs_matrix(4)
    # 1 + 3 + 3 from the trivial, standard and (2,1,1) pieces, by hook lengths
    assert naive_rank(m) == 7
    assert row_space(m).dim == 7


def test_copeland_and_condorcet_eleven_voters():
    v = pairs_vector(Profile([1, 1, 1], ELEVEN))
    assert copeland_scores(v) == [-2, 0, 2]
    assert condorcet_winner(v) == 3


def test_uniform_profile_has_no_winner():
    v = pairs_vector(Profile.uniform(Shape.full(4)))
    assert copeland_scores(v) == [0, 0, 0, 0]
    assert condorcet_winner(v) is None


def test_single_voter():
    p = Profile.indicator(Shape.full(3), Tabloid([[1], [2], [3]]))
    v = pairs_vector(p)
    assert copeland_scores(v) == [2, 0, -2]
    assert condorcet_winner(v) == 1


def test_head_to_head_rejects_bad_length():
    with pytest.raises(ValueError):
        head_to_head([1, 2, 3])


def test_pairs_vector_tau_rules():
    full = Profile.uniform(Shape.full(3))
    with pytest.raises(ValueError):
        pairs_vector(full, F(1, 2))
    partial = Profile.uniform(Shape.top_k(4, 2))
    with pytest.raises(ValueError):
        pairs_vector(partial)
    with pytest.raises(ValueError):
        pairs_vector(Profile.uniform((2, 2)), 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 5).flatmap(
    lambda n: st.lists(st.integers(0, 4), min_size=math.factorial(n), max_size=math.factorial(n))))
def test_pairs_agree_with_counting(coeffs):
    n = {6: 3, 24: 4, 120: 5}[len(coeffs)]
    counts = dict(zip(rankings(n), coeffs))
    wins = brute_head_to_head(n, counts)
    v = pairs_vector(Profile(Shape.full(n), coeffs))
    idx = pair_index(n)
    assert all(v[idx[i, j]] == wins[i][j] for i, j in idx)
    scores = [sum((wins[i][j] > wins[j][i]) - (wins[i][j] < wins[j][i]) for j in range(1, n + 1) if j != i)
              for i in range(1, n + 1)]
    assert copeland_scores(v) == scores
    beats_all = [i for i in range(1, n + 1) if all(wins[i][j] > wins[j][i] for j in range(1, n + 1) if j != i)]
    assert condorcet_winner(v) == (beats_all[0] if beats_all else None)


def test_pairs_vector_matches_matrix():
    rng = random.Random(5)
    for tau in (0, F(1, 3), 1):
        coeffs = [rng.randint(0, 5) for _ in range(20)]
        p = Profile(Shape.top_k(5, 2), coeffs)
        assert pairs_vector(p, tau) == matvec(partial_pairs_matrix(5, 2, tau), coeffs)


@pytest.mark.parametrize("n", [3, 4])
def test_borda_recoverable(n):
    m = pairs_matrix(n)
    w = borda_vector(n)
    assert recoverable(None, w, m)
    assert recoverable_by_row_space(None, w, m)


def test_plurality_not_recoverable():
    m = pairs_matrix(4)
    assert not recoverable(None, [1, 0, 0, 0], m)
    assert not recoverable_by_row_space(None, [1, 0, 0, 0], m)


@pytest.mark.parametrize("n, k", [(4, 1), (4, 2), (5, 2)])
@pytest.mark.parametrize("tau", [0, F(1, 2), 1])
def test_constant_weights_recoverable(n, k, tau):
    shape = Shape.top_k(n, k)
    m = partial_pairs_matrix(n, k, tau)
    assert recoverable(shape, [1] * shape.m, m)


def test_recoverable_checks_columns():
    with pytest.raises(ValueError):
        recoverable(None, [2, 1, 0], pairs_matrix(4))


@pytest.mark.parametrize("n", [3, 4])
def test_full_recoverable_space(n):
    space = recoverable_weight_space(Shape.full(n), pairs_matrix(n))
    assert space == Subspace.span([[1] * n, borda_vector(n)], n)


def _recoverable_by_residual(shape, w, m):
    """Independent route: every row of T_w is a rational combination of rows of m."""
    rows_m = [list(r) for r in m]
    base = naive_rank(rows_m)
    return all(naive_rank(rows_m + [list(r)]) == base for r in positional_matrix(shape, w))


@pytest.mark.parametrize("n", [3, 4])
def test_both_routes_agree_with_residual_oracle(n):
    rng = random.Random(n)
    m = pairs_matrix(n)
    full = Shape.full(n)
    candidates = [borda_vector(n), [1] + [0] * (n - 1), [F(rng.randint(-3, 3)) for _ in range(n)]]
    candidates.append([2 * x - 5 for x in borda_vector(n)])
    for w in candidates:
        oracle = _recoverable_by_residual(full, w, m)
        assert recoverable(full, w, m) == oracle
        assert recoverable_by_row_space(full, w, m) == oracle
        assert (w in recoverable_weight_space(full, m)) == oracle


@pytest.mark.parametrize("n, k", [(4, 2), (5, 2)])
@pytest.mark.parametrize("tau, dim", [(0, 3), (F(1, 4), 3), (F(1, 2), 2), (1, 3)])
def test_partial_recoverable_space(n, k, tau, dim):
    shape = Shape.top_k(n, k)
    m = partial_pairs_matrix(n, k, tau)
    space = recoverable_weight_space(shape, m)
    assert space.dim == dim
    assert list(borda_analogue(n, k).weights) in space
    assert list(borda_analogue_tau(n, k, tau).weights) in space
    assert space == Subspace.span(
        [[1] * shape.m, list(borda_analogue(n, k).weights), list(borda_analogue_tau(n, k, tau).weights)],
        shape.m)


@pytest.mark.parametrize("tau", [0, F(1, 2), 1])
def test_top_one_measured_dimension(tau):
    # with k = 1 the lifted hats of b and b^tau are parallel
    assert recoverable_weight_space(Shape.top_k(4, 1), partial_pairs_matrix(4, 1, tau)).dim == 2


@pytest.mark.parametrize("n, k", [(4, 2), (5, 2)])
def test_one_standard_copy_at_half(n, k):
    shape = Shape.top_k(n, k)
    assert recoverable_sum_zero_dimension(shape, partial_pairs_matrix(n, k, 0)) == 2
    assert recoverable_sum_zero_dimension(shape, partial_pairs_matrix(n, k, F(1, 2))) == 1


def test_measured_partial_ranks():
    assert naive_rank(partial_pairs_matrix(4, 2, 0)) == 12
    assert naive_rank(partial_pairs_matrix(4, 2, F(1, 2))) == 7


def test_borda_vectors():
    assert borda_vector(4) == [3, 2, 1, 0]
    assert borda_analogue(4, 2).weights == (3, 2, F(1, 2))
    assert borda_analogue_tau(4, 2, 0).weights == (3, 2, 0)
    assert borda_analogue_tau(4, 2, F(1, 2)) == borda_analogue(4, 2)
    with pytest.raises(ValueError):
        borda_analogue(4, 3)


def _identity_tabloid_column(n, k, tau):
    tabs = enumerate_tabloids(Shape.top_k(n, k))
    j = tabs.index(Tabloid([[i] for i in range(1, k + 1)] + [list(range(k + 1, n + 1))]))
    return column(partial_pairs_matrix(n, k, tau), j)


def _matmul_vec(a, v):
    # independent of library matvec: plain comprehension
    return [sum(F(x) * y for x, y in zip(row, v)) for row in a]


def test_psi_composition_example():
    col = _identity_tabloid_column(4, 2, 0)
    assert _matmul_vec(psi_matrix(4), col) == [3, 2, 0, 0]


def test_phi_composition_example():
    col = _identity_tabloid_column(4, 2, F(1, 2))
    assert _matmul_vec(phi_matrix(4, 2, F(1, 2)), col) == [3, 2, F(1, 2), F(1, 2)]


@pytest.mark.parametrize("n, k", [(4, 1), (4, 2), (5, 2), (5, 3)])
@pytest.mark.parametrize("tau", [0, F(1, 4), F(1, 2), 1])
def test_compositions_give_b_and_b_tau(n, k, tau):
    col = _identity_tabloid_column(n, k, tau)
    assert _matmul_vec(psi_matrix(n), col) == lift_weights(borda_analogue_tau(n, k, tau))
    assert _matmul_vec(phi_matrix(n, k, tau), col) == lift_weights(borda_analogue(n, k))


def test_psi_zero():
    assert matvec(psi_matrix(4), [0] * 12) == [0, 0, 0, 0]


def proof_vector(n, i):
    return [F(n - 2, 2) if i in pair else F(-1) for pair in pair_index(n)]


@pytest.mark.parametrize("n, k", [(4, 2), (5, 2), (5, 3)])
def test_proof_vectors(n, k):
    for i in range(1, n + 1):
        v = proof_vector(n, i)
        for tau in (0, F(1, 2), 1):
            assert not any(matvec(phi_matrix(n, k, tau), v))
        assert any(matvec(psi_matrix(n), v))


def test_reversal_symmetric_examples():
    assert reversal_symmetric([3, 2, 1, 0])
    assert reversal_symmetric([6, 5, 1, 0])
    assert not reversal_symmetric([1, 0, 0, 0])


def _reverse_ordinal(groups):
    return tuple(reversed(groups))


def test_plurality_reversal_counterexample():
    # one voter each for 1234 and 2134: plurality ties 1 and 2 on top; reversed, 3 and 4 share the top
    full = Shape.full(4)
    p = Profile.from_votes(full, {Tabloid([[1], [2], [3], [4]]): 1, Tabloid([[2], [1], [3], [4]]): 1})
    w = [1, 0, 0, 0]
    before = ordinal(tally(None, w, p))
    after = ordinal(tally(None, w, p.reversed_ballots()))
    assert after != _reverse_ordinal(before)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=24, max_size=24),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_reversal_criterion_matches_profiles(coeffs, w):
    p = Profile(Shape.full(4), coeffs)
    r = tally(None, w, p)
    rr = tally(None, w, p.reversed_ballots())
    if reversal_symmetric(w):
        assert ordinal(rr) == _reverse_ordinal(ordinal(r))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=12, max_size=12))
def test_condorcet_independent_of_tau(coeffs):
    p = Profile(Shape.top_k(4, 2), coeffs)
    winners = {condorcet_winner(pairs_vector(p, tau)) for tau in (0, F(1, 4), F(1, 2), 1)}
    assert len(winners) == 1


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(1, 5)), st.lists(st.integers(-2, 4), min_size=24, max_size=24),
       st.sampled_from([None, 0, F(1, 2)]))
def test_pairs_equivariant(s, coeffs, tau):
    sigma = Permutation(s)
    if tau is None:
        p = Profile(Shape.full(4), coeffs)
    else:
        p = Profile(Shape.top_k(4, 2), coeffs[:12])
    v, w = pairs_vector(p, tau), pairs_vector(p.permuted(sigma), tau)
    idx = pair_index(4)
    assert all(w[idx[sigma(i), sigma(j)]] == v[idx[i, j]] for i, j in idx)

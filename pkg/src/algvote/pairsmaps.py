"""Head-to-head data: the pairs maps, Copeland, Condorcet, and recoverability.

Pairs vectors live in Q^{n(n-1)}, indexed by ordered pairs ``(i, j)`` in
lexicographic order; entry ``(i, j)`` is the weight of "i over j".
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from algvote.combinatorics import Shape, enumerate_tabloids, ordered_pairs
from algvote.exactlinalg import (
    Subspace,
    as_fraction,
    as_vector,
    kernel_basis,
    matvec,
    null_vectors,
    row_space,
    subspace_contains,
)
from algvote.positional import WeightingVector, _weighting, lift_weights, positional_matrix
from algvote.profiles import Profile


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: idx for idx, pair in enumerate(ordered_pairs(n))}


def n_from_pairs_length(length: int) -> int:
    n = (1 + math.isqrt(1 + 4 * length)) // 2
    if n * (n - 1) != length or n < 2:
        raise ValueError(f"{length} is not n(n-1) for any n >= 2")
    return n


def check_tau(tau) -> Fraction:
    tau = as_fraction(tau)
    if not 0 <= tau <= 1:
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    return tau


def check_top_k(n: int, k: int) -> None:
    if n < 3:
        raise ValueError(f"partial pairs maps need n >= 3, got {n}")
    if not 1 <= k <= n - 2:
        raise ValueError(f"need 1 <= k <= n-2, got k={k} for n={n}")


def _pairs_column(rows: Sequence[Sequence[int]], n: int, tau: Fraction | None) -> list[Fraction]:
    """Image of one tabloid; all rows but the last must be singletons."""
    idx = pair_index(n)
    col = [Fraction(0)] * (n * (n - 1))
    above: list[int] = []
    for r in rows:
        if len(r) > 1:
            for a in r:
                for b in r:
                    if a != b:
                        col[idx[a, b]] = tau
        for c in r:
            for a in above:
                col[idx[a, c]] = Fraction(1)
        above.extend(r)
    return col


def pairs_matrix(n: int) -> list[list[Fraction]]:
    """The n(n-1) x n! matrix sending a ranking to the pairs it orders."""
    if n < 2:
        raise ValueError(f"pairs map needs n >= 2, got {n}")
    cols = [_pairs_column(t.rows, n, None) for t in enumerate_tabloids(Shape.full(n))]
    return [list(r) for r in zip(*cols)]


def partial_pairs_matrix(n: int, k: int, tau) -> list[list[Fraction]]:
    """Pairs map on top-k ballots; tied bottom candidates give ``tau`` to both orders."""
    check_top_k(n, k)
    tau = check_tau(tau)
    cols = [_pairs_column(t.rows, n, tau) for t in enumerate_tabloids(Shape.top_k(n, k))]
    return [list(r) for r in zip(*cols)]


def entry_sum_constant(n: int, k: int, tau) -> Fraction:
    """Common column sum of the partial pairs matrix."""
    check_top_k(n, k)
    tau = check_tau(tau)
    return sum(range(n - k, n)) + 2 * tau * math.comb(n - k, 2)


def pairs_vector(p: Profile, tau=None) -> list[Fraction]:
    """Apply the (partial) pairs map to a profile.

    Full-ranking profiles use the plain pairs map and reject ``tau``;
    top-k profiles need ``tau``.
    """
    shape, n = p.shape, p.n
    if shape.is_full():
        if tau is not None:
            raise ValueError("tau only applies to partial (top-k) profiles")
        tau_value = None
    else:
        if any(part != 1 for part in shape.parts[:-1]):
            raise ValueError(f"pairs maps need a top-k shape (1,...,1,n-k), got {shape}")
        check_top_k(n, shape.m - 1)
        if tau is None:
            raise ValueError("partial profiles need tau")
        tau_value = check_tau(tau)
    out = [Fraction(0)] * (n * (n - 1))
    for t, c in p.items():
        if c:
            for i, x in enumerate(_pairs_column(t.rows, n, tau_value)):
                if x:
                    out[i] += c * x
    return out


def head_to_head(v: Sequence) -> list[list[int]]:
    """``sign[i-1][j-1]``: +1 if i beats j, -1 if j beats i, 0 on a tie."""
    v = as_vector(v)
    n = n_from_pairs_length(len(v))
    idx = pair_index(n)
    sign = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                d = v[idx[i, j]] - v[idx[j, i]]
                sign[i - 1][j - 1] = (d > 0) - (d < 0)
    return sign


def copeland_scores(v: Sequence) -> list[int]:
    """Head-to-head wins minus losses; tied pairs count for neither."""
    return [sum(row) for row in head_to_head(v)]


def condorcet_winner(v: Sequence) -> int | None:
    sign = head_to_head(v)
    n = len(sign)
    for i in range(n):
        if all(sign[i][j] == 1 for j in range(n) if j != i):
            return i + 1
    return None


def _check_columns(shape: Shape, m: Sequence[Sequence]) -> None:
    if not m or len(m[0]) != shape.num_tabloids():
        cols = len(m[0]) if m else 0
        raise ValueError(f"matrix has {cols} columns, shape {shape} has {shape.num_tabloids()} tabloids")


def recoverable(shape: Shape | Sequence[int], w, m: Sequence[Sequence]) -> bool:
    """Whether the tally for ``w`` factors through ``m`` (ker m inside ker T_w)."""
    w = _weighting(shape, w)
    _check_columns(w.shape, m)
    t = positional_matrix(w.shape, w)
    return all(not any(matvec(t, u)) for u in null_vectors(m))


def recoverable_by_row_space(shape: Shape | Sequence[int], w, m: Sequence[Sequence]) -> bool:
    """Same question, answered as: effective space of T_w inside the row space of m."""
    w = _weighting(shape, w)
    _check_columns(w.shape, m)
    ncols = len(m[0])
    return subspace_contains(row_space(m, ncols), row_space(positional_matrix(w.shape, w), ncols))


def recoverable_weight_space(shape: Shape | Sequence[int], m: Sequence[Sequence]) -> Subspace:
    """All weighting vectors (in Q^{parts}) whose tally is recoverable from ``m``.

    Every kernel vector ``u`` of ``m`` must satisfy ``T_w u = 0``; that is
    linear in ``w``, one equation per (kernel vector, candidate).
    """
    shape = shape if isinstance(shape, Shape) else Shape(shape)
    _check_columns(shape, m)
    tabs = enumerate_tabloids(shape)
    positions = [t.row_positions() for t in tabs]
    constraints = []
    for u in null_vectors(m):
        rows = [[0] * shape.m for _ in range(shape.n)]
        for x, ux in enumerate(u):
            if ux:
                for cand, j in enumerate(positions[x]):
                    rows[cand][j] += ux
        constraints.extend(r for r in rows if any(r))
    if not constraints:
        return Subspace.full(shape.m)
    return kernel_basis(constraints, shape.m)


def borda_vector(n: int) -> list[Fraction]:
    if n < 2:
        raise ValueError(f"Borda count needs n >= 2, got {n}")
    return [Fraction(n - i) for i in range(1, n + 1)]


def borda_analogue(n: int, k: int) -> WeightingVector:
    """Borda for the top k, the average of the remaining Borda points below."""
    check_top_k(n, k)
    return WeightingVector(Shape.top_k(n, k),
                           [n - i for i in range(1, k + 1)] + [Fraction(n - k - 1, 2)])


def borda_analogue_tau(n: int, k: int, tau) -> WeightingVector:
    """Like :func:`borda_analogue`, with bottom weight ``tau (n-k-1)``."""
    check_top_k(n, k)
    tau = check_tau(tau)
    return WeightingVector(Shape.top_k(n, k),
                           [n - i for i in range(1, k + 1)] + [tau * (n - k - 1)])


def psi_matrix(n: int) -> list[list[Fraction]]:
    """Score of i = total weight of pairs (i, j)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    idx = pair_index(n)
    m = [[Fraction(0)] * len(idx) for _ in range(n)]
    for (i, j), col in idx.items():
        m[i - 1][col] = Fraction(1)
    return m


def phi_matrix(n: int, k: int, tau) -> list[list[Fraction]]:
    """Half of (net pairwise margin of i + (n-1)/E times the grand total)."""
    e = entry_sum_constant(n, k, tau)
    if e == 0:
        raise ArithmeticError("entry-sum constant is zero")
    idx = pair_index(n)
    share = Fraction(n - 1) / e
    m = [[share / 2] * len(idx) for _ in range(n)]
    for (i, j), col in idx.items():
        m[i - 1][col] += Fraction(1, 2)
        m[j - 1][col] -= Fraction(1, 2)
    return m


def reversal_symmetric(w: Sequence) -> bool:
    """``w + reversed(w)`` is constant, so reversing all ballots reverses the outcome."""
    w = as_vector(w)
    s = [a + b for a, b in zip(w, reversed(w))]
    return all(x == s[0] for x in s)


def recoverable_sum_zero_dimension(shape: Shape | Sequence[int], m: Sequence[Sequence]) -> int:
    """Dimension of the sum-zero parts of the recoverable weights.

    This counts the copies of the standard module S^(n-1,1) in the image of m.
    """
    shape = shape if isinstance(shape, Shape) else Shape(shape)
    space = recoverable_weight_space(shape, m)
    hats = []
    for b in space.basis:
        lifted = lift_weights(WeightingVector(shape, b))
        mean = sum(lifted) / len(lifted)
        hats.append([x - mean for x in lifted])
    return row_space(hats, shape.n).dim if hats else 0

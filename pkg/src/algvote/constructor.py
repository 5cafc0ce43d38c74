"""Build profiles with prescribed election outcomes.

Existence of such profiles is settled by exact linear solving, so every
answer is either a verified profile or a certificate of inconsistency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from algvote.combinatorics import Shape
from algvote.exactlinalg import Subspace, as_vector, rank, solve_affine, vstack
from algvote.positional import (
    WeightingVector,
    _weighting,
    lift_weights,
    positional_matrix,
    sum_zero_part,
    tally,
)
from algvote.profiles import Profile, act_on_weights


class ConstructionError(RuntimeError):
    """A constructed profile failed its own verification (a bug, never expected)."""


@dataclass(frozen=True)
class OutcomeTarget:
    weighting: WeightingVector
    target: tuple[Fraction, ...]

    def __init__(self, weighting, target: Sequence, shape=None):
        weighting = _weighting(shape, weighting)
        target = tuple(as_vector(target))
        if len(target) != weighting.shape.n:
            raise ValueError(f"target of length {len(target)} for {weighting.shape.n} candidates")
        if sum(target) != 0:
            raise ValueError(f"target {list(map(str, target))} is not sum-zero")
        object.__setattr__(self, "weighting", weighting)
        object.__setattr__(self, "target", target)


@dataclass(frozen=True)
class Construction:
    """A profile meeting every target, plus the kernel of the stacked system.

    Adding any kernel element to ``profile`` gives another solution.
    """

    profile: Profile
    kernel: Subspace

    def offset(self, coeffs: Sequence) -> Profile:
        """``profile`` plus the combination of kernel basis vectors with ``coeffs``."""
        coeffs = as_vector(coeffs)
        out = list(self.profile.coeffs)
        for c, b in zip(coeffs, self.kernel.basis):
            out = [x + c * y for x, y in zip(out, b)]
        return Profile(self.profile.shape, out)


def hats_independent(shape: Shape | Sequence[int], weightings: Sequence) -> bool:
    """Whether the sum-zero parts of the lifted weighting vectors are linearly independent."""
    shape = shape if isinstance(shape, Shape) else Shape(shape)
    hats = [sum_zero_part(lift_weights(_weighting(shape, w))) for w in weightings]
    return not hats or rank(hats, shape.n) == len(hats)


def construct_profile(shape: Shape | Sequence[int], targets: Sequence[OutcomeTarget]) -> Construction | None:
    """A profile ``p`` on ``shape`` with ``tally(w_i, p) == r_i`` for every target.

    Returns None when the stacked system is inconsistent.  When the lifted
    sum-zero weights are independent a solution always exists.
    """
    shape = shape if isinstance(shape, Shape) else Shape(shape)
    ncols = shape.num_tabloids()
    blocks, rhs = [], []
    for t in targets:
        if t.weighting.shape != shape:
            raise ValueError(f"target weights are for shape {t.weighting.shape}, not {shape}")
        blocks.append(positional_matrix(shape, t.weighting))
        rhs.extend(t.target)
    if not blocks:
        return Construction(Profile.zero(shape), Subspace.full(ncols))
    solved = solve_affine(vstack(*blocks), rhs, ncols)
    if solved is None:
        return None
    x, kernel = solved
    p = Profile(shape, x)
    for t in targets:
        if tally(shape, t.weighting, p) != list(t.target):
            raise ConstructionError("constructed profile misses a target")
    return Construction(p, kernel)


def normalize_to_counts(p: Profile) -> tuple[Profile, int, Fraction]:
    """Rescale and shift ``p`` into nonnegative integer voter counts.

    Returns ``(q, alpha, c)`` with ``q = alpha * p + c * (all ones)``.  The
    scale ``alpha`` is the least positive integer making all pairwise
    differences integral; ``c`` is then the least nonnegative shift giving
    integer, nonnegative entries.  Ordinal outcomes of every positional
    tally are unchanged; raw scores move by ``r -> alpha r + const``.
    """
    coeffs = p.coeffs
    if not coeffs:
        return p, 1, Fraction(0)
    alpha = math.lcm(*((x - coeffs[0]).denominator for x in coeffs))
    scaled = [alpha * x for x in coeffs]
    low = min(scaled)
    c = -low if low < 0 else math.ceil(low) - low
    q = Profile(p.shape, [x + c for x in scaled])
    return q, alpha, c


def approval_weights(n: int, i: int) -> list[Fraction]:
    """``i`` ones followed by ``n - i`` zeros."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= n-1, got i={i}, n={n}")
    return [Fraction(1)] * i + [Fraction(0)] * (n - i)


def approval_weights_hat(n: int, i: int) -> list[Fraction]:
    return [x - Fraction(i, n) for x in approval_weights(n, i)]


@dataclass(frozen=True)
class RankedApprovalProfile:
    """``blocks[i-1]`` holds the voters approving exactly their top ``i`` candidates."""

    blocks: tuple[Profile, ...]
    meta: dict = field(default_factory=dict, compare=False)

    def __init__(self, blocks: Sequence[Profile], meta: dict | None = None):
        blocks = tuple(blocks)
        if not blocks:
            raise ValueError("a ranked approval profile needs n-1 >= 1 blocks")
        n = blocks[0].n
        if len(blocks) != n - 1:
            raise ValueError(f"{n} candidates need {n - 1} blocks, got {len(blocks)}")
        for b in blocks:
            if not b.shape.is_full() or b.n != n:
                raise ValueError("every block must be a full-ranking profile on the same candidates")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "meta", dict(meta or {}))

    @property
    def n(self) -> int:
        return self.blocks[0].n

    @classmethod
    def zero(cls, n: int) -> "RankedApprovalProfile":
        return cls([Profile.zero(Shape.full(n)) for _ in range(n - 1)])

    def combined(self) -> Profile:
        """All voters together, ignoring their cutoffs."""
        out = self.blocks[0]
        for b in self.blocks[1:]:
            out = out + b
        return out


def approval_tally(rap: RankedApprovalProfile) -> tuple[list[Fraction], list[Fraction]]:
    """Approval scores and their sum-zero part."""
    n = rap.n
    scores = [Fraction(0)] * n
    for i, block in enumerate(rap.blocks, start=1):
        scores = [a + b for a, b in zip(scores, act_on_weights(block, approval_weights(n, i)))]
    return scores, sum_zero_part(scores)


def positional_outcome(rap: RankedApprovalProfile, w: Sequence) -> list[Fraction]:
    """Sum-zero part of the positional tally of all voters under ``w``."""
    return sum_zero_part(act_on_weights(rap.combined(), w))


def approval_positional_paradox(n: int, r_app: Sequence, r_pos: Sequence, w: Sequence) -> RankedApprovalProfile:
    """A ranked approval profile with approval outcome ``r_app`` and ``w``-outcome ``r_pos``.

    Only the first two blocks are used.  One block pins the approval outcome;
    the other is invisible to approval voting and fixes the positional one.
    ``meta["branch"]`` records which approval vector shared a block with ``w``.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    r_app, r_pos, w = as_vector(r_app), as_vector(r_pos), as_vector(w)
    for name, v in (("r_app", r_app), ("r_pos", r_pos), ("w", w)):
        if len(v) != n:
            raise ValueError(f"{name} must have length {n}")
        if sum(v) != 0:
            raise ValueError(f"{name} must be sum-zero")
    if not any(w):
        raise ValueError("w must be nontrivial")

    full = Shape.full(n)
    a1, a2 = approval_weights_hat(n, 1), approval_weights_hat(n, 2)
    # the block sharing the system with w needs its approval vector independent of w
    branch = 2 if hats_independent(full, [w, a2]) else 1
    pin, free = (a1, a2) if branch == 2 else (a2, a1)

    first = construct_profile(full, [OutcomeTarget(pin, r_app, full)])
    if first is None:
        raise ConstructionError("approval target unreachable")
    rest = [r - s for r, s in zip(r_pos, act_on_weights(first.profile, w))]
    second = construct_profile(full, [OutcomeTarget(free, [0] * n, full), OutcomeTarget(w, rest, full)])
    if second is None:
        raise ConstructionError("positional target unreachable")

    pinned, hidden = first.profile, second.profile
    p1, p2 = (pinned, hidden) if branch == 2 else (hidden, pinned)
    blocks = [p1, p2] + [Profile.zero(full) for _ in range(n - 3)]
    rap = RankedApprovalProfile(blocks, {"branch": branch})

    if approval_tally(rap)[1] != r_app or positional_outcome(rap, w) != r_pos:
        raise ConstructionError("paradox profile failed verification")
    return rap

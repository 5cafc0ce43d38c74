"""Positional voting: weighting vectors, the tally matrices, and effective spaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from algvote.combinatorics import Shape, enumerate_tabloids
from algvote.exactlinalg import (
    Subspace,
    as_vector,
    dot,
    fraction_str,
    matvec,
    rank,
    row_space,
)
from algvote.profiles import Profile, act_on_weights, lift


@dataclass(frozen=True)
class WeightingVector:
    """Points per row of a tabloid of ``shape``."""

    shape: Shape
    weights: tuple[Fraction, ...]

    def __init__(self, shape: Shape | Sequence[int], weights: Iterable):
        shape = shape if isinstance(shape, Shape) else Shape(shape)
        weights = tuple(as_vector(weights))
        if len(weights) != shape.m:
            raise ValueError(f"shape {shape} has {shape.m} rows, got {len(weights)} weights")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def full(cls, weights: Sequence) -> "WeightingVector":
        return cls(Shape.full(len(weights)), weights)

    def lifted(self) -> list[Fraction]:
        return lift_weights(self)

    def is_sum_zero(self) -> bool:
        return sum(self.lifted()) == 0

    def __str__(self) -> str:
        return "[" + ", ".join(fraction_str(x) for x in self.weights) + "]"


def _weighting(shape, w) -> WeightingVector:
    if isinstance(w, WeightingVector):
        if shape is not None:
            shape = shape if isinstance(shape, Shape) else Shape(shape)
            if w.shape != shape:
                raise ValueError(f"weighting vector for shape {w.shape}, expected {shape}")
        return w
    if shape is None:
        return WeightingVector.full(w)
    return WeightingVector(shape, w)


def lift_weights(w: WeightingVector) -> list[Fraction]:
    """Repeat each row weight once per slot in that row."""
    return [x for x, size in zip(w.weights, w.shape.parts) for _ in range(size)]


def sum_zero_decompose(v: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    """Split ``v`` into its all-ones component and its sum-zero component."""
    v = as_vector(v)
    if not v:
        return [], []
    mean = sum(v, Fraction(0)) / len(v)
    return [mean] * len(v), [x - mean for x in v]


def sum_zero_part(v: Sequence) -> list[Fraction]:
    return sum_zero_decompose(v)[1]


def _positive_multiple(a: list[Fraction], b: list[Fraction]) -> Fraction | None:
    """The ``g`` with ``a == g * b`` (``b`` nonzero), else None."""
    k = next(i for i, x in enumerate(b) if x)
    g = a[k] / b[k]
    if all(x == g * y for x, y in zip(a, b)):
        return g
    return None


def _hat_ratio(w: Sequence, x: Sequence):
    w, x = as_vector(w), as_vector(x)
    if len(w) != len(x):
        raise ValueError(f"length mismatch {len(w)} vs {len(x)}")
    wh, xh = sum_zero_part(w), sum_zero_part(x)
    w0, x0 = not any(wh), not any(xh)
    if w0 or x0:
        return "zero" if (w0 and x0) else None
    return _positive_multiple(wh, xh)


def equivalent(w: Sequence, x: Sequence) -> bool:
    """``x = a w + b 1`` for some ``a > 0``."""
    g = _hat_ratio(w, x)
    return g == "zero" or (g is not None and g > 0)


def reverse_equivalent(w: Sequence, x: Sequence) -> bool:
    """``w`` is equivalent to ``-x``."""
    return equivalent(w, [-a for a in as_vector(x)])


def positional_matrix(shape: Shape | Sequence[int], w) -> list[list[Fraction]]:
    """The n x |X^shape| matrix of the tally map."""
    w = _weighting(shape, w)
    tabs = enumerate_tabloids(w.shape)
    n = w.shape.n
    m = [[Fraction(0)] * len(tabs) for _ in range(n)]
    for col, t in enumerate(tabs):
        for j, row in enumerate(t.rows):
            for c in row:
                m[c - 1][col] = w.weights[j]
    return m


def tally(shape: Shape | Sequence[int] | None, w, p: Profile) -> list[Fraction]:
    """Points per candidate.

    ``shape`` may be None to take it from the profile.
    """
    w = _weighting(shape if shape is not None else p.shape, w)
    if p.shape != w.shape:
        raise ValueError(f"profile on {p.shape}, weights for {w.shape}")
    out = [Fraction(0)] * p.n
    for t, c in p.items():
        if c:
            for j, row in enumerate(t.rows):
                for cand in row:
                    out[cand - 1] += c * w.weights[j]
    return out


def tally_via_lift(w, p: Profile) -> list[Fraction]:
    """The same tally computed as the lifted profile acting on the lifted weights."""
    w = _weighting(p.shape, w)
    return act_on_weights(lift(p), lift_weights(w))


def ordinal(r: Sequence) -> tuple[tuple[int, ...], ...]:
    """Tie groups of candidates, highest score first."""
    r = as_vector(r)
    groups: dict[Fraction, list[int]] = {}
    for cand, score in enumerate(r, start=1):
        groups.setdefault(score, []).append(cand)
    return tuple(tuple(groups[s]) for s in sorted(groups, reverse=True))


def format_ordinal(groups: Sequence[Sequence[int]]) -> str:
    return " > ".join(" = ".join(f"c{c}" for c in g) for g in groups)


def effective_space(shape: Shape | Sequence[int] | None, w) -> Subspace:
    """Row space of the tally matrix, i.e. the orthogonal complement of its kernel."""
    w = _weighting(shape, w)
    return row_space(positional_matrix(w.shape, w), w.shape.num_tabloids())


def _nontrivial_sum_zero(v: list[Fraction], name: str) -> None:
    if sum(v) != 0:
        raise ValueError(f"{name} must be sum-zero, got entries summing to {sum(v)}")
    if not any(v):
        raise ValueError(f"{name} must be nonzero")


def effective_spaces_orthogonal(w: Sequence, x: Sequence) -> bool:
    """Whether every row of T_w is orthogonal to every row of T_x (full rankings)."""
    w, x = as_vector(w), as_vector(x)
    if len(w) != len(x):
        raise ValueError(f"length mismatch {len(w)} vs {len(x)}")
    _nontrivial_sum_zero(w, "w")
    _nontrivial_sum_zero(x, "x")
    ew = effective_space(None, w)
    ex = effective_space(None, x)
    return all(dot(a, b) == 0 for a in ew.basis for b in ex.basis)


def effective_dimension(shape, w) -> int:
    w = _weighting(shape, w)
    return rank(positional_matrix(w.shape, w))


def results_from_matrix(shape, w, p: Profile) -> list[Fraction]:
    """Tally by explicit matrix product (used as an independent route)."""
    return matvec(positional_matrix(shape, w), p.coeffs)

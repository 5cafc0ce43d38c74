"""Profiles on tabloid spaces, the lift/projection pair, and profiles acting on weights."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from algvote.combinatorics import (
    Permutation,
    Shape,
    Tabloid,
    apply_permutation,
    enumerate_tabloids,
    full_rankings,
    rankings_of_tabloid,
    tabloid_index,
    tabloid_of_ranking,
)
from algvote.exactlinalg import as_fraction, as_vector


@dataclass(frozen=True)
class Profile:
    """A rational function on the tabloids of ``shape``, in canonical order."""

    shape: Shape
    coeffs: tuple[Fraction, ...]

    def __init__(self, shape: Shape | Sequence[int], coeffs: Iterable):
        shape = shape if isinstance(shape, Shape) else Shape(shape)
        coeffs = tuple(as_vector(coeffs))
        if len(coeffs) != shape.num_tabloids():
            raise ValueError(
                f"shape {shape} has {shape.num_tabloids()} tabloids, got {len(coeffs)} coefficients")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, shape: Shape | Sequence[int]) -> "Profile":
        shape = shape if isinstance(shape, Shape) else Shape(shape)
        return cls(shape, [0] * shape.num_tabloids())

    @classmethod
    def uniform(cls, shape: Shape | Sequence[int], value=1) -> "Profile":
        shape = shape if isinstance(shape, Shape) else Shape(shape)
        return cls(shape, [value] * shape.num_tabloids())

    @classmethod
    def from_votes(cls, shape: Shape | Sequence[int], votes: Mapping[Tabloid, object]) -> "Profile":
        shape = shape if isinstance(shape, Shape) else Shape(shape)
        coeffs = [Fraction(0)] * shape.num_tabloids()
        for t, c in votes.items():
            coeffs[tabloid_index(shape, t)] += as_fraction(c)
        return cls(shape, coeffs)

    @classmethod
    def indicator(cls, shape: Shape | Sequence[int], t: Tabloid) -> "Profile":
        return cls.from_votes(shape, {t: 1})

    @property
    def n(self) -> int:
        return self.shape.n

    def tabloids(self) -> tuple[Tabloid, ...]:
        return enumerate_tabloids(self.shape)

    def items(self):
        return zip(self.tabloids(), self.coeffs)

    def __getitem__(self, t: Tabloid) -> Fraction:
        return self.coeffs[tabloid_index(self.shape, t)]

    def _check(self, other: "Profile") -> None:
        if other.shape != self.shape:
            raise ValueError(f"profiles on shapes {self.shape} and {other.shape}")

    def __add__(self, other: "Profile") -> "Profile":
        self._check(other)
        return Profile(self.shape, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Profile") -> "Profile":
        self._check(other)
        return Profile(self.shape, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Profile":
        return Profile(self.shape, [-a for a in self.coeffs])

    def scale(self, alpha) -> "Profile":
        alpha = as_fraction(alpha)
        return Profile(self.shape, [alpha * a for a in self.coeffs])

    __rmul__ = scale

    def total(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def is_voter_counts(self) -> bool:
        return all(c >= 0 and c.denominator == 1 for c in self.coeffs)

    def permuted(self, sigma: Permutation) -> "Profile":
        """The profile ``sigma . p``: the vote on ``t`` moves to ``sigma . t``."""
        out = [Fraction(0)] * len(self.coeffs)
        for t, c in self.items():
            out[tabloid_index(self.shape, apply_permutation(sigma, t))] = c
        return Profile(self.shape, out)

    def reversed_ballots(self) -> "Profile":
        """Every full-ranking ballot turned upside down."""
        if not self.shape.is_full():
            raise ValueError("ballot reversal is defined for full rankings")
        rev = {}
        for t, c in self.items():
            rev[Tabloid([e] for e in reversed(t.key))] = c
        return Profile.from_votes(self.shape, rev)


def lift(p: Profile) -> Profile:
    """Spread each tabloid's coefficient evenly over its full rankings."""
    n = p.n
    full = Shape.full(n)
    f = p.shape.class_size()
    out = [Fraction(0)] * full.num_tabloids()
    for t, c in p.items():
        if not c:
            continue
        share = c / f
        for ranking in rankings_of_tabloid(t):
            out[tabloid_index(full, Tabloid([e] for e in ranking))] += share
    return Profile(full, out)


def project(p: Profile, shape: Shape | Sequence[int]) -> Profile:
    """Collect each full ranking into the tabloid of ``shape`` containing it."""
    shape = shape if isinstance(shape, Shape) else Shape(shape)
    if not p.shape.is_full():
        raise ValueError(f"project expects a full-ranking profile, got shape {p.shape}")
    if shape.n != p.n:
        raise ValueError(f"shape {shape} is not a composition of {p.n}")
    out = [Fraction(0)] * shape.num_tabloids()
    for ranking, c in zip(full_rankings(p.n), p.coeffs):
        if c:
            out[tabloid_index(shape, tabloid_of_ranking(shape, ranking))] += c
    return Profile(shape, out)


def permute_vector(sigma: Permutation, v: Sequence) -> list[Fraction]:
    """``sigma . v`` on Q^n: entry ``j`` moves to position ``sigma(j)``."""
    if len(v) != sigma.n:
        raise ValueError(f"vector of length {len(v)} vs permutation on {sigma.n}")
    out = [Fraction(0)] * len(v)
    for j, x in enumerate(v, start=1):
        out[sigma(j) - 1] = as_fraction(x)
    return out


def act_on_weights(p: Profile, w: Sequence) -> list[Fraction]:
    """``p . w`` with ``p`` read as an element of the group algebra QS_n.

    A ballot ranking candidate ``order[j]`` in position ``j`` is the
    permutation ``j -> order[j]``, and sends weight ``w[j]`` to that
    candidate.
    """
    if not p.shape.is_full():
        raise ValueError(f"profiles act on weights only from full rankings, got shape {p.shape}")
    w = as_vector(w)
    if len(w) != p.n:
        raise ValueError(f"weights of length {len(w)} for {p.n} candidates")
    out = [Fraction(0)] * p.n
    for ranking, c in zip(full_rankings(p.n), p.coeffs):
        if c:
            for weight, cand in zip(w, ranking):
                out[cand - 1] += c * weight
    return out

"""Tabloids, their canonical order, and the symmetric group acting on them.

Candidates are the integers ``1..n``.  A tabloid is stored with every row
sorted ascending; the canonical order compares the flattened rows
lexicographically, which for full rankings gives 123 < 132 < 213 < ...
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Shape:
    """A composition of ``n``: the row sizes of a tabloid."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("shape must have at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"shape parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    def is_full(self) -> bool:
        return all(p == 1 for p in self.parts)

    def class_size(self) -> int:
        """Number of full rankings inside one tabloid of this shape."""
        return math.prod(math.factorial(p) for p in self.parts)

    def num_tabloids(self) -> int:
        return math.factorial(self.n) // self.class_size()

    @classmethod
    def full(cls, n: int) -> "Shape":
        return cls((1,) * n)

    @classmethod
    def top_k(cls, n: int, k: int) -> "Shape":
        """The "rank only your top k" shape ``(1^k, n-k)``."""
        if not 0 <= k < n:
            raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
        return cls((1,) * k + (n - k,))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True, order=True)
class Tabloid:
    """An ordered set partition of the candidates, rows sorted ascending.

    Dataclass ordering on ``key`` is the canonical order.
    """

    key: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(sorted(int(e) for e in r)) for r in rows)
        flat = tuple(e for r in rows for e in r)
        if any(len(r) == 0 for r in rows):
            raise ValueError("tabloid rows must be nonempty")
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(f"tabloid entries must be 1..n exactly once, got {rows}")
        object.__setattr__(self, "key", flat)
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.key)

    @property
    def shape(self) -> Shape:
        return Shape(len(r) for r in self.rows)

    def row_of(self, candidate: int) -> int:
        for j, r in enumerate(self.rows):
            if candidate in r:
                return j
        raise ValueError(f"candidate {candidate} not in tabloid")

    def row_positions(self) -> tuple[int, ...]:
        """``pos[c-1]`` is the (0-based) row holding candidate ``c``."""
        pos = [0] * self.n
        for j, r in enumerate(self.rows):
            for c in r:
                pos[c - 1] = j
        return tuple(pos)

    def __str__(self) -> str:
        return "|".join(" ".join(map(str, r)) for r in self.rows)

    @classmethod
    def parse(cls, text: str) -> "Tabloid":
        """Parse the ``"2 5|1 3|4"`` text form."""
        try:
            return cls([int(tok) for tok in row.split()] for row in text.split("|"))
        except ValueError as exc:
            raise ValueError(f"bad tabloid {text!r}: {exc}") from None


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``1..n``; ``images[j-1] = sigma(j)``."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..n: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(j) = self(other(j))
        if self.n != other.n:
            raise ValueError("permutations of different sizes")
        return Permutation(self.images[o - 1] for o in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for j, s in enumerate(self.images, start=1):
            inv[s - 1] = j
        return Permutation(inv)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a - 1] = b
        return cls(images)


# A full ranking is the tuple of candidates from top to bottom.  It is the
# permutation sigma with sigma(j) = order[j-1].
FullRanking = tuple


def ranking_to_permutation(order: Sequence[int]) -> Permutation:
    return Permutation(order)


def _check_shape(shape: Shape | Sequence[int]) -> Shape:
    return shape if isinstance(shape, Shape) else Shape(shape)


@lru_cache(maxsize=None)
def _enumerate(parts: tuple[int, ...]) -> tuple[Tabloid, ...]:
    n = sum(parts)

    def fill(remaining: tuple[int, ...], j: int):
        if j == len(parts):
            yield ()
            return
        for row in itertools.combinations(remaining, parts[j]):
            rest = tuple(c for c in remaining if c not in row)
            for tail in fill(rest, j + 1):
                yield (row,) + tail

    # combinations() emits rows in lexicographic order, so the recursion
    # already yields tabloids in canonical order.
    return tuple(Tabloid(rows) for rows in fill(tuple(range(1, n + 1)), 0))


def enumerate_tabloids(shape: Shape | Sequence[int]) -> tuple[Tabloid, ...]:
    """All tabloids of ``shape`` in canonical order."""
    return _enumerate(_check_shape(shape).parts)


@lru_cache(maxsize=None)
def _index_map(parts: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    return {t.key: i for i, t in enumerate(_enumerate(parts))}


def tabloid_index(shape: Shape | Sequence[int], t: Tabloid) -> int:
    shape = _check_shape(shape)
    if t.shape != shape:
        raise ValueError(f"tabloid {t} does not have shape {shape}")
    return _index_map(shape.parts)[t.key]


def tabloid_at(shape: Shape | Sequence[int], index: int) -> Tabloid:
    return enumerate_tabloids(shape)[index]


def apply_permutation(sigma: Permutation, t: Tabloid) -> Tabloid:
    """Replace each entry ``e`` of ``t`` by ``sigma(e)``."""
    if sigma.n != t.n:
        raise ValueError(f"permutation on {sigma.n} letters, tabloid on {t.n}")
    return Tabloid(tuple(sigma(e) for e in r) for r in t.rows)


def rankings_of_tabloid(t: Tabloid) -> list[tuple[int, ...]]:
    """The full rankings whose consecutive row blocks reproduce ``t``."""
    blocks = [itertools.permutations(r) for r in t.rows]
    out = [tuple(e for b in combo for e in b) for combo in itertools.product(*blocks)]
    out.sort()
    return out


def tabloid_of_ranking(shape: Shape | Sequence[int], ranking: Sequence[int]) -> Tabloid:
    shape = _check_shape(shape)
    if len(ranking) != shape.n:
        raise ValueError(f"ranking of {len(ranking)} candidates, shape of size {shape.n}")
    rows, start = [], 0
    for p in shape.parts:
        rows.append(ranking[start:start + p])
        start += p
    return Tabloid(rows)


def full_rankings(n: int) -> tuple[tuple[int, ...], ...]:
    """All n! rankings in canonical order (same order as the full-shape tabloids)."""
    return tuple(t.key for t in enumerate_tabloids(Shape.full(n)))


def ordered_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Ordered pairs ``(i, j)``, ``i != j``, in lexicographic order."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j)

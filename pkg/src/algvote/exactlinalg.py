"""Dense exact-rational linear algebra.

Matrices are lists of rows of :class:`fractions.Fraction` (plain ints are
accepted on input).  Nothing here ever touches floating point.  Functions
never mutate their arguments.

Row reduction goes through a fraction-free integer kernel.  The compiled
version (``algvote._rref``) is used when it was built; set
``ALGVOTE_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from algvote import _rref_py

if os.environ.get("ALGVOTE_PURE_PYTHON"):
    _rref_int = _rref_py.rref_int
    BACKEND = "python"
else:
    try:
        from algvote._rref import rref_int as _rref_int
        BACKEND = "cython"
    except ImportError:  # extension not built
        _rref_int = _rref_py.rref_int
        BACKEND = "python"

Vector = list
Matrix = list


def as_fraction(x) -> Fraction:
    """Exact conversion of ints, Fractions and ``"p/q"`` strings.  Floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational: {x!r}") from None
    raise TypeError(f"refusing inexact or unknown value {x!r} of type {type(x).__name__}")


def as_vector(v: Iterable) -> list[Fraction]:
    return [as_fraction(x) for x in v]


def as_matrix(m: Iterable[Iterable]) -> list[list[Fraction]]:
    rows = [as_vector(r) for r in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def fraction_str(x: Fraction) -> str:
    x = as_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _ncols(m: Sequence[Sequence], ncols: int | None) -> int:
    if ncols is not None:
        if m and len(m[0]) != ncols:
            raise ValueError(f"matrix has {len(m[0])} columns, expected {ncols}")
        return ncols
    if not m:
        raise ValueError("empty matrix needs an explicit column count")
    return len(m[0])


def _integer_row(row: Sequence) -> list[int]:
    row = [as_fraction(x) for x in row]
    den = math.lcm(*(x.denominator for x in row)) if row else 1
    return [x.numerator * (den // x.denominator) for x in row]


def _reduce_integer(m: Sequence[Sequence], ncols: int) -> tuple[list[list[int]], list[int]]:
    rows = [_integer_row(r) for r in m]
    rows, pivots = _rref_int(rows, ncols)
    return rows[:len(pivots)], pivots


def rref(m: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (zero rows kept at the bottom) and pivot columns."""
    ncols = _ncols(m, ncols)
    rows, pivots = _reduce_integer(m, ncols)
    out = []
    for row, c in zip(rows, pivots):
        lead = row[c]
        out.append([Fraction(x, lead) for x in row])
    out.extend([Fraction(0)] * ncols for _ in range(len(m) - len(out)))
    return out, pivots


def rank(m: Sequence[Sequence], ncols: int | None = None) -> int:
    if not m:
        return 0
    return len(_reduce_integer(m, _ncols(m, ncols))[1])


def null_vectors(m: Sequence[Sequence], ncols: int | None = None) -> list[list[int]]:
    """A basis of the kernel with integer entries, one vector per free column.

    Cheaper than :func:`kernel_basis` because the result is not put into
    canonical form.
    """
    ncols = _ncols(m, ncols)
    rows, pivots = _reduce_integer(m, ncols) if m else ([], [])
    pivot_set = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        # x_f = L, x_p = -L * row[f] / row[p]
        den = math.lcm(*(row[p] for row, p in zip(rows, pivots) if row[f])) if rows else 1
        den = abs(den) or 1
        v = [0] * ncols
        v[f] = den
        for row, p in zip(rows, pivots):
            if row[f]:
                v[p] = -den * row[f] // row[p]
        g = math.gcd(*v)
        out.append([x // g for x in v])
    return out


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^d stored by the RREF of a basis.

    The stored basis is canonical, so ``==`` is subspace equality.
    """

    ambient: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Iterable], ambient: int) -> "Subspace":
        vectors = [as_vector(v) for v in vectors]
        if any(len(v) != ambient for v in vectors):
            raise ValueError(f"vectors must have length {ambient}")
        if not vectors:
            return cls(ambient, ())
        rows, pivots = rref(vectors, ambient)
        return cls(ambient, tuple(tuple(r) for r in rows[:len(pivots)]))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.span(identity(ambient), ambient)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(row) if x) for row in self.basis]

    def reduce(self, v: Sequence) -> list[Fraction]:
        """Residual of ``v`` after clearing every pivot column of the basis."""
        v = as_vector(v)
        if len(v) != self.ambient:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.ambient}")
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def __contains__(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def contains(self, other: "Subspace") -> bool:
        return subspace_contains(self, other)

    def complement(self) -> "Subspace":
        """Orthogonal complement under the standard dot product."""
        if not self.basis:
            return Subspace.full(self.ambient)
        return kernel_basis(self.basis, self.ambient)

    def __str__(self) -> str:
        inner = ", ".join("[" + ", ".join(fraction_str(x) for x in row) + "]" for row in self.basis)
        return f"span{{{inner}}} in Q^{self.ambient}"


def kernel_basis(m: Sequence[Sequence], ncols: int | None = None) -> Subspace:
    ncols = _ncols(m, ncols)
    return Subspace.span(null_vectors(m, ncols), ncols)


def row_space(m: Sequence[Sequence], ncols: int | None = None) -> Subspace:
    ncols = _ncols(m, ncols)
    return Subspace.span(m, ncols)


def _same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient != b.ambient:
        raise ValueError(f"ambient dimensions differ: {a.ambient} vs {b.ambient}")


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True iff ``b`` is a subspace of ``a``."""
    _same_ambient(a, b)
    return all(v in a for v in b.basis)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    _same_ambient(a, b)
    # a & b = (a^perp + b^perp)^perp
    perp = list(a.complement().basis) + list(b.complement().basis)
    if not perp:
        return Subspace.full(a.ambient)
    return kernel_basis(perp, a.ambient)


def solve_affine(m: Sequence[Sequence], rhs: Sequence, ncols: int | None = None):
    """Solve ``m x = rhs`` exactly.

    Returns ``(particular, kernel)`` where every solution is ``particular``
    plus an element of ``kernel``, or ``None`` when the system is
    inconsistent.
    """
    ncols = _ncols(m, ncols)
    rhs = as_vector(rhs)
    if len(rhs) != len(m):
        raise ValueError(f"rhs has length {len(rhs)}, matrix has {len(m)} rows")
    aug = [list(row) + [b] for row, b in zip(m, rhs)]
    rows, pivots = rref(aug, ncols + 1) if aug else ([], [])
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(rows, pivots):
        x[p] = row[ncols]
    kernel = kernel_basis([row[:ncols] for row in rows[:len(pivots)]], ncols)
    return x, kernel


def identity(d: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]


def zeros(rows: int, cols: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * cols for _ in range(rows)]


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"length mismatch {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def matvec(m: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    if m and len(m[0]) != len(v):
        raise ValueError(f"matrix has {len(m[0])} columns, vector length {len(v)}")
    return [dot(row, v) for row in m]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)]


def vstack(*blocks: Sequence[Sequence]) -> list[list]:
    return [list(row) for block in blocks for row in block]

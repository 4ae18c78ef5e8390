"""Exact integer linear algebra helpers.

Everything here works over the rationals but keeps integer representatives:
rows are cross-multiplied during elimination and renormalized by their gcd, so
no floating point or Fraction arithmetic appears on the hot paths.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

IntVec = tuple[int, ...]


def _normalize(row: list[int]) -> tuple[int, ...] | None:
    """Divide by the gcd and make the leading nonzero entry positive."""
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            break
    if g == 0:
        return None
    lead = next(x for x in row if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in row)


class RowSpace:
    """Incremental echelon basis for the row span of integer vectors."""

    def __init__(self, dim: int):
        self.dim = dim
        self.pivots: list[tuple[int, tuple[int, ...]]] = []  # (pivot col, row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...] | None:
        """Reduce *vec* against the basis; None if it lies in the span."""
        row = list(vec)
        for col, piv in self.pivots:
            c = row[col]
            if c:
                p = piv[col]
                for i in range(self.dim):
                    row[i] = p * row[i] - c * piv[i]
        return _normalize(row)

    def add(self, vec: Sequence[int]) -> bool:
        """Insert *vec*; return True if it increased the rank."""
        residue = self.reduce(vec)
        if residue is None:
            return False
        col = next(i for i, x in enumerate(residue) if x != 0)
        self.pivots.append((col, residue))
        return True

    def contains(self, vec: Sequence[int]) -> bool:
        return self.reduce(vec) is None

    def copy(self) -> "RowSpace":
        dup = RowSpace(self.dim)
        dup.pivots = list(self.pivots)
        return dup


def int_rank(rows: Iterable[Sequence[int]], dim: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    space = RowSpace(dim if dim is not None else len(rows[0]))
    for r in rows:
        space.add(r)
    return space.rank


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of integer points (-1 for no points)."""
    if not points:
        return -1
    p0 = points[0]
    return int_rank(
        [tuple(a - b for a, b in zip(p, p0)) for p in points[1:]],
        dim=len(p0),
    )


def nullspace_vector(rows: Sequence[Sequence[int]], dim: int) -> IntVec | None:
    """Primitive integer kernel vector when the kernel is one-dimensional.

    Returns None if the kernel is trivial or has dimension >= 2.
    """
    space = RowSpace(dim)
    for r in rows:
        space.add(r)
    if space.rank != dim - 1:
        return None
    # Back-substitute: the free column is the one without a pivot.
    pivot_cols = {c for c, _ in space.pivots}
    free = next(i for i in range(dim) if i not in pivot_cols)
    sol = [0] * dim
    sol[free] = 1
    # Each basis row is zero at the pivot columns of earlier rows, so solving
    # in reverse insertion order determines one pivot unknown at a time.
    for col, row in reversed(space.pivots):
        s = sum(row[i] * sol[i] for i in range(dim) if i != col)
        p = row[col]
        g = gcd(p, s)
        scale = abs(p) // g if g else 1
        if scale != 1:
            sol = [x * scale for x in sol]
            s *= scale
        sol[col] = -s // p
    return _normalize(sol)

"""Exact convex polytopes from integer point sets.

Points are reduced to integer coordinates inside their affine hull, facets are
found as affinely-spanning hyperplanes with all points on one side, and the
face lattice is generated by intersecting facet vertex sets.  All arithmetic
is exact (integers and Fractions), so results like f-vectors and lattice-point
lists carry no numerical tolerance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .config import DEFAULT_LIMITS, Limits
from .errors import DomainError
from .linalg import RowSpace, affine_rank, int_rank, nullspace_vector

IntPoint = tuple[int, ...]


@dataclass(frozen=True)
class Facet:
    normal: IntPoint  # inner normal in reduced coordinates
    offset: int  # facet hyperplane is normal . x = offset, inside is >=
    vertex_indices: frozenset[int]


@dataclass(frozen=True)
class Polytope:
    """A polytope with both ambient and reduced integer coordinates."""

    ambient_points: tuple[IntPoint, ...]  # distinct input points
    points: tuple[IntPoint, ...]  # same points in reduced coordinates
    dim: int
    facets: tuple[Facet, ...]
    vertex_indices: tuple[int, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_indices)

    def vertices(self) -> list[IntPoint]:
        return [self.ambient_points[i] for i in self.vertex_indices]

    # -- membership ---------------------------------------------------------

    def _reduce_ambient(self, point: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
        """Map an ambient point into reduced coordinates; None if off the hull."""
        base = self.ambient_points[0]
        diff = [Fraction(x) - b for x, b in zip(point, base)]
        # solve reduced-basis system: ambient diff = sum_j coords[j] * basis[j]
        basis = _hull_basis(self.ambient_points)
        coords = _solve_exact(basis, diff)
        if coords is None:
            return None
        scale = _hull_scale(self.ambient_points)
        return tuple(c * scale for c in coords)

    def contains_point(self, point: Sequence[int | Fraction]) -> bool:
        if len(point) != len(self.ambient_points[0]):
            raise DomainError("point has wrong ambient dimension")
        reduced = self._reduce_ambient([Fraction(x) for x in point])
        if reduced is None:
            return False
        for f in self.facets:
            val = sum(a * x for a, x in zip(f.normal, reduced))
            if val < f.offset:
                return False
        return True

    def contains_origin(self) -> bool:
        return self.contains_point([0] * len(self.ambient_points[0]))

    # -- faces --------------------------------------------------------------

    def face_lattice(self) -> list[frozenset[int]]:
        """All faces as vertex-index sets, including the empty face and P."""
        verts = frozenset(self.vertex_indices)
        faces = {verts, frozenset()}
        frontier = [frozenset(f.vertex_indices) for f in self.facets]
        faces.update(frontier)
        while frontier:
            nxt = []
            for face in frontier:
                for f in self.facets:
                    inter = face & f.vertex_indices
                    if inter not in faces:
                        faces.add(inter)
                        nxt.append(inter)
            frontier = nxt
        return sorted(faces, key=lambda s: (len(s), sorted(s)))

    def f_vector(self) -> list[int]:
        """Face counts by dimension from -1 (empty face) to dim (P itself)."""
        counts = [0] * (self.dim + 2)
        for face in self.face_lattice():
            if not face:
                d = -1
            else:
                d = affine_rank([self.points[i] for i in face])
            counts[d + 1] += 1
        return counts

    # -- lattice points -----------------------------------------------------

    def lattice_points(self, limits: Limits = DEFAULT_LIMITS) -> list[IntPoint]:
        """Integer ambient points inside the polytope, by bounding-box scan."""
        verts = self.vertices()
        ambient_dim = len(verts[0])
        limits.require("max_lattice_dim", ambient_dim)
        lo = [min(v[i] for v in verts) for i in range(ambient_dim)]
        hi = [max(v[i] for v in verts) for i in range(ambient_dim)]
        volume = 1
        for a, b in zip(lo, hi):
            volume *= b - a + 1
        limits.require("max_box_volume", volume)
        out = []
        for cand in itertools.product(
            *(range(a, b + 1) for a, b in zip(lo, hi))
        ):
            if self.contains_point(cand):
                out.append(cand)
        return out


def _dedup(points: Sequence[Sequence[int]]) -> tuple[IntPoint, ...]:
    seen = {}
    for p in points:
        seen.setdefault(tuple(int(x) for x in p), None)
    return tuple(seen)


def _hull_basis(points: tuple[IntPoint, ...]) -> list[IntPoint]:
    """Echelon basis for the span of the difference vectors."""
    base = points[0]
    space = RowSpace(len(base))
    for p in points[1:]:
        space.add(tuple(a - b for a, b in zip(p, base)))
    return [row for _, row in space.pivots]


def _hull_scale(points: tuple[IntPoint, ...]) -> int:
    """LCM denominator clearing factor for coordinates in the hull basis."""
    basis = _hull_basis(points)
    base = points[0]
    denoms = [1]
    for p in points[1:]:
        diff = [Fraction(a - b) for a, b in zip(p, base)]
        coords = _solve_exact(basis, diff)
        assert coords is not None
        denoms.extend(c.denominator for c in coords)
    return lcm(*denoms)


def _solve_exact(
    basis: list[IntPoint], target: list[Fraction]
) -> list[Fraction] | None:
    """Coordinates of *target* in the row span of *basis*, or None."""
    if not basis:
        return [] if all(x == 0 for x in target) else None
    coords = []
    residue = list(target)
    for row in basis:
        pivot = next(i for i, x in enumerate(row) if x != 0)
        c = residue[pivot] / row[pivot]
        coords.append(c)
        residue = [r - c * x for r, x in zip(residue, row)]
    if any(x != 0 for x in residue):
        return None
    return coords


def polytope_from_columns(
    columns: Sequence[Sequence[int]], limits: Limits = DEFAULT_LIMITS
) -> Polytope:
    """Convex hull data for a set of integer points."""
    ambient = _dedup(columns)
    if not ambient:
        raise DomainError("no points given")
    limits.require("max_polytope_points", len(ambient))

    basis = _hull_basis(ambient)
    dim = len(basis)
    limits.require("max_polytope_dim", dim)
    scale = _hull_scale(ambient)
    base = ambient[0]
    reduced = []
    for p in ambient:
        coords = _solve_exact(basis, [Fraction(a - b) for a, b in zip(p, base)])
        assert coords is not None
        point = tuple(int(c * scale) for c in coords)
        reduced.append(point)
    reduced = tuple(reduced)

    facets = _find_facets(reduced, dim)
    vertex_indices = _find_vertices(reduced, dim, facets)
    return Polytope(ambient, reduced, dim, tuple(facets), tuple(vertex_indices))


def _find_facets(points: tuple[IntPoint, ...], dim: int) -> list[Facet]:
    if dim == 0:
        return []
    seen: set[tuple[IntPoint, int]] = set()
    facets: list[Facet] = []
    for combo in itertools.combinations(range(len(points)), dim):
        pts = [points[i] for i in combo]
        base = pts[0]
        rows = [tuple(a - b for a, b in zip(p, base)) for p in pts[1:]]
        if int_rank(rows, dim) != dim - 1:
            continue
        normal = nullspace_vector(rows, dim)
        if normal is None:
            continue
        offset = sum(a * b for a, b in zip(normal, base))
        lo = hi = False
        tight = []
        for i, p in enumerate(points):
            val = sum(a * b for a, b in zip(normal, p))
            if val > offset:
                hi = True
            elif val < offset:
                lo = True
            else:
                tight.append(i)
            if lo and hi:
                break
        if lo and hi:
            continue
        if lo:  # flip so the polytope satisfies normal . x >= offset
            normal = tuple(-a for a in normal)
            offset = -offset
        key = (normal, offset)
        if key in seen:
            continue
        seen.add(key)
        facets.append(Facet(normal, offset, frozenset(tight)))
    return facets


def _find_vertices(
    points: tuple[IntPoint, ...], dim: int, facets: list[Facet]
) -> list[int]:
    if dim == 0:
        return [0]
    out = []
    for i in range(len(points)):
        normals = [f.normal for f in facets if i in f.vertex_indices]
        if int_rank(normals, dim) == dim:
            out.append(i)
    return out


# ---------------------------------------------------------------------------
# root polytope comparison


@dataclass(frozen=True)
class RootPolytopeReport:
    k: int
    dim: int
    n_vertices: int
    n_edges: int
    n_facets: int
    n_lattice_points: int
    facet_grids_ok: bool
    matches_pair_matrix_columns: bool


def root_polytope(k: int, limits: Limits = DEFAULT_LIMITS) -> Polytope:
    """Convex hull of the pairwise difference vectors e_i - e_j in R^k."""
    if k < 2:
        raise DomainError("k must be at least 2")
    pts = []
    for i in range(k):
        for j in range(k):
            if i != j:
                v = [0] * k
                v[i], v[j] = 1, -1
                pts.append(tuple(v))
    return polytope_from_columns(pts, limits)


def root_polytope_structure_check(
    k: int, limits: Limits = DEFAULT_LIMITS
) -> RootPolytopeReport:
    """Check counts of vertices/edges/facets/lattice points of the difference
    polytope and whether it equals the column polytope of the two-row hook."""
    poly = root_polytope(k, limits)
    faces = poly.face_lattice()
    edges = sum(
        1
        for f in faces
        if f and affine_rank([poly.points[i] for i in f]) == 1
    )
    n_lattice = len(poly.lattice_points(limits)) if k <= limits.max_lattice_dim else -1

    # every facet should be a grid S x S^c of difference vectors
    grids_ok = True
    for f in poly.facets:
        pos = set()
        neg = set()
        for i in f.vertex_indices:
            v = poly.ambient_points[i]
            pos.add(v.index(1))
            neg.add(v.index(-1))
        if pos & neg or len(f.vertex_indices) != len(pos) * len(neg):
            grids_ok = False

    from .combinatorics import Partition
    from .specht import specht_matrix

    hook = Partition((k - 1, 1))
    cols = specht_matrix(hook, limits).columns()
    specht_poly = polytope_from_columns(cols, limits)
    matches = _same_vertex_set(poly, specht_poly)
    return RootPolytopeReport(
        k=k,
        dim=poly.dim,
        n_vertices=poly.n_vertices,
        n_edges=edges,
        n_facets=len(poly.facets),
        n_lattice_points=n_lattice,
        facet_grids_ok=grids_ok,
        matches_pair_matrix_columns=matches,
    )


def _same_vertex_set(a: Polytope, b: Polytope) -> bool:
    va = sorted(a.vertices())
    vb = sorted(b.vertices())
    return va == vb

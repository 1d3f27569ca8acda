"""Triangulated base surfaces and piecewise-linear fibered filtrations.

A FiberedFiltration stores one exact rational value per (simplex, base
vertex); the value anywhere else is the barycentric interpolation within
the containing base triangle. Monotonicity at the base vertices forces
monotonicity everywhere, because linear interpolation preserves the
face/coface inequality.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .complexes import SimplicialComplex
from .rational import RAT_ONE, RAT_ZERO, rat


class SurfaceError(ValueError):
    """A base-surface validation failure."""


class FiltrationError(ValueError):
    """A fibered-filtration validation failure."""


@dataclass(frozen=True)
class EdgePoint:
    """A point on the 1-skeleton: parameter t in [0,1] along a base edge."""

    edge: int
    t: object  # rational

    def __post_init__(self):
        if not (RAT_ZERO <= self.t <= RAT_ONE):
            raise SurfaceError(f"edge parameter {self.t} outside [0,1]")


class TriangulatedSurface:
    """A triangulated surface with boundary, consistently oriented.

    Vertices carry exact rational plane coordinates (the default, planar
    embedding); triangles are index triples. Edges are derived, each
    adjacent to one or two triangles, and consistent orientation means the
    two triangles of an interior edge traverse it in opposite directions.
    """

    def __init__(
        self,
        bverts: Sequence[Tuple[object, object]],
        triangles: Sequence[Tuple[int, int, int]],
    ):
        self.bverts: Tuple[Tuple[object, object], ...] = tuple(
            (rat(x), rat(y)) for x, y in bverts
        )
        self.triangles: Tuple[Tuple[int, int, int], ...] = tuple(
            tuple(tri) for tri in triangles
        )
        nv = len(self.bverts)
        if not self.triangles:
            raise SurfaceError("surface has no triangles")
        directed = set()
        edge_ids: Dict[Tuple[int, int], int] = {}
        edge_tris: List[List[int]] = []
        for t_id, (a, b, c) in enumerate(self.triangles):
            if len({a, b, c}) != 3 or not all(0 <= v < nv for v in (a, b, c)):
                raise SurfaceError(f"triangle {t_id} has bad vertex indices {(a, b, c)}")
            if self._signed_area(a, b, c) == 0:
                raise SurfaceError(f"triangle {t_id} is degenerate (zero area)")
            for u, v in ((a, b), (b, c), (c, a)):
                if (u, v) in directed:
                    raise SurfaceError(
                        f"inconsistent orientation: directed edge {(u, v)} "
                        f"appears twice (triangle {t_id})"
                    )
                directed.add((u, v))
                key = (min(u, v), max(u, v))
                eid = edge_ids.get(key)
                if eid is None:
                    eid = len(edge_tris)
                    edge_ids[key] = eid
                    edge_tris.append([])
                if len(edge_tris[eid]) >= 2:
                    raise SurfaceError(
                        f"edge {key} adjacent to more than two triangles"
                    )
                edge_tris[eid].append(t_id)
        self.edges: Tuple[Tuple[int, int], ...] = tuple(
            sorted(edge_ids, key=edge_ids.get)
        )
        self.edge_ids = edge_ids
        self.edge_triangles: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(ts) for ts in edge_tris
        )
        self._check_components()

    def _check_components(self) -> None:
        # triangles glued only at a vertex (pinch points) are rejected:
        # every vertex's triangle star must lie in one edge-adjacency component
        parent = list(range(len(self.triangles)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for ts in self.edge_triangles:
            if len(ts) == 2:
                ra, rb = find(ts[0]), find(ts[1])
                if ra != rb:
                    parent[ra] = rb
        star: Dict[int, int] = {}
        for t_id, tri in enumerate(self.triangles):
            for v in tri:
                root = find(t_id)
                if v in star and star[v] != root:
                    raise SurfaceError(
                        f"vertex {v} pinches two triangle components together"
                    )
                star[v] = root
        for v in range(len(self.bverts)):
            if v not in star:
                raise SurfaceError(f"vertex {v} belongs to no triangle")

    def _signed_area(self, a: int, b: int, c: int):
        (ax, ay), (bx, by), (cx, cy) = self.bverts[a], self.bverts[b], self.bverts[c]
        return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)

    @property
    def n_triangles(self) -> int:
        return len(self.triangles)

    def is_boundary_edge(self, eid: int) -> bool:
        return len(self.edge_triangles[eid]) == 1

    def edge_of(self, u: int, v: int) -> Optional[int]:
        return self.edge_ids.get((min(u, v), max(u, v)))

    def edge_point_coords(self, ep: EdgePoint) -> Tuple[object, object]:
        u, v = self.edges[ep.edge]
        (ux, uy), (vx, vy) = self.bverts[u], self.bverts[v]
        s = RAT_ONE - ep.t
        return (s * ux + ep.t * vx, s * uy + ep.t * vy)

    def barycentric_in(self, tri: int, p: Tuple[object, object]):
        return barycentric(self, tri, p)

    def triangle_containing(self, p: Tuple[object, object]) -> Optional[int]:
        """Smallest triangle id whose closure contains p (linear scan)."""
        for t_id in range(len(self.triangles)):
            lam = barycentric(self, t_id, p)
            if all(l >= 0 for l in lam):
                return t_id
        return None

    def bbox(self):
        xs = [x for x, _ in self.bverts]
        ys = [y for _, y in self.bverts]
        return (min(xs), min(ys), max(xs), max(ys))


def barycentric(base: TriangulatedSurface, tri: int, p: Tuple[object, object]):
    """Exact barycentric coordinates of p with respect to a triangle.

    Coordinates sum to 1 and reproduce p; all three are >= 0 exactly when
    p lies inside or on the triangle.
    """
    a, b, c = base.triangles[tri]
    (ax, ay), (bx, by), (cx, cy) = base.bverts[a], base.bverts[b], base.bverts[c]
    px, py = rat(p[0]), rat(p[1])
    det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if det == 0:
        raise SurfaceError(f"triangle {tri} is degenerate")
    l2 = ((px - ax) * (cy - ay) - (py - ay) * (cx - ax)) / det
    l3 = ((bx - ax) * (py - ay) - (by - ay) * (px - ax)) / det
    return (RAT_ONE - l2 - l3, l2, l3)


class FiberedFiltration:
    """A piecewise-linear fibered filtration f : K x B -> Q."""

    def __init__(
        self,
        complex_: SimplicialComplex,
        base: TriangulatedSurface,
        values: Dict[Tuple[int, int], object],
    ):
        """`values` maps (simplex id, base vertex index) -> rational; every
        pair must be present."""
        self.complex = complex_
        self.base = base
        n, nv = len(complex_), len(base.bverts)
        table: List[Tuple[object, ...]] = []
        for sid in range(1, n + 1):
            row = []
            for v in range(nv):
                if (sid, v) not in values:
                    raise FiltrationError(f"missing value for simplex {sid} at base vertex {v}")
                row.append(rat(values[(sid, v)]))
            table.append(tuple(row))
        self.values: Tuple[Tuple[object, ...], ...] = tuple(table)
        self.eval_count = 0  # diagnostic: simplex evaluations performed

    def value_at_bvert(self, sid: int, v: int):
        return self.values[sid - 1][v]

    def validate_monotone(self) -> Optional[str]:
        """None when monotone at every base vertex, else the first (σ, τ, v)."""
        for s in self.complex.simplices:
            row = self.values[s.id - 1]
            for fid in self.complex.facet_ids[s.id - 1]:
                frow = self.values[fid - 1]
                for v in range(len(self.base.bverts)):
                    if frow[v] > row[v]:
                        return (
                            f"not monotone: f({s.id}, v{v}) = {row[v]} < "
                            f"f({fid}, v{v}) = {frow[v]} though {fid} is a face of {s.id}"
                        )
        return None

    def evaluate_bary(self, sid: int, tri: int, lam) -> object:
        """f(σ, p) for p given by barycentric coordinates in a triangle."""
        self.eval_count += 1
        a, b, c = self.base.triangles[tri]
        row = self.values[sid - 1]
        return lam[0] * row[a] + lam[1] * row[b] + lam[2] * row[c]

    def all_values_bary(self, tri: int, lam) -> list:
        """All N simplex values at one barycentric point, in id order."""
        a, b, c = self.base.triangles[tri]
        l1, l2, l3 = lam
        return [l1 * row[a] + l2 * row[b] + l3 * row[c] for row in self.values]

    def evaluate(self, sid: int, tri: int, p: Tuple[object, object]) -> object:
        """f(σ, p) for a plane point p inside or on the given triangle."""
        lam = barycentric(self.base, tri, p)
        if any(l < 0 for l in lam):
            raise FiltrationError(f"point {p} lies outside triangle {tri}")
        return self.evaluate_bary(sid, tri, lam)

    def restrict_to_edge(self, sid: int, eid: int) -> Tuple[object, object]:
        """Endpoint values of the affine restriction t -> f(σ, e(t))."""
        u, v = self.base.edges[eid]
        row = self.values[sid - 1]
        return (row[u], row[v])

    def value_at_edge_point(self, sid: int, ep: EdgePoint) -> object:
        v0, v1 = self.restrict_to_edge(sid, ep.edge)
        return v0 + (v1 - v0) * ep.t


def validate_monotone(filtration: FiberedFiltration) -> Optional[str]:
    return filtration.validate_monotone()

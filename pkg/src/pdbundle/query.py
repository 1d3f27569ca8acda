"""Point location and O(N) diagram queries against a built bundle.

Location runs in two stages: a uniform-grid triangle index over the base,
then a per-triangle slab structure over the pre-merge (fine, convex)
faces. Points on the arrangement skeleton resolve to the adjacent merged
face with the smallest id; the diagram value is identical for every
adjacent face, so the tie-break never changes query results.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .arrangement import _cross
from .bundle import PDBundle
from .rational import rat
from .reduction import Diagram, diagram_bary


class LocateError(ValueError):
    pass


class OutsideBaseError(LocateError):
    pass


@dataclass
class _SlabEdge:
    ax: object
    ay: object
    bx: object
    by: object
    above: int  # fine face id, -1 for none
    below: int
    key: Tuple[int, int]

    def y_at(self, x):
        return self.ay + (self.by - self.ay) * (x - self.ax) / (self.bx - self.ax)


class Locator:
    """Immutable point-location structure over a bundle's fine faces."""

    def __init__(self, bundle: PDBundle, grid_resolution: Optional[int] = None):
        self.bundle = bundle
        self.comparisons = 0  # point-location cost diagnostic
        geo = bundle.geometry
        surf = geo.surface
        self._build_triangle_grid(grid_resolution)
        self.tri_faces: Dict[int, List] = {t: [] for t in range(surf.n_triangles)}
        for f in geo.fine_faces:
            self.tri_faces[f.tri].append(f)
        # global side sets: edge -> adjacent fine faces, vertex -> incident faces
        self.edge_faces: Dict[Tuple[int, int], List[int]] = {}
        self.vertex_faces: Dict[int, List[int]] = {}
        for f in geo.fine_faces:
            for a, b in zip(f.loop, f.loop[1:] + f.loop[:1]):
                key = (a, b) if a < b else (b, a)
                self.edge_faces.setdefault(key, []).append(f.id)
            for v in f.loop:
                self.vertex_faces.setdefault(v, []).append(f.id)
        self._loop_charts: Dict[int, List[Tuple[object, object]]] = {}
        self._build_slabs()

    # -- construction ------------------------------------------------------

    def _build_triangle_grid(self, resolution: Optional[int]) -> None:
        surf = self.bundle.geometry.surface
        x0, y0, x1, y1 = surf.bbox()
        self.bbox = (x0, y0, x1, y1)
        m = surf.n_triangles
        res = resolution or max(1, int(m**0.5))
        self.grid_res = res
        self.cells: Dict[Tuple[int, int], List[int]] = {}
        w = x1 - x0
        h = y1 - y0
        self._gw = w if w != 0 else rat(1)
        self._gh = h if h != 0 else rat(1)
        for t_id, tri in enumerate(surf.triangles):
            xs = [surf.bverts[v][0] for v in tri]
            ys = [surf.bverts[v][1] for v in tri]
            ci0, ci1 = self._cell_of(min(xs), x0, self._gw), self._cell_of(
                max(xs), x0, self._gw
            )
            cj0, cj1 = self._cell_of(min(ys), y0, self._gh), self._cell_of(
                max(ys), y0, self._gh
            )
            for ci in range(ci0, ci1 + 1):
                for cj in range(cj0, cj1 + 1):
                    self.cells.setdefault((ci, cj), []).append(t_id)

    def _cell_of(self, v, origin, extent) -> int:
        frac = (v - origin) * self.grid_res / extent
        idx = int(frac)
        return min(max(idx, 0), self.grid_res - 1)

    def _chart(self, vid: int, tri: int):
        return self.bundle.geometry.chart_coords(vid, tri)

    def _build_slabs(self) -> None:
        geo = self.bundle.geometry
        self.slabs: Dict[int, Tuple[List, List[List[_SlabEdge]]]] = {}
        self.verticals: Dict[int, Dict[object, List[_SlabEdge]]] = {}
        self.vertex_at: Dict[int, Dict[Tuple[object, object], int]] = {}
        for tri, faces in self.tri_faces.items():
            charts: Dict[int, Tuple[object, object]] = {}
            edges: Dict[Tuple[int, int], _SlabEdge] = {}
            for f in faces:
                loop = list(f.loop)
                for v in loop:
                    if v not in charts:
                        charts[v] = self._chart(v, tri)
                for a, b in zip(loop, loop[1:] + loop[:1]):
                    key = (a, b) if a < b else (b, a)
                    rec = edges.get(key)
                    if rec is None:
                        ca, cb = charts[a], charts[b]
                        if ca > cb:
                            ca, cb = cb, ca
                        rec = _SlabEdge(ca[0], ca[1], cb[0], cb[1], -1, -1, key)
                        edges[key] = rec
                    # face lies left of a->b; left of a left-to-right edge is above
                    if charts[a] < charts[b]:
                        rec.above = f.id
                    else:
                        rec.below = f.id
            self.vertex_at[tri] = {c: v for v, c in charts.items()}
            xs = sorted({c[0] for c in charts.values()})
            verticals: Dict[object, List[_SlabEdge]] = {}
            slab_lists: List[List[_SlabEdge]] = [[] for _ in range(max(len(xs) - 1, 0))]
            for rec in edges.values():
                if rec.ax == rec.bx:
                    verticals.setdefault(rec.ax, []).append(rec)
                    continue
                i0 = bisect_left(xs, rec.ax)
                i1 = bisect_left(xs, rec.bx)
                for i in range(i0, i1):
                    slab_lists[i].append(rec)
            for i, lst in enumerate(slab_lists):
                mid = (xs[i] + xs[i + 1]) / rat(2)
                lst.sort(key=lambda e: e.y_at(mid))
            self.slabs[tri] = (xs, slab_lists)
            self.verticals[tri] = verticals

    # -- triangle location -------------------------------------------------

    def locate_triangle(self, p) -> Tuple[int, Tuple]:
        """Smallest triangle id whose closure contains p, and barycentric
        coordinates there."""
        from .filtration import barycentric

        surf = self.bundle.geometry.surface
        x0, y0, x1, y1 = self.bbox
        px, py = rat(p[0]), rat(p[1])
        if not (x0 <= px <= x1 and y0 <= py <= y1):
            raise OutsideBaseError(f"point {p} outside the base bounding box")
        cell = (self._cell_of(px, x0, self._gw), self._cell_of(py, y0, self._gh))
        best = None
        for t_id in self.cells.get(cell, ()):
            lam = barycentric(surf, t_id, (px, py))
            if all(l >= 0 for l in lam):
                best = (t_id, lam)
                break
        if best is None:
            # grid cells are conservative; fall back to the linear scan
            for t_id in range(surf.n_triangles):
                lam = barycentric(surf, t_id, (px, py))
                if all(l >= 0 for l in lam):
                    best = (t_id, lam)
                    break
        if best is None:
            raise OutsideBaseError(f"point {p} outside the base surface")
        return best

    # -- fine location -----------------------------------------------------

    def _candidates_to_root(self, fids) -> int:
        geo = self.bundle.geometry
        roots = {geo.root(f) for f in fids if f >= 0}
        if not roots:
            raise LocateError("no adjacent face (outside the surface?)")
        return min(roots)

    def locate_full(self, p) -> Tuple[int, int, Tuple]:
        """(merged face id, containing triangle, barycentric coords)."""
        tri, lam = self.locate_triangle(p)
        return (self.locate_in_triangle(tri, lam), tri, lam)

    def locate(self, p) -> int:
        return self.locate_full(p)[0]

    def locate_in_triangle(self, tri: int, lam) -> int:
        """Locate by (triangle id, barycentric coordinates): the addressing
        mode for bases that are not embedded in the plane."""
        if any(l < 0 for l in lam) or sum(lam) != 1:
            raise LocateError(f"{lam} are not barycentric coordinates in a triangle")
        pt = (lam[1], lam[2])
        vid = self.vertex_at[tri].get(pt)
        if vid is not None:
            return self._candidates_to_root(self.vertex_faces[vid])
        vertical = self.verticals[tri].get(pt[0])
        if vertical:
            for rec in vertical:
                ylo, yhi = sorted((rec.ay, rec.by))
                if ylo < pt[1] < yhi:
                    return self._candidates_to_root(self.edge_faces[rec.key])
        xs, slab_lists = self.slabs[tri]
        i = bisect_right(xs, pt[0]) - 1
        if i < 0 or i >= len(slab_lists):
            raise LocateError(f"barycentric point {lam} escaped triangle {tri}")
        lst = slab_lists[i]
        lo, hi = 0, len(lst) - 1
        below = None
        while lo <= hi:
            self.comparisons += 1
            mid = (lo + hi) // 2
            y = lst[mid].y_at(pt[0])
            if y == pt[1]:
                return self._candidates_to_root(self.edge_faces[lst[mid].key])
            if y < pt[1]:
                below = lst[mid]
                lo = mid + 1
            else:
                hi = mid - 1
        if below is None or below.above < 0:
            raise LocateError(f"barycentric point {lam} not enclosed in triangle {tri}")
        return self.bundle.geometry.root(below.above)


def build_locator(bundle: PDBundle, grid_resolution: Optional[int] = None) -> Locator:
    return Locator(bundle, grid_resolution)


def locate(loc: Locator, p) -> int:
    return loc.locate(p)


def locate_bruteforce(bundle: PDBundle, p) -> int:
    """Linear scan over fine faces with exact containment tests; the oracle
    for `locate`, with the identical smallest-root tie-break."""
    from .filtration import barycentric

    geo = bundle.geometry
    surf = geo.surface
    px, py = rat(p[0]), rat(p[1])
    containing: List[int] = []
    for tri in range(surf.n_triangles):
        lam = barycentric(surf, tri, (px, py))
        if any(l < 0 for l in lam):
            continue
        pt = (lam[1], lam[2])
        for f in geo.fine_faces:
            if f.tri != tri:
                continue
            charts = geo.loop_charts(f)
            strict = True
            inside = True
            for i in range(len(charts)):
                c = _cross(charts[i], charts[(i + 1) % len(charts)], pt)
                if c < 0:
                    inside = False
                    break
                if c == 0:
                    strict = False
            if inside:
                if strict:
                    return geo.root(f.id)
                containing.append(f.id)
    if not containing:
        raise OutsideBaseError(f"point {p} outside the base surface")
    return min(geo.root(f) for f in containing)


def query_diagram(bundle: PDBundle, loc: Locator, p, q: int) -> Diagram:
    """Locate p, then evaluate the face template: no matrix operations,
    at most one filtration evaluation per simplex."""
    if q < 0:
        raise LocateError(f"negative homological dimension {q}")
    root, tri, lam = loc.locate_full(p)
    template = bundle.templates[root]
    return diagram_bary(template, bundle.filtration, tri, lam, q)


def oracle_diagram(complex_, filtration, p, q: int) -> Diagram:
    """From-scratch reduction at a single point: the testing oracle.

    Locates the containing base triangle by linear scan, sorts simplices
    by value at p, reduces the boundary matrix, and reads the diagram off
    the fresh pairing. O(N^3) worst case and deliberately independent of
    the bundle machinery."""
    from .complexes import indexing_from_value_list
    from .filtration import barycentric
    from .reduction import ReductionState

    if q < 0:
        raise LocateError(f"negative homological dimension {q}")
    surf = filtration.base
    px, py = rat(p[0]), rat(p[1])
    tri = surf.triangle_containing((px, py))
    if tri is None:
        raise OutsideBaseError(f"point {p} outside the base surface")
    lam = barycentric(surf, tri, (px, py))
    idx = indexing_from_value_list(
        len(complex_), filtration.all_values_bary(tri, lam)
    )
    state = ReductionState(complex_, idx)
    return diagram_bary(state.pairing(), filtration, tri, lam, q)

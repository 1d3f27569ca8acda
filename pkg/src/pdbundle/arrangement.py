"""DCEL arrangement of swap segments over a triangulated surface.

Geometry lives in per-triangle charts: the triangle's corners map to
(0,0), (1,0), (0,1) (always counterclockwise in the chart), and every
in-triangle predicate is an exact rational sign test there. Inserted
segments are full chords of their triangle, so the per-triangle
subdivisions stay convex until faces are merged.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .filtration import EdgePoint, TriangulatedSurface
from .rational import RAT_ONE, RAT_ZERO


class ArrangementError(ValueError):
    pass


Pair = Tuple[int, int]
Point = Tuple[object, object]

BVERT_CHARTS = ((RAT_ZERO, RAT_ZERO), (RAT_ONE, RAT_ZERO), (RAT_ZERO, RAT_ONE))


def _cross(o: Point, a: Point, b: Point):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _dir_cross(d1: Point, d2: Point):
    return d1[0] * d2[1] - d1[1] * d2[0]


def _dir_dot(d1: Point, d2: Point):
    return d1[0] * d2[0] + d1[1] * d2[1]


@dataclass
class _Vertex:
    id: int
    anchor: Tuple  # ('bvert', i) | ('edge', eid, t) | ('interior', tri, x, y)
    out: List[int] = field(default_factory=list)  # outgoing half-edge ids
    alive: bool = True

    def sort_key(self):
        kind = self.anchor[0]
        if kind == "bvert":
            return (0, self.anchor[1], 0, 0)
        if kind == "edge":
            return (1, self.anchor[1], self.anchor[2], 0)
        return (2, self.anchor[1], self.anchor[2], self.anchor[3])


@dataclass
class _HalfEdge:
    id: int
    origin: int
    twin: int = -1
    nxt: int = -1
    prv: int = -1
    face: int = -1           # fine face id; -1 = outer
    tri: Optional[int] = None
    labels: List[Pair] = field(default_factory=list)
    alive: bool = True


@dataclass
class _Face:
    id: int
    half: int
    tri: Optional[int]
    alive: bool = True


@dataclass
class _Chain:
    """A subdivided straight segment: chord of a triangle or a base edge.

    Breakpoint parameters are ascending; halves[i] is the half-edge from
    breakpoint i to i+1 (oriented toward increasing parameter).
    """

    params: List[object]
    vids: List[int]
    halves: List[int]

    def find_param(self, s) -> Optional[int]:
        i = bisect_left(self.params, s)
        if i < len(self.params) and self.params[i] == s:
            return self.vids[i]
        return None

    def interval_of(self, s) -> int:
        i = bisect_left(self.params, s)
        if i <= 0 or i >= len(self.params) or self.params[i] == s:
            raise ArrangementError(f"parameter {s} is not interior to a chain interval")
        return i - 1

    def insert_breakpoint(self, i: int, s, vid: int, lower_half: int, upper_half: int):
        self.params.insert(i + 1, s)
        self.vids.insert(i + 1, vid)
        self.halves[i] = lower_half
        self.halves.insert(i + 1, upper_half)


@dataclass(frozen=True)
class FineFace:
    """Pre-merge face snapshot: convex, contained in one base triangle."""

    id: int
    tri: int
    loop: Tuple[int, ...]  # counterclockwise vertex ids in the chart


class Arrangement:
    """The subdivision A(L) of the base surface, as a DCEL."""

    def __init__(self, surface: TriangulatedSurface):
        self.surface = surface
        self.verts: List[_Vertex] = []
        self.halves: List[_HalfEdge] = []
        self.faces: List[_Face] = []
        self._face_parent: List[int] = []
        self.edge_chains: Dict[int, _Chain] = {}       # base edge id -> chain
        self.tri_chords: Dict[int, List[Tuple[Tuple, _Chain]]] = {}
        self.surface_edge_labels: Dict[int, List[Pair]] = {}
        self.fine_faces: List[FineFace] = []
        self.zero_length_skips: List[Tuple[int, Pair, int]] = []
        self._init_from_surface()

    # -- construction ------------------------------------------------------

    def _new_vertex(self, anchor) -> int:
        vid = len(self.verts)
        self.verts.append(_Vertex(vid, anchor))
        return vid

    def _new_half(self, origin: int, tri, face: int) -> _HalfEdge:
        h = _HalfEdge(len(self.halves), origin, tri=tri, face=face)
        self.halves.append(h)
        self.verts[origin].out.append(h.id)
        return h

    def _new_face(self, half: int, tri) -> int:
        fid = len(self.faces)
        self.faces.append(_Face(fid, half, tri))
        self._face_parent.append(fid)
        return fid

    def _init_from_surface(self) -> None:
        surf = self.surface
        for i in range(len(surf.bverts)):
            self._new_vertex(("bvert", i))
        inner_of: Dict[Tuple[int, int], _HalfEdge] = {}
        for t_id, (a, b, c) in enumerate(surf.triangles):
            fid = self._new_face(-1, t_id)
            cycle = []
            for u, v in ((a, b), (b, c), (c, a)):
                h = self._new_half(u, t_id, fid)
                inner_of[(u, v)] = h
                cycle.append(h)
            for i, h in enumerate(cycle):
                h.nxt = cycle[(i + 1) % 3].id
                h.prv = cycle[(i - 1) % 3].id
            self.faces[fid].half = cycle[0].id
        # twins: interior edges pair up; boundary edges get an outer half
        outer_halves: List[_HalfEdge] = []
        for eid, (u, v) in enumerate(surf.edges):
            hs = []
            for key in ((u, v), (v, u)):
                if key in inner_of:
                    hs.append(inner_of[key])
            if len(hs) == 2:
                hs[0].twin, hs[1].twin = hs[1].id, hs[0].id
            else:
                inner = hs[0]
                outer = self._new_half(self.halves[inner.nxt].origin, None, -1)
                inner.twin, outer.twin = outer.id, inner.id
                outer_halves.append(outer)
            # chain oriented from the lower-labelled endpoint (u, v) = edges[eid]
            fwd = inner_of.get((u, v)) or self.halves[inner_of[(v, u)].twin]
            self.edge_chains[eid] = _Chain([RAT_ZERO, RAT_ONE], [u, v], [fwd.id])
            self.surface_edge_labels[eid] = []
        # link the outer boundary cycles
        outer_by_origin = {}
        for o in outer_halves:
            if o.origin in outer_by_origin:
                raise ArrangementError("boundary is pinched at a vertex")
            outer_by_origin[o.origin] = o
        for o in outer_halves:
            nxt = outer_by_origin[self._head_of(o)]
            o.nxt = nxt.id
            nxt.prv = o.id
        for t_id in range(surf.n_triangles):
            self.tri_chords[t_id] = []

    def _head_of(self, h: _HalfEdge) -> int:
        return self.halves[h.twin].origin if h.twin >= 0 else self._cycle_head(h)

    def _cycle_head(self, h: _HalfEdge) -> int:
        # only used before twins exist, during initial construction
        return self.halves[h.nxt].origin

    # -- basic accessors ---------------------------------------------------

    def head(self, hid: int) -> int:
        return self.halves[self.halves[hid].twin].origin

    def face_root(self, fid: int) -> int:
        if fid < 0:
            return -1
        parent = self._face_parent
        while parent[fid] != fid:
            parent[fid] = parent[parent[fid]]
            fid = parent[fid]
        return fid

    def chart_coords(self, vid: int, tri: int) -> Point:
        """Chart coordinates of a vertex with respect to a base triangle."""
        anchor = self.verts[vid].anchor
        corners = self.surface.triangles[tri]
        if anchor[0] == "bvert":
            try:
                return BVERT_CHARTS[corners.index(anchor[1])]
            except ValueError:
                raise ArrangementError(
                    f"vertex {vid} (base vertex {anchor[1]}) not on triangle {tri}"
                ) from None
        if anchor[0] == "edge":
            eid, t = anchor[1], anchor[2]
            u, v = self.surface.edges[eid]
            cu = BVERT_CHARTS[corners.index(u)]
            cv = BVERT_CHARTS[corners.index(v)]
            s = RAT_ONE - t
            return (s * cu[0] + t * cv[0], s * cu[1] + t * cv[1])
        if anchor[1] != tri:
            raise ArrangementError(
                f"interior vertex {vid} of triangle {anchor[1]} used in triangle {tri}"
            )
        return (anchor[2], anchor[3])

    def barycentric_of_vertex(self, vid: int, tri: int):
        x, y = self.chart_coords(vid, tri)
        return (RAT_ONE - x - y, x, y)

    def global_coords(self, vid: int) -> Point:
        anchor = self.verts[vid].anchor
        surf = self.surface
        if anchor[0] == "bvert":
            return surf.bverts[anchor[1]]
        if anchor[0] == "edge":
            return surf.edge_point_coords(EdgePoint(anchor[1], anchor[2]))
        tri, x, y = anchor[1], anchor[2], anchor[3]
        a, b, c = surf.triangles[tri]
        (ax, ay), (bx, by), (cx, cy) = surf.bverts[a], surf.bverts[b], surf.bverts[c]
        return (ax + x * (bx - ax) + y * (cx - ax), ay + x * (by - ay) + y * (cy - ay))

    def n_alive_vertices(self) -> int:
        return sum(1 for v in self.verts if v.alive)

    def alive_edges(self) -> List[int]:
        """Representative half-edge ids (the smaller of each twin pair)."""
        return [
            h.id
            for h in self.halves
            if h.alive and h.id < h.twin
        ]

    def is_interior_edge(self, hid: int) -> bool:
        h = self.halves[hid]
        return h.face >= 0 and self.halves[h.twin].face >= 0

    # -- split -------------------------------------------------------------

    def split_edge(self, hid: int, anchor) -> int:
        """Split the edge of half-edge hid at a strictly interior point.

        `anchor` is the new vertex's position record. Both pieces inherit
        the edge's labels. Returns the new vertex id.
        """
        h = self.halves[hid]
        t = self.halves[h.twin]
        m = self._new_vertex(anchor)
        hb = self._new_half(m, h.tri, h.face)
        tb = self._new_half(m, t.tri, t.face)
        hb.labels = list(h.labels)
        tb.labels = list(t.labels)
        # piece 1: h (origin..m) twinned with tb; piece 2: hb (m..head) with t
        old_h_nxt, old_t_nxt = h.nxt, t.nxt
        hb.twin, t.twin = t.id, hb.id
        h.twin, tb.twin = tb.id, h.id
        h.nxt = hb.id
        hb.prv = h.id
        hb.nxt = old_h_nxt
        self.halves[old_h_nxt].prv = hb.id
        t.nxt = tb.id
        tb.prv = t.id
        tb.nxt = old_t_nxt
        self.halves[old_t_nxt].prv = tb.id
        return m

    def split_surface_edge(self, eid: int, t) -> int:
        """Vertex of the 1-skeleton at parameter t along base edge eid,
        splitting the current sub-edge when t is new. Endpoints resolve to
        the base vertices."""
        chain = self.edge_chains[eid]
        existing = chain.find_param(t)
        if existing is not None:
            return existing
        i = chain.interval_of(t)
        hid = chain.halves[i]
        vid = self.split_edge(hid, ("edge", eid, t))
        h = self.halves[hid]
        chain.insert_breakpoint(i, t, vid, hid, h.nxt)
        return vid

    # -- chord insertion ---------------------------------------------------

    def _line_key(self, a: Point, b: Point):
        A = a[1] - b[1]
        B = b[0] - a[0]
        C = A * a[0] + B * a[1]
        if A != 0:
            if A < 0:
                A, B, C = -A, -B, -C
            return (RAT_ONE, B / A, C / A)
        if B < 0:
            B, C = -B, -C
        return (RAT_ZERO, RAT_ONE, C / B)

    def _wedge_out(self, vid: int, tri: int, d: Point, at: Point) -> _HalfEdge:
        """The outgoing half-edge h at vid (within the triangle) such that
        direction d points strictly into face(h)'s wedge."""
        for hid in self.verts[vid].out:
            h = self.halves[hid]
            if not h.alive or h.tri != tri or h.face < 0:
                continue
            d1 = self._direction(h, tri, at)
            g = self.halves[h.prv]
            d2 = self._direction_reversed(g, tri, at)
            c12 = _dir_cross(d1, d2)
            c1 = _dir_cross(d1, d)
            c2 = _dir_cross(d, d2)
            if c12 > 0:
                inside = c1 > 0 and c2 > 0
            elif c12 < 0:
                inside = c1 > 0 or c2 > 0
            else:
                if _dir_dot(d1, d2) < 0:
                    inside = c1 > 0
                else:
                    raise ArrangementError(
                        f"degenerate zero-angle wedge at vertex {vid}"
                    )
            if inside:
                return h
        raise ArrangementError(
            f"no face wedge at vertex {vid} contains direction {d} (overlapping segment?)"
        )

    def _direction(self, h: _HalfEdge, tri: int, origin_chart: Point) -> Point:
        hd = self.chart_coords(self.head(h.id), tri)
        return (hd[0] - origin_chart[0], hd[1] - origin_chart[1])

    def _direction_reversed(self, g: _HalfEdge, tri: int, at: Point) -> Point:
        og = self.chart_coords(g.origin, tri)
        return (og[0] - at[0], og[1] - at[1])

    def _connect(self, tri: int, a: int, b: int, labels: Sequence[Pair]) -> _HalfEdge:
        """Insert the chord piece a-b (crossing no existing edge) and split
        the face it lies in. Returns the half-edge a -> b."""
        ca = self.chart_coords(a, tri)
        cb = self.chart_coords(b, tri)
        d = (cb[0] - ca[0], cb[1] - ca[1])
        h_a = self._wedge_out(a, tri, d, ca)
        d_back = (-d[0], -d[1])
        h_b = self._wedge_out(b, tri, d_back, cb)
        if h_a.face != h_b.face:
            raise ArrangementError(
                f"chord piece {a}-{b} endpoints see different faces "
                f"{h_a.face} vs {h_b.face}"
            )
        old_face = self.faces[h_a.face]
        g_a = self.halves[h_a.prv]
        g_b = self.halves[h_b.prv]
        n1 = self._new_half(a, tri, old_face.id)
        n2 = self._new_half(b, tri, old_face.id)
        n1.twin, n2.twin = n2.id, n1.id
        n1.labels = list(labels)
        n2.labels = list(labels)
        n1.prv, n1.nxt = g_a.id, h_b.id
        n2.prv, n2.nxt = g_b.id, h_a.id
        g_a.nxt = n1.id
        h_b.prv = n1.id
        g_b.nxt = n2.id
        h_a.prv = n2.id
        old_face.half = n1.id
        new_fid = self._new_face(n2.id, tri)
        walk = n2
        while True:
            walk.face = new_fid
            walk = self.halves[walk.nxt]
            if walk.id == n2.id:
                break
        return n1

    def insert_segment(self, tri: int, v: int, w: int, pairs: Sequence[Pair]) -> None:
        """Insert the chord with endpoints v, w (existing vertices on the
        triangle's boundary), labelling every resulting sub-edge with
        `pairs`. Coincident loci are unified by label union."""
        if v == w:
            raise ArrangementError("zero-length segment")
        cv = self.chart_coords(v, tri)
        cw = self.chart_coords(w, tri)
        key = self._line_key(cv, cw)
        for existing_key, chain in self.tri_chords[tri]:
            if existing_key == key:
                if {chain.vids[0], chain.vids[-1]} != {v, w}:
                    raise ArrangementError(
                        "collinear chords with different endpoints in one triangle"
                    )
                for hid in chain.halves:
                    h = self.halves[hid]
                    for p in pairs:
                        if p not in h.labels:
                            h.labels.append(p)
                            self.halves[h.twin].labels.append(p)
                return
        dx, dy = cw[0] - cv[0], cw[1] - cv[1]
        # crossings with existing chords (at most one per chord: both straight)
        cuts: List[Tuple[object, int]] = []  # (parameter along v->w, vertex id)
        for _, chain in self.tri_chords[tri]:
            p0 = self.chart_coords(chain.vids[0], tri)
            p1 = self.chart_coords(chain.vids[-1], tri)
            ex, ey = p1[0] - p0[0], p1[1] - p0[1]
            den = dx * ey - dy * ex
            if den == 0:
                continue  # parallel, distinct lines: no crossing
            # v + s*(w-v) = p0 + u*(p1-p0)
            rx, ry = p0[0] - cv[0], p0[1] - cv[1]
            s = (rx * ey - ry * ex) / den
            u = (rx * dy - ry * dx) / den
            if s <= 0 or s >= 1 or u < 0 or u > 1:
                continue
            vid = chain.find_param(u)
            if vid is None:
                i = chain.interval_of(u)
                hid = chain.halves[i]
                x = cv[0] + s * dx
                y = cv[1] + s * dy
                vid = self.split_edge(hid, ("interior", tri, x, y))
                h = self.halves[hid]
                chain.insert_breakpoint(i, u, vid, hid, h.nxt)
            cuts.append((s, vid))
        seen: Dict[int, object] = {}
        for s, vid in cuts:
            if vid in seen and seen[vid] != s:
                raise ArrangementError("inconsistent cut parameters")
            seen[vid] = s
        ordered = sorted(set(cuts))
        chain_vids = [v] + [vid for _, vid in ordered] + [w]
        chain_params = [RAT_ZERO] + [s for s, _ in ordered] + [RAT_ONE]
        halves = []
        for a, b in zip(chain_vids, chain_vids[1:]):
            halves.append(self._connect(tri, a, b, pairs).id)
        self.tri_chords[tri].append(
            (key, _Chain(chain_params, chain_vids, halves))
        )

    # -- labels ------------------------------------------------------------

    def propagate_surface_edge_labels(self) -> None:
        """Copy accumulated per-base-edge swap labels onto every arrangement
        sub-edge of those base edges."""
        for eid, labels in self.surface_edge_labels.items():
            if not labels:
                continue
            for hid in self.edge_chains[eid].halves:
                h = self.halves[hid]
                h.labels = list(labels)
                self.halves[h.twin].labels = list(labels)

    def edge_labels(self, hid: int) -> List[Pair]:
        return self.halves[hid].labels

    # -- merge -------------------------------------------------------------

    def merge_faces(self, hid: int) -> None:
        """Delete the (interior) edge of hid, merging its two faces.

        Face identity resolves through union-find: the smaller face id
        becomes the representative. Degree-0 vertices are removed. Edges
        whose two sides already resolve to the same face (slits left by
        earlier merges) are spliced out without face bookkeeping.
        """
        h = self.halves[hid]
        t = self.halves[h.twin]
        if not (h.alive and t.alive):
            raise ArrangementError("edge already deleted")
        if h.face < 0 or t.face < 0:
            raise ArrangementError("cannot merge across the outer boundary")
        f1 = self.face_root(h.face)
        f2 = self.face_root(t.face)
        neighbors = [h.prv, h.nxt, t.prv, t.nxt]
        self._splice_delete(h, t)
        if f1 != f2:
            keep, drop = (f1, f2) if f1 < f2 else (f2, f1)
            self._face_parent[drop] = keep
            self.faces[drop].alive = False
            keep_obj = self.faces[keep]
            if keep_obj.tri != self.faces[drop].tri:
                keep_obj.tri = None  # face now spans base triangles
        else:
            keep_obj = self.faces[f1]
        if not self.halves[keep_obj.half].alive:
            for cand in neighbors:
                if self.halves[cand].alive:
                    keep_obj.half = cand
                    break
            else:
                keep_obj.half = self._any_alive_half_of(keep_obj.id)

    def delete_edge_between_equal_faces(self, hid: int) -> None:
        """Remove a leftover wall or spur whose two sides are the same face."""
        h = self.halves[hid]
        t = self.halves[h.twin]
        if not (h.alive and t.alive):
            raise ArrangementError("edge already deleted")
        if self.face_root(h.face) != self.face_root(t.face):
            raise ArrangementError("edge separates two distinct faces; use merge_faces")
        obj = self.faces[self.face_root(h.face)]
        neighbors = [h.prv, h.nxt, t.prv, t.nxt]
        self._splice_delete(h, t)
        if not self.halves[obj.half].alive:
            for cand in neighbors:
                if self.halves[cand].alive:
                    obj.half = cand
                    break
            else:
                obj.half = -1  # globally constant bundle on a closed surface

    def _any_alive_half_of(self, root: int) -> int:
        for h in self.halves:
            if h.alive and h.face >= 0 and self.face_root(h.face) == root:
                return h.id
        raise ArrangementError(f"face {root} has no half-edges left")

    def _splice_delete(self, h: _HalfEdge, t: _HalfEdge) -> None:
        a_v, b_v = h.origin, t.origin
        # around b_v (head of h): h -> h.nxt, t.prv -> t
        if h.nxt == t.id:
            b_isolated = True
        else:
            b_isolated = False
            self.halves[h.nxt].prv = t.prv
            self.halves[t.prv].nxt = h.nxt
        if t.nxt == h.id:
            a_isolated = True
        else:
            a_isolated = False
            self.halves[t.nxt].prv = h.prv
            self.halves[h.prv].nxt = t.nxt
        h.alive = t.alive = False
        self.verts[a_v].out.remove(h.id)
        self.verts[b_v].out.remove(t.id)
        if a_isolated and not self.verts[a_v].out:
            self.verts[a_v].alive = False
        if b_isolated and not self.verts[b_v].out:
            self.verts[b_v].alive = False

    # -- snapshots & audits --------------------------------------------------

    def snapshot_fine_faces(self) -> None:
        """Record the (convex, pre-merge) faces; call once after insertion."""
        out = []
        for f in self.faces:
            if not f.alive:
                continue
            loop = []
            hid = f.half
            guard = 0
            while True:
                loop.append(self.halves[hid].origin)
                hid = self.halves[hid].nxt
                guard += 1
                if hid == f.half:
                    break
                if guard > len(self.halves):
                    raise ArrangementError(f"face {f.id} cycle does not close")
            out.append(FineFace(f.id, f.tri, tuple(loop)))
        self.fine_faces = out

    def vertex_sort_key(self, vid: int):
        return self.verts[vid].sort_key()

    def audit(self, check_euler: bool = True) -> None:
        """Full structural audit; raises on the first violation."""
        for h in self.halves:
            if not h.alive:
                continue
            t = self.halves[h.twin]
            if not t.alive or t.twin != h.id:
                raise ArrangementError(f"twin inconsistency at half-edge {h.id}")
            if self.halves[h.nxt].prv != h.id or self.halves[h.prv].nxt != h.id:
                raise ArrangementError(f"next/prev inconsistency at half-edge {h.id}")
            if self.halves[h.nxt].origin != t.origin:
                raise ArrangementError(f"next origin mismatch at half-edge {h.id}")
            if sorted(h.labels) != sorted(t.labels):
                raise ArrangementError(f"twin labels differ at half-edge {h.id}")
            if self.face_root(self.halves[h.nxt].face) != self.face_root(h.face):
                raise ArrangementError(f"face mismatch along cycle at {h.id}")
        for f in self.faces:
            if not f.alive or f.half < 0:
                continue
            hid = f.half
            guard = 0
            while True:
                if not self.halves[hid].alive:
                    raise ArrangementError(f"face {f.id} references dead half-edge")
                if self.face_root(self.halves[hid].face) != self.face_root(f.id):
                    raise ArrangementError(f"face {f.id} cycle leaks into another face")
                hid = self.halves[hid].nxt
                guard += 1
                if hid == f.half:
                    break
                if guard > len(self.halves):
                    raise ArrangementError(f"face {f.id} cycle does not close")
        if check_euler:
            self.audit_euler()

    def audit_euler(self) -> None:
        """Per-base-triangle Euler formula V - E + (F + 1) = 2, counting the
        triangle's complement as the extra face. Pre-merge only."""
        for tri in range(self.surface.n_triangles):
            vids: Set[int] = set()
            edges = 0
            faces = 0
            for h in self.halves:
                if not h.alive or h.tri != tri:
                    continue
                vids.add(h.origin)
                vids.add(self.head(h.id))
                if h.id < h.twin or self.halves[h.twin].tri != tri:
                    edges += 1
            for f in self.faces:
                if f.alive and f.tri == tri and self.face_root(f.id) == f.id:
                    faces += 1
            if len(vids) - edges + faces != 1:
                raise ArrangementError(
                    f"Euler check failed in triangle {tri}: "
                    f"V={len(vids)} E={edges} F={faces}"
                )


@dataclass(frozen=True)
class DualGraph:
    """Face-adjacency multigraph: one arc per interior arrangement edge."""

    nodes: Tuple[int, ...]
    arcs: Tuple[Tuple[int, int, int], ...]  # (face, face, crossing half-edge id)


def init_from_surface(surface: TriangulatedSurface) -> Arrangement:
    return Arrangement(surface)


def dual_graph(arr: Arrangement) -> DualGraph:
    nodes = tuple(
        f.id for f in arr.faces if f.alive and arr.face_root(f.id) == f.id
    )
    arcs = []
    for hid in arr.alive_edges():
        h = arr.halves[hid]
        t = arr.halves[h.twin]
        if h.face < 0 or t.face < 0:
            continue
        f1, f2 = arr.face_root(h.face), arr.face_root(t.face)
        if f1 != f2:
            arcs.append((f1, f2, hid))
    return DualGraph(nodes, tuple(arcs))

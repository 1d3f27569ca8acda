"""Bundle construction: sweep, arrangement, traversal, templates, merge.

The build walks the dual graph depth-first from a seed face, carrying one
reduction state. Each crossing applies the crossed edge's swap pairs as a
sequence of adjacent transpositions (rotating-queue order); backtracking
re-applies the reverse sequence, so the state always matches the face the
walk currently sits in.
"""
from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .arrangement import Arrangement, DualGraph, FineFace, dual_graph
from .complexes import SimplexIndexing, SimplicialComplex, indexing_from_values_at
from .filtration import FiberedFiltration, FiltrationError
from .rational import rat
from .reduction import PairingFunction, ReductionState
from .sweep import DetectionTables, collect_segments, process_detection, sweep_edge

Pair = Tuple[int, int]


class BundleError(ValueError):
    pass


@dataclass(frozen=True)
class Template:
    """Per-face pairing snapshot: enough to evaluate diagrams anywhere in
    the face."""

    face: int
    pairs: FrozenSet[Pair]
    unpaired: FrozenSet[int]

    def key(self):
        return (tuple(sorted(self.pairs)), tuple(sorted(self.unpaired)))


@dataclass
class BundleStats:
    n_simplices: int
    n_triangles: int
    kappa_per_triangle: Dict[int, int]
    kappa: int
    mu_per_triangle: Dict[int, int]
    mu: int
    crossings_applied: int = 0
    pairing_changes: int = 0


class BundleGeometry:
    """Serialization-friendly view of the arrangement.

    Keeps every vertex anchor, the pre-merge (fine) convex faces, the
    fine-face -> merged-face map, and the post-merge edges with labels.
    Point location and the explorer geometry endpoint read this view, so a
    bundle loaded from disk never needs the live DCEL.
    """

    def __init__(
        self,
        surface,
        vertex_anchors: List[Tuple],
        fine_faces: List[FineFace],
        face_root: Dict[int, int],
        edges: List[Tuple[int, int, Tuple[Pair, ...]]],
    ):
        self.surface = surface
        self.vertex_anchors = vertex_anchors
        self.fine_faces = fine_faces
        self.face_root = face_root
        self.edges = edges
        self._loop_chart_cache: Dict[int, list] = {}

    def root(self, fid: int) -> int:
        return self.face_root.get(fid, fid)

    def loop_charts(self, face: FineFace) -> list:
        cached = self._loop_chart_cache.get(face.id)
        if cached is None:
            cached = [self.chart_coords(v, face.tri) for v in face.loop]
            self._loop_chart_cache[face.id] = cached
        return cached

    def chart_coords(self, vid: int, tri: int):
        from .arrangement import BVERT_CHARTS
        from .filtration import EdgePoint
        from .rational import RAT_ONE

        anchor = self.vertex_anchors[vid]
        corners = self.surface.triangles[tri]
        if anchor[0] == "bvert":
            return BVERT_CHARTS[corners.index(anchor[1])]
        if anchor[0] == "edge":
            eid, t = anchor[1], anchor[2]
            u, v = self.surface.edges[eid]
            cu = BVERT_CHARTS[corners.index(u)]
            cv = BVERT_CHARTS[corners.index(v)]
            s = RAT_ONE - t
            return (s * cu[0] + t * cv[0], s * cu[1] + t * cv[1])
        if anchor[1] != tri:
            raise BundleError(f"vertex {vid} not in triangle {tri}")
        return (anchor[2], anchor[3])

    def global_coords(self, vid: int):
        from .filtration import EdgePoint

        anchor = self.vertex_anchors[vid]
        surf = self.surface
        if anchor[0] == "bvert":
            return surf.bverts[anchor[1]]
        if anchor[0] == "edge":
            return surf.edge_point_coords(EdgePoint(anchor[1], anchor[2]))
        tri, x, y = anchor[1], anchor[2], anchor[3]
        a, b, c = surf.triangles[tri]
        (ax, ay), (bx, by), (cx, cy) = surf.bverts[a], surf.bverts[b], surf.bverts[c]
        return (ax + x * (bx - ax) + y * (cx - ax), ay + x * (by - ay) + y * (cy - ay))


@dataclass
class PDBundle:
    complex: SimplicialComplex
    filtration: FiberedFiltration
    geometry: BundleGeometry
    templates: Dict[int, Template]
    stats: BundleStats
    arrangement: Optional[Arrangement] = None  # live DCEL; not serialized


def order_transpositions(idx0: SimplexIndexing, pairs: Sequence[Pair]) -> List[int]:
    """Adjacent-transposition schedule realizing the given order reversals.

    Rotating-queue procedure: take the head pair; if its simplices sit at
    consecutive positions, emit that transposition and apply it, otherwise
    move the pair to the tail. Terminates whenever `pairs` is exactly the
    set of pairs whose relative order must flip.
    """
    idx = idx0.copy()
    queue = deque(pairs)
    out: List[int] = []
    stall = 0
    while queue:
        a, b = queue[0]
        pa, pb = idx.pos(a), idx.pos(b)
        if abs(pa - pb) == 1:
            k = min(pa, pb)
            out.append(k)
            idx.swap_positions(k)
            queue.popleft()
            stall = 0
        else:
            queue.rotate(-1)
            stall += 1
            if stall > len(queue):
                raise BundleError(
                    f"transposition queue stalled; pair list {list(queue)} is "
                    f"not closed under the required order changes"
                )
    return out


def traversal_path(graph: DualGraph, start: int) -> List[int]:
    """Half-edge crossing sequence of a DFS visiting every reachable face.

    Crossing half-edge h moves from face(h) into face(twin(h)); backtracks
    cross the twin. Length is at most twice the number of tree arcs.
    """
    adj: Dict[int, List[Tuple[int, int, int]]] = {}
    for f1, f2, hid in graph.arcs:
        adj.setdefault(f1, []).append((hid, f1, f2))
        adj.setdefault(f2, []).append((hid, f2, f1))
    for lst in adj.values():
        lst.sort()
    path: List[int] = []
    visited = {start}
    # iterative DFS; stack holds (face, iterator over its arcs)
    stack = [(start, iter(adj.get(start, ())))]
    enter_arc: Dict[int, int] = {}
    while stack:
        face, it = stack[-1]
        advanced = False
        for hid, _, there in it:
            if there not in visited:
                visited.add(there)
                path.append(hid)
                enter_arc[there] = hid
                stack.append((there, iter(adj.get(there, ()))))
                advanced = True
                break
        if not advanced:
            stack.pop()
            if stack:
                path.append(enter_arc[face])
    return path


def _thread_count() -> int:
    raw = os.environ.get("PDBUNDLE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _point_in_loop(geometry_chart, loop, pt) -> bool:
    from .arrangement import _cross

    for a, b in zip(loop, loop[1:] + loop[:1]):
        if _cross(geometry_chart(a), geometry_chart(b), pt) < 0:
            return False
    return True


def _face_centroid_chart(arr: Arrangement, face: FineFace):
    xs = [arr.chart_coords(v, face.tri) for v in face.loop]
    n = rat(len(xs))
    return (sum(x for x, _ in xs) / n, sum(y for _, y in xs) / n)


def _seed_face_for_component(
    arr: Arrangement, faces_in_component: Set[int], first: bool
) -> int:
    """First component: the face containing triangle 0's centroid (falling
    back to the smallest adjacent face when the centroid sits on the
    skeleton). Other components: their smallest face id."""
    if first:
        target = (rat(1, 3), rat(1, 3))
        containing = []
        for f in arr.fine_faces:
            if f.tri != 0 or f.id not in faces_in_component:
                continue
            if _point_in_loop(lambda v: arr.chart_coords(v, 0), list(f.loop), target):
                containing.append(f.id)
        if containing:
            return min(containing)
    return min(faces_in_component)


def build(
    complex_: SimplicialComplex,
    filtration: FiberedFiltration,
    merge: bool = True,
    verify_updates: bool = False,
    sweep_method: str = "auto",
) -> PDBundle:
    """Construct the full piecewise-linear diagram bundle."""
    if filtration.complex is not complex_:
        raise BundleError("filtration was built over a different complex")
    violation = filtration.validate_monotone()
    if violation is not None:
        raise FiltrationError(violation)
    surface = filtration.base
    arr = Arrangement(surface)
    tables = DetectionTables()

    edge_ids = list(range(len(surface.edges)))
    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            all_crossings = list(
                pool.map(lambda e: sweep_edge(filtration, e, sweep_method), edge_ids)
            )
    else:
        all_crossings = [sweep_edge(filtration, e, sweep_method) for e in edge_ids]
    for eid, crossings in zip(edge_ids, all_crossings):
        for crossing in crossings:
            process_detection(tables, arr, eid, crossing)

    kappa_per: Dict[int, int] = {}
    for tri in range(surface.n_triangles):
        segments = collect_segments(tables, arr, tri)
        kappa_per[tri] = len(segments)
        for v, w, pairs in segments:
            arr.insert_segment(tri, v, w, pairs)
    arr.propagate_surface_edge_labels()
    arr.snapshot_fine_faces()

    mu_per: Dict[int, int] = {tri: 0 for tri in range(surface.n_triangles)}
    for vertex in arr.verts:
        if vertex.anchor[0] == "interior":
            mu_per[vertex.anchor[1]] += 1
    stats = BundleStats(
        n_simplices=len(complex_),
        n_triangles=surface.n_triangles,
        kappa_per_triangle=kappa_per,
        kappa=sum(kappa_per.values()),
        mu_per_triangle=mu_per,
        mu=len(arr.verts),
    )

    graph = dual_graph(arr)
    components: List[Set[int]] = _components(graph)
    fine_by_id = {f.id: f for f in arr.fine_faces}
    face_pairing: Dict[int, PairingFunction] = {}
    interned: Dict[Tuple, PairingFunction] = {}

    first = True
    for component in sorted(components, key=min):
        seed = _seed_face_for_component(arr, component, first)
        first = False
        seed_face = fine_by_id[seed]
        cx, cy = _face_centroid_chart(arr, seed_face)
        lam = (1 - cx - cy, cx, cy)
        tri = seed_face.tri
        idx0 = indexing_from_values_at(
            complex_, lambda sid: filtration.evaluate_bary(sid, tri, lam)
        )
        state = ReductionState(complex_, idx0)
        if verify_updates:
            state.check_invariants()
        initial_key = (state.idx.key(), state.template_key())

        def record(face_id: int) -> None:
            snap = state.pairing()
            face_pairing[face_id] = interned.setdefault(snap.key(), snap)

        record(seed)
        path = traversal_path(graph, seed)
        current = seed
        seen = {seed}
        for hid in path:
            h = arr.halves[hid]
            t = arr.halves[h.twin]
            a, b = h.face, t.face
            dest = b if current == a else a
            # the labelled pairs are exactly the order reversals between the
            # two faces, in either crossing direction; the emitted schedule
            # lands on the destination face's indexing exactly
            positions = order_transpositions(state.idx, list(h.labels))
            changed = False
            for k in positions:
                changed |= state.transpose_update(k)
                if verify_updates:
                    state.check_invariants()
            stats.crossings_applied += 1
            if dest not in seen:
                seen.add(dest)
                if changed:
                    stats.pairing_changes += 1
                record(dest)
            current = dest
        if current != seed:
            raise BundleError("traversal did not return to its seed face")
        if verify_updates:
            if (state.idx.key(), state.template_key()) != initial_key:
                raise BundleError("reduction state drifted over the closed walk")

    if len(face_pairing) != len(arr.fine_faces):
        raise BundleError("traversal missed some arrangement faces")

    if merge:
        for hid in arr.alive_edges():
            h = arr.halves[hid]
            t = arr.halves[h.twin]
            if h.face < 0 or t.face < 0:
                continue
            if face_pairing[h.face] is face_pairing[t.face]:
                if arr.face_root(h.face) != arr.face_root(t.face):
                    arr.merge_faces(hid)
                else:
                    arr.delete_edge_between_equal_faces(hid)

    templates: Dict[int, Template] = {}
    for f in arr.fine_faces:
        root = arr.face_root(f.id)
        snap = face_pairing[f.id]
        existing = templates.get(root)
        if existing is None:
            templates[root] = Template(root, snap.pairs, snap.unpaired)
        elif (existing.pairs, existing.unpaired) != (snap.pairs, snap.unpaired):
            raise BundleError(f"merged face {root} has inconsistent templates")

    geometry = BundleGeometry(
        surface,
        [v.anchor for v in arr.verts],
        list(arr.fine_faces),
        {f.id: arr.face_root(f.id) for f in arr.fine_faces},
        [
            (
                min(arr.halves[hid].origin, arr.head(hid)),
                max(arr.halves[hid].origin, arr.head(hid)),
                tuple(arr.halves[hid].labels),
            )
            for hid in arr.alive_edges()
        ],
    )
    return PDBundle(complex_, filtration, geometry, templates, stats, arr)


def _components(graph: DualGraph) -> List[Set[int]]:
    adj: Dict[int, List[int]] = {node: [] for node in graph.nodes}
    for f1, f2, _ in graph.arcs:
        adj[f1].append(f2)
        adj[f2].append(f1)
    seen: Set[int] = set()
    out = []
    for node in graph.nodes:
        if node in seen:
            continue
        comp = {node}
        queue = deque([node])
        seen.add(node)
        while queue:
            cur = queue.popleft()
            for nb in adj[cur]:
                if nb not in seen:
                    seen.add(nb)
                    comp.add(nb)
                    queue.append(nb)
        out.append(comp)
    return out

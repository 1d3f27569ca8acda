"""Per-edge crossing detection and the swap-classification bookkeeping.

Restricted to a base edge, every simplex value is an affine function of
the edge parameter t. A crossing is a point where the relative order of
two simplices changes, with ties resolved by input order; pairs whose
restrictions coincide produce no crossing. Both a brute-force pairwise
pass and a Bentley-Ottmann sweep are provided; they must agree exactly.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .arrangement import Arrangement
from .filtration import EdgePoint, FiberedFiltration
from .rational import RAT_ONE, RAT_ZERO

Pair = Tuple[int, int]

#: below this simplex count the O(N^2) pairwise pass wins in practice
BENTLEY_OTTMANN_THRESHOLD = 96


class SweepError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeCrossing:
    at: EdgePoint
    swaps: Tuple[Pair, ...]  # canonical (smaller id, larger id), sorted


def _edge_lines(filtration: FiberedFiltration, eid: int):
    """(value at t=0, slope) per simplex id, 1-based."""
    u, v = filtration.base.edges[eid]
    lines = [None]
    for sid in range(1, len(filtration.complex) + 1):
        row = filtration.values[sid - 1]
        lines.append((row[u], row[v] - row[u]))
    return lines


def sweep_edge_bruteforce(filtration: FiberedFiltration, eid: int) -> List[EdgeCrossing]:
    """All order-change points along a base edge by pairwise comparison."""
    lines = _edge_lines(filtration, eid)
    n = len(filtration.complex)
    by_t: Dict[object, List[Pair]] = {}
    for i in range(1, n + 1):
        v0i, si = lines[i]
        v1i = v0i + si
        for j in range(i + 1, n + 1):
            v0j, sj = lines[j]
            v1j = v0j + sj
            # order at an endpoint is by (value, id); i < j wins ties
            first_at_0 = v0i <= v0j
            first_at_1 = v1i <= v1j
            if first_at_0 == first_at_1:
                continue
            h0 = v0i - v0j
            h1 = v1i - v1j
            if h0 == 0:
                t = RAT_ZERO
            elif h1 == 0:
                t = RAT_ONE
            else:
                t = h0 / (h0 - h1)
            by_t.setdefault(t, []).append((i, j))
    return [
        EdgeCrossing(EdgePoint(eid, t), tuple(sorted(by_t[t])))
        for t in sorted(by_t)
    ]


def sweep_edge_bentley_ottmann(
    filtration: FiberedFiltration, eid: int
) -> List[EdgeCrossing]:
    """Bentley-Ottmann sweep over the affine restrictions to one base edge.

    Status holds the simplex order; only currently-adjacent pairs are
    scheduled. Simultaneous crossings at one sweep position are handled by
    reversing each maximal block of lines through a common point.
    """
    lines = _edge_lines(filtration, eid)
    n = len(filtration.complex)
    sids = list(range(1, n + 1))

    def value_at(sid: int, t):
        v0, s = lines[sid]
        return v0 + s * t

    by_t: Dict[object, Dict[Pair, None]] = {}

    def emit(t, a: int, b: int) -> None:
        pair = (a, b) if a < b else (b, a)
        by_t.setdefault(t, {})[pair] = None

    # events exactly at t=0: groups tied at 0 whose id order disagrees with
    # the order just after 0 (slope order)
    start_groups: Dict[object, List[int]] = {}
    for sid in sids:
        start_groups.setdefault(lines[sid][0], []).append(sid)
    for v0, group in start_groups.items():
        if len(group) < 2:
            continue
        tie_order = sorted(group)  # order at t=0 per the input-id rule
        after = sorted(group, key=lambda s: (lines[s][1], s))
        _emit_block_changes(tie_order, after, lambda a, b: emit(RAT_ZERO, a, b))

    status = sorted(sids, key=lambda s: (lines[s][0], lines[s][1], s))
    pos = {sid: i for i, sid in enumerate(status)}

    heap: List[Tuple[object, object, int, int]] = []

    def schedule(lower: int, upper: int, now) -> None:
        """Queue the crossing of a currently-adjacent pair, if any remains."""
        v0l, sl = lines[lower]
        v0u, su = lines[upper]
        if v0l == v0u:
            return  # tied at 0; order fixed by slope, never crosses again
        if sl <= su:
            return  # diverging or parallel
        t = (v0u - v0l) / (sl - su)
        if now < t <= RAT_ONE:
            heapq.heappush(heap, (t, value_at(lower, t), lower, upper))

    for i in range(len(status) - 1):
        schedule(status[i], status[i + 1], RAT_ZERO)

    while heap:
        t = heap[0][0]
        batch: Dict[object, None] = {}
        while heap and heap[0][0] == t:
            _, y, _, _ = heapq.heappop(heap)
            batch[y] = None
        for y in batch:
            members = [sid for sid in status if value_at(sid, t) == y]
            if len(members) < 2:
                continue
            idxs = [pos[sid] for sid in members]
            lo, hi = min(idxs), max(idxs)
            if hi - lo + 1 != len(members):
                raise SweepError("block of concurrent lines is not contiguous")
            old_block = status[lo : hi + 1]
            if t == RAT_ONE:
                new_block = sorted(old_block)  # tie at the endpoint: id order
            else:
                new_block = sorted(old_block, key=lambda s: (lines[s][1], s))
            if new_block == old_block:
                continue
            _emit_block_changes(old_block, new_block, lambda a, b: emit(t, a, b))
            status[lo : hi + 1] = new_block
            for i in range(lo, hi + 1):
                pos[status[i]] = i
            if lo > 0:
                schedule(status[lo - 1], status[lo], t)
            if hi + 1 < len(status):
                schedule(status[hi], status[hi + 1], t)
            for i in range(lo, hi):
                schedule(status[i], status[i + 1], t)

    return [
        EdgeCrossing(EdgePoint(eid, t), tuple(sorted(by_t[t])))
        for t in sorted(by_t)
    ]


def _emit_block_changes(old: List[int], new: List[int], emit) -> None:
    old_pos = {sid: i for i, sid in enumerate(old)}
    for i, a in enumerate(new):
        for b in new[i + 1 :]:
            if old_pos[a] > old_pos[b]:
                emit(a, b)


def sweep_edge(
    filtration: FiberedFiltration, eid: int, method: str = "auto"
) -> List[EdgeCrossing]:
    """Crossings along one base edge, in sweep (increasing t) order."""
    if method == "auto":
        method = (
            "bruteforce"
            if len(filtration.complex) <= BENTLEY_OTTMANN_THRESHOLD
            else "bentley-ottmann"
        )
    if method == "bruteforce":
        return sweep_edge_bruteforce(filtration, eid)
    if method == "bentley-ottmann":
        return sweep_edge_bentley_ottmann(filtration, eid)
    raise SweepError(f"unknown sweep method {method!r}")


@dataclass
class DetectionTables:
    """The per-triangle dictionaries that classify detected swap loci.

    d1 collects detected endpoints per simplex pair; d2 holds completed
    interior segments; d3 holds pairs still waiting for their second
    endpoint. Pairs whose two endpoints coincide (a locus degenerating to
    a single boundary point) are recorded and skipped.
    """

    d1: Dict[int, Dict[Pair, List[int]]] = field(default_factory=dict)
    d2: Dict[int, Dict[Tuple[int, int], List[Pair]]] = field(default_factory=dict)
    d3: Dict[int, Dict[int, List[Pair]]] = field(default_factory=dict)
    zero_length: List[Tuple[int, Pair, int]] = field(default_factory=list)
    detections: List[Tuple[int, Pair, Tuple[int, int]]] = field(default_factory=list)
    last_t: Dict[int, object] = field(default_factory=dict)

    def for_triangle(self, tri: int):
        return (
            self.d1.setdefault(tri, {}),
            self.d2.setdefault(tri, {}),
            self.d3.setdefault(tri, {}),
        )


def process_detection(
    tables: DetectionTables,
    arr: Arrangement,
    eid: int,
    crossing: EdgeCrossing,
) -> int:
    """Apply one sweep event: split the arrangement edge (unless the event
    sits on a base vertex), update the detection tables, and toggle base
    edge swap labels per the detected-in-exactly-one-triangle rule.

    Returns the arrangement vertex id at the event point.
    """
    surf = arr.surface
    t = crossing.at.t
    if eid in tables.last_t and t <= tables.last_t[eid]:
        raise SweepError(
            f"crossing at t={t} on edge {eid} arrived after t={tables.last_t[eid]}"
        )
    tables.last_t[eid] = t
    u, v = surf.edges[eid]
    if t == RAT_ZERO:
        vid = u
    elif t == RAT_ONE:
        vid = v
    else:
        vid = arr.split_surface_edge(eid, t)
    for tri in surf.edge_triangles[eid]:
        d1, d2, d3 = tables.for_triangle(tri)
        for pair in crossing.swaps:
            endpoints = d1.setdefault(pair, [])
            endpoints.append(vid)
            if len(endpoints) == 1:
                d3.setdefault(vid, []).append(pair)
                continue
            if len(endpoints) > 2:
                raise SweepError(
                    f"pair {pair} detected more than twice in triangle {tri}"
                )
            w = endpoints[0]
            waiting = d3.get(w, [])
            if pair in waiting:
                waiting.remove(pair)
            if vid == w:
                tables.zero_length.append((tri, pair, vid))
                continue
            anch_v = arr.verts[vid].anchor
            anch_w = arr.verts[w].anchor
            if anch_v[0] == "bvert" and anch_w[0] == "bvert":
                other_eid = surf.edge_of(anch_v[1], anch_w[1])
                if other_eid is None:
                    raise SweepError(
                        f"base vertices {anch_v[1]}, {anch_w[1]} of triangle "
                        f"{tri} share no edge"
                    )
                tables.detections.append((tri, pair, (w, vid)))
                if surf.is_boundary_edge(other_eid):
                    continue
                labels = arr.surface_edge_labels[other_eid]
                if pair in labels:
                    labels.remove(pair)  # already detected in the other triangle
                else:
                    labels.append(pair)
            else:
                key = (w, vid) if w < vid else (vid, w)
                d2.setdefault(key, []).append(pair)
    return vid


def collect_segments(
    tables: DetectionTables, arr: Arrangement, tri: int
) -> List[Tuple[int, int, List[Pair]]]:
    """Interior swap segments of one triangle, ready for insertion, in a
    deterministic geometric order. Fails if some detection never found its
    second endpoint."""
    _, d2, d3 = tables.for_triangle(tri)
    for vid, waiting in d3.items():
        if waiting:
            raise SweepError(
                f"triangle {tri}: pairs {waiting} at vertex {vid} never "
                f"completed a segment"
            )
    entries = []
    for (a, b), pairs in d2.items():
        ka, kb = arr.vertex_sort_key(a), arr.vertex_sort_key(b)
        if kb < ka:
            a, b, ka, kb = b, a, kb, ka
        entries.append(((ka, kb), a, b, sorted(pairs)))
    entries.sort(key=lambda e: e[0])
    return [(a, b, pairs) for _, a, b, pairs in entries]

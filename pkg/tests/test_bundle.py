import random

import pytest

from pdbundle.bundle import (
    BundleError,
    build,
    order_transpositions,
    traversal_path,
)
from pdbundle.arrangement import DualGraph
from pdbundle.complexes import SimplexIndexing, SimplicialComplex
from pdbundle.filtration import FiberedFiltration
from pdbundle.query import oracle_diagram
from pdbundle.rational import rat
from pdbundle.reduction import diagram_bary
from pdbundle.synthetic import random_rips_fixture
from conftest import make_b1


def test_order_transpositions_spec_example():
    idx = SimplexIndexing.identity(3)
    out = order_transpositions(idx, [(1, 3), (1, 2), (2, 3)])
    assert out == [1, 2, 1]
    # applying the emitted sequence reverses the order completely
    work = idx.copy()
    for k in out:
        work.swap_positions(k)
    assert work.simplex_at == [3, 2, 1]


def test_order_transpositions_single_pair():
    idx = SimplexIndexing.identity(4)
    assert order_transpositions(idx, [(2, 3)]) == [2]


def test_order_transpositions_empty():
    idx = SimplexIndexing.identity(4)
    assert order_transpositions(idx, []) == []


def test_order_transpositions_stall_detected():
    idx = SimplexIndexing.identity(4)
    with pytest.raises(BundleError):
        order_transpositions(idx, [(1, 3)])  # not closed: (1,2),(2,3) missing


def test_order_transpositions_fuzz_realizes_target():
    rng = random.Random(123)
    for _ in range(300):
        n = rng.randrange(2, 11)
        target = list(range(1, n + 1))
        rng.shuffle(target)
        idx0 = SimplexIndexing.identity(n)
        idx1 = SimplexIndexing.from_positions(target)
        pairs = []
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                if (idx0.pos(a) - idx0.pos(b)) * (idx1.pos(a) - idx1.pos(b)) < 0:
                    pairs.append((a, b))
        rng.shuffle(pairs)
        emitted = order_transpositions(idx0, pairs)
        assert len(emitted) == len(pairs)
        work = idx0.copy()
        for k in emitted:
            assert 1 <= k < n  # transpositions are of consecutive positions
            work.swap_positions(k)
        assert work.position == idx1.position


def path_graph(n):
    nodes = tuple(range(n))
    arcs = tuple((i, i + 1, 100 + i) for i in range(n - 1))
    return DualGraph(nodes, arcs)


def test_traversal_path_line():
    g = path_graph(3)
    path = traversal_path(g, 0)
    assert path == [100, 101, 101, 100]


def test_traversal_path_single_node():
    g = DualGraph((7,), ())
    assert traversal_path(g, 7) == []


def test_traversal_path_star():
    g = DualGraph((0, 1, 2, 3), ((0, 1, 10), (0, 2, 11), (0, 3, 12)))
    path = traversal_path(g, 0)
    assert path == [10, 10, 11, 11, 12, 12]
    assert len(path) == 6


def test_build_ff1_templates(ff1):
    complex_, filt = ff1
    bundle = build(complex_, filt, merge=False, verify_updates=True)
    assert len(bundle.geometry.fine_faces) == 3
    templates = sorted(
        (sorted(t.pairs), sorted(t.unpaired)) for t in bundle.templates.values()
    )
    assert templates == [
        ([(1, 3)], [2]),
        ([(2, 3)], [1]),
        ([(2, 3)], [1]),
    ]
    merged = build(complex_, filt, merge=True, verify_updates=True)
    assert len(merged.templates) == 2


def test_build_ff2_templates(ff2):
    complex_, filt = ff2
    bundle = build(complex_, filt, merge=True, verify_updates=True)
    templates = sorted(
        (sorted(t.pairs), sorted(t.unpaired)) for t in bundle.templates.values()
    )
    assert templates == [
        ([(2, 4), (3, 5), (6, 7)], [1]),
        ([(2, 6), (3, 5), (4, 7)], [1]),
    ]


def test_build_ff3_edge_swap(ff3):
    complex_, filt = ff3
    bundle = build(complex_, filt, merge=False, verify_updates=True)
    assert len(bundle.geometry.fine_faces) == 2
    templates = sorted(
        (sorted(t.pairs), sorted(t.unpaired)) for t in bundle.templates.values()
    )
    assert templates == [([(1, 3)], [2]), ([(2, 3)], [1])]


def test_build_constant_filtration_merges_to_one():
    K = SimplicialComplex([[1], [2], [1, 2]])
    base = make_b1()
    values = {(1, v): 0 for v in range(4)}
    values |= {(2, v): 1 for v in range(4)}
    values |= {(3, v): 2 for v in range(4)}
    filt = FiberedFiltration(K, base, values)
    bundle = build(K, filt, merge=True)
    assert len(bundle.templates) == 1
    (tpl,) = bundle.templates.values()
    assert tpl.pairs == {(2, 3)} and tpl.unpaired == {1}


def test_template_matches_oracle_on_random_interior_points(ff1, ff2, ff3):
    rng = random.Random(31)
    for complex_, filt in (ff1, ff2, ff3):
        bundle = build(complex_, filt, merge=True)
        arr = bundle.arrangement
        for face in arr.fine_faces:
            root = arr.face_root(face.id)
            tpl = bundle.templates[root]
            charts = [arr.chart_coords(v, face.tri) for v in face.loop]
            for _ in range(5):
                weights = [rat(rng.randrange(1, 7)) for _ in charts]
                total = sum(weights)
                x = sum(w * c[0] for w, c in zip(weights, charts)) / total
                y = sum(w * c[1] for w, c in zip(weights, charts)) / total
                lam = (1 - x - y, x, y)
                for q in (0, 1):
                    got = diagram_bary(tpl, filt, face.tri, lam, q)
                    # oracle at the sampled point's global coordinates
                    a, b, c = filt.base.triangles[face.tri]
                    (ax, ay) = filt.base.bverts[a]
                    (bx, by) = filt.base.bverts[b]
                    (cx, cy) = filt.base.bverts[c]
                    px = ax + x * (bx - ax) + y * (cx - ax)
                    py = ay + x * (by - ay) + y * (cy - ay)
                    want = oracle_diagram(complex_, filt, (px, py), q)
                    assert got.points == want.points


def test_boundary_continuity_across_edges(ff1, ff2, ff3):
    # diagrams agree on both sides at points on every interior edge
    for complex_, filt in (ff1, ff2, ff3):
        bundle = build(complex_, filt, merge=False)
        arr = bundle.arrangement
        for hid in arr.alive_edges():
            h = arr.halves[hid]
            t = arr.halves[h.twin]
            if h.face < 0 or t.face < 0:
                continue
            tri_a = next(f.tri for f in arr.fine_faces if f.id == h.face)
            tri_b = next(f.tri for f in arr.fine_faces if f.id == t.face)
            tpl_a = bundle.templates[arr.face_root(h.face)]
            tpl_b = bundle.templates[arr.face_root(t.face)]
            for num in (1, 2, 3):
                s = rat(num, 4)
                ca = arr.chart_coords(h.origin, tri_a)
                cb = arr.chart_coords(arr.head(hid), tri_a)
                x = ca[0] + s * (cb[0] - ca[0])
                y = ca[1] + s * (cb[1] - ca[1])
                lam_a = (1 - x - y, x, y)
                ca2 = arr.chart_coords(h.origin, tri_b)
                cb2 = arr.chart_coords(arr.head(hid), tri_b)
                x2 = ca2[0] + s * (cb2[0] - ca2[0])
                y2 = ca2[1] + s * (cb2[1] - ca2[1])
                lam_b = (1 - x2 - y2, x2, y2)
                for q in (0, 1):
                    da = diagram_bary(tpl_a, filt, tri_a, lam_a, q)
                    db = diagram_bary(tpl_b, filt, tri_b, lam_b, q)
                    assert da.points == db.points


def test_walk_state_restored_by_verify_mode():
    K, F = random_rips_fixture(3)
    build(K, F, merge=True, verify_updates=False)  # smoke: no drift errors


def test_build_disconnected_base():
    # two disjoint squares: each dual-graph component gets its own seed
    from pdbundle.filtration import TriangulatedSurface

    K = SimplicialComplex([[1], [2], [1, 2]])
    base = TriangulatedSurface(
        [(0, 0), (1, 0), (0, 1), (1, 1), (5, 0), (6, 0), (5, 1), (6, 1)],
        [(0, 1, 2), (1, 3, 2), (4, 5, 6), (5, 7, 6)],
    )
    values = {}
    for v in range(8):
        values[(1, v)] = 0
        values[(3, v)] = 2
    for v, fb in enumerate([-1, 1, 1, 1, 1, -1, 1, 1]):
        values[(2, v)] = fb
    filt = FiberedFiltration(K, base, values)
    bundle = build(K, filt, merge=True, verify_updates=True)
    loc_pairs = {
        (tuple(sorted(t.pairs)), tuple(sorted(t.unpaired)))
        for t in bundle.templates.values()
    }
    # each square carries both templates (the swap happens in both)
    assert loc_pairs == {(((1, 3),), (2,)), (((2, 3),), (1,))}
    from pdbundle.query import build_locator, query_diagram

    loc = build_locator(bundle)
    assert query_diagram(bundle, loc, (rat(0), rat(0)), 0).points == query_diagram(
        bundle, loc, (rat(6), rat(0)), 0
    ).points


def test_build_respects_thread_cap(monkeypatch, ff2):
    complex_, filt = ff2
    monkeypatch.setenv("PDBUNDLE_THREADS", "4")
    parallel = build(complex_, filt, merge=True)
    monkeypatch.setenv("PDBUNDLE_THREADS", "1")
    serial = build(complex_, filt, merge=True)
    assert {t.key() for t in parallel.templates.values()} == {
        t.key() for t in serial.templates.values()
    }


def test_build_rejects_foreign_filtration(ff1, ff2):
    complex1, _ = ff1
    _, filt2 = ff2
    with pytest.raises(BundleError):
        build(complex1, filt2)


def test_stats_shapes(ff1):
    complex_, filt = ff1
    bundle = build(complex_, filt)
    s = bundle.stats
    assert s.n_simplices == 3
    assert s.n_triangles == 2
    assert s.kappa == sum(s.kappa_per_triangle.values()) == 1
    assert s.mu == 6
    assert s.mu_per_triangle == {0: 0, 1: 0}


def test_merged_faces_have_distinct_templates():
    K, F = random_rips_fixture(1)
    bundle = build(K, F, merge=True)
    arr = bundle.arrangement
    for hid in arr.alive_edges():
        h = arr.halves[hid]
        t = arr.halves[h.twin]
        if h.face < 0 or t.face < 0:
            continue
        ra, rb = arr.face_root(h.face), arr.face_root(t.face)
        if ra == rb:
            continue
        ta, tb = bundle.templates[ra], bundle.templates[rb]
        assert (ta.pairs, ta.unpaired) != (tb.pairs, tb.unpaired)

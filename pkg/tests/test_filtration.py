import random

import pytest

from pdbundle.filtration import (
    FiberedFiltration,
    FiltrationError,
    SurfaceError,
    TriangulatedSurface,
    barycentric,
)
from pdbundle.rational import rat


def test_surface_counts(b1):
    assert len(b1.edges) == 5
    assert b1.edge_triangles[b1.edge_of(1, 2)] == (0, 1)
    assert b1.is_boundary_edge(b1.edge_of(0, 1))


def test_surface_rejects_inconsistent_orientation():
    with pytest.raises(SurfaceError):
        TriangulatedSurface(
            [(0, 0), (1, 0), (0, 1), (1, 1)], [(0, 1, 2), (1, 2, 3)]
        )


def test_surface_rejects_degenerate_triangle():
    with pytest.raises(SurfaceError):
        TriangulatedSurface([(0, 0), (1, 0), (2, 0)], [(0, 1, 2)])


def test_surface_rejects_edge_with_three_triangles():
    with pytest.raises(SurfaceError):
        TriangulatedSurface(
            [(0, 0), (1, 0), (0, 1), (0, -1), (1, 1)],
            [(0, 1, 2), (1, 0, 3), (0, 1, 4)],
        )


def test_surface_rejects_pinch():
    # two triangles sharing only vertex 2
    with pytest.raises(SurfaceError):
        TriangulatedSurface(
            [(0, 0), (1, 0), (0, 1), (-1, 2), (-2, 1)],
            [(0, 1, 2), (2, 3, 4)],
        )


def test_validate_monotone_ok(ff1):
    _, filt = ff1
    assert filt.validate_monotone() is None


def test_validate_monotone_violation(ff1):
    complex_, filt = ff1
    values = {
        (sid, v): filt.values[sid - 1][v]
        for sid in range(1, 4)
        for v in range(4)
    }
    values[(3, 0)] = rat(-2)
    bad = FiberedFiltration(complex_, filt.base, values)
    msg = bad.validate_monotone()
    assert msg is not None and "f(3, v0)" in msg


def test_validate_monotone_ff2(ff2):
    _, filt = ff2
    assert filt.validate_monotone() is None


def test_barycentric_vertex(b2):
    assert barycentric(b2, 0, (rat(0), rat(0))) == (1, 0, 0)


def test_barycentric_centroid(b2):
    lam = barycentric(b2, 0, (rat(1, 3), rat(1, 3)))
    assert lam == (rat(1, 3), rat(1, 3), rat(1, 3))


def test_barycentric_outside(b2):
    lam = barycentric(b2, 0, (rat(1), rat(1)))
    assert lam == (-1, 1, 1)
    assert any(l < 0 for l in lam)


def test_evaluate_vertex_value(ff1):
    _, filt = ff1
    assert filt.evaluate(2, 0, (rat(0), rat(0))) == -1


def test_evaluate_interior(ff1):
    # f(b) = -1 + 2x + 2y on T1, so f(b)(1/4, 1/4) = 0
    _, filt = ff1
    assert filt.evaluate(2, 0, (rat(1, 4), rat(1, 4))) == 0


def test_evaluate_ff2_edge_midpoint(ff2):
    # f(yz) = 2 + 2x + 2y on T, so value 3 at (1/2, 0)
    _, filt = ff2
    assert filt.evaluate(6, 0, (rat(1, 2), rat(0))) == 3


def test_evaluate_outside_raises(ff2):
    _, filt = ff2
    with pytest.raises(FiltrationError):
        filt.evaluate(6, 0, (rat(1), rat(1)))


def test_restrict_to_edge(ff1):
    _, filt = ff1
    e = filt.base.edge_of(0, 1)
    assert filt.restrict_to_edge(2, e) == (-1, 1)
    assert filt.restrict_to_edge(1, e) == (0, 0)


def test_restrict_to_edge_ff2(ff2):
    _, filt = ff2
    e = filt.base.edge_of(0, 1)
    assert filt.restrict_to_edge(6, e) == (2, 4)


def test_evaluate_convexity_random(ff2):
    _, filt = ff2
    rng = random.Random(3)
    for _ in range(200):
        lam2 = rat(rng.randrange(0, 101), 100)
        lam3 = rat(rng.randrange(0, 101), 100) * (1 - lam2)
        lam = (1 - lam2 - lam3, lam2, lam3)
        for sid in range(1, 8):
            val = filt.evaluate_bary(sid, 0, lam)
            corner_vals = [filt.values[sid - 1][v] for v in filt.base.triangles[0]]
            assert min(corner_vals) <= val <= max(corner_vals)


def test_monotone_implies_pointwise_monotone(ff2):
    complex_, filt = ff2
    rng = random.Random(5)
    samples = 0
    while samples < 1000:
        lam2 = rat(rng.randrange(0, 101), 100)
        lam3 = rat(rng.randrange(0, 101), 100) * (1 - lam2)
        lam = (1 - lam2 - lam3, lam2, lam3)
        for s in complex_.simplices:
            for fid in complex_.facet_ids[s.id - 1]:
                assert filt.evaluate_bary(fid, 0, lam) <= filt.evaluate_bary(
                    s.id, 0, lam
                )
                samples += 1


def test_shared_edge_consistency(ff1):
    # evaluating on the shared edge from either adjacent triangle agrees
    _, filt = ff1
    for t_num in range(5):
        t = rat(t_num, 4)
        px, py = 1 - t, t  # along the shared edge from V2 (1,0) to V3 (0,1)
        for sid in range(1, 4):
            assert filt.evaluate(sid, 0, (px, py)) == filt.evaluate(sid, 1, (px, py))


def test_missing_value_rejected(f1, b2):
    with pytest.raises(FiltrationError):
        FiberedFiltration(f1, b2, {(1, 0): 0})

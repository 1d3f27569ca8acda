import pytest

from pdbundle.synthetic import (
    drifting_clouds,
    grid_surface,
    random_rips_fixture,
    vietoris_rips_fibered,
)
from conftest import make_b2


def test_grid_surface_4x4():
    base = grid_surface(4, 4)
    assert len(base.bverts) == 16
    assert base.n_triangles == 18
    assert len(base.edges) == 33


def test_rips_two_points_constant_distance():
    base = make_b2()
    clouds = {v: [(0, 0), (2, 0)] for v in range(3)}
    complex_, filt = vietoris_rips_fibered(base, clouds, maxdim=1)
    assert [s.vertices for s in complex_.simplices] == [(1,), (2,), (1, 2)]
    for v in range(3):
        assert filt.value_at_bvert(3, v) == 4  # squared distance


def test_rips_three_collinear_points():
    base = make_b2()
    clouds = {v: [(0, 0), (1, 0), (3, 0)] for v in range(3)}
    complex_, filt = vietoris_rips_fibered(base, clouds, maxdim=2)
    by_verts = {s.vertices: s.id for s in complex_.simplices}
    assert filt.value_at_bvert(by_verts[(1, 2)], 0) == 1
    assert filt.value_at_bvert(by_verts[(1, 3)], 0) == 9
    assert filt.value_at_bvert(by_verts[(2, 3)], 0) == 4
    # triangle diameter: the longest pairwise squared distance
    assert filt.value_at_bvert(by_verts[(1, 2, 3)], 0) == 9


def test_rips_maxdim_caps_dimension():
    base = make_b2()
    clouds = {v: [(0, 0), (1, 0), (0, 1)] for v in range(3)}
    complex_, _ = vietoris_rips_fibered(base, clouds, maxdim=1)
    assert max(s.dim for s in complex_.simplices) == 1


def test_rips_rejects_mismatched_clouds():
    base = make_b2()
    clouds = {0: [(0, 0)], 1: [(0, 0), (1, 1)], 2: [(0, 0)]}
    with pytest.raises(ValueError):
        vietoris_rips_fibered(base, clouds, maxdim=1)


def test_rips_rejects_excessive_maxdim():
    base = make_b2()
    clouds = {v: [(0, 0), (1, 0)] for v in range(3)}
    with pytest.raises(ValueError):
        vietoris_rips_fibered(base, clouds, maxdim=2)


def test_rips_values_monotone_and_exact():
    K, F = random_rips_fixture(9)
    assert F.validate_monotone() is None
    assert len(K) == 41  # 6 + 15 + 20


def test_drifting_clouds_deterministic():
    base = grid_surface(3, 3)
    a = drifting_clouds(base, 5, seed=1)
    b = drifting_clouds(base, 5, seed=1)
    c = drifting_clouds(base, 5, seed=2)
    assert a == b
    assert a != c


def test_drifting_clouds_vary_over_base():
    base = grid_surface(3, 3)
    clouds = drifting_clouds(base, 5, seed=3)
    assert clouds[0] != clouds[8]

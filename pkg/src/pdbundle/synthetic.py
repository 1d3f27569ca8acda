"""Synthetic inputs: grid base surfaces, drifting point clouds, and the
Vietoris-Rips fibered filtration built from per-base-vertex clouds.

The Rips values use squared Euclidean distances, so rational point
coordinates give exact rational filtration values and the whole pipeline
stays exact. Squared distances are monotone in the same order as
distances, so diagrams differ from the metric convention only by the
squaring of the axes.
"""
from __future__ import annotations

import random
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .complexes import SimplicialComplex
from .filtration import FiberedFiltration, TriangulatedSurface
from .rational import RAT_ZERO, rat


def grid_surface(nx: int, ny: int) -> TriangulatedSurface:
    """The nx-by-ny vertex grid, each cell split into two triangles with
    consistent orientation."""
    if nx < 2 or ny < 2:
        raise ValueError("grid needs at least 2x2 vertices")
    verts = [(rat(i), rat(j)) for j in range(ny) for i in range(nx)]
    tris = []
    for j in range(ny - 1):
        for i in range(nx - 1):
            v00 = j * nx + i
            v10 = v00 + 1
            v01 = v00 + nx
            v11 = v01 + 1
            tris.append((v00, v10, v01))
            tris.append((v10, v11, v01))
    return TriangulatedSurface(verts, tris)


def vietoris_rips_fibered(
    base: TriangulatedSurface,
    clouds: Dict[int, Sequence[Tuple[object, object]]],
    maxdim: int,
) -> Tuple[SimplicialComplex, FiberedFiltration]:
    """Rips complex of n points with the squared-diameter filtration at
    every base vertex, extended linearly over the base.

    All clouds must have the same point count n; the complex is every
    subset of {1..n} of size at most maxdim+1, listed faces-first.
    """
    sizes = {len(clouds[v]) for v in range(len(base.bverts))}
    if len(sizes) != 1:
        raise ValueError(f"clouds have mismatched sizes {sorted(sizes)}")
    n = sizes.pop()
    if maxdim > n - 1:
        raise ValueError(f"maxdim {maxdim} exceeds n-1 = {n - 1}")
    simplices: List[Tuple[int, ...]] = []
    for size in range(1, maxdim + 2):
        simplices.extend(combinations(range(1, n + 1), size))
    complex_ = SimplicialComplex(simplices)

    values: Dict[Tuple[int, int], object] = {}
    for v in range(len(base.bverts)):
        cloud = [(rat(x), rat(y)) for x, y in clouds[v]]
        d2 = {}
        for a, b in combinations(range(n), 2):
            dx = cloud[a][0] - cloud[b][0]
            dy = cloud[a][1] - cloud[b][1]
            d2[(a, b)] = dx * dx + dy * dy
        for sid, verts in enumerate(simplices, start=1):
            if len(verts) == 1:
                values[(sid, v)] = RAT_ZERO
            else:
                values[(sid, v)] = max(
                    d2[(a - 1, b - 1)] for a, b in combinations(verts, 2)
                )
    return complex_, FiberedFiltration(complex_, base, values)


def drifting_clouds(
    base: TriangulatedSurface,
    n_points: int,
    seed: int,
    denom: int = 64,
    drift_denom: int = 48,
) -> Dict[int, List[Tuple[object, object]]]:
    """One random cloud whose points drift linearly over the base grid.

    Point k at base vertex (x, y) sits at P_k + x*A_k + y*B_k with P
    uniform in the unit square and A, B small random rational velocities:
    the time-and-parameter-varying point cloud scenario.
    """
    rng = random.Random(seed)
    P = [
        (rat(rng.randrange(denom + 1), denom), rat(rng.randrange(denom + 1), denom))
        for _ in range(n_points)
    ]
    def vel():
        return rat(rng.randrange(-3, 4), drift_denom)

    A = [(vel(), vel()) for _ in range(n_points)]
    B = [(vel(), vel()) for _ in range(n_points)]
    clouds: Dict[int, List[Tuple[object, object]]] = {}
    for v, (x, y) in enumerate(base.bverts):
        clouds[v] = [
            (P[k][0] + x * A[k][0] + y * B[k][0], P[k][1] + x * A[k][1] + y * B[k][1])
            for k in range(n_points)
        ]
    return clouds


def random_rips_fixture(seed: int, nx: int = 4, ny: int = 4, n_points: int = 6,
                        maxdim: int = 2):
    """A randomized fibered filtration: Rips over a drifting cloud on a grid."""
    base = grid_surface(nx, ny)
    clouds = drifting_clouds(base, n_points, seed)
    return vietoris_rips_fibered(base, clouds, maxdim)


def random_rational_point(rng: random.Random, bbox, denom: int = 9973):
    """A uniform random rational point in a bounding box."""
    x0, y0, x1, y1 = bbox
    x = x0 + (x1 - x0) * rat(rng.randrange(denom + 1), denom)
    y = y0 + (y1 - y0) * rat(rng.randrange(denom + 1), denom)
    return (x, y)

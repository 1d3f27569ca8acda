"""A Vietoris-Rips bundle over a time-and-parameter grid.

Six planar points drift linearly as two parameters (think time and a model
coefficient) vary over a 4x4 grid. At each grid vertex the Rips filtration
of the cloud gives a filtration; linear interpolation in between gives a
piecewise-linear fibered filtration. The bundle precomputes one diagram
template per polygon of constant simplex order, after which diagrams
anywhere cost O(N).
"""
import time

from pdbundle import (
    build,
    build_locator,
    grid_surface,
    drifting_clouds,
    vietoris_rips_fibered,
    oracle_diagram,
    query_diagram,
    rat,
)

base = grid_surface(4, 4)                      # 16 vertices, 18 triangles
clouds = drifting_clouds(base, n_points=6, seed=11)
K, F = vietoris_rips_fibered(base, clouds, maxdim=2)
print(f"complex: {len(K)} simplices (6 vertices, 15 edges, 20 triangles)")

t0 = time.time()
bundle = build(K, F)
print(f"built in {time.time() - t0:.2f}s")

s = bundle.stats
print(f"swap segments kappa = {s.kappa}  (per triangle: "
      f"{min(s.kappa_per_triangle.values())}..{max(s.kappa_per_triangle.values())})")
print(f"arrangement vertices mu = {s.mu}")
print(f"polygons before merging: {len(bundle.geometry.fine_faces)}")
print(f"polygons after merging:  {len(bundle.templates)}")
print(f"crossings walked: {s.crossings_applied}, of which "
      f"{s.pairing_changes} changed the pairing")

# sample the 1-dimensional diagram along a diagonal path through the grid
loc = build_locator(bundle)
print("\nPD_1 along the diagonal of the parameter square:")
for step in range(7):
    t = rat(step, 2)
    p = (t, t)
    d = query_diagram(bundle, loc, p, 1)
    pts = [(str(b), str(dd)) for b, dd in d.points]
    print(f"  p = ({t}, {t}): {len(pts)} classes  {pts[:3]}{'...' if len(pts) > 3 else ''}")

# timing: template queries vs from-scratch reductions
import random
rng = random.Random(0)
pts = [(rat(rng.randrange(0, 3001), 1000), rat(rng.randrange(0, 3001), 1000))
       for _ in range(100)]
t0 = time.time()
for p in pts:
    query_diagram(bundle, loc, p, 1)
fast = time.time() - t0
t0 = time.time()
for p in pts:
    oracle_diagram(K, F, p, 1)
slow = time.time() - t0
print(f"\n100 queries: templates {fast * 1000:.0f}ms vs from-scratch {slow * 1000:.0f}ms "
      f"({slow / fast:.1f}x)")

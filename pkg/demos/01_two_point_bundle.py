"""Smallest interesting bundle: one edge whose endpoints trade places.

The complex is two vertices a, b and the edge ab. Over the unit square,
f(a) = 0 everywhere while f(b) ramps from -1 at the origin to +1, so a and
b swap order along the line where f(b) = 0. The result is a bundle with
two distinct diagram templates separated by that line.
"""
from pdbundle import (
    SimplicialComplex,
    TriangulatedSurface,
    FiberedFiltration,
    build,
    build_locator,
    query_diagram,
    oracle_diagram,
    rat,
)

# the complex: a = {1}, b = {2}, ab = {1,2}; ids are file order 1, 2, 3
K = SimplicialComplex([[1], [2], [1, 2]])

# the base: unit square, two triangles
B = TriangulatedSurface(
    [(0, 0), (1, 0), (0, 1), (1, 1)],
    [(0, 1, 2), (1, 3, 2)],
)

# filtration values at each base vertex: f(a) = 0, f(ab) = 2 everywhere;
# f(b) = -1 at the origin and +1 at the other corners
values = {}
for v in range(4):
    values[(1, v)] = 0
    values[(3, v)] = 2
for v, fb in enumerate([-1, 1, 1, 1]):
    values[(2, v)] = fb
F = FiberedFiltration(K, B, values)

bundle = build(K, F)
print("swap segments:", bundle.stats.kappa)
print("arrangement vertices:", bundle.stats.mu)
print("polygons after merging:", len(bundle.templates))
for root, tpl in sorted(bundle.templates.items()):
    print(f"  polygon {root}: pairs {sorted(tpl.pairs)}, immortal {sorted(tpl.unpaired)}")

# querying is an O(N) template evaluation after point location
loc = build_locator(bundle)
for p in [(0, 0), (rat(1, 10), rat(1, 10)), (rat(3, 4), rat(3, 4)), (1, 0)]:
    d = query_diagram(bundle, loc, p, 0)
    print(f"PD_0 at {p}: {[(str(b), str(dd)) for b, dd in d.points]}")

# the point (1/4, 1/4) sits exactly on the swap line; both neighboring
# templates give the same diagram there, so the answer is unambiguous
p = (rat(1, 4), rat(1, 4))
print(f"on the swap line {p}: {query_diagram(bundle, loc, p, 0).points}")

# cross-check one point against a from-scratch reduction
p = (rat(2, 7), rat(1, 7))
assert query_diagram(bundle, loc, p, 0).points == oracle_diagram(K, F, p, 0).points
print("query agrees with the from-scratch oracle at", p)

import pytest

from pdbundle.complexes import SimplicialComplex
from pdbundle.filtration import FiberedFiltration, TriangulatedSurface


def make_f1():
    """a = {1}, b = {2}, ab = {1,2}; ids 1, 2, 3."""
    return SimplicialComplex([[1], [2], [1, 2]])


def make_f2():
    """Full 2-simplex on {x, y, z}: x,y,z,xy,xz,yz,xyz with ids 1..7."""
    return SimplicialComplex([[1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]])


def make_b1():
    """Unit square: V1(0,0) V2(1,0) V3(0,1) V4(1,1); T1=(V1,V2,V3), T2=(V2,V4,V3)."""
    return TriangulatedSurface(
        [(0, 0), (1, 0), (0, 1), (1, 1)], [(0, 1, 2), (1, 3, 2)]
    )


def make_b2():
    """Single triangle V1(0,0) V2(1,0) V3(0,1)."""
    return TriangulatedSurface([(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])


def make_ff1():
    """F1 over B1: f(a)=0, f(b)=(-1,1,1,1), f(ab)=2."""
    complex_ = make_f1()
    base = make_b1()
    values = {}
    for v in range(4):
        values[(1, v)] = 0
        values[(3, v)] = 2
    for v, fb in enumerate([-1, 1, 1, 1]):
        values[(2, v)] = fb
    return complex_, FiberedFiltration(complex_, base, values)


def make_ff2():
    """F2 over B2: x=y=z=0, xz=1, xy=3, xyz=5, f(yz)=(2,4,4)."""
    complex_ = make_f2()
    base = make_b2()
    values = {}
    for v in range(3):
        for sid in (1, 2, 3):
            values[(sid, v)] = 0
        values[(4, v)] = 3  # xy
        values[(5, v)] = 1  # xz
        values[(7, v)] = 5  # xyz
    for v, y in enumerate([2, 4, 4]):
        values[(6, v)] = y  # yz
    return complex_, FiberedFiltration(complex_, base, values)


def make_ff3():
    """Degenerate: F1 over B1 with f(b)=(-1,0,0,1); the swap locus of
    (a, b) is the shared base edge (V2, V3)."""
    complex_ = make_f1()
    base = make_b1()
    values = {}
    for v in range(4):
        values[(1, v)] = 0
        values[(3, v)] = 2
    for v, fb in enumerate([-1, 0, 0, 1]):
        values[(2, v)] = fb
    return complex_, FiberedFiltration(complex_, base, values)


@pytest.fixture
def f1():
    return make_f1()


@pytest.fixture
def f2():
    return make_f2()


@pytest.fixture
def b1():
    return make_b1()


@pytest.fixture
def b2():
    return make_b2()


@pytest.fixture
def ff1():
    return make_ff1()


@pytest.fixture
def ff2():
    return make_ff2()


@pytest.fixture
def ff3():
    return make_ff3()

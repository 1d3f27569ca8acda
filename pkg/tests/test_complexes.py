import pytest

from pdbundle.complexes import (
    ComplexError,
    SimplexIndexing,
    SimplicialComplex,
    boundary_matrix,
    induced_indexing,
    validate_complex,
)
from pdbundle.rational import rat


def test_validate_f1_ok():
    assert validate_complex([[1], [2], [1, 2]]) is None


def test_validate_missing_face():
    msg = validate_complex([[1, 2]])
    assert msg is not None and "missing face" in msg


def test_validate_order_violation():
    msg = validate_complex([[1, 2], [1], [2]])
    assert msg is not None and "after" in msg


def test_validate_duplicate():
    msg = validate_complex([[1], [2], [1, 2], [1, 2]])
    assert msg is not None and "duplicate" in msg


def test_unsorted_vertices_rejected():
    with pytest.raises(ComplexError):
        SimplicialComplex([[2, 1]])


def test_boundary_f1(f1):
    idx = SimplexIndexing.identity(3)
    D = boundary_matrix(f1, idx)
    assert D.cols[1] == set() and D.cols[2] == set()
    assert D.cols[3] == {1, 2}


def test_boundary_f2_input_order(f2):
    idx = SimplexIndexing.identity(7)
    D = boundary_matrix(f2, idx)
    # triangle xyz has its three edges as boundary
    assert D.cols[7] == {4, 5, 6}
    # every edge column holds its two vertices
    assert D.cols[4] == {1, 2}
    assert D.cols[5] == {1, 3}
    assert D.cols[6] == {2, 3}


def test_boundary_vertex_columns_zero(f2):
    idx = SimplexIndexing.identity(7)
    D = boundary_matrix(f2, idx)
    for j in (1, 2, 3):
        assert D.cols[j] == set()


def test_induced_indexing_sorts_by_value(f1):
    idx = induced_indexing(f1, {1: rat(0), 2: rat(-1), 3: rat(2)})
    assert idx.pos(2) == 1 and idx.pos(1) == 2 and idx.pos(3) == 3


def test_induced_indexing_tie_breaks_by_input_order(f1):
    idx = induced_indexing(f1, {1: rat(0), 2: rat(0), 3: rat(2)})
    assert idx.pos(1) == 1 and idx.pos(2) == 2 and idx.pos(3) == 3


def test_induced_indexing_f2():
    f2 = SimplicialComplex([[1], [2], [3], [1, 3], [2, 3], [1, 2], [1, 2, 3]])
    # input order x, y, z, xz, yz, xy, xyz with values 0,0,0,1,2,3,5
    idx = induced_indexing(
        f2, {1: rat(0), 2: rat(0), 3: rat(0), 4: rat(1), 5: rat(2), 6: rat(3), 7: rat(5)}
    )
    assert [idx.pos(s) for s in range(1, 8)] == [1, 2, 3, 4, 5, 6, 7]


def test_induced_indexing_rejects_non_monotone(f1):
    with pytest.raises(ComplexError):
        induced_indexing(f1, {1: rat(0), 2: rat(0), 3: rat(-1)})


def test_induced_indexing_always_compatible(f2):
    # any monotone values give face-index < coface-index, exhaustively
    import random

    rng = random.Random(7)
    for _ in range(50):
        values = {}
        for s in f2.simplices:
            base = max(
                (values[fid] for fid in f2.facet_ids[s.id - 1]), default=rat(0)
            )
            values[s.id] = base + rat(rng.randrange(0, 5), 7)
        idx = induced_indexing(f2, values)
        for s in f2.simplices:
            for fid in f2.proper_face_ids(s.id):
                assert idx.pos(fid) < idx.pos(s.id)


def test_boundary_strictly_upper_for_compatible(f2):
    idx = induced_indexing(
        f2, {1: rat(0), 2: rat(0), 3: rat(0), 4: rat(3), 5: rat(1), 6: rat(2), 7: rat(5)}
    )
    D = boundary_matrix(f2, idx)
    assert D.is_strictly_upper()


def test_determinism(f2):
    values = {s.id: rat(s.id % 3, 2) if s.dim == 0 else rat(s.dim * 4 + s.id) for s in f2.simplices}
    a = induced_indexing(f2, values)
    b = induced_indexing(f2, values)
    assert a.position == b.position and a.simplex_at == b.simplex_at


def test_indexing_bijection_check():
    with pytest.raises(ComplexError):
        SimplexIndexing.from_positions([1, 1, 3])

"""Simplicial complexes, boundary matrices, and simplex indexings.

Simplices are identified by their sorted vertex tuple and carry an id in
1..N given by input order. The input order must list faces before cofaces;
validation rejects rather than reorders, so the tie-breaking rule of the
induced indexing is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple


class ComplexError(ValueError):
    """A simplicial-complex validation failure."""


@dataclass(frozen=True)
class Simplex:
    id: int                      # 1..N, input order
    vertices: Tuple[int, ...]    # strictly sorted vertex labels

    def __post_init__(self):
        if not self.vertices:
            raise ComplexError(f"simplex {self.id}: empty vertex set")
        if any(b <= a for a, b in zip(self.vertices, self.vertices[1:])):
            raise ComplexError(
                f"simplex {self.id}: vertices {self.vertices} not strictly sorted"
            )

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def facets(self) -> List[Tuple[int, ...]]:
        """Codimension-1 faces as vertex tuples (empty for vertices)."""
        if self.dim == 0:
            return []
        return [
            tuple(v for idx, v in enumerate(self.vertices) if idx != drop)
            for drop in range(len(self.vertices))
        ]


class SimplicialComplex:
    """An ordered simplicial complex closed under taking faces.

    The constructor validates closure and the faces-before-cofaces order;
    use `SimplicialComplex.build` for the common construct-and-raise path.
    """

    def __init__(self, vertex_lists: Sequence[Sequence[int]]):
        simplices: List[Simplex] = []
        for line_no, verts in enumerate(vertex_lists, start=1):
            simplices.append(Simplex(line_no, tuple(verts)))
        self.simplices: Tuple[Simplex, ...] = tuple(simplices)
        self.id_by_vertices: Dict[Tuple[int, ...], int] = {}
        for s in self.simplices:
            if s.vertices in self.id_by_vertices:
                raise ComplexError(
                    f"duplicate simplex {s.vertices} at ids "
                    f"{self.id_by_vertices[s.vertices]} and {s.id}"
                )
            self.id_by_vertices[s.vertices] = s.id
        violation = self.validate()
        if violation is not None:
            raise ComplexError(violation)
        # codimension-1 face ids per simplex, precomputed for boundary columns
        self.facet_ids: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(self.id_by_vertices[f] for f in s.facets()) for s in self.simplices
        )

    def validate(self) -> Optional[str]:
        """Return None if closed and face-ordered, else a description of the
        first offending simplex."""
        for s in self.simplices:
            for f in s.facets():
                fid = self.id_by_vertices.get(f)
                if fid is None:
                    return (
                        f"simplex {s.id} {s.vertices}: missing face {f}"
                    )
                if fid >= s.id:
                    return (
                        f"simplex {s.id} {s.vertices}: face {f} has id {fid} "
                        f">= {s.id} (face listed after coface)"
                    )
        return None

    def __len__(self) -> int:
        return len(self.simplices)

    def simplex(self, sid: int) -> Simplex:
        return self.simplices[sid - 1]

    def dim_of(self, sid: int) -> int:
        return self.simplices[sid - 1].dim

    def proper_face_ids(self, sid: int) -> List[int]:
        """All proper faces of a simplex, by id."""
        verts = self.simplices[sid - 1].vertices
        out = []
        for size in range(1, len(verts)):
            for sub in combinations(verts, size):
                out.append(self.id_by_vertices[sub])
        return out

    def are_incident(self, a: int, b: int) -> bool:
        """True if one simplex is a proper face of the other."""
        va = set(self.simplices[a - 1].vertices)
        vb = set(self.simplices[b - 1].vertices)
        return va < vb or vb < va


@dataclass
class SimplexIndexing:
    """A bijection simplex id -> position in 1..N, with its inverse."""

    position: List[int]   # position[sid-1] = position of simplex sid
    simplex_at: List[int]  # simplex_at[pos-1] = simplex id at that position

    @classmethod
    def from_positions(cls, position: Sequence[int]) -> "SimplexIndexing":
        n = len(position)
        simplex_at = [0] * n
        seen = set()
        for sid, pos in enumerate(position, start=1):
            if not (1 <= pos <= n) or pos in seen:
                raise ComplexError(f"indexing is not a bijection onto 1..{n}")
            seen.add(pos)
            simplex_at[pos - 1] = sid
        return cls(list(position), simplex_at)

    @classmethod
    def identity(cls, n: int) -> "SimplexIndexing":
        ids = list(range(1, n + 1))
        return cls(ids[:], ids[:])

    def pos(self, sid: int) -> int:
        return self.position[sid - 1]

    def sid(self, pos: int) -> int:
        return self.simplex_at[pos - 1]

    def swap_positions(self, k: int) -> None:
        """Transpose the simplices at positions k and k+1 (1-based)."""
        a = self.simplex_at[k - 1]
        b = self.simplex_at[k]
        self.simplex_at[k - 1] = b
        self.simplex_at[k] = a
        self.position[a - 1] = k + 1
        self.position[b - 1] = k

    def copy(self) -> "SimplexIndexing":
        return SimplexIndexing(list(self.position), list(self.simplex_at))

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplexIndexing) and self.position == other.position

    def key(self) -> Tuple[int, ...]:
        return tuple(self.position)


def validate_complex(vertex_lists: Sequence[Sequence[int]]) -> Optional[str]:
    """Standalone validation: None when ok, else the first violation."""
    try:
        SimplicialComplex(vertex_lists)
    except ComplexError as exc:
        return str(exc)
    return None


def induced_indexing(complex_: SimplicialComplex, values: Dict[int, object]) -> SimplexIndexing:
    """The unique indexing sorting by (value, input id).

    `values` maps simplex id -> rational. Raises ComplexError when the
    values are not monotone (some simplex below one of its faces).
    """
    for s in complex_.simplices:
        v = values[s.id]
        for fid in complex_.facet_ids[s.id - 1]:
            if values[fid] > v:
                raise ComplexError(
                    f"values not monotone: face {fid} has value {values[fid]} "
                    f"> value {v} of coface {s.id}"
                )
    order = sorted(range(1, len(complex_) + 1), key=lambda sid: (values[sid], sid))
    position = [0] * len(complex_)
    for pos, sid in enumerate(order, start=1):
        position[sid - 1] = pos
    return SimplexIndexing(position, order)


def indexing_from_values_at(
    complex_: SimplicialComplex, value_of
) -> SimplexIndexing:
    """induced_indexing with values given as a callable sid -> rational.

    Skips the monotonicity check; used on interior sample points where
    monotonicity follows from monotonicity at the base vertices.
    """
    order = sorted(
        range(1, len(complex_) + 1), key=lambda sid: (value_of(sid), sid)
    )
    position = [0] * len(complex_)
    for pos, sid in enumerate(order, start=1):
        position[sid - 1] = pos
    return SimplexIndexing(position, order)


def indexing_from_value_list(n: int, values: Sequence) -> SimplexIndexing:
    """Like indexing_from_values_at, but over a dense id-ordered value list."""
    order = sorted(range(1, n + 1), key=lambda sid: (values[sid - 1], sid))
    position = [0] * n
    for pos, sid in enumerate(order, start=1):
        position[sid - 1] = pos
    return SimplexIndexing(position, order)


def boundary_matrix(complex_: SimplicialComplex, idx: SimplexIndexing):
    """Sparse GF(2) boundary matrix under the given indexing.

    Returns the SparseBinaryMatrix with entry (i, j) = 1 exactly when the
    simplex at position i is a codimension-1 face of the simplex at
    position j. Strictly upper triangular whenever idx is compatible.
    """
    from .reduction import SparseBinaryMatrix

    n = len(complex_)
    mat = SparseBinaryMatrix(n)
    for sid in range(1, n + 1):
        j = idx.pos(sid)
        for fid in complex_.facet_ids[sid - 1]:
            mat.set_entry(idx.pos(fid), j)
    return mat

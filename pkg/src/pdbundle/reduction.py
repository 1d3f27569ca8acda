"""GF(2) sparse matrix reduction and the transposition update.

Everything here works on 1-based positions. The decomposition maintained
is D = R·U with R reduced (distinct lows among nonzero columns) and U unit
upper triangular. transpose_update moves the decomposition across a swap
of two consecutively indexed, non-incident simplices using at most one
column addition in R and one row addition in U.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .complexes import SimplexIndexing, SimplicialComplex, boundary_matrix
from .rational import INF


class ReductionError(ValueError):
    pass


#: counts every mutating sparse-matrix operation; queries must leave it alone
MUTATIONS = {"count": 0}


class SparseBinaryMatrix:
    """0/1 matrix over GF(2) with both column and row index sets maintained."""

    __slots__ = ("n", "cols", "rows")

    def __init__(self, n: int):
        self.n = n
        self.cols: List[Set[int]] = [set() for _ in range(n + 1)]
        self.rows: List[Set[int]] = [set() for _ in range(n + 1)]

    def set_entry(self, i: int, j: int) -> None:
        MUTATIONS["count"] += 1
        self.cols[j].add(i)
        self.rows[i].add(j)

    def erase_entry(self, i: int, j: int) -> None:
        MUTATIONS["count"] += 1
        self.cols[j].discard(i)
        self.rows[i].discard(j)

    def entry(self, i: int, j: int) -> bool:
        return i in self.cols[j]

    def col_zero(self, j: int) -> bool:
        return not self.cols[j]

    def low(self, j: int) -> Optional[int]:
        """Row index of the last 1 in column j, or None for a zero column."""
        if not (1 <= j <= self.n):
            raise ReductionError(f"column {j} out of range 1..{self.n}")
        col = self.cols[j]
        return max(col) if col else None

    def add_col(self, src: int, dst: int) -> None:
        """Column dst ^= column src."""
        MUTATIONS["count"] += 1
        cdst = self.cols[dst]
        for i in self.cols[src]:
            if i in cdst:
                cdst.discard(i)
                self.rows[i].discard(dst)
            else:
                cdst.add(i)
                self.rows[i].add(dst)

    def add_row(self, src: int, dst: int) -> None:
        """Row dst ^= row src."""
        MUTATIONS["count"] += 1
        rdst = self.rows[dst]
        for j in self.rows[src]:
            if j in rdst:
                rdst.discard(j)
                self.cols[j].discard(dst)
            else:
                rdst.add(j)
                self.cols[j].add(dst)

    def swap_rows(self, k: int) -> None:
        """Exchange rows k and k+1."""
        MUTATIONS["count"] += 1
        a, b = self.rows[k], self.rows[k + 1]
        for j in a.symmetric_difference(b):
            col = self.cols[j]
            if k in col:
                col.discard(k)
                col.add(k + 1)
            else:
                col.discard(k + 1)
                col.add(k)
        self.rows[k], self.rows[k + 1] = b, a

    def swap_cols(self, k: int) -> None:
        """Exchange columns k and k+1."""
        MUTATIONS["count"] += 1
        a, b = self.cols[k], self.cols[k + 1]
        for i in a.symmetric_difference(b):
            row = self.rows[i]
            if k in row:
                row.discard(k)
                row.add(k + 1)
            else:
                row.discard(k + 1)
                row.add(k)
        self.cols[k], self.cols[k + 1] = b, a

    def copy(self) -> "SparseBinaryMatrix":
        other = SparseBinaryMatrix(self.n)
        other.cols = [set(c) for c in self.cols]
        other.rows = [set(r) for r in self.rows]
        return other

    def equals(self, other: "SparseBinaryMatrix") -> bool:
        return self.n == other.n and self.cols == other.cols

    def is_strictly_upper(self) -> bool:
        return all(max(col) < j for j, col in enumerate(self.cols) if col)

    def is_unit_upper(self) -> bool:
        for j in range(1, self.n + 1):
            col = self.cols[j]
            if j not in col or (col and max(col) > j):
                return False
        return True

    def is_reduced(self) -> bool:
        lows = [max(col) for col in self.cols[1:] if col]
        return len(lows) == len(set(lows))

    def multiply(self, other: "SparseBinaryMatrix") -> "SparseBinaryMatrix":
        """GF(2) product self @ other (test support)."""
        out = SparseBinaryMatrix(self.n)
        for j in range(1, self.n + 1):
            acc: Set[int] = set()
            for c in other.cols[j]:
                acc.symmetric_difference_update(self.cols[c])
            for i in acc:
                out.cols[j].add(i)
                out.rows[i].add(j)
        return out

    def check_consistent(self) -> None:
        """Row and column views describe the same matrix."""
        for j in range(1, self.n + 1):
            for i in self.cols[j]:
                if j not in self.rows[i]:
                    raise ReductionError(f"rows/cols views disagree at ({i},{j})")
        for i in range(1, self.n + 1):
            for j in self.rows[i]:
                if i not in self.cols[j]:
                    raise ReductionError(f"rows/cols views disagree at ({i},{j})")


def low(matrix: SparseBinaryMatrix, j: int) -> Optional[int]:
    return matrix.low(j)


def reduce(D: SparseBinaryMatrix) -> Tuple[SparseBinaryMatrix, SparseBinaryMatrix]:
    """Standard left-to-right column reduction, returning (R, U) with
    D = R·U over GF(2)."""
    if not D.is_strictly_upper():
        raise ReductionError("boundary matrix is not strictly upper triangular")
    n = D.n
    R = D.copy()
    U = SparseBinaryMatrix(n)
    for j in range(1, n + 1):
        U.set_entry(j, j)
    pivot: Dict[int, int] = {}
    for j in range(1, n + 1):
        while R.cols[j]:
            l = max(R.cols[j])
            other = pivot.get(l)
            if other is None:
                pivot[l] = j
                break
            R.add_col(other, j)    # R col j += col other
            U.add_row(j, other)    # U row other += row j
    return R, U


@dataclass(frozen=True)
class PairingFunction:
    """Immutable snapshot of birth/death simplex pairs and unpaired births."""

    pairs: FrozenSet[Tuple[int, int]]
    unpaired: FrozenSet[int]

    def key(self) -> Tuple[Tuple[Tuple[int, int], ...], Tuple[int, ...]]:
        return (tuple(sorted(self.pairs)), tuple(sorted(self.unpaired)))


@dataclass(frozen=True)
class Diagram:
    """Multiset of (birth, death) points of one homological dimension."""

    q: int
    points: Tuple[Tuple[object, object], ...]  # sorted; death may be float inf

    @staticmethod
    def make(q: int, points) -> "Diagram":
        return Diagram(q, tuple(sorted(points)))


def pairs_from(R: SparseBinaryMatrix, idx: SimplexIndexing) -> PairingFunction:
    """Read the pairing off a reduced matrix under the given indexing."""
    if not R.is_reduced():
        raise ReductionError("matrix is not reduced")
    n = R.n
    pairs = set()
    lows = set()
    for j in range(1, n + 1):
        if R.cols[j]:
            i = max(R.cols[j])
            lows.add(i)
            pairs.add((idx.sid(i), idx.sid(j)))
    unpaired = {
        idx.sid(i) for i in range(1, n + 1) if not R.cols[i] and i not in lows
    }
    return PairingFunction(frozenset(pairs), frozenset(unpaired))


class ReductionState:
    """Mutable D = R·U decomposition that walks across transpositions."""

    def __init__(self, complex_: SimplicialComplex, idx: SimplexIndexing):
        self.complex = complex_
        self.idx = idx.copy()
        D = boundary_matrix(complex_, self.idx)
        self.R, self.U = reduce(D)
        self.low_inv: Dict[int, int] = {}
        for j in range(1, self.R.n + 1):
            col = self.R.cols[j]
            if col:
                self.low_inv[max(col)] = j
        # running pairing by simplex id: birth -> death id, or None if immortal
        self.partner: Dict[int, Optional[int]] = {}
        for pos in range(1, self.R.n + 1):
            if not self.R.cols[pos]:
                d = self.low_inv.get(pos)
                self.partner[self.idx.sid(pos)] = self.idx.sid(d) if d else None

    # -- inspection ------------------------------------------------------

    def pairing(self) -> PairingFunction:
        pairs = frozenset(
            (b, d) for b, d in self.partner.items() if d is not None
        )
        unpaired = frozenset(b for b, d in self.partner.items() if d is None)
        return PairingFunction(pairs, unpaired)

    def template_key(self):
        items = sorted(self.partner.items())
        return tuple(items)

    def boundary(self) -> SparseBinaryMatrix:
        return boundary_matrix(self.complex, self.idx)

    def check_invariants(self) -> None:
        self.R.check_consistent()
        self.U.check_consistent()
        if not self.U.is_unit_upper():
            raise ReductionError("U is not unit upper triangular")
        if not self.R.is_reduced():
            raise ReductionError("R is not reduced")
        if not self.R.multiply(self.U).equals(self.boundary()):
            raise ReductionError("R·U != D(idx)")

    # -- the vineyard transposition update --------------------------------

    def _collect(self, positions) -> Dict[int, Optional[int]]:
        """Birth simplex -> death simplex (or None) for the watched positions."""
        out: Dict[int, Optional[int]] = {}
        for pos in positions:
            col = self.R.cols[pos]
            if col:
                l = max(col)
                out[self.idx.sid(l)] = self.idx.sid(pos)
            else:
                d = self.low_inv.get(pos)
                out[self.idx.sid(pos)] = self.idx.sid(d) if d else None
        return out

    def transpose_update(self, k: int) -> bool:
        """Transpose positions k, k+1; returns True when the pairing changed.

        Precondition: the two simplices are not incident (face/coface pairs
        never cross under a monotone filtration).
        """
        R, U = self.R, self.U
        n = R.n
        if not (1 <= k < n):
            raise ReductionError(f"position {k} out of range 1..{n - 1}")
        k2 = k + 1
        sid_a, sid_b = self.idx.sid(k), self.idx.sid(k2)
        if self.complex.are_incident(sid_a, sid_b):
            raise ReductionError(
                f"simplices {sid_a}, {sid_b} at positions {k}, {k2} are incident"
            )
        dk = self.low_inv.get(k)
        dk2 = self.low_inv.get(k2)
        touched = {k, k2}
        if dk:
            touched.add(dk)
        if dk2:
            touched.add(dk2)
        lk = R.low(k)
        lk2 = R.low(k2)
        watch = set(touched)
        if lk:
            watch.add(lk)   # birth row of death column k
        if lk2:
            watch.add(lk2)
        before = self._collect(watch)

        for j in touched:
            l = R.low(j)
            if l is not None:
                self.low_inv.pop(l, None)

        U1 = U.entry(k, k2)
        Pk = not R.cols[k]
        Pk2 = not R.cols[k2]

        if Pk and Pk2:
            # both births
            if U1:
                U.erase_entry(k, k2)  # legal: column k of R is zero
            if dk2 is not None and R.entry(k, dk2):
                if dk is not None:
                    if dk < dk2:
                        R.add_col(dk, dk2)
                        U.add_row(dk2, dk)
                    else:
                        R.add_col(dk2, dk)
                        U.add_row(dk, dk2)
            R.swap_rows(k)
            R.swap_cols(k)
            U.swap_rows(k)
            U.swap_cols(k)
        elif Pk and not Pk2:
            # birth then death: never interacts
            if U1:
                U.erase_entry(k, k2)
            R.swap_rows(k)
            R.swap_cols(k)
            U.swap_rows(k)
            U.swap_cols(k)
        elif not Pk and Pk2:
            # death then birth
            if not U1:
                R.swap_rows(k)
                R.swap_cols(k)
                U.swap_rows(k)
                U.swap_cols(k)
            else:
                # PDP = (PR)(X·X⁻¹)(UP) with X = I + e_{k+1,k}; the R-side
                # column op adds the zero column k+1, so only U changes shape
                R.swap_rows(k)
                U.swap_cols(k)
                U.add_row(k, k2)
        else:
            # both deaths
            if not U1:
                R.swap_rows(k)
                R.swap_cols(k)
                U.swap_rows(k)
                U.swap_cols(k)
            elif lk < lk2:
                R.add_col(k, k2)
                U.add_row(k2, k)
                R.swap_rows(k)
                R.swap_cols(k)
                U.swap_rows(k)
                U.swap_cols(k)
            else:
                R.swap_rows(k)
                R.add_col(k2, k)
                U.swap_cols(k)
                U.add_row(k, k2)

        self.idx.swap_positions(k)

        for j in touched:
            l = R.low(j)
            if l is not None:
                self.low_inv[l] = j

        watch_after = set(touched)
        for j in touched:
            l = R.low(j)
            if l is not None:
                watch_after.add(l)
        after = self._collect(watch_after)

        changed = False
        for sid in set(before) | set(after):
            old = before.get(sid, "absent")
            new = after.get(sid, "absent")
            if old != new:
                changed = True
                if new == "absent":
                    self.partner.pop(sid, None)
                else:
                    self.partner[sid] = new
        return changed


def diagram(
    pairing: PairingFunction,
    filtration,
    tri: int,
    p,
    q: int,
) -> Diagram:
    """The q-dimensional diagram at plane point p inside base triangle tri."""
    if q < 0:
        raise ReductionError(f"negative homological dimension {q}")
    from .filtration import barycentric

    lam = barycentric(filtration.base, tri, p)
    return diagram_bary(pairing, filtration, tri, lam, q)


def diagram_bary(pairing: PairingFunction, filtration, tri: int, lam, q: int) -> Diagram:
    """Diagram at a point given in barycentric coordinates (no relocation)."""
    complex_ = filtration.complex
    pts = []
    for b, d in pairing.pairs:
        if complex_.dim_of(b) == q:
            pts.append(
                (
                    filtration.evaluate_bary(b, tri, lam),
                    filtration.evaluate_bary(d, tri, lam),
                )
            )
    for b in pairing.unpaired:
        if complex_.dim_of(b) == q:
            pts.append((filtration.evaluate_bary(b, tri, lam), INF))
    return Diagram.make(q, pts)

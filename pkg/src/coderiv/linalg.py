"""Exact sparse linear algebra over the rationals.

Everything here works with ``fractions.Fraction`` entries; there is no
floating point anywhere in the package.  Matrices are stored sparsely as
``{(row, col): Fraction}`` and vectors as ``{index: Fraction}`` with zero
entries never stored.  Echelonization runs a fraction-free forward
elimination (cross-multiplication) and normalizes pivots afterwards, which
keeps intermediate numerators small at the problem sizes we care about.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LinAlgError(Exception):
    pass


class DimensionMismatch(LinAlgError):
    pass


class CompositeNotZero(LinAlgError):
    """Two consecutive boundary maps do not compose to zero."""


Vector = dict[int, Fraction]


def vec_add(u: Vector, v: Vector, c: Fraction = Fraction(1)) -> Vector:
    """u + c*v, dropping zeros."""
    out = dict(u)
    for i, x in v.items():
        s = out.get(i, Fraction(0)) + c * x
        if s:
            out[i] = s
        else:
            out.pop(i, None)
    return out


def vec_scale(v: Vector, c: Fraction) -> Vector:
    if not c:
        return {}
    return {i: c * x for i, x in v.items()}


class SparseMap:
    """A sparse matrix seen as a linear map between based spaces.

    ``rows`` is the dimension of the codomain, ``cols`` of the domain.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int,
                 entries: Mapping[tuple[int, int], Fraction] | None = None):
        if rows < 0 or cols < 0:
            raise DimensionMismatch("negative dimension")
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            for (r, c), x in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise DimensionMismatch(f"entry ({r},{c}) out of range")
                if x:
                    self.entries[(r, c)] = Fraction(x)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMap":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "SparseMap":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable[Vector]) -> "SparseMap":
        cols = list(columns)
        ent = {}
        for j, col in enumerate(cols):
            for i, x in col.items():
                if x:
                    ent[(i, j)] = x
        return cls(rows, len(cols), ent)

    def column(self, j: int) -> Vector:
        return {r: x for (r, c), x in self.entries.items() if c == j}

    def columns(self) -> list[Vector]:
        out: list[Vector] = [{} for _ in range(self.cols)]
        for (r, c), x in self.entries.items():
            out[c][r] = x
        return out

    def row_vectors(self) -> list[Vector]:
        out: list[Vector] = [{} for _ in range(self.rows)]
        for (r, c), x in self.entries.items():
            out[r][c] = x
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        cols = self.columns()
        for j, x in v.items():
            if j >= self.cols:
                raise DimensionMismatch("vector longer than domain")
            for i, y in cols[j].items():
                s = out.get(i, Fraction(0)) + x * y
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
        return out

    def compose(self, other: "SparseMap") -> "SparseMap":
        """Composite self(other(x)): apply ``other`` first."""
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"compose: {self.rows}x{self.cols} after {other.rows}x{other.cols}")
        by_col: dict[int, list[tuple[int, Fraction]]] = {}
        for (r, c), x in other.entries.items():
            by_col.setdefault(c, []).append((r, x))
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (r, c), x in self.entries.items():
            by_row.setdefault(c, []).append((r, x))
        ent: dict[tuple[int, int], Fraction] = {}
        for c, mids in by_col.items():
            for mid, x in mids:
                for r, y in by_row.get(mid, ()):
                    key = (r, c)
                    s = ent.get(key, Fraction(0)) + x * y
                    if s:
                        ent[key] = s
                    else:
                        ent.pop(key, None)
        return SparseMap(self.rows, other.cols, ent)

    def add(self, other: "SparseMap", scale: Fraction = Fraction(1)) -> "SparseMap":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("add: shape mismatch")
        ent = dict(self.entries)
        for k, x in other.entries.items():
            s = ent.get(k, Fraction(0)) + scale * x
            if s:
                ent[k] = s
            else:
                ent.pop(k, None)
        return SparseMap(self.rows, self.cols, ent)

    def scale(self, c: Fraction) -> "SparseMap":
        if not c:
            return SparseMap(self.rows, self.cols)
        return SparseMap(self.rows, self.cols,
                         {k: c * x for k, x in self.entries.items()})

    def transpose(self) -> "SparseMap":
        return SparseMap(self.cols, self.rows,
                         {(c, r): x for (r, c), x in self.entries.items()})

    def restrict(self, row_idx: list[int], col_idx: list[int]) -> "SparseMap":
        """Submatrix on the given codomain/domain index subsets."""
        rmap = {r: i for i, r in enumerate(row_idx)}
        cmap = {c: j for j, c in enumerate(col_idx)}
        ent = {}
        for (r, c), x in self.entries.items():
            if r in rmap and c in cmap:
                ent[(rmap[r], cmap[c])] = x
        return SparseMap(len(row_idx), len(col_idx), ent)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMap)
                and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def __hash__(self):
        raise TypeError("SparseMap is not hashable")

    def __repr__(self):
        return f"SparseMap({self.rows}x{self.cols}, {len(self.entries)} entries)"


def _forward_eliminate(rows: list[Vector]) -> list[Vector]:
    """Fraction-free forward elimination; returns independent rows in
    increasing pivot order (not yet normalized)."""
    work = [dict(r) for r in rows if r]
    done: list[Vector] = []   # rows with strictly increasing pivot columns
    pivots: list[int] = []
    # repeatedly pick the remaining row with the smallest pivot column,
    # preferring the sparsest such row to limit fill-in
    while work:
        best = None
        best_key = None
        for idx, r in enumerate(work):
            p = min(r)
            key = (p, len(r))
            if best_key is None or key < best_key:
                best_key = key
                best = idx
        row = work.pop(best)
        p = min(row)
        pv = row[p]
        nxt = []
        for r in work:
            if p in r:
                # fraction-free: r <- pv*r - r[p]*row
                coeff = r[p]
                new = {}
                for j, x in r.items():
                    new[j] = pv * x
                for j, x in row.items():
                    s = new.get(j, Fraction(0)) - coeff * x
                    if s:
                        new[j] = s
                    else:
                        new.pop(j, None)
                if new:
                    nxt.append(new)
            else:
                nxt.append(r)
        work = nxt
        done.append(row)
        pivots.append(p)
    order = sorted(range(len(done)), key=lambda i: pivots[i])
    return [done[i] for i in order]


def echelonize(rows: list[Vector]) -> list[Vector]:
    """Reduced row echelon form of the span of ``rows``.

    Pivot entries are 1, pivot columns are cleared in every other row, and
    rows come out sorted by pivot column.
    """
    tri = _forward_eliminate(rows)
    # back-substitute then normalize
    for i in range(len(tri) - 1, -1, -1):
        row = tri[i]
        p = min(row)
        row = vec_scale(row, 1 / row[p])
        for k in range(i):
            other = tri[k]
            if p in other:
                tri[k] = vec_add(other, row, -other[p])
        tri[i] = row
    return tri


class Subspace:
    """A subspace of Q^n held as a reduced-echelon row basis."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, vectors: Iterable[Vector] = ()):
        self.ambient = ambient
        rows = []
        for v in vectors:
            for j in v:
                if not 0 <= j < ambient:
                    raise DimensionMismatch(f"coordinate {j} outside ambient {ambient}")
            if v:
                rows.append(v)
        self.basis = echelonize(rows)
        self.pivots = [min(r) for r in self.basis]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Vector) -> Vector:
        """Canonical representative of v modulo this subspace: subtract the
        echelon rows so the result vanishes on every pivot column."""
        for j in v:
            if not 0 <= j < self.ambient:
                raise DimensionMismatch(f"coordinate {j} outside ambient {self.ambient}")
        out = dict(v)
        for p, row in zip(self.pivots, self.basis):
            c = out.get(p)
            if c:
                out = vec_add(out, row, -c)
        return out

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def extended_by(self, vectors: Iterable[Vector]) -> "Subspace":
        return Subspace(self.ambient, list(self.basis) + list(vectors))


def quotient_reduce(s: Subspace, v: Vector) -> Vector:
    return s.reduce(v)


def rank(m: SparseMap) -> int:
    return len(_forward_eliminate(m.row_vectors()))


def kernel_basis(m: SparseMap) -> list[Vector]:
    """Basis of the null space, one vector per non-pivot column."""
    rref = echelonize(m.row_vectors())
    pivots = [min(r) for r in rref]
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    out: list[Vector] = []
    for j in free:
        v: Vector = {j: Fraction(1)}
        for p, row in zip(pivots, rref):
            c = row.get(j)
            if c:
                v[p] = -c
        out.append(v)
    return out


def homology_dim(d_out: SparseMap, d_in: SparseMap) -> int:
    """dim ker(d_out) - rank(d_in) for a composable pair with d_out(d_in(x)) = 0.

    ``d_out`` leaves the middle space, ``d_in`` arrives into it.
    """
    if d_out.cols != d_in.rows:
        raise DimensionMismatch("boundary pair does not share the middle space")
    if not d_out.compose(d_in).is_zero():
        raise CompositeNotZero("composite of consecutive boundaries is nonzero")
    h = d_out.cols - rank(d_out) - rank(d_in)
    assert h >= 0
    return h


def member_of_column_space(m: SparseMap, v: Vector) -> bool:
    """Is v in the column span of m?  (Used for coboundary detection.)"""
    base = rank(m)
    ext = rank(SparseMap.from_columns(m.rows, m.columns() + [v]))
    return ext == base

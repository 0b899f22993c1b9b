"""Cell complexes of the half cube and their signed boundary matrices.

The full complex consists of every face; the cut complexes delete the
interiors of all half-cube shaped cells (top cell included) of dimension
at least k_cut, leaving the simplex cells untouched.  Cells are ordered
lexicographically by canonical vertex key inside each dimension.

Incidence signs are geometric.  Every cell carries an orientation: the
lexicographically smallest affinely independent subsequence of its
(canonically ordered) vertices.  The sign of facet t in cell s compares
the basis (outward normal of t inside s's hull, then t's basis) against
s's basis; the boundary-squared assertion certifies the convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .core import MAX_DIM
from .faces import KIND_HALFCUBE, KIND_TOP, FaceLattice, build_face_lattice
from .linalg import det_sign, solve_fractions


class CellComplex:
    """Cells of the full or cut complex, per dimension, in key order."""

    def __init__(self, n: int, k_cut: int, lattice: FaceLattice, cells: list):
        self.n = n
        self.k_cut = k_cut
        self.lattice = lattice
        self.cells = cells
        self.index = [
            {f.key: i for i, f in enumerate(dim_cells)} for dim_cells in cells
        ]
        self._matrices = None

    @property
    def top_dim(self) -> int:
        return len(self.cells) - 1

    @property
    def is_full(self) -> bool:
        return self.k_cut == self.n + 1

    def cell_counts(self) -> list:
        return [len(cs) for cs in self.cells]

    def has_cell(self, face) -> bool:
        return face.dim <= self.top_dim and face.key in self.index[face.dim]

    def matrices(self) -> list:
        if self._matrices is None:
            self._matrices = boundary_matrices(self)
        return self._matrices

    def orientation_of(self, face) -> tuple:
        """The ordered vertex tuple whose edge vectors orient the cell."""
        if not self.has_cell(face):
            raise ValueError(f"{face!r} is not a cell of this complex")
        return orientation_tuple(self.lattice, face)


def build_complex(n: int, k_cut=None) -> CellComplex:
    """The complex with half-cube cells of dimension >= k_cut removed.

    k_cut = n+1 (or None) keeps everything, giving the full complex;
    k_cut = 4 gives the clique complex of the half cube graph.
    """
    if not 4 <= n <= MAX_DIM:
        raise ValueError(f"need 4 <= n <= {MAX_DIM}")
    if k_cut is None:
        k_cut = n + 1
    if not 3 <= k_cut <= n + 1:
        raise ValueError("need 3 <= k_cut <= n+1")
    lattice = build_face_lattice(n)
    cells = []
    for dim in range(n + 1):
        keep = [
            f
            for f in lattice.faces[dim]
            if dim < k_cut or f.kind not in (KIND_HALFCUBE, KIND_TOP)
        ]
        if keep:
            cells.append(keep)
        else:
            break
    return CellComplex(n, k_cut, lattice, cells)


def euler_characteristic(c: CellComplex) -> int:
    return sum((-1) ** d * len(cs) for d, cs in enumerate(c.cells))


# ---------------------------------------------------------------------------
# Orientation geometry


def _coords(n: int, bits: int) -> tuple:
    return tuple(1 - 2 * (bits >> i & 1) for i in range(n))


def _reduce_gcd(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g > 1:
        return [x // g for x in vec]
    return list(vec)


class _IntEchelon:
    """Incremental affine-independence test over the integers."""

    def __init__(self):
        self.rows = []  # (pivot index, reduced integer row), pivot ascending

    def try_add(self, vec) -> bool:
        vec = list(vec)
        for piv, row in self.rows:
            if vec[piv]:
                a, b = row[piv], vec[piv]
                vec = [x * a - y * b for x, y in zip(vec, row)]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            return False
        vec = _reduce_gcd(vec)
        self.rows.append((piv, vec))
        self.rows.sort(key=lambda t: t[0])
        return True


def orientation_tuple(lattice: FaceLattice, face) -> tuple:
    """Lexicographically smallest affinely independent vertex subsequence."""
    memo = getattr(lattice, "_orient_memo", None)
    if memo is None:
        memo = lattice._orient_memo = {}
    got = memo.get(face.key)
    if got is not None:
        return got
    n = lattice.n
    base = face.key[0]
    base_coords = _coords(n, base)
    chosen = [base]
    ech = _IntEchelon()
    for b in face.key[1:]:
        if len(chosen) == face.dim + 1:
            break
        vec = [x - y for x, y in zip(_coords(n, b), base_coords)]
        if ech.try_add(vec):
            chosen.append(b)
    if len(chosen) != face.dim + 1:
        raise AssertionError(f"face {face!r} did not span its dimension")
    got = tuple(chosen)
    memo[face.key] = got
    return got


def _basis_from_tuple(n, tup):
    base = _coords(n, tup[0])
    return [[x - y for x, y in zip(_coords(n, b), base)] for b in tup[1:]]


def _flip(tup):
    return tup[:-2] + (tup[-1], tup[-2])


def incidence_sign(lattice, parent, child, flip_parent=False, flip_child=False) -> int:
    """Sign of the facet ``child`` in ``parent`` under the chosen orientations."""
    if not flip_parent and not flip_child:
        got = lattice._sign_memo.get((parent.key, child.key))
        if got is not None:
            return got
    n = lattice.n
    ptup = orientation_tuple(lattice, parent)
    ctup = orientation_tuple(lattice, child)
    if flip_parent:
        ptup = _flip(ptup)
    if flip_child and len(ctup) >= 2:
        ctup = _flip(ctup)
    pb = _basis_from_tuple(n, ptup)  # d vectors
    cb = _basis_from_tuple(n, ctup)  # d-1 vectors

    # outward direction: from the parent barycenter toward the child's,
    # scaled to stay integral, then projected off the child's hull
    m_p = len(parent.key)
    m_c = len(child.key)
    sum_p = [0] * n
    for b in parent.key:
        for i, x in enumerate(_coords(n, b)):
            sum_p[i] += x
    sum_c = [0] * n
    for b in child.key:
        for i, x in enumerate(_coords(n, b)):
            sum_c[i] += x
    w = [m_p * a - m_c * b for a, b in zip(sum_c, sum_p)]

    if cb:
        gram = [[sum(x * y for x, y in zip(r1, r2)) for r2 in cb] for r1 in cb]
        rhs = [sum(x * y for x, y in zip(r, w)) for r in cb]
        a = solve_fractions(gram, rhs)
        u_frac = [Fraction(wi) - sum(ai * r[i] for ai, r in zip(a, cb)) for i, wi in enumerate(w)]
        den = 1
        for x in u_frac:
            den = den * x.denominator // gcd(den, x.denominator)
        u = [int(x * den) for x in u_frac]
    else:
        u = w
    if all(x == 0 for x in u):
        raise AssertionError("degenerate outward direction")

    cols = [u] + cb
    mat = [[sum(p[i] * c[i] for i in range(n)) for c in cols] for p in pb]
    s = det_sign(mat)
    if s == 0:
        raise AssertionError("incidence determinant vanished")
    if not flip_parent and not flip_child:
        lattice._sign_memo[(parent.key, child.key)] = s
    return s


# ---------------------------------------------------------------------------
# Boundary matrices


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse signed incidence matrix of one degree; entries are +-1."""

    degree: int
    nrows: int
    ncols: int
    entries: tuple  # (row, col, val), sorted by (col, row)

    def to_text(self) -> str:
        lines = [f"{self.degree} {self.nrows} {self.ncols}"]
        lines.extend(f"{r} {c} {v}" for r, c, v in self.entries)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BoundaryMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        degree, nrows, ncols = map(int, lines[0].split())
        entries = []
        for ln in lines[1:]:
            r, c, v = map(int, ln.split())
            entries.append((r, c, v))
        entries.sort(key=lambda t: (t[1], t[0]))
        return cls(degree, nrows, ncols, tuple(entries))

    def triplets(self):
        return list(self.entries)

    def columns(self) -> list:
        cols = [[] for _ in range(self.ncols)]
        for r, c, v in self.entries:
            cols[c].append((r, v))
        return cols


def boundary_matrices(cx: CellComplex, flips=frozenset()) -> list:
    """One signed matrix per degree 1..top; asserts boundary-of-boundary = 0.

    ``flips`` is a set of cell keys whose orientation is reversed before
    the signs are recomputed; homology must not notice.
    """
    lat = cx.lattice
    flips = frozenset(flips)
    mats = []
    for d in range(1, cx.top_dim + 1):
        row_of = cx.index[d - 1]
        entries = []
        for j, cell in enumerate(cx.cells[d]):
            fp = cell.key in flips
            for facet in lat.facets(cell):
                s = incidence_sign(lat, cell, facet, fp, facet.key in flips)
                entries.append((row_of[facet.key], j, s))
        entries.sort(key=lambda t: (t[1], t[0]))
        mats.append(BoundaryMatrix(d, len(cx.cells[d - 1]), len(cx.cells[d]), tuple(entries)))
    assert_boundary_squared_zero(mats)
    return mats


def assert_boundary_squared_zero(mats) -> None:
    for lower, upper in zip(mats, mats[1:]):
        lower_cols = lower.columns()
        upper_cols = upper.columns()
        for j, col in enumerate(upper_cols):
            acc = {}
            for mid, v in col:
                for r, w in lower_cols[mid]:
                    acc[r] = acc.get(r, 0) + v * w
            if any(acc.values()):
                raise AssertionError(
                    f"boundary squared nonzero in degree {upper.degree} column {j}"
                )


def random_flip_set(cx: CellComplex, rng) -> frozenset:
    """A random selection of positive-dimensional cells to reorient."""
    picked = []
    for d in range(1, cx.top_dim + 1):
        for cell in cx.cells[d]:
            if rng.random() < 0.5:
                picked.append(cell.key)
    return frozenset(picked)

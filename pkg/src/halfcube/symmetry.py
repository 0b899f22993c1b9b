"""Signed permutations, face orbits, and the induced action on homology.

The even-signed permutation group (type D_n, order 2^(n-1) n!) acts on the
half cube by permuting coordinates and flipping an even number of signs.
It maps each descriptor family to itself, so its face orbits follow the
kind split; at n = 4 one extra orthogonal reflection (perpendicular to the
all-ones vector) stabilizes the polytope and merges the two tetrahedron
orbits.  On the cut complexes the action is cellular and therefore acts on
the one nonzero homology group; the matrices of that action are assembled
from a kernel-modulo-image basis extracted from Smith transforms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexes import _basis_from_tuple, build_complex, orientation_tuple
from .core import Mask, Vertex
from .faces import (
    KIND_HALFCUBE,
    KIND_SIMPLEX,
    KIND_TOP,
    KIND_VERTEX,
    build_face_lattice,
    halfcube_face,
    simplex_face,
    top_face,
    vertex_face,
)
from .linalg import det_sign, mat_vec, smith_with_transforms
from .triangle import predicted_betti


@dataclass(frozen=True)
class SignedPermutation:
    """perm[i] is the image position of i (0-based); signs index targets."""

    perm: tuple
    signs: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise ValueError("not a signed permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def is_even_signed(self) -> bool:
        """Membership in the type-D group: an even number of sign flips."""
        return sum(1 for s in self.signs if s == -1) % 2 == 0

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "SignedPermutation":
        """Swap 1-based coordinates a and b."""
        p = list(range(n))
        p[a - 1], p[b - 1] = p[b - 1], p[a - 1]
        return cls(tuple(p), (1,) * n)

    @classmethod
    def sign_flips(cls, n: int, coords) -> "SignedPermutation":
        """Flip the listed 1-based coordinates, no permutation."""
        s = [1] * n
        for c in coords:
            s[c - 1] = -1
        return cls(tuple(range(n)), tuple(s))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition: (g * h) acts as g after h."""
        g, h = self, other
        if g.n != h.n:
            raise ValueError("dimension mismatch")
        n = g.n
        p = [0] * n
        s = [1] * n
        for i in range(n):
            t = g.perm[h.perm[i]]
            p[i] = t
            s[t] = g.signs[t] * h.signs[h.perm[i]]
        return SignedPermutation(tuple(p), tuple(s))

    def inverse(self) -> "SignedPermutation":
        n = self.n
        p = [0] * n
        s = [1] * n
        for i in range(n):
            p[self.perm[i]] = i
            s[i] = self.signs[self.perm[i]]
        return SignedPermutation(tuple(p), tuple(s))

    def vector_image(self, vec):
        """The linear action on an n-vector."""
        out = [0] * self.n
        for i, x in enumerate(vec):
            t = self.perm[i]
            out[t] = self.signs[t] * x
        return out

    def vertex_image(self, v: Vertex) -> Vertex:
        if v.n != self.n:
            raise ValueError("dimension mismatch")
        return Vertex.from_signs(self.vector_image(v.signs()))

    def mask_image(self, mask: Mask) -> Mask:
        bits = 0
        for i in range(self.n):
            if mask.bits >> i & 1:
                bits |= 1 << self.perm[i]
        return Mask(self.n, bits)


def act_on_vertex(g: SignedPermutation, v: Vertex) -> Vertex:
    return g.vertex_image(v)


def act_on_face(g: SignedPermutation, f):
    """Transport a face descriptor: K goes to K, L to L, kinds preserved."""
    if not g.is_even_signed:
        raise ValueError("only even-signed permutations act on the half cube")
    if g.n != f.n:
        raise ValueError("dimension mismatch")
    if f.kind == KIND_VERTEX:
        return vertex_face(g.vertex_image(f.point))
    if f.kind == KIND_SIMPLEX:
        return simplex_face(g.vertex_image(f.point), g.mask_image(f.mask))
    if f.kind == KIND_HALFCUBE:
        return halfcube_face(g.vertex_image(f.point), g.mask_image(f.mask))
    return top_face(f.n)


class SpecialReflection4:
    """The n = 4 reflection perpendicular to (1,1,1,1); not a signed permutation."""

    n = 4

    def vector_image(self, vec):
        if len(vec) != 4:
            raise ValueError("dimension mismatch")
        half = sum(vec)
        if half % 2:
            raise ValueError("image is not integral")
        half //= 2
        return [x - half for x in vec]

    def vertex_image(self, v: Vertex) -> Vertex:
        return Vertex.from_signs(self.vector_image(v.signs()))


def face_image_by_vertices(g, f, lattice):
    """Image of a face under any vertex map that stabilizes the polytope."""
    vset = 0
    for b in f.key:
        vset |= 1 << g.vertex_image(Vertex(lattice.n, b)).bits
    got = lattice.by_vset.get(vset)
    if got is None:
        raise ValueError("image vertex set is not a face")
    return got


def coxeter_generators(n: int) -> list:
    """Adjacent transpositions plus the double sign flip at the last two coordinates."""
    gens = [SignedPermutation.transposition(n, i, i + 1) for i in range(1, n)]
    gens.append(SignedPermutation.sign_flips(n, (n - 1, n)))
    return gens


def random_wdn(n: int, rng: random.Random) -> SignedPermutation:
    """Uniformly random even-signed permutation."""
    p = list(range(n))
    rng.shuffle(p)
    s = [rng.choice((1, -1)) for _ in range(n)]
    if sum(1 for x in s if x == -1) % 2:
        s[rng.randrange(n)] *= -1
    return SignedPermutation(tuple(p), tuple(s))


def group_order_by_closure(n: int) -> int:
    """|W(D_n)| by breadth-first closure over the generators."""
    gens = coxeter_generators(n)
    seen = {SignedPermutation.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = h * g
                if gh not in seen:
                    seen.add(gh)
                    nxt.append(gh)
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------------------
# Orbits


@dataclass(frozen=True)
class Orbit:
    representative: object  # FaceDescriptor
    size: int
    kind: str  # "simplex" / "halfcube" / "vertex" / "top" / "mixed"


@dataclass(frozen=True)
class OrbitReport:
    n: int
    extended: bool
    orbits: tuple  # per dimension, tuple of Orbit


def orbits(n: int, extended: bool = False) -> OrbitReport:
    """Face orbits per dimension under the type-D generators.

    extended adds the n = 4 special reflection and is rejected elsewhere.
    """
    if extended and n != 4:
        raise ValueError("the special reflection exists only at n = 4")
    lattice = build_face_lattice(n)
    gens = coxeter_generators(n)
    special = SpecialReflection4() if extended else None

    report = []
    for dim_faces in lattice.faces:
        parent = list(range(len(dim_faces)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i, j):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

        pos = {f.key: i for i, f in enumerate(dim_faces)}
        for i, f in enumerate(dim_faces):
            for g in gens:
                union(i, pos[act_on_face(g, f).key])
            if special is not None:
                union(i, pos[face_image_by_vertices(special, f, lattice).key])

        groups = {}
        for i, f in enumerate(dim_faces):
            groups.setdefault(find(i), []).append(f)
        dim_orbits = []
        for root in sorted(groups):
            members = groups[root]
            kinds = {f.kind for f in members}
            kind = kinds.pop() if len(kinds) == 1 else "mixed"
            dim_orbits.append(Orbit(members[0], len(members), kind))
        report.append(tuple(dim_orbits))
    return OrbitReport(n, extended, tuple(report))


def expected_orbit_profile(n: int, extended: bool = False) -> list:
    """Orbit (kind, size) lists per dimension, from the census split."""
    from .faces import face_count, face_counts_by_type

    out = []
    by_type = face_counts_by_type(n)
    for dim in range(n + 1):
        if dim < 3 or dim == n:
            out.append([(KIND_VERTEX if dim == 0 else KIND_SIMPLEX if dim < n else KIND_TOP, face_count(n, dim))])
        elif n == 4 and extended:
            out.append([("mixed", face_count(n, dim))])
        else:
            simp, hc = by_type[dim]
            out.append([(KIND_SIMPLEX, simp), (KIND_HALFCUBE, hc)])
    return out


# ---------------------------------------------------------------------------
# Homology representation


class HomologyBasis:
    """Kernel-modulo-image coordinates on the one nonzero homology group."""

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        cx = build_complex(n, k)
        self.cx = cx
        d = k - 1
        mats = cx.matrices()
        cells = cx.cells[d]
        c = len(cells)

        dd = _dense(mats[d - 1])
        st = smith_with_transforms(dd)
        assert all(f == 1 for f in st.factors), "boundary factors above 1"
        r1 = st.rank
        self.r1 = r1
        self.c = c
        self.Vinv = st.Vinv
        self.V = st.V
        z = c - r1

        if d + 1 <= cx.top_dim:
            up = mats[d].columns()
            m = mats[d].ncols
        else:
            up = []
            m = 0
        X = [[0] * m for _ in range(z)]
        for j in range(m):
            col = [0] * c
            for r, v in up[j]:
                col[r] = v
            w = mat_vec(self.Vinv, col)
            if any(w[:r1]):
                raise AssertionError("image column is not a kernel element")
            for i in range(z):
                X[i][j] = w[r1 + i]
        st2 = smith_with_transforms(X)
        if any(f != 1 for f in st2.factors):
            raise AssertionError("homology has torsion; basis extraction needs a free group")
        self.r2 = st2.rank
        self.U2 = st2.U
        self.U2inv = st2.Uinv
        self.rank = z - self.r2
        if self.rank != predicted_betti(n, k):
            raise AssertionError("basis size disagrees with the predicted Betti number")
        # basis cycles as coefficient vectors over the (k-1)-cells
        self.cycles = []
        for mcol in range(self.r2, z):
            tail = [self.U2inv[i][mcol] for i in range(z)]
            full = [0] * r1 + tail
            self.cycles.append(mat_vec_cols(self.V, full))

    def coords(self, cycle) -> list:
        w = mat_vec(self.Vinv, cycle)
        if any(w[: self.r1]):
            raise AssertionError("not a cycle")
        y = mat_vec(self.U2, w[self.r1:])
        return y[self.r2:]


def mat_vec_cols(mat, vec):
    # mat as rows; product mat @ vec
    return [sum(a * b for a, b in zip(row, vec)) for row in mat]


def _dense(bm):
    out = [[0] * bm.ncols for _ in range(bm.nrows)]
    for r, c, v in bm.entries:
        out[r][c] += v
    return out


_basis_cache = {}


def homology_basis(n: int, k: int) -> HomologyBasis:
    got = _basis_cache.get((n, k))
    if got is None:
        got = _basis_cache[(n, k)] = HomologyBasis(n, k)
    return got


def chain_map_on_cells(g, cx, dim):
    """The signed permutation matrix of g on the dimension-dim chain group."""
    lat = cx.lattice
    cells = cx.cells[dim]
    index = cx.index[dim]
    out = []  # (target index, sign) per source cell
    for f in cells:
        img = act_on_face(g, f)
        j = index.get(img.key)
        if j is None:
            raise ValueError("image cell left the complex")
        if dim == 0:
            out.append((j, 1))
            continue
        tup_src = orientation_tuple(lat, f)
        tup_dst = orientation_tuple(lat, img)
        base_src = _basis_from_tuple(cx.n, tup_src)
        base_dst = _basis_from_tuple(cx.n, tup_dst)
        mapped = [g.vector_image(vec) for vec in base_src]
        mat = [
            [sum(a * b for a, b in zip(row, col)) for col in mapped]
            for row in base_dst
        ]
        s = det_sign(mat)
        if s == 0:
            raise AssertionError("degenerate orientation comparison")
        out.append((j, s))
    return out


def homology_action(n: int, k: int, g: SignedPermutation):
    """The matrix of g on the (k-1)-st homology of the k-cut complex."""
    if not g.is_even_signed:
        raise ValueError("only even-signed permutations act")
    basis = homology_basis(n, k)
    cx = basis.cx
    cmap = chain_map_on_cells(g, cx, k - 1)
    cols = []
    for cycle in basis.cycles:
        image = [0] * basis.c
        for i, coef in enumerate(cycle):
            if coef:
                j, s = cmap[i]
                image[j] += s * coef
        cols.append(basis.coords(image))
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))] if cols else []

"""Vertices, masks and the clique combinatorics of the half cube graph.

Vertices of the n-cube are sign vectors in {±1}^n, packed into an n-bit
integer: bit i-1 set means coordinate i equals -1.  The even-parity
vertices (an even number of -1 entries) are the vertices of the half cube;
the half cube graph joins two of them whenever their Hamming distance is 2.

Cliques of that graph come in two descriptor families:

  K(v', S)  -- the |S| even vertices differing from the odd vertex v' in
               exactly one coordinate i in S,
  L(v, S)   -- the 2^(|S|-1) even vertices agreeing with the even vertex v
               outside S.

Coordinates are 1-based throughout the public API, so a mask is literally
a subset of {1, ..., n}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

MAX_DIM = 32


@dataclass(frozen=True, order=True)
class Vertex:
    """A hypercube vertex; bit i-1 of ``bits`` set means coordinate i is -1."""

    n: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DIM:
            raise ValueError(f"dimension {self.n} outside 1..{MAX_DIM}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"vertex bits {self.bits:#x} do not fit in {self.n} coordinates")

    @classmethod
    def from_signs(cls, signs) -> "Vertex":
        signs = tuple(signs)
        if any(s not in (1, -1) for s in signs):
            raise ValueError("coordinates must be +1 or -1")
        bits = 0
        for i, s in enumerate(signs):
            if s == -1:
                bits |= 1 << i
        return cls(len(signs), bits)

    def signs(self) -> tuple:
        return tuple(-1 if self.bits >> i & 1 else 1 for i in range(self.n))

    @property
    def parity(self) -> int:
        return self.bits.bit_count() & 1

    @property
    def is_even(self) -> bool:
        """True iff the vertex lies in the even class (a half cube vertex)."""
        return self.parity == 0

    def flip(self, coord: int) -> "Vertex":
        """Flip the sign of the 1-based coordinate ``coord``."""
        if not 1 <= coord <= self.n:
            raise ValueError(f"coordinate {coord} outside 1..{self.n}")
        return Vertex(self.n, self.bits ^ (1 << (coord - 1)))


@dataclass(frozen=True)
class Mask:
    """A subset S of the coordinate set {1, ..., n}, packed into bits."""

    n: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DIM:
            raise ValueError(f"dimension {self.n} outside 1..{MAX_DIM}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError("mask bits exceed the ambient dimension")

    @classmethod
    def of(cls, n: int, *coords: int) -> "Mask":
        bits = 0
        for c in coords:
            if not 1 <= c <= n:
                raise ValueError(f"coordinate {c} outside 1..{n}")
            bits |= 1 << (c - 1)
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "Mask":
        return cls(n, (1 << n) - 1)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def coords(self) -> tuple:
        return tuple(i + 1 for i in range(self.n) if self.bits >> i & 1)

    def __contains__(self, coord: int) -> bool:
        return 1 <= coord <= self.n and bool(self.bits >> (coord - 1) & 1)

    def __iter__(self):
        return iter(self.coords())

    def without(self, coord: int) -> "Mask":
        if coord not in self:
            raise ValueError(f"coordinate {coord} not in mask")
        return Mask(self.n, self.bits & ~(1 << (coord - 1)))

    def with_coord(self, coord: int) -> "Mask":
        if not 1 <= coord <= self.n:
            raise ValueError(f"coordinate {coord} outside 1..{self.n}")
        return Mask(self.n, self.bits | 1 << (coord - 1))


@dataclass(frozen=True)
class CliqueSet:
    """A set of half cube vertices, kept as a sorted tuple.

    Sets built by clique_K, and by clique_L with |S| <= 3, are cliques;
    clique_L with a larger mask yields the vertex set of a half-cube face,
    which is not a clique.  ensure_clique() checks the pairwise condition.
    """

    vertices: tuple = field()

    @classmethod
    def of(cls, vertices, require_clique: bool = True) -> "CliqueSet":
        c = cls(tuple(sorted(set(vertices), key=lambda v: v.bits)))
        if require_clique:
            c.ensure_clique()
        return c

    def __post_init__(self):
        vs = self.vertices
        if not vs:
            raise ValueError("empty clique")
        n = vs[0].n
        for v in vs:
            if v.n != n:
                raise ValueError("mixed dimensions in clique")
            if not v.is_even:
                raise ValueError(f"vertex {v.signs()} is not a half cube vertex")

    def ensure_clique(self):
        vs = self.vertices
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                if hamming_distance(vs[i], vs[j]) != 2:
                    raise ValueError(
                        f"not a clique: {vs[i].signs()} and {vs[j].signs()} "
                        "are not at Hamming distance 2"
                    )

    @property
    def n(self) -> int:
        return self.vertices[0].n

    @property
    def key(self) -> tuple:
        return tuple(v.bits for v in self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self.vertices


@dataclass(frozen=True)
class CliqueClassification:
    """Result of classify_clique: kind is 'K', 'L' or 'small'."""

    kind: str
    point: Vertex | None
    mask: Mask | None
    key: tuple


def hamming_distance(x: Vertex, y: Vertex) -> int:
    """Number of coordinates at which x and y differ."""
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} != {y.n}")
    return (x.bits ^ y.bits).bit_count()


def clique_K(v_opp: Vertex, mask: Mask) -> CliqueSet:
    """The |S|-clique of even vertices differing from the odd vertex v' in one coordinate of S."""
    if v_opp.n != mask.n:
        raise ValueError("dimension mismatch between vertex and mask")
    if v_opp.is_even:
        raise ValueError("the opposite point must have odd parity")
    if mask.size == 0:
        raise ValueError("empty mask")
    return CliqueSet.of(v_opp.flip(i) for i in mask)


def clique_L(v_base: Vertex, mask: Mask) -> CliqueSet:
    """The 2^(|S|-1) even vertices agreeing with the even vertex v outside S.

    A clique exactly when |S| <= 3; for larger masks this is the vertex set
    of a half-cube shaped face.
    """
    if v_base.n != mask.n:
        raise ValueError("dimension mismatch between vertex and mask")
    if not v_base.is_even:
        raise ValueError("the base point must have even parity")
    out = []
    sub = mask.bits
    while True:
        if sub.bit_count() % 2 == 0:
            out.append(Vertex(v_base.n, v_base.bits ^ sub))
        if sub == 0:
            break
        sub = (sub - 1) & mask.bits
    return CliqueSet.of(out, require_clique=mask.size <= 3)


def disagreement_mask(c: CliqueSet) -> Mask:
    """Coordinates at which not all members of the clique agree."""
    acc = 0
    first = c.vertices[0].bits
    for v in c.vertices[1:]:
        acc |= first ^ v.bits
    return Mask(c.n, acc)


def recover_K_descriptor(c: CliqueSet) -> tuple:
    """Recover the unique (v', S) with clique_K(v', S) == c, for |c| >= 3.

    Majority vote per coordinate: all members but at most one share each
    coordinate value, so the shared values assemble the opposite point.
    """
    m = len(c)
    if m < 3:
        raise ValueError("descriptor is not unique for cliques of size < 3")
    n = c.n
    bits = 0
    for i in range(n):
        ones = sum(1 for v in c.vertices if v.bits >> i & 1)
        if 2 * ones > m:
            bits |= 1 << i
    v_opp = Vertex(n, bits)
    mask_bits = 0
    for v in c.vertices:
        diff = v.bits ^ bits
        if diff.bit_count() != 1:
            raise ValueError("clique is not of K-form")
        mask_bits |= diff
    mask = Mask(n, mask_bits)
    if v_opp.is_even or mask.size != m:
        raise ValueError("clique is not of K-form")
    return v_opp, mask


def classify_clique(c: CliqueSet) -> CliqueClassification:
    """Sort a clique into K-form, L-form, or the ambiguous small sizes.

    Cliques of size >= 5 and all triangles are K-form; a 4-clique is K-form
    when its members disagree in four coordinates and L-form when they
    disagree in three.  Sizes <= 2 are identified by vertex set only.
    """
    c.ensure_clique()
    m = len(c)
    if m <= 2:
        return CliqueClassification("small", None, None, c.key)
    if m == 4:
        d = disagreement_mask(c)
        if d.size == 3:
            base = c.vertices[0]
            return CliqueClassification("L", base, d, c.key)
        if d.size != 4:
            raise ValueError("4-clique disagrees in neither 3 nor 4 coordinates")
    v_opp, mask = recover_K_descriptor(c)
    return CliqueClassification("K", v_opp, mask, c.key)


def even_vertices(n: int):
    """All half cube vertices of dimension n, in increasing bit order."""
    return [Vertex(n, b) for b in range(1 << n) if b.bit_count() % 2 == 0]


def odd_vertices(n: int):
    return [Vertex(n, b) for b in range(1 << n) if b.bit_count() % 2 == 1]


def _masks_of_size(n: int, size: int):
    for coords in itertools.combinations(range(1, n + 1), size):
        yield Mask.of(n, *coords)


def enumerate_cliques(n: int, size: int) -> list:
    """All distinct cliques of the given size, generated from descriptors.

    K-descriptors cover every size; L-descriptors contribute the second
    family of 4-cliques.  Duplicates (sizes <= 2 have several descriptors)
    are removed by vertex-set key and the result is key-sorted.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if size < 1:
        raise ValueError("need size >= 1")
    seen = {}
    if size <= n:
        for v_opp in odd_vertices(n):
            for mask in _masks_of_size(n, size):
                c = clique_K(v_opp, mask)
                seen[c.key] = c
    if size == 4:
        for v in even_vertices(n):
            for mask in _masks_of_size(n, 3):
                c = clique_L(v, mask)
                seen[c.key] = c
    return [seen[k] for k in sorted(seen)]

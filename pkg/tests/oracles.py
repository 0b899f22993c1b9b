"""Independent brute-force references the tests check the library against.

Everything here works from first principles on explicit vertex sets; none
of it reuses the descriptor arithmetic under test.
"""

from fractions import Fraction


def even_bits(n):
    return [b for b in range(1 << n) if b.bit_count() % 2 == 0]


def graph_neighbors(n):
    """Adjacency of the distance-2 graph on the even vertices."""
    vs = even_bits(n)
    idx = {b: i for i, b in enumerate(vs)}
    nbr = {b: set() for b in vs}
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            if (a ^ b).bit_count() == 2:
                nbr[a].add(b)
                nbr[b].add(a)
    return vs, idx, nbr


def brute_force_cliques(n, size):
    """All cliques of the given size, as frozensets of vertex bits."""
    vs, _, nbr = graph_neighbors(n)
    out = set()

    def grow(clique, candidates, want):
        if want == 0:
            out.add(frozenset(clique))
            return
        for v in sorted(candidates):
            grow(clique + [v], {u for u in candidates if u > v and u in nbr[v]}, want - 1)

    grow([], set(vs), size)
    return out


def extends_to_larger_clique(n, clique_bits):
    """Does this clique extend by one more mutually adjacent vertex?"""
    vs, _, nbr = graph_neighbors(n)
    members = set(clique_bits)
    for v in vs:
        if v in members:
            continue
        if all(v in nbr[u] for u in members):
            return True
    return False


def dense_rank(rows):
    """Rank over Q by plain fraction Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in rows]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    rank = 0
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        rank += 1
    return rank


def dense_rank_mod(rows, p):
    a = [[x % p for x in row] for row in rows]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    rank = 0
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        for i in range(nr):
            if i != r and a[i][c]:
                m = (-a[i][c] * inv) % p
                a[i] = [(x + m * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        rank += 1
    return rank


def triplets_to_dense(nrows, ncols, trip):
    out = [[0] * ncols for _ in range(nrows)]
    for r, c, v in trip:
        out[r][c] += v
    return out

"""Exact integer linear algebra: rank kernels, Smith normal form, small solvers.

The rank kernels run on the compiled extension when it imported cleanly
(set HALFCUBE_PURE=1 to force the pure-Python fallback).  Smith normal
form always runs in pure Python: invariant factors need arbitrary
precision and the certified matrices are small.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import _elim_py

if os.environ.get("HALFCUBE_PURE") == "1":
    _impl = _elim_py
else:
    try:
        from . import _elim as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _elim_py

USING_COMPILED = bool(getattr(_impl, "COMPILED", False))


def kernel_name() -> str:
    return "compiled" if USING_COMPILED else "pure-python"


def _split(triplets):
    r_idx = [t[0] for t in triplets]
    c_idx = [t[1] for t in triplets]
    vals = [t[2] for t in triplets]
    return r_idx, c_idx, vals


def rank_over_q(nrows: int, ncols: int, triplets) -> int:
    """Rank over Q of an integer matrix given as (row, col, value) triplets."""
    if nrows == 0 or ncols == 0 or not triplets:
        return 0
    r_idx, c_idx, vals = _split(triplets)
    if _impl is not _elim_py:
        try:
            return _impl.rank_int(nrows, ncols, r_idx, c_idx, vals)
        except OverflowError:
            # entries outgrew machine words; redo with big integers
            pass
    return _elim_py.rank_int(nrows, ncols, r_idx, c_idx, vals)


def rank_mod_p(nrows: int, ncols: int, triplets, p: int) -> int:
    """Rank of an integer matrix over the prime field F_p."""
    if nrows == 0 or ncols == 0 or not triplets:
        return 0
    r_idx, c_idx, vals = _split(triplets)
    return _impl.rank_mod(nrows, ncols, r_idx, c_idx, vals, p)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    """Nonzero invariant factors d1 | d2 | ... | dr of an integer matrix."""

    factors: tuple
    rank: int

    def __post_init__(self):
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a:
                raise ValueError("invariant factors violate the divisibility chain")


def smith_normal_form(nrows: int, ncols: int, triplets) -> SmithForm:
    """Diagonalize by unimodular row/column operations; sparse, exact.

    Pivots are the smallest nonzero magnitude with (row, col) tie-break.
    After a pivot clears its row and column it is made to divide every
    remaining entry, so the recorded factors form the divisibility chain.
    """
    rows = {}
    cols = {}
    for r, c, v in triplets:
        if v == 0:
            continue
        row = rows.setdefault(r, {})
        cur = row.get(c, 0) + v
        if cur:
            row[c] = cur
            cols.setdefault(c, set()).add(r)
        else:
            del row[c]
            cols[c].discard(r)
    if any(r >= nrows for r in rows) or any(c >= ncols for c in cols):
        raise ValueError("triplet index outside the stated shape")

    def set_entry(r, c, v):
        row = rows.setdefault(r, {})
        if v:
            row[c] = v
            cols.setdefault(c, set()).add(r)
        else:
            if c in row:
                del row[c]
                cols[c].discard(r)

    def add_row(dst, src, m):
        # row dst += m * row src
        if m == 0:
            return
        for c, x in list(rows.get(src, {}).items()):
            set_entry(dst, c, rows.get(dst, {}).get(c, 0) + m * x)

    def add_col(dst, src, m):
        if m == 0:
            return
        for r in list(cols.get(src, set())):
            x = rows[r][src]
            set_entry(r, dst, rows[r].get(dst, 0) + m * x)

    factors = []
    while True:
        # re-pick the global smallest-magnitude pivot after every pass;
        # quotient reduction leaves remainders strictly smaller, so the
        # minimum entry is a descent measure and the loop terminates
        pivot = None
        for r, row in rows.items():
            for c, v in row.items():
                score = (abs(v), r, c)
                if pivot is None or score < pivot[0]:
                    pivot = (score, r, c)
        if pivot is None:
            break
        _, pr, pc = pivot
        v = rows[pr][pc]

        others_col = [r for r in cols.get(pc, set()) if r != pr]
        others_row = [c for c in rows.get(pr, {}) if c != pc]
        if others_col or others_row:
            for r in sorted(others_col):
                add_row(r, pr, -(rows[r][pc] // v))
            for c in sorted(others_row):
                add_col(c, pc, -(rows[pr][c] // v))
            continue

        # pivot row and column are clear; it must divide all that remains
        offender = None
        for r, row in sorted(rows.items()):
            if r == pr:
                continue
            for c, w in sorted(row.items()):
                if w % v:
                    offender = r
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(pr, offender, 1)
            continue

        factors.append(abs(v))
        set_entry(pr, pc, 0)
        if not rows.get(pr):
            rows.pop(pr, None)
    return SmithForm(tuple(factors), len(factors))


@dataclass
class SmithTransforms:
    """Dense U M V = D bookkeeping for kernel/quotient bases.

    factors lists the nonzero diagonal of D; V's columns beyond ``rank``
    are a basis of the integer kernel lattice of M; Vinv and Uinv are the
    exact unimodular inverses, maintained alongside the reduction.
    """

    factors: list
    rank: int
    U: list
    Uinv: list
    V: list
    Vinv: list


def smith_with_transforms(dense) -> SmithTransforms:
    """Smith normal form of a small dense matrix, with all four transforms."""
    m = len(dense)
    n = len(dense[0]) if m else 0
    D = [list(row) for row in dense]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    Uinv = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(dst, src, mult):
        # D_dst += mult * D_src, tracked in U (and inverse op in Uinv)
        D[dst] = [a + mult * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + mult * b for a, b in zip(U[dst], U[src])]
        for row in Uinv:
            row[src] -= mult * row[dst]

    def col_op(dst, src, mult):
        for row in D:
            row[dst] += mult * row[src]
        for row in V:
            row[dst] += mult * row[src]
        Vinv[src] = [a - mult * b for a, b in zip(Vinv[src], Vinv[dst])]

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def col_swap(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def row_negate(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]
        for row in Uinv:
            row[i] = -row[i]

    factors = []
    t = 0
    limit = min(m, n)
    while t < limit:
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j]:
                    score = (abs(D[i][j]), i, j)
                    if pivot is None or score < pivot[0]:
                        pivot = (score, i, j)
        if pivot is None:
            break
        _, pi, pj = pivot
        row_swap(t, pi)
        col_swap(t, pj)
        while True:
            restart = False
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    row_op(i, t, -q)
                    if D[i][t]:
                        row_swap(t, i)
                        restart = True
            if restart:
                continue
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    col_op(j, t, -q)
                    if D[t][j]:
                        col_swap(t, j)
                        restart = True
            if restart:
                continue
            v = D[t][t]
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % v:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, 1)
        if D[t][t] < 0:
            row_negate(t)
        factors.append(D[t][t])
        t += 1
    return SmithTransforms(factors, len(factors), U, Uinv, V, Vinv)


# ---------------------------------------------------------------------------
# Small exact dense helpers (orientation geometry, group actions)


def det_sign(mat) -> int:
    """Sign of the determinant of a small square integer matrix (Bareiss)."""
    a = [list(row) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    last = a[n - 1][n - 1]
    if last == 0:
        return 0
    return sign if last > 0 else -sign


def solve_fractions(a_rows, b):
    """Solve the square rational system A x = b exactly."""
    n = len(a_rows)
    a = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a_rows, b)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            raise ValueError("singular system")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def int_gcd_vector(vec) -> int:
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g

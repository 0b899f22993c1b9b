# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse elimination kernels.

Drop-in replacement for halfcube._elim_py: rank over Q by division-free
integer elimination with unit-pivot preference, and rank over F_p.  Rows
live in sorted (column, value) vectors; candidate row lists per column are
lazy and validated on use.  rank_int works in machine words and raises
OverflowError when an operand leaves the guarded range, at which point the
caller reruns the computation with Python integers.
"""

from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libcpp.queue cimport priority_queue

COMPILED = True

ctypedef long long ll
ctypedef pair[int, ll] entry

cdef ll GUARD = <ll>1 << 30


cdef inline ll ll_abs(ll x) nogil:
    return -x if x < 0 else x


cdef inline ll ll_gcd(ll a, ll b) nogil:
    cdef ll t
    a = ll_abs(a)
    b = ll_abs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline int find_col(vector[entry]& row, int c) nogil:
    cdef int lo = 0
    cdef int hi = <int>row.size()
    cdef int mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if row[mid].first < c:
            lo = mid + 1
        else:
            hi = mid
    if lo < <int>row.size() and row[lo].first == c:
        return lo
    return -1


def rank_int(int nrows, int ncols, r_idx, c_idx, vals):
    """Exact rank over Q; raises OverflowError if entries outgrow the guard."""
    cdef vector[vector[entry]] rows = vector[vector[entry]](nrows)
    cdef vector[vector[int]] cand = vector[vector[int]](ncols)
    cdef vector[int] counts = vector[int](ncols, 0)
    cdef vector[char] live_row = vector[char](nrows, 1)
    cdef vector[char] live_col = vector[char](ncols, 1)
    cdef priority_queue[pair[int, int]] heap

    cdef dict acc = {}
    cdef int i, r, c
    cdef ll v
    cdef object key
    for i in range(len(vals)):
        key = (r_idx[i], c_idx[i])
        acc[key] = acc.get(key, 0) + vals[i]
    cdef list items = sorted(acc.items())
    for key, pyv in items:
        if pyv == 0:
            continue
        if pyv > GUARD or pyv < -GUARD:
            raise OverflowError("input entry outside guarded range")
        r = key[0]
        c = key[1]
        v = pyv
        rows[r].push_back(entry(c, v))
        cand[c].push_back(r)
        counts[c] += 1
    for c in range(ncols):
        if counts[c] > 0:
            heap.push(pair[int, int](-counts[c], -c))

    cdef int rank = 0
    cdef int pc, pr, rl, j, pos
    cdef ll pv, w, m, scale, g, x, cur
    cdef vector[int] valid
    cdef vector[entry] merged
    cdef pair[int, int] top
    cdef int best_r, cnt
    cdef ll best_abs
    cdef int best_len, best_nonunit, nonunit
    cdef size_t a, b, a2, b2
    cdef vector[char] in_valid = vector[char](nrows, 0)

    while True:
        # sparsest live column, lazily validated
        pc = -1
        while not heap.empty():
            top = heap.top()
            heap.pop()
            c = -top.second
            cnt = -top.first
            if live_col[c] and counts[c] == cnt and cnt > 0:
                pc = c
                break
        if pc < 0:
            break

        # compact candidates (dedup: rebirths push repeats) and pick a pivot
        valid.clear()
        best_r = -1
        best_abs = 0
        best_len = 0
        best_nonunit = 2
        for a in range(cand[pc].size()):
            r = cand[pc][a]
            if not live_row[r] or in_valid[r]:
                continue
            pos = find_col(rows[r], pc)
            if pos < 0:
                continue
            in_valid[r] = 1
            valid.push_back(r)
            v = rows[r][pos].second
            nonunit = 0 if (v == 1 or v == -1) else 1
            rl = <int>rows[r].size()
            if (best_r < 0
                    or nonunit < best_nonunit
                    or (nonunit == best_nonunit and (ll_abs(v) < best_abs
                        or (ll_abs(v) == best_abs and (rl < best_len
                            or (rl == best_len and r < best_r)))))):
                best_r = r
                best_abs = ll_abs(v)
                best_len = rl
                best_nonunit = nonunit
        cand[pc] = valid
        for a in range(valid.size()):
            in_valid[valid[a]] = 0
        if best_r < 0:
            counts[pc] = 0
            live_col[pc] = 0
            continue
        pr = best_r
        pos = find_col(rows[pr], pc)
        pv = rows[pr][pos].second

        for a in range(valid.size()):
            r = valid[a]
            if r == pr:
                continue
            pos = find_col(rows[r], pc)
            w = rows[r][pos].second
            if w % pv == 0:
                m = -(w // pv)
                scale = 1
            else:
                g = ll_gcd(pv, w)
                scale = ll_abs(pv // g)
                m = -(w // g)
                if pv < 0:
                    m = -m
            if ll_abs(m) > GUARD or scale > GUARD:
                raise OverflowError("multiplier outside guarded range")
            # merged = scale * rows[r] + m * rows[pr]
            merged.clear()
            b = 0
            for j in range(<int>rows[r].size()):
                c = rows[r][j].first
                x = rows[r][j].second
                if ll_abs(x) > GUARD:
                    raise OverflowError("entry outside guarded range")
                while b < rows[pr].size() and rows[pr][b].first < c:
                    cur = m * rows[pr][b].second
                    if ll_abs(rows[pr][b].second) > GUARD:
                        raise OverflowError("entry outside guarded range")
                    merged.push_back(entry(rows[pr][b].first, cur))
                    b += 1
                if b < rows[pr].size() and rows[pr][b].first == c:
                    if ll_abs(rows[pr][b].second) > GUARD:
                        raise OverflowError("entry outside guarded range")
                    cur = scale * x + m * rows[pr][b].second
                    if cur != 0:
                        merged.push_back(entry(c, cur))
                    b += 1
                else:
                    merged.push_back(entry(c, scale * x))
            while b < rows[pr].size():
                if ll_abs(rows[pr][b].second) > GUARD:
                    raise OverflowError("entry outside guarded range")
                merged.push_back(entry(rows[pr][b].first, m * rows[pr][b].second))
                b += 1
            # account births and deaths column by column
            a2 = 0
            b2 = 0
            while a2 < rows[r].size() or b2 < merged.size():
                if b2 >= merged.size() or (a2 < rows[r].size()
                                           and rows[r][a2].first < merged[b2].first):
                    c = rows[r][a2].first
                    counts[c] -= 1
                    heap.push(pair[int, int](-counts[c], -c))
                    a2 += 1
                elif a2 >= rows[r].size() or merged[b2].first < rows[r][a2].first:
                    c = merged[b2].first
                    counts[c] += 1
                    cand[c].push_back(r)
                    heap.push(pair[int, int](-counts[c], -c))
                    b2 += 1
                else:
                    a2 += 1
                    b2 += 1
            rows[r] = merged
        # retire the pivot row and column
        for j in range(<int>rows[pr].size()):
            c = rows[pr][j].first
            counts[c] -= 1
            heap.push(pair[int, int](-counts[c], -c))
        rows[pr].clear()
        live_row[pr] = 0
        live_col[pc] = 0
        counts[pc] = 0
        rank += 1
    return rank


def rank_mod(int nrows, int ncols, r_idx, c_idx, vals, int p):
    """Rank over F_p (p prime, machine sized)."""
    cdef vector[vector[entry]] rows = vector[vector[entry]](nrows)
    cdef vector[vector[int]] cand = vector[vector[int]](ncols)
    cdef vector[int] counts = vector[int](ncols, 0)
    cdef vector[char] live_row = vector[char](nrows, 1)
    cdef vector[char] live_col = vector[char](ncols, 1)
    cdef priority_queue[pair[int, int]] heap

    cdef dict acc = {}
    cdef int i, r, c
    cdef ll v
    cdef object key
    for i in range(len(vals)):
        key = (r_idx[i], c_idx[i])
        acc[key] = (acc.get(key, 0) + vals[i]) % p
    cdef list items = sorted(acc.items())
    for key, pyv in items:
        if pyv == 0:
            continue
        r = key[0]
        c = key[1]
        v = pyv
        rows[r].push_back(entry(c, v))
        cand[c].push_back(r)
        counts[c] += 1
    for c in range(ncols):
        if counts[c] > 0:
            heap.push(pair[int, int](-counts[c], -c))

    cdef int rank = 0
    cdef int pc, pr, j, pos, rl, cnt
    cdef ll pv, w, m, x, cur, inv, e
    cdef vector[int] valid
    cdef vector[entry] merged
    cdef pair[int, int] top
    cdef int best_r, best_len
    cdef size_t a, b, a2, b2
    cdef vector[char] in_valid = vector[char](nrows, 0)

    while True:
        pc = -1
        while not heap.empty():
            top = heap.top()
            heap.pop()
            c = -top.second
            cnt = -top.first
            if live_col[c] and counts[c] == cnt and cnt > 0:
                pc = c
                break
        if pc < 0:
            break

        valid.clear()
        best_r = -1
        best_len = 0
        for a in range(cand[pc].size()):
            r = cand[pc][a]
            if not live_row[r] or in_valid[r]:
                continue
            pos = find_col(rows[r], pc)
            if pos < 0:
                continue
            in_valid[r] = 1
            valid.push_back(r)
            rl = <int>rows[r].size()
            if best_r < 0 or rl < best_len or (rl == best_len and r < best_r):
                best_r = r
                best_len = rl
        cand[pc] = valid
        for a in range(valid.size()):
            in_valid[valid[a]] = 0
        if best_r < 0:
            counts[pc] = 0
            live_col[pc] = 0
            continue
        pr = best_r
        pos = find_col(rows[pr], pc)
        pv = rows[pr][pos].second

        # inverse of pv by Fermat: pv^(p-2) mod p
        inv = 1
        e = p - 2
        x = pv % p
        while e:
            if e & 1:
                inv = (inv * x) % p
            x = (x * x) % p
            e >>= 1

        for a in range(valid.size()):
            r = valid[a]
            if r == pr:
                continue
            pos = find_col(rows[r], pc)
            w = rows[r][pos].second
            m = ((p - w) * inv) % p
            merged.clear()
            b = 0
            for j in range(<int>rows[r].size()):
                c = rows[r][j].first
                x = rows[r][j].second
                while b < rows[pr].size() and rows[pr][b].first < c:
                    cur = (m * rows[pr][b].second) % p
                    if cur:
                        merged.push_back(entry(rows[pr][b].first, cur))
                    b += 1
                if b < rows[pr].size() and rows[pr][b].first == c:
                    cur = (x + m * rows[pr][b].second) % p
                    if cur:
                        merged.push_back(entry(c, cur))
                    b += 1
                else:
                    merged.push_back(entry(c, x))
            while b < rows[pr].size():
                cur = (m * rows[pr][b].second) % p
                if cur:
                    merged.push_back(entry(rows[pr][b].first, cur))
                b += 1
            a2 = 0
            b2 = 0
            while a2 < rows[r].size() or b2 < merged.size():
                if b2 >= merged.size() or (a2 < rows[r].size()
                                           and rows[r][a2].first < merged[b2].first):
                    c = rows[r][a2].first
                    counts[c] -= 1
                    heap.push(pair[int, int](-counts[c], -c))
                    a2 += 1
                elif a2 >= rows[r].size() or merged[b2].first < rows[r][a2].first:
                    c = merged[b2].first
                    counts[c] += 1
                    cand[c].push_back(r)
                    heap.push(pair[int, int](-counts[c], -c))
                    b2 += 1
                else:
                    a2 += 1
                    b2 += 1
            rows[r] = merged
        for j in range(<int>rows[pr].size()):
            c = rows[pr][j].first
            counts[c] -= 1
            heap.push(pair[int, int](-counts[c], -c))
        rows[pr].clear()
        live_row[pr] = 0
        live_col[pc] = 0
        counts[pc] = 0
        rank += 1
    return rank

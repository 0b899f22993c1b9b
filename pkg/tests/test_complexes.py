import random
from math import comb

import pytest

from halfcube.complexes import (
    BoundaryMatrix,
    assert_boundary_squared_zero,
    boundary_matrices,
    build_complex,
    euler_characteristic,
    orientation_tuple,
    random_flip_set,
)
from halfcube.faces import build_face_lattice
from halfcube.linalg import rank_over_q


def test_clique_complex_census_n4():
    cx = build_complex(4, 4)
    assert cx.cell_counts() == [8, 24, 32, 16]


def test_cut3_census_n5():
    cx = build_complex(5, 3)
    assert cx.cell_counts() == [16, 80, 160, 80, 16]


def test_full_complex_is_everything():
    cx = build_complex(5)
    assert cx.cell_counts() == [16, 80, 160, 120, 26, 1]
    assert cx.is_full
    assert euler_characteristic(cx) == 1
    assert euler_characteristic(build_complex(6)) == 1


def test_deleted_cell_counts_formula():
    # the cut removes 2^(n-i) C(n,i) cells in each dimension i >= k_cut
    for n in (5, 6):
        lat = build_face_lattice(n)
        for k in range(3, n + 1):
            cx = build_complex(n, k)
            for i in range(n + 1):
                have = len(cx.cells[i]) if i < len(cx.cells) else 0
                removed = len(lat.faces[i]) - have
                want = (1 << (n - i)) * comb(n, i) if i >= k else 0
                assert removed == want, (n, k, i)


def test_euler_characteristic_values():
    assert euler_characteristic(build_complex(4, 3)) == 8
    assert euler_characteristic(build_complex(4, 4)) == 0
    assert euler_characteristic(build_complex(6, 4)) == -48


def test_parameter_validation():
    with pytest.raises(ValueError):
        build_complex(3, 3)
    with pytest.raises(ValueError):
        build_complex(5, 2)
    with pytest.raises(ValueError):
        build_complex(5, 7)


def test_edge_columns_one_plus_one_minus():
    cx = build_complex(4, 4)
    for col in cx.matrices()[0].columns():
        assert sorted(v for _, v in col) == [-1, 1]


def test_simplex_column_support_sizes():
    cx = build_complex(5, 3)
    for m in cx.matrices():
        for j, col in enumerate(m.columns()):
            cell = cx.cells[m.degree][j]
            assert len(col) == len(cx.lattice.facets(cell))
            assert all(v in (-1, 1) for _, v in col)


def test_rank_d1_connected_graph():
    cx = build_complex(4, 4)
    m = cx.matrices()[0]
    assert rank_over_q(m.nrows, m.ncols, m.triplets()) == 7


def test_boundary_squared_zero_sweep():
    for n in (4, 5):
        for k in list(range(3, n + 1)) + [n + 1]:
            cx = build_complex(n, k)
            cx.matrices()  # asserts internally


def test_skeleton_agreement_below_cut():
    # matrices of the cut complex equal the full ones in degrees < k_cut
    for n in (5, 6):
        full = build_complex(n).matrices()
        for k in range(3, n + 1):
            cut = build_complex(n, k).matrices()
            for d in range(1, k):
                assert cut[d - 1].entries == full[d - 1].entries, (n, k, d)


def test_orientation_tuple_is_lex_smallest_prefix():
    lat = build_face_lattice(5)
    for f in lat.faces[3][:40]:
        tup = orientation_tuple(lat, f)
        assert len(tup) == f.dim + 1
        assert tup[0] == f.key[0]
        assert all(a in f.key for a in tup)
        idx = [f.key.index(a) for a in tup]
        assert idx == sorted(idx)
    # simplices use every vertex in order
    for f in lat.faces[2][:20]:
        assert orientation_tuple(lat, f) == f.key


def test_flipped_orientations_still_give_chain_complex():
    cx = build_complex(4, 4)
    rng = random.Random(5)
    flips = random_flip_set(cx, rng)
    assert flips
    mats = boundary_matrices(cx, flips)
    assert_boundary_squared_zero(mats)
    base = cx.matrices()
    changed = any(a.entries != b.entries for a, b in zip(mats, base))
    assert changed


def test_triplet_text_round_trip():
    cx = build_complex(4, 3)
    for m in cx.matrices():
        text = m.to_text()
        back = BoundaryMatrix.from_text(text)
        assert back == m
        header = text.splitlines()[0].split()
        assert [int(x) for x in header] == [m.degree, m.nrows, m.ncols]


def test_cell_order_is_key_order():
    cx = build_complex(5, 4)
    for cells in cx.cells:
        keys = [f.key for f in cells]
        assert keys == sorted(keys)


def test_orientation_accessor():
    cx = build_complex(5, 4)
    f = cx.cells[3][0]
    tup = cx.orientation_of(f)
    assert len(tup) == 4 and set(tup) <= set(f.key)
    from halfcube.faces import top_face

    with pytest.raises(ValueError):
        cx.orientation_of(top_face(5))

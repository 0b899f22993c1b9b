from fractions import Fraction

import pytest

from halfcube.core import Mask, Vertex, odd_vertices
from halfcube.faces import (
    KIND_HALFCUBE,
    KIND_SIMPLEX,
    KIND_VERTEX,
    build_face_lattice,
    face_count,
    face_counts,
    face_from_vertices,
    facets_of,
    halfcube_face,
    simplex_face,
    simplex_contains_point,
    top_face,
    vertex_face,
)


def test_counts_closed_forms_small():
    assert face_counts(4) == [8, 24, 32, 16, 1]
    assert face_counts(5) == [16, 80, 160, 120, 26, 1]
    assert face_count(5, 3) == 120


def test_built_census_matches_closed_forms():
    for n in (4, 5, 6):
        lat = build_face_lattice(n)
        assert lat.counts() == face_counts(n)


def test_n4_facets_split_eight_eight():
    lat = build_face_lattice(4)
    dim3 = lat.faces[3]
    assert sum(1 for f in dim3 if f.kind == KIND_SIMPLEX) == 8
    assert sum(1 for f in dim3 if f.kind == KIND_HALFCUBE) == 8


def test_top_cell_facet_census():
    lat = build_face_lattice(5)
    fs = lat.facets(lat.faces[5][0])
    assert len(fs) == 2**4 + 2 * 5
    assert sum(1 for f in fs if f.kind == KIND_SIMPLEX) == 16
    assert sum(1 for f in fs if f.kind == KIND_HALFCUBE) == 10
    lat4 = build_face_lattice(4)
    assert len(lat4.facets(lat4.faces[4][0])) == 16


def test_edge_facets_are_vertices():
    e = simplex_face(odd_vertices(5)[0], Mask.of(5, 1, 2))
    fs = facets_of(e)
    assert [f.kind for f in fs] == [KIND_VERTEX, KIND_VERTEX]
    assert {f.key[0] for f in fs} == set(e.key)


def test_halfcube_tetrahedron_facets_are_simplices():
    f = halfcube_face(Vertex.from_signs((1, -1, -1, 1, 1)), Mask.of(5, 1, 3, 4))
    fs = facets_of(f)
    assert len(fs) == 4
    assert all(g.kind == KIND_SIMPLEX and g.dim == 2 for g in fs)


def test_halfcube_facet_rule():
    f = halfcube_face(Vertex(6, 0), Mask.of(6, 1, 2, 3, 4))
    fs = facets_of(f)
    simp = [g for g in fs if g.kind == KIND_SIMPLEX]
    hc = [g for g in fs if g.kind == KIND_HALFCUBE]
    assert len(simp) == 2**3 and len(hc) == 2 * 4
    assert all(g.dim == 3 for g in fs)
    for g in fs:
        assert set(g.key) < set(f.key)


def test_facets_have_codimension_one_everywhere():
    lat = build_face_lattice(5)
    for dim in range(1, 6):
        for f in lat.faces[dim]:
            for g in lat.facets(f):
                assert g.dim == dim - 1
                assert set(g.key) < set(f.key)


def test_vertices_have_no_facets():
    with pytest.raises(ValueError):
        facets_of(vertex_face(Vertex(5, 0)))


def test_hasse_reaches_every_face():
    lat = build_face_lattice(5)
    seen = set()
    frontier = [lat.faces[5][0]]
    seen.add(frontier[0].key)
    while frontier:
        nxt = []
        for f in frontier:
            if f.dim == 0:
                continue
            for g in lat.facets(f):
                if g.key not in seen:
                    seen.add(g.key)
                    nxt.append(g)
        frontier = nxt
    assert len(seen) == sum(face_counts(5))


@pytest.mark.parametrize("n", [5, 6])
def test_diamond_property(n):
    # every codimension-2 subface of a face lies in exactly two of its facets
    lat = build_face_lattice(n)
    for dim in range(2, n + 1):
        for f in lat.faces[dim]:
            counts = {}
            for g in lat.facets(f):
                for h in lat.facets(g):
                    counts[h.key] = counts.get(h.key, 0) + 1
            assert set(counts.values()) == {2}, (f, counts)


def test_intersection_idempotent_and_commutative():
    lat = build_face_lattice(4)
    faces = [f for dim in lat.faces for f in dim]
    for f in faces[::7]:
        assert lat.intersection(f, f) == f
    for f in faces[::11]:
        for g in faces[::13]:
            assert lat.intersection(f, g) == lat.intersection(g, f)


def test_intersection_associative_on_nested_triples():
    lat = build_face_lattice(4)
    faces = [f for dim in lat.faces for f in dim]

    def meet(f, g):
        return lat.intersection(f, g) if f is not None and g is not None else None

    for f in faces[::5]:
        for g in faces[::9]:
            for h in faces[::17]:
                assert meet(meet(f, g), h) == meet(f, meet(g, h))


def test_intersection_of_adjacent_top_simplex_facets_is_edge():
    lat = build_face_lattice(5)
    u = odd_vertices(5)[0]
    w = Vertex(5, u.bits ^ 0b00011)
    f = lat.face(simplex_face(u, Mask.full(5)).key)
    g = lat.face(simplex_face(w, Mask.full(5)).key)
    e = lat.intersection(f, g)
    assert e.dim == 1
    assert set(e.key) == set(f.key) & set(g.key)


def test_intersection_exhaustive_n4():
    lat = build_face_lattice(4)
    faces = [f for dim in lat.faces for f in dim]
    for f in faces:
        for g in faces:
            got = lat.intersection(f, g)
            common = set(f.key) & set(g.key)
            if not common:
                assert got is None
            else:
                assert set(got.key) == common


def test_intersection_rejects_foreign_faces():
    lat = build_face_lattice(4)
    other = top_face(5)
    with pytest.raises(ValueError):
        lat.intersection(lat.faces[0][0], other)


def test_membership_vertices_and_opposite_point():
    f = simplex_face(Vertex.from_signs((1, -1, -1, 1, -1)), Mask.of(5, 2, 3, 4))
    for v in f.vertices():
        assert simplex_contains_point(f, v.signs())
    assert not simplex_contains_point(f, (1, -1, -1, 1, -1))


def test_membership_barycenter():
    f = simplex_face(Vertex.from_signs((1, -1, -1, 1, -1)), Mask.of(5, 2, 3, 4))
    verts = [v.signs() for v in f.vertices()]
    bary = [sum(Fraction(v[i]) for v in verts) / len(verts) for i in range(5)]
    assert simplex_contains_point(f, bary)
    # nudging off the affine hull of the mask coordinates leaves the hull
    off = list(bary)
    off[4] += Fraction(1, 7)
    assert not simplex_contains_point(f, off)


def test_membership_requires_simplex_kind():
    f = halfcube_face(Vertex(5, 0), Mask.of(5, 1, 2, 3))
    with pytest.raises(ValueError):
        simplex_contains_point(f, (1,) * 5)


def test_face_from_vertices_round_trip_n5():
    lat = build_face_lattice(5)
    for dim_faces in lat.faces:
        for f in dim_faces:
            g = face_from_vertices(f.vertices())
            assert g.key == f.key and g.kind == f.kind


def test_face_from_vertices_rejects_junk():
    with pytest.raises(ValueError):
        face_from_vertices([Vertex(5, 0), Vertex(5, 0b11110)])


def test_descriptor_equality_is_by_key():
    u = odd_vertices(5)[0]
    w = Vertex(5, u.bits ^ 0b00011)
    e1 = simplex_face(u, Mask.of(5, 1, 2))
    e2 = simplex_face(w, Mask.of(5, 1, 2))
    assert e1 == e2 and hash(e1) == hash(e2)
    assert e1.point.bits == min(u.bits, w.bits)


def test_lattice_orders_faces_by_key():
    lat = build_face_lattice(5)
    for dim_faces in lat.faces:
        keys = [f.key for f in dim_faces]
        assert keys == sorted(keys)


def test_build_rejects_out_of_range():
    with pytest.raises(ValueError):
        build_face_lattice(3)

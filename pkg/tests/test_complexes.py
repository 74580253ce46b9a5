import pytest
from hypothesis import given
from hypothesis import strategies as st

from simplicial_games import EMPTY_FACE, Face, SimplicialComplex, full_simplex
from simplicial_games.complexes import complex_from_dict, complex_to_dict
from simplicial_games.errors import (
    EmptyComplex,
    FaceNotInComplex,
    ParseError,
    TooManyVertices,
    VertexOutOfRange,
)
from conftest import figure_a, figure_b
from oracles import (
    closure_masks,
    ext_ids,
    f_vector_of,
    facet_masks_of,
    link_masks,
    star_masks,
)


def masks(delta):
    return {f.mask for f in delta.faces}


def face(*vs):
    return Face.from_vertices(vs)


# -- Face basics -----------------------------------------------------------

def test_face_ordering_key():
    fs = [face(2, 3), face(1, 4), face(3), face(), face(1, 2)]
    ordered = sorted(fs, key=Face.sort_key)
    assert [f.vertices for f in ordered] == [(), (3,), (1, 2), (1, 4), (2, 3)]


def test_face_rejects_bad_vertices():
    with pytest.raises(VertexOutOfRange):
        face(0)
    with pytest.raises(VertexOutOfRange):
        Face.from_vertices([2, 2])


def test_face_set_operations():
    a, b = face(1, 2, 3), face(3, 4)
    assert a.intersection(b) == face(3)
    assert a.union(b) == face(1, 2, 3, 4)
    assert a.difference(b) == face(1, 2)
    assert face(1, 2).issubset(a) and not a.issubset(b)
    assert 2 in a and 5 not in a


# -- construction ----------------------------------------------------------

def test_figure_a_closure():
    delta = figure_a()
    assert len(delta.faces) == 16  # 1 + 5 + 7 + 3, per the closure oracle
    assert EMPTY_FACE in delta.faces
    assert delta.rank == 3
    assert delta.facets == (face(1, 2, 3), face(2, 3, 5), face(3, 4, 5))


def test_full_simplex_closure():
    delta = full_simplex(3)
    assert len(delta.faces) == 8
    assert delta.facets == (face(1, 2, 3),)


def test_redundant_facets_absorbed():
    delta = SimplicialComplex.from_facets(3, [[1, 2], [1], [1, 2, 3]])
    assert delta.facets == (face(1, 2, 3),)


def test_vertex_out_of_range():
    with pytest.raises(VertexOutOfRange):
        SimplicialComplex.from_facets(2, [[1, 3]])


def test_too_many_vertices():
    with pytest.raises(TooManyVertices):
        SimplicialComplex.from_facets(65, [[1]])


def test_deterministic_face_order():
    delta = figure_a()
    keys = [f.sort_key() for f in delta.faces]
    assert keys == sorted(keys)


# -- link ------------------------------------------------------------------

def test_link_figure_a_vertex_3():
    delta = figure_a()
    lk = delta.link(face(3))
    expected = {(), (1,), (2,), (4,), (5,), (1, 2), (2, 5), (4, 5)}
    assert {f.vertices for f in lk.faces} == expected
    assert lk.f_vector() == (1, 4, 3)


def test_link_of_vertex_in_simplex():
    delta = full_simplex(4)
    lk = delta.link(face(2))
    assert lk == SimplicialComplex.from_facets(4, [[1, 3, 4]])


def test_link_figure_b_vertex_3():
    lk = figure_b().link(face(3))
    assert lk.f_vector() == (1, 4, 2)


def test_link_requires_membership():
    with pytest.raises(FaceNotInComplex):
        figure_a().link(face(1, 4))


def test_link_of_empty_face_is_whole_complex():
    delta = figure_a()
    assert delta.link(EMPTY_FACE) == delta


# -- star ------------------------------------------------------------------

def test_star_whole_simplex():
    delta = full_simplex(2)
    assert delta.star(face(1)) == frozenset(delta.faces)


def test_star_figure_a_vertex_4():
    st_ = figure_a().star(face(4))
    assert st_ == frozenset(SimplicialComplex.from_facets(5, [[3, 4, 5]]).faces)


def test_star_of_facet():
    delta = figure_a()
    st_ = delta.star(face(1, 2, 3))
    assert st_ == frozenset(full_simplex(3).faces)


def test_star_link_bijection_for_vertices(fixtures):
    # T -> T + i maps the link onto the star members containing i,
    # so the star of a vertex is exactly twice the link.
    for delta in fixtures.values():
        for i in delta.vertices:
            lk = delta.link(face(i))
            st_ = delta.star(face(i))
            with_i = {f for f in st_ if i in f}
            assert {t.with_vertex(i) for t in lk.faces} == with_i
            assert len(st_) == 2 * len(lk.faces)


# -- f-vector / skeleton ---------------------------------------------------

def test_f_vector_simplex():
    assert full_simplex(3).f_vector() == (1, 3, 3, 1)


def test_f_vector_single_vertex():
    assert SimplicialComplex.from_facets(1, [[1]]).f_vector() == (1, 1)


def test_f_vector_figure_a():
    assert figure_a().f_vector() == (1, 5, 7, 3)


def test_f_vector_empty_complex():
    with pytest.raises(EmptyComplex):
        SimplicialComplex.from_facets(3, []).f_vector()


def test_skeleton_k4():
    sk = full_simplex(4).skeleton(2)
    assert sk.f_vector() == (1, 4, 6)


def test_skeleton_trivial_cases():
    delta = figure_a()
    assert {f.vertices for f in delta.skeleton(0).faces} == {()}
    assert delta.skeleton(delta.rank) == delta
    assert delta.skeleton(2).skeleton(2) == delta.skeleton(2)


# -- pure links / extensions / facets --------------------------------------

def test_pure_links():
    assert full_simplex(4).has_pure_links()
    assert figure_a().has_pure_links()
    mixed = SimplicialComplex.from_facets(3, [[1, 2], [3]])
    assert not mixed.has_pure_links()


def test_extension_set_figure_a():
    delta = figure_a()
    assert delta.extension_set(face(3)) == {1, 2, 4, 5}
    assert delta.extension_set(face(2, 3)) == {1, 5}
    assert delta.extension_set(face(1, 2, 3)) == frozenset()


def test_ext_equals_link_f0(fixtures):
    for delta in fixtures.values():
        for t in delta.faces:
            lk = delta.link(t)
            f0 = lk.f_vector()[1] if lk.rank >= 1 else 0
            assert len(delta.extension_set(t)) == f0


def test_facets_containing():
    delta = figure_a()
    assert delta.facets_containing(face(3)) == delta.facets
    assert delta.facets_containing(face(1)) == (face(1, 2, 3),)
    assert delta.facets_containing(face(3, 4, 5)) == (face(3, 4, 5),)


# -- oracle agreement and closure property ----------------------------------

def test_queries_match_bruteforce(fixtures):
    for delta in fixtures.values():
        faces = masks(delta)
        assert faces == closure_masks(
            delta.n, [f.mask for f in delta.facets]
        )
        assert {f.mask for f in delta.facets} == facet_masks_of(faces)
        assert delta.f_vector() == f_vector_of(faces)
        for s in delta.faces:
            assert masks(delta.link(s)) == link_masks(delta.n, faces, s.mask)
            assert {f.mask for f in delta.star(s)} == star_masks(
                delta.n, faces, s.mask
            )
            assert set(delta.extension_set(s)) == ext_ids(delta.n, faces, s.mask)


def test_downward_closure(fixtures):
    for delta in fixtures.values():
        for f in delta.faces:
            for v in f.vertices:
                assert delta.has_face(f.without_vertex(v))


def test_f_vector_totals(fixtures):
    for delta in fixtures.values():
        fv = delta.f_vector()
        assert fv[0] == 1
        assert sum(fv) == len(delta.faces)


@st.composite
def random_complexes(draw):
    n = draw(st.integers(1, 6))
    k = draw(st.integers(1, 4))
    facets = [
        draw(st.sets(st.integers(1, n), min_size=1, max_size=n))
        for _ in range(k)
    ]
    return SimplicialComplex.from_facets(n, [sorted(f) for f in facets])


@given(random_complexes())
def test_random_complex_invariants(delta):
    faces = masks(delta)
    assert faces == closure_masks(delta.n, [f.mask for f in delta.facets])
    for s in delta.faces:
        assert masks(delta.link(s)) == link_masks(delta.n, faces, s.mask)
    fv = delta.f_vector()
    assert sum(fv) == len(delta.faces)


# -- JSON ------------------------------------------------------------------

def test_complex_json_roundtrip():
    delta = figure_a()
    assert complex_from_dict(complex_to_dict(delta)) == delta


def test_complex_json_rejects_garbage():
    with pytest.raises(ParseError):
        complex_from_dict([1, 2])
    with pytest.raises(ParseError):
        complex_from_dict({"n": 3})
    with pytest.raises(ParseError):
        complex_from_dict({"n": "3", "facets": []})
    with pytest.raises(VertexOutOfRange):
        complex_from_dict({"n": 2, "facets": [[1, 3]]})

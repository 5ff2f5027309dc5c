import random

import pytest

from froblab.errors import NotAFaceError, ParseError
from froblab.simplicial import (
    CohomologyProfile,
    SimplicialComplex,
    all_faces,
    boundary_homology_dims,
    cone,
    euler_characteristic_faces,
    faces,
    from_facets,
    is_cone_complex,
    link,
    make_complex,
    parse_facets_text,
    reduced_cohomology,
    relabel,
)

TRIANGLE = from_facets(3, [[0, 1], [1, 2], [0, 2]])
TWO_POINTS = from_facets(2, [[0], [1]])
TWO_EDGES = from_facets(4, [[0, 1], [2, 3]])
EMPTY = make_complex(0, [[]])
VOID = make_complex(0, [])

# minimal 6-vertex triangulation of the real projective plane
RP2_FACETS = [
    (0, 1, 3), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 4, 5),
    (1, 2, 4), (1, 2, 5), (1, 3, 4), (2, 3, 5), (3, 4, 5),
]
RP2 = from_facets(6, RP2_FACETS)


def test_from_facets_triangle():
    assert TRIANGLE.dim == 1
    assert TRIANGLE.facets == ((0, 1), (0, 2), (1, 2))


def test_from_facets_antichain_reduction():
    c = from_facets(2, [[0, 1], [0]])
    assert c.facets == ((0, 1),)


def test_from_facets_errors():
    with pytest.raises(ParseError):
        from_facets(2, [[0, 3]])
    with pytest.raises(ParseError):
        from_facets(3, [[0, 1]])  # vertex 2 uncovered


def test_parse_facets_text():
    c = parse_facets_text("# comment\n0 1\n1 2\n0 2\n")
    assert c == TRIANGLE
    with pytest.raises(ParseError):
        parse_facets_text("# nothing\n")
    with pytest.raises(ParseError):
        parse_facets_text("0 x\n")


def test_faces_triangle():
    fs = faces(TRIANGLE)
    assert len(fs[-1]) == 1 and len(fs[0]) == 3 and len(fs[1]) == 3


def test_faces_small():
    assert faces(from_facets(1, [[0]])) == {-1: ((),), 0: (((0,)),)}
    assert faces(TWO_POINTS)[0] == ((0,), (1,))
    assert faces(VOID) == {}


def test_link_empty_face_is_whole_complex():
    for c in (TRIANGLE, TWO_POINTS, RP2):
        assert link(c, ()) == c


def test_link_vertex_of_triangle():
    lk = link(TRIANGLE, (0,))
    assert lk.facets == ((1,), (2,))


def test_link_of_facet_is_empty_complex():
    lk = link(TRIANGLE, (0, 1))
    assert lk.facets == ((),)
    assert lk.dim == -1


def test_link_not_a_face():
    with pytest.raises(NotAFaceError):
        link(TRIANGLE, (0, 1, 2))


def test_cohomology_full_simplex_vanishes():
    simplex = from_facets(3, [[0, 1, 2]])
    for p in (2, 3, 5):
        assert reduced_cohomology(simplex, p).dims == ()


def test_cohomology_empty_complex():
    prof = reduced_cohomology(EMPTY, 2)
    assert prof.dims == ((-1, 1),)
    assert reduced_cohomology(VOID, 2).dims == ()


def test_cohomology_two_points():
    assert reduced_cohomology(TWO_POINTS, 2).dims == ((0, 1),)


def test_cohomology_circle():
    assert reduced_cohomology(TRIANGLE, 2).dims == ((1, 1),)
    assert reduced_cohomology(TRIANGLE, 3).dims == ((1, 1),)


def test_cohomology_projective_plane():
    assert reduced_cohomology(RP2, 2).dim_at(1) == 1
    assert reduced_cohomology(RP2, 2).dim_at(2) == 1
    assert reduced_cohomology(RP2, 3).dims == ()
    assert reduced_cohomology(RP2, 5).dims == ()


def test_cohomology_matches_homology_ranks():
    for c in (TRIANGLE, TWO_POINTS, TWO_EDGES, RP2, EMPTY):
        for p in (2, 3):
            prof = reduced_cohomology(c, p)
            assert dict(prof.dims) == boundary_homology_dims(c, p)


def test_euler_characteristic():
    for c in (TRIANGLE, TWO_POINTS, TWO_EDGES, RP2, EMPTY, from_facets(3, [[0, 1, 2]])):
        for p in (2, 3):
            prof = reduced_cohomology(c, p)
            chi_cohom = sum((-1) ** j * d for j, d in prof.dims)
            assert chi_cohom == euler_characteristic_faces(c)
            for sigma in all_faces(c):
                lk = link(c, sigma)
                prof_lk = reduced_cohomology(lk, p)
                chi_lk = sum((-1) ** j * d for j, d in prof_lk.dims)
                assert chi_lk == euler_characteristic_faces(lk)


def test_relabeling_invariance():
    rng = random.Random(3)
    for c in (TRIANGLE, TWO_EDGES, RP2):
        base = {p: reduced_cohomology(c, p).dims for p in (2, 3)}
        for _ in range(4):
            perm = list(range(c.n_vertices))
            rng.shuffle(perm)
            rc = relabel(c, perm)
            for p in (2, 3):
                assert reduced_cohomology(rc, p).dims == base[p]


def test_cones_are_acyclic():
    for c in (TRIANGLE, TWO_POINTS, TWO_EDGES, RP2):
        k = cone(c)
        assert is_cone_complex(k)
        for p in (2, 3):
            assert reduced_cohomology(k, p).dims == ()


def test_cocycle_bases_dimensions():
    prof = reduced_cohomology(TRIANGLE, 2, with_cocycles=True)
    bases = dict(prof.cocycles)
    # degree-1 cocycles of the circle: all of C^1 (no 2-faces)
    assert bases[1].rows == 3

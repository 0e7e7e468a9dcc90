"""Surface route: disks-and-bands data, Seifert matrices, Alexander values."""

import pytest
from hypothesis import given, settings

from conftest import homogeneous_connected
from homolink.errors import DisconnectedWordError, InhomogeneousWordError
from homolink.polynomials import LaurentPolynomial, det, equal_up_to_unit
from homolink.seifert import (
    SeifertMatrix,
    alexander_from_seifert,
    build_surface,
    conway_from_seifert,
    decompose_murasugi,
    knot_genus,
    seifert_matrix,
    surface_conway,
)
from homolink.skein import conway_skein
from homolink.words import BraidWord, component_count, parse_word


def test_surface_shape_trefoil():
    s = build_surface(parse_word("1 1 1"))
    assert s.disks == 2
    assert s.band_count == 3
    assert s.euler_characteristic == -1
    assert s.bands == ((1, 1, 1), (1, 2, 1), (1, 3, 1))
    assert set(s.basis_loops) == {(1, 1), (1, 2)}
    assert knot_genus(s.word) == 1


def test_surface_shape_figure_eight():
    s = build_surface(parse_word("1 -2 1 -2"))
    assert s.disks == 3
    assert s.band_count == 4
    assert s.euler_characteristic == -1
    assert s.bands == ((1, 1, 1), (2, 1, -1), (1, 2, 1), (2, 2, -1))
    assert set(s.basis_loops) == {(1, 1), (2, 1)}


def test_surface_shape_empty():
    s = build_surface(BraidWord(1, ()))
    assert s.disks == 1
    assert s.band_count == 0
    assert s.euler_characteristic == 1
    assert s.basis_loops == ()


def test_knot_genus_rejects_links():
    with pytest.raises(ValueError):
        knot_genus(parse_word("1 1"))


def test_decompose_examples():
    assert decompose_murasugi(build_surface(parse_word("1 1 2 2"))) == [
        (1, 1, 2), (2, 1, 2)]
    assert decompose_murasugi(build_surface(parse_word("1 1 -2 -2"))) == [
        (1, 1, 2), (2, -1, 2)]
    assert decompose_murasugi(build_surface(parse_word("1 1 1 1 1"))) == [
        (1, 1, 5)]


def test_decompose_requires_connected():
    with pytest.raises(DisconnectedWordError):
        decompose_murasugi(build_surface(parse_word("1 1", strands=3)))
    with pytest.raises(InhomogeneousWordError):
        decompose_murasugi(build_surface(parse_word("1 -1")))


def test_seifert_matrix_trefoil():
    V = seifert_matrix(build_surface(parse_word("1 1 1")))
    assert V.entries == ((1, 0), (-1, 1))
    assert V.loops == ((1, 1), (1, 2))
    assert V.intersection_form() == ((0, 1), (-1, 0))


def test_seifert_matrix_figure_eight():
    V = seifert_matrix(build_surface(parse_word("1 -2 1 -2")))
    assert V.dimension == 2
    assert conway_from_seifert(V).as_dict() == {2: -1, 0: 1}


def test_conway_from_fixed_matrices():
    loops = ((1, 1), (1, 2))
    V = SeifertMatrix(((-1, 1), (0, -1)), loops)
    assert conway_from_seifert(V).as_dict() == {2: 1, 0: 1}
    W = SeifertMatrix(((-1, 1), (0, 1)), loops)
    assert conway_from_seifert(W).as_dict() == {2: -1, 0: 1}


def test_alexander_values():
    trefoil = seifert_matrix(build_surface(parse_word("1 1 1")))
    assert alexander_from_seifert(trefoil).as_dict() == {2: 1, 0: -1, -2: 1}
    hopf = seifert_matrix(build_surface(parse_word("1 1")))
    assert equal_up_to_unit(
        alexander_from_seifert(hopf),
        LaurentPolynomial.from_dict({1: 1, -1: -1}, scale=2))
    empty = seifert_matrix(build_surface(BraidWord(1, ())))
    assert alexander_from_seifert(empty).as_dict() == {0: 1}


def test_alexander_sign_rule():
    # knots evaluate positive at t = 1
    for text in ["1 1 1", "1 -2 1 -2", "-1 -1 -1"]:
        p = alexander_from_seifert(
            seifert_matrix(build_surface(parse_word(text))))
        assert sum(p.as_dict().values()) > 0
    # even-component links vanish at t = 1; the leading coefficient decides
    wh = alexander_from_seifert(
        seifert_matrix(build_surface(parse_word("1 1 -2 1 -2"))))
    d = wh.as_dict()
    assert sum(d.values()) == 0
    assert d[max(d)] > 0


@given(homogeneous_connected(max_n=4, max_m=7))
@settings(max_examples=120, deadline=None)
def test_surface_route_matches_skein(w):
    assert surface_conway(w) == conway_skein(w)


@given(homogeneous_connected(max_n=4, max_m=7))
@settings(max_examples=100, deadline=None)
def test_intersection_form_is_unimodular_for_knots(w):
    if component_count(w) != 1:
        return
    J = seifert_matrix(build_surface(w)).intersection_form()
    d = det([[{0: v} if v else {} for v in row] for row in J])
    assert d == {0: 1}


@given(homogeneous_connected(max_n=4, max_m=7))
@settings(max_examples=100, deadline=None)
def test_alexander_palindromic(w):
    p = alexander_from_seifert(seifert_matrix(build_surface(w)))
    flipped = p.mirror()
    c = component_count(w)
    if c % 2:
        assert flipped == p
    else:
        assert flipped.as_dict() == {e: -v for e, v in p.as_dict().items()}


def test_basis_loop_count_matches_first_homology():
    for text in ["1 1 1", "1 1 2 2", "1 -2 1 -2 3 3"]:
        s = build_surface(parse_word(text))
        assert len(s.basis_loops) == 1 - s.euler_characteristic

import pytest

from ehrhart_delta.constructions import (
    is_empty_simplex,
    is_spanning,
    iterated_pyramid,
    lattice_pyramid,
    paper_example,
    polytope_index,
    standard_simplex,
)
from ehrhart_delta.ehrhart import delta_vector, normalized_volume
from ehrhart_delta.lattice import LatticePolytope
from ehrhart_delta.search import enumerate_hnf_simplices

EMPTY5 = LatticePolytope.from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 5)])


def test_pyramid_of_segment_is_standard_triangle():
    tri = lattice_pyramid(standard_simplex(1))
    assert set(tri.vertices) == set(standard_simplex(2).vertices)
    assert delta_vector(tri).entries == (1, 0, 0)


def test_pyramid_vertices():
    pyr = lattice_pyramid(paper_example(1))
    assert pyr.ambient_dim == 3
    assert pyr.vertices == ((0, 0, 0), (1, 0, 0), (0, 1, 0), (2, 3, 0), (0, 0, 1))


def test_pyramids_of_p1():
    p1 = paper_example(1)
    assert delta_vector(lattice_pyramid(p1)).entries == (1, 3, 1, 0)
    assert delta_vector(iterated_pyramid(p1, 2)).entries == (1, 3, 1, 0, 0)


@pytest.mark.parametrize(("k", "dim", "nverts", "delta"), [
    (1, 2, 4, (1, 3, 1)),
    (2, 3, 5, (1, 1, 3, 0)),
    (3, 5, 7, (1, 1, 1, 2, 0, 0)),
])
def test_paper_examples(k, dim, nverts, delta):
    poly = paper_example(k)
    assert poly.ambient_dim == dim and len(poly.vertices) == nverts
    assert delta_vector(poly).entries == delta


def test_paper_example_range():
    with pytest.raises(ValueError):
        paper_example(4)


def test_empty_simplex():
    assert is_empty_simplex(standard_simplex(3))
    assert is_empty_simplex(EMPTY5)
    assert not is_empty_simplex(paper_example(1))


def test_spanning():
    assert is_spanning(paper_example(1))
    assert not is_spanning(EMPTY5)
    assert polytope_index(EMPTY5) == 5
    assert is_spanning(standard_simplex(3))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_standard_simplex(d):
    s = standard_simplex(d)
    assert s.is_simplex
    assert delta_vector(s).entries == (1,) + (0,) * d
    assert normalized_volume(s) == 1


def _pyramid_corpus():
    yield from (paper_example(1), paper_example(2), standard_simplex(2))
    yield from enumerate_hnf_simplices(2, 3)
    yield from enumerate_hnf_simplices(3, 2)


@pytest.mark.parametrize("poly", list(_pyramid_corpus()), ids=repr)
def test_pyramid_preserves_delta(poly):
    base = delta_vector(poly)
    for k in (1, 2, 3):
        if poly.ambient_dim + k > 6:
            break
        lifted = delta_vector(iterated_pyramid(poly, k))
        assert lifted.nonzero_prefix() == base.nonzero_prefix()
        assert lifted == base.padded(poly.ambient_dim + k)


def test_index_divides_volume_of_hnf_simplices():
    for n in (4, 6):
        for s in enumerate_hnf_simplices(3, n):
            assert n % polytope_index(s) == 0

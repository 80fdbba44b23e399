from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from minkcount.errors import NotFullDimensional, TooFewVertices
from minkcount.generators import random_polytope
from minkcount.polytope import (euler_characteristic, facet_enum, facet_scan, f_vector,
                                normalize, support_face)
from oracles import dd_f_vector, dd_vertices

CUBE = list(product([0, 1], repeat=3))


def facet_key(P):
    return sorted((f.normal, f.offset, sorted(f.vertices)) for f in P.facets)


def test_cube():
    P = normalize(CUBE)
    assert P.n == 8
    assert f_vector(P) == (8, 12, 6)
    assert facet_key(P) == sorted((f.normal, f.offset, sorted(f.vertices))
                                  for f in facet_scan(P))


def test_simplex_4d():
    pts = [[0] * 4] + [[int(i == j) for j in range(4)] for i in range(4)]
    assert f_vector(normalize(pts)) == (5, 10, 10, 5)


def test_interior_point_dropped():
    P = normalize([(0, 0), (4, 0), (0, 4), (1, 1)])
    assert P.n == 3 and P.f_vector == (3, 3)


def test_lower_dimensional():
    seg = normalize([(0, 0, 0), (1, 2, 3), (2, 4, 6)], full=False)
    assert seg.affine_dim == 1 and seg.f_vector == (2,)
    assert seg.vertices == ((0, 0, 0), (2, 4, 6))
    sq = normalize([(0, 0, 1, 0), (1, 0, 1, 0), (0, 1, 1, 0), (1, 1, 1, 0)], full=False)
    assert sq.f_vector == (4, 4)
    with pytest.raises(NotFullDimensional):
        normalize([(0, 0), (1, 1)])
    with pytest.raises(TooFewVertices):
        normalize([(1, 1), (1, 1)])


def test_support_face_examples():
    P = normalize(CUBE)
    assert [P.vertices[i] for i in support_face(P, (1, 1, 1))] == [(1, 1, 1)]
    assert len(support_face(P, (0, 0, 1))) == 4
    assert support_face(P, (Fraction(1, 2), 0, 0)) == support_face(P, (3, 0, 0))
    with pytest.raises(ValueError):
        support_face(P, (0, 0, 0))
    with pytest.raises(ValueError):
        support_face(P, (1, 0))


def test_normalize_is_canonical():
    a = normalize(CUBE)
    b = normalize(list(reversed(CUBE)) + [(Fraction(1, 2),) * 3])
    assert a == b and facet_key(a) == facet_key(b)


point_sets = st.integers(2, 4).flatmap(lambda d: st.lists(
    st.tuples(*[st.integers(-5, 5)] * d), min_size=d + 1, max_size=9, unique=True))


@given(point_sets)
def test_against_double_description(pts):
    try:
        P = normalize(pts)
    except NotFullDimensional:
        return
    assert set(P.vertices) == dd_vertices(pts)
    assert P.f_vector == dd_f_vector([list(v) for v in P.vertices])


@given(point_sets)
def test_euler_and_facet_scan(pts):
    try:
        P = normalize(pts)
    except NotFullDimensional:
        return
    assert euler_characteristic(P.f_vector) == 1 + (-1) ** (P.dim - 1)
    assert facet_key(P) == sorted((f.normal, f.offset, sorted(f.vertices))
                                  for f in facet_scan(P))


@given(st.integers(2, 4), st.integers(0, 10 ** 6))
def test_interior_normal_selects_face(d, seed):
    P = random_polytope(d, d + 3, seed)
    for e in P.face_lattice:
        assert support_face(P, P.interior_normal(e)) == e.vertex_set


@given(st.integers(2, 4), st.integers(0, 10 ** 6))
def test_lattice_links(d, seed):
    P = random_polytope(d, d + 2, seed)
    L = P.face_lattice
    for i, e in enumerate(L):
        for c in e.children:
            assert set(L[c].vertex_set) < set(e.vertex_set)
            assert L[c].face_dim == e.face_dim - 1
            assert i in L[c].parents
    assert len(facet_enum(P)) == P.f_vector[-1]

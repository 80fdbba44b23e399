from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

from minkcount.errors import ClaimViolation
from minkcount.generators import GenSpec, generate, random_polygons, random_segments
from minkcount.minkowski import (SumInstance, decompose_face, first_inexact_face,
                                 is_general_orientation, lemma1_check, minkowski_sum,
                                 partial_sum)
from minkcount.polytope import normalize
from oracles import brute_sum_points, dd_vertices

SEG_X = normalize([(0, 0), (1, 0)], full=False)
SEG_Y = normalize([(0, 0), (0, 1)], full=False)
CUBE = list(product([0, 1], repeat=3))


def square():
    inst = SumInstance((SEG_X, SEG_Y))
    return inst, minkowski_sum(inst)


def face_with(P, verts):
    idx = tuple(sorted(P.vertices.index(v) for v in verts))
    return next(e for e in P.face_lattice if e.vertex_set == idx)


def test_square_sum():
    inst, P = square()
    assert P.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert P.f_vector == (4, 4)
    assert is_general_orientation(inst)


def test_square_decompositions():
    inst, P = square()
    top = decompose_face(inst, P, face_with(P, [(0, 1), (1, 1)]), check=True)
    assert top.parts == ((0, 1), (1,)) and top.support == (0,) and top.exact
    corner = decompose_face(inst, P, face_with(P, [(1, 1)]), check=True)
    assert corner.parts == ((1,), (1,)) and corner.support == ()


def test_translated_cubes_are_not_general():
    a = normalize(CUBE)
    b = normalize([(x + 2, y, z) for x, y, z in CUBE])
    inst = SumInstance((a, b))
    assert not is_general_orientation(inst)
    bad = first_inexact_face(inst)
    assert bad.face.face_dim < sum(
        P.subset_dim(sum(1 << i for i in part)) for P, part in zip(inst.summands, bad.parts))


def test_segments_make_a_cube():
    inst = SumInstance(tuple(normalize([(0, 0, 0), v], full=False)
                             for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    total = minkowski_sum(inst)
    assert total.f_vector == (8, 12, 6)
    for e in total.face_lattice:
        if e.face_dim == 2:
            dec = decompose_face(inst, total, e)
            assert len(dec.support) == 2
            assert lemma1_check(inst, e, dec.support)
            for i in dec.support:
                assert lemma1_check(inst, e, [i]) is False


def test_two_triangles_hexagon():
    inst = random_polygons(2, (3, 3), seed=4)
    total = minkowski_sum(inst)
    assert total.n == 6
    for e in total.face_lattice:
        if e.face_dim == 1:
            dec = decompose_face(inst, total, e, check=True)
            assert len(dec.support) == 1


def test_partial_sum_edge_cases():
    inst = generate(GenSpec(3, 3, (4,), seed=2))
    assert partial_sum(inst, [1]) == inst.summands[1]
    assert partial_sum(inst, range(3)) is minkowski_sum(inst)
    with pytest.raises(ValueError):
        partial_sum(inst, [])
    with pytest.raises(ValueError):
        partial_sum(inst, [3])


@given(st.integers(2, 3), st.integers(2, 3), st.integers(0, 10 ** 6))
def test_sum_matches_brute_force(d, r, seed):
    inst = generate(GenSpec(d, r, (d + 1,), seed=seed, make_general=False))
    total = minkowski_sum(inst)
    assert set(total.vertices) == dd_vertices(brute_sum_points(inst.summands))


@given(st.integers(2, 3), st.integers(2, 4), st.integers(0, 10 ** 6))
def test_provenance(d, r, seed):
    inst = generate(GenSpec(d, r, (d + 2,), seed=seed, make_general=False))
    total = minkowski_sum(inst)
    for v, tags in zip(total.vertices, total.provenance):
        assert v == tuple(sum(c) for c in zip(*[P.vertices[t] for P, t in
                                                zip(inst.summands, tags)]))


@given(st.integers(0, 10 ** 6))
def test_decomposition_properties(seed):
    inst = generate(GenSpec(3, 3, (4,), seed=seed))
    total = minkowski_sum(inst)
    for e in total.face_lattice:
        dec = decompose_face(inst, total, e, check=True)
        assert dec.exact
        # the sum of the parts is the face
        pts = {tuple(sum(c) for c in zip(*[P.vertices[i] for P, i in zip(inst.summands, combo)]))
               for combo in product(*dec.parts)}
        assert set(total.vertices[i] for i in e.vertex_set) <= pts
        # support shrinks with the face
        for c in e.children:
            child = decompose_face(inst, total, total.face_lattice[c])
            assert set(child.support) <= set(dec.support)


@given(st.integers(0, 10 ** 6))
def test_facet_normal_in_partial_map_iff_support_inside(seed):
    inst = generate(GenSpec(3, 3, (4,), seed=seed))
    total = minkowski_sum(inst)
    for e in total.face_lattice:
        if e.face_dim == 2:
            for j in (1, 2, 3):
                for S in combinations(range(3), j):
                    lemma1_check(inst, e, S)


def test_facet_normal_check_rejects_non_facets():
    inst = random_segments(3, 3, seed=0)
    total = minkowski_sum(inst)
    edge = next(e for e in total.face_lattice if e.face_dim == 1)
    with pytest.raises(ValueError):
        lemma1_check(inst, edge, [0])
    assert issubclass(ClaimViolation, AssertionError)

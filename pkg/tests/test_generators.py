from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from minkcount.errors import ExtremalSearchFailed
from minkcount.exact import identity, int_rank, mat_mul, transpose
from minkcount.generators import (GenSpec, cayley_rotation, extremal_family, generate,
                                  make_general, ortho_polygons, random_polytope,
                                  random_segments)
from minkcount.minkowski import SumInstance, is_general_orientation, minkowski_sum, partial_sum
from minkcount.polytope import normalize


def test_cayley_quarter_turn():
    assert cayley_rotation(2, [1]) == ((0, -1), (1, 0))


@given(st.integers(2, 5), st.integers(0, 10 ** 6))
def test_cayley_is_orthogonal(d, seed):
    Q = cayley_rotation(d, seed=seed)
    assert mat_mul(transpose(Q), Q) == identity(d)
    assert all(isinstance(x, Fraction) for row in Q for x in row)


def test_cayley_param_count():
    with pytest.raises(ValueError):
        cayley_rotation(3, [1, 2])


@pytest.mark.parametrize("d,n", [(3, 6), (4, 6), (2, 5)])
def test_random_polytope_vertex_count(d, n):
    P = random_polytope(d, n, seed=1)
    assert P.n == n and P.full


@given(st.sampled_from(["random", "segments", "cyclic"]), st.integers(0, 10 ** 6))
def test_generation_is_deterministic(family, seed):
    spec = GenSpec(3, 3, (5,), family=family, seed=seed)
    assert generate(spec).summands == generate(spec).summands


@given(st.integers(0, 10 ** 6))
def test_make_general_output_passes(seed):
    inst = generate(GenSpec(3, 2, (5, 6), seed=seed))
    assert is_general_orientation(inst)


def test_make_general_fixes_cubes():
    cube = normalize([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    inst = SumInstance((cube, cube))
    assert not is_general_orientation(inst)
    assert is_general_orientation(make_general(inst, seed=0))


@pytest.mark.parametrize("d,r,n", [(4, 2, 3), (4, 2, 5), (6, 3, 3)])
def test_ortho_polygons_trivial_bound(d, r, n):
    assert minkowski_sum(ortho_polygons(d, r, n)).n == n ** r


def test_ortho_polygons_precondition():
    with pytest.raises(ValueError):
        ortho_polygons(3, 2, 4)


@given(st.integers(2, 4), st.integers(2, 6), st.integers(0, 10 ** 6))
def test_segments_general_position(d, r, seed):
    inst = random_segments(d, r, seed)
    dirs = [tuple(a - b for a, b in zip(P.vertices[1], P.vertices[0])) for P in inst.summands]
    k = min(d, r)
    assert all(int_rank([dirs[i] for i in S]) == k for S in combinations(range(r), k))


def test_extremal_family_triangles():
    inst = extremal_family(3, 3, 3, seed=0)
    for S in combinations(range(3), 2):
        assert partial_sum(inst, S).n == 9
    assert is_general_orientation(inst)


def test_extremal_failure_is_an_outcome():
    with pytest.raises(ExtremalSearchFailed):
        extremal_family(3, 3, 4, seed=0, budget=5)


def test_genspec_validation():
    with pytest.raises(ValueError):
        GenSpec(3, 3, family="nope")
    with pytest.raises(ValueError):
        GenSpec(3, 3, (4, 4)).counts()
    assert GenSpec(3, 2).counts() == (4, 4)
    assert GenSpec(3, 2, (5,)).to_dict() == {"d": 3, "r": 2, "n": [5, 5],
                                              "family": "random", "seed": 0}

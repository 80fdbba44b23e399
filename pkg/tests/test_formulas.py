from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from minkcount.errors import GeneralOrientationRequired, NotFullDimensional
from minkcount.formulas import (alpha, binomial, corollary_bound, exact_count_even_d,
                                lemma6_sum, theorem1_rhs, verify_theorem1, vertex_bounds)
from minkcount.generators import GenSpec, generate, random_polygons, random_segments
from minkcount.minkowski import SumInstance, minkowski_sum, partial_sum
from minkcount.polytope import normalize
from oracles import brute_sum_points, dd_vertices


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(3, -1) == 0
    assert binomial(0, 0) == 1
    assert binomial(2, 5) == 0


@pytest.mark.parametrize("s,d,r", [(1, 3, 5), (2, 3, 3), (2, 4, 6)])
def test_alternating_sum_examples(s, d, r):
    assert lemma6_sum(s, d, r) == 1


def test_alternating_sum_terms():
    # term by term, j = 1 .. d-1
    def terms(s, d, r):
        return [(-1) ** (d - 1 - j) * binomial(r - 1 - j, d - 1 - j) * binomial(r - s, j - s)
                for j in range(1, d)]
    assert terms(1, 3, 5) == [-3, 4]
    assert terms(2, 3, 3) == [0, 1]
    assert terms(2, 4, 6) == [0, -3, 4]


def test_alternating_sum_exhaustive_and_telescoping():
    for r in range(2, 13):
        for d in range(2, r + 1):
            for s in range(1, d):
                assert lemma6_sum(s, d, r) == 1
                if r < 12:
                    assert lemma6_sum(s, d, r + 1) - lemma6_sum(s, d, r) == 0


@pytest.mark.parametrize("args", [(0, 3, 4), (3, 3, 4), (1, 5, 4)])
def test_alternating_sum_preconditions(args):
    with pytest.raises(ValueError):
        lemma6_sum(*args)


def test_alpha():
    assert [alpha(d, k) for d in (2, 3, 4, 5) for k in (0, 1)] == [0, 0, 2, 0, 0, 0, 2, 0]


def test_rhs_segments_hand_computed():
    per = {(0,): 2, (1,): 2, (2,): 2, (0, 1): 4, (0, 2): 4, (1, 2): 4}
    assert theorem1_rhs(per, 3, 3, 0) == 8
    del per[(1, 2)]
    with pytest.raises(KeyError):
        theorem1_rhs(per, 3, 3, 0)


def test_three_polygons_twelve():
    inst = random_polygons(3, (3, 4, 5), seed=1)
    assert set(minkowski_sum(inst).vertices) == dd_vertices(brute_sum_points(inst.summands))
    rep = verify_theorem1(inst, 0)
    assert rep.lhs == rep.rhs == 12


def test_segments_relation():
    inst = SumInstance(tuple(normalize([(0, 0, 0), v], full=False)
                             for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    rep = verify_theorem1(inst, 0)
    assert (rep.lhs, rep.rhs, rep.equal, rep.alpha) == (8, 8, True, 2)
    assert corollary_bound(inst, 0) == 12
    with pytest.raises(NotFullDimensional):
        verify_theorem1(inst, 2)


def test_requires_general_orientation():
    cube = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    inst = SumInstance(tuple(normalize(cube) for _ in range(3)))
    with pytest.raises(GeneralOrientationRequired):
        verify_theorem1(inst, 0)


def test_rejects_too_few_summands():
    inst = generate(GenSpec(3, 2, (4,), seed=0))
    with pytest.raises(ValueError):
        verify_theorem1(inst, 0)


def test_four_tetrahedra_vertices():
    inst = generate(GenSpec(3, 4, (4,), seed=11))
    f0 = {S: partial_sum(inst, S).n for j in (1, 2) for S in combinations(range(4), j)}
    by_hand = (sum(f0[S] - 2 for S in combinations(range(4), 2))
               - 2 * sum(f0[(i,)] - 2 for i in range(4)) + 2)
    assert minkowski_sum(inst).n == by_hand == verify_theorem1(inst, 0).rhs


@given(st.integers(3, 5), st.integers(0, 10 ** 6))
def test_relation_d3(r, seed):
    inst = generate(GenSpec(3, r, (4, 5, 6, 4, 5)[:r], seed=seed))
    for k in range(3):
        rep = verify_theorem1(inst, k, strict=True)
        assert rep.recompute_rhs() == rep.rhs
        assert corollary_bound(inst, k) >= rep.lhs


@given(st.integers(2, 6), st.integers(0, 10 ** 6))
def test_relation_d2(r, seed):
    inst = generate(GenSpec(2, r, tuple(3 + (seed + i) % 4 for i in range(r)), seed=seed))
    assert minkowski_sum(inst).f_vector[0] == sum(P.n for P in inst.summands)
    for k in range(2):
        assert verify_theorem1(inst, k).equal


@given(st.integers(3, 5), st.integers(0, 10 ** 6))
def test_zonotope_vertices(r, seed):
    inst = random_segments(3, r, seed)
    rep = verify_theorem1(inst, 0, strict=True)
    assert rep.lhs == 2 * sum(binomial(r - 1, k) for k in range(3))


def test_vertex_bounds_examples():
    vb = vertex_bounds(3, 3, [4, 4, 4])
    assert (vb.product_bound, vb.choose_total, vb.choose_each) == (48, 66, 48)
    vb = vertex_bounds(3, 4, [4] * 4)
    assert (vb.product_bound, vb.choose_total) == (96, 120)
    with pytest.raises(ValueError):
        vertex_bounds(4, 3, [4] * 3)


@given(st.integers(2, 5).flatmap(lambda d: st.tuples(
    st.just(d), st.lists(st.integers(1, 30), min_size=d, max_size=d + 3))))
def test_product_bound_below_choose(args):
    d, counts = args
    vb = vertex_bounds(d, len(counts), counts)
    assert vb.product_bound <= vb.choose_total
    assert vb.product_bound <= vb.choose_each


def test_exact_count_even_d():
    assert exact_count_even_d(2, 3, 5) == 15
    assert exact_count_even_d(2, 4, 3) == 12
    assert exact_count_even_d(4, 4, 2) == 16
    n = 7
    assert exact_count_even_d(4, 4, n) == 4 * n ** 3 - 6 * n ** 2 + 4 * n
    with pytest.raises(ValueError):
        exact_count_even_d(3, 4, 2)


@given(st.integers(2, 6), st.integers(3, 9))
def test_exact_count_d2_is_rn(r, n):
    assert exact_count_even_d(2, r, n) == r * n


def test_report_dict_labels_are_one_based():
    inst = generate(GenSpec(3, 3, (4,), seed=3))
    d = verify_theorem1(inst, 1).to_dict()
    assert set(d["per_subset"]) == {"1", "2", "3", "1,2", "1,3", "2,3"}

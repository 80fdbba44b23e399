"""Face-count relation for sums of many polytopes, the bound by (d-1)-subset
sums and the vertex-count bounds."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, prod
from typing import Mapping, Sequence

from .errors import ClaimViolation, GeneralOrientationRequired, NotFullDimensional
from .minkowski import SumInstance, first_inexact_face, minkowski_sum, partial_sum

__all__ = [
    "binomial",
    "lemma6_sum",
    "alpha",
    "theorem1_coefficient",
    "theorem1_rhs",
    "RelationReport",
    "verify_theorem1",
    "corollary_bound",
    "VertexBounds",
    "vertex_bounds",
    "exact_count_even_d",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def lemma6_sum(s: int, d: int, r: int) -> int:
    """sum_{j=1}^{d-1} (-1)^(d-1-j) C(r-1-j, d-1-j) C(r-s, j-s); always 1."""
    if not 1 <= s < d <= r:
        raise ValueError(f"need 1 <= s < d <= r, got s={s}, d={d}, r={r}")
    return sum((-1) ** (d - 1 - j) * binomial(r - 1 - j, d - 1 - j) * binomial(r - s, j - s)
               for j in range(1, d))


def alpha(d: int, k: int) -> int:
    return 2 if k == 0 and d % 2 == 1 else 0


def theorem1_coefficient(d: int, r: int, j: int) -> int:
    return (-1) ** (d - 1 - j) * binomial(r - 1 - j, d - 1 - j)


def theorem1_rhs(per_subset: Mapping[tuple[int, ...], int], d: int, r: int, k: int) -> int:
    """Predicted f_k of the full sum from f_k of partial sums with |S| < d.

    ``per_subset`` maps sorted 0-based index tuples to f_k(P_S).
    """
    if r < d:
        raise ValueError(f"the relation needs r >= d (r={r}, d={d})")
    a = alpha(d, k)
    total = a
    for j in range(1, d):
        inner = 0
        for S in combinations(range(r), j):
            if S not in per_subset:
                raise KeyError(f"missing f_k for subset {S}")
            inner += per_subset[S] - a
        total += theorem1_coefficient(d, r, j) * inner
    return total


@dataclass
class RelationReport:
    d: int
    r: int
    k: int
    alpha: int
    lhs: int
    rhs: int
    per_subset: dict[tuple[int, ...], int] = field(repr=False)
    equal: bool

    def recompute_rhs(self) -> int:
        return theorem1_rhs(self.per_subset, self.d, self.r, self.k)

    def to_dict(self) -> dict:
        return {
            "d": self.d, "r": self.r, "k": self.k, "alpha": self.alpha,
            "lhs": self.lhs, "rhs": self.rhs, "equal": self.equal,
            # summands are labelled 1..r in reports
            "per_subset": {",".join(str(i + 1) for i in S): v
                           for S, v in sorted(self.per_subset.items(),
                                              key=lambda kv: (len(kv[0]), kv[0]))},
        }


def _fk(P, k: int, full_needed: bool) -> int:
    if full_needed and not P.full:
        raise NotFullDimensional(
            f"f_{k} of a {P.affine_dim}-dimensional partial sum in R^{P.dim} is not "
            "covered by the relation; only k = 0 is checked for such summands")
    fv = P.f_vector
    return fv[k] if k < len(fv) else 0


def _require(inst: SumInstance, k: int, check_orientation: bool):
    d, r = inst.d, inst.r
    if r < d:
        raise ValueError(f"the relation needs r >= d (r={r}, d={d})")
    if not 0 <= k < d:
        raise ValueError(f"k must lie in 0..{d - 1}")
    if not minkowski_sum(inst).full:
        raise NotFullDimensional("the full sum is not full-dimensional")
    if check_orientation:
        bad = first_inexact_face(inst)
        if bad is not None:
            raise GeneralOrientationRequired(
                f"face {bad.face.vertex_set} of the sum decomposes inexactly", bad)


def verify_theorem1(inst: SumInstance, k: int, *, check_orientation: bool = True,
                    strict: bool = False) -> RelationReport:
    """Compare f_k of the full sum with the partial-sum prediction.

    For k >= 1 every partial sum queried must be full-dimensional. With
    ``strict`` an unequal result raises :class:`ClaimViolation`.
    """
    _require(inst, k, check_orientation)
    d, r = inst.d, inst.r
    lhs = _fk(minkowski_sum(inst), k, k > 0)
    per = {S: _fk(partial_sum(inst, S), k, k > 0)
           for j in range(1, d) for S in combinations(range(r), j)}
    rhs = theorem1_rhs(per, d, r, k)
    rep = RelationReport(d=d, r=r, k=k, alpha=alpha(d, k), lhs=lhs, rhs=rhs,
                         per_subset=per, equal=lhs == rhs)
    if strict and not rep.equal:
        raise ClaimViolation(f"f_{k}: direct {lhs} != predicted {rhs}")
    return rep


def corollary_bound(inst: SumInstance, k: int, *, check_orientation: bool = True) -> int:
    """sum of f_k(P_S) over (d-1)-subsets; raises if the full sum exceeds it."""
    _require(inst, k, check_orientation)
    d, r = inst.d, inst.r
    bound = sum(_fk(partial_sum(inst, S), k, k > 0) for S in combinations(range(r), d - 1))
    lhs = _fk(minkowski_sum(inst), k, k > 0)
    if lhs > bound:
        raise ClaimViolation(f"f_{k} = {lhs} exceeds the bound {bound}")
    return bound


@dataclass(frozen=True)
class VertexBounds:
    product_bound: int
    choose_total: int
    choose_each: int

    def to_dict(self) -> dict:
        return {"product_bound": self.product_bound,
                "choose_total": self.choose_total,
                "choose_each": self.choose_each}


def vertex_bounds(d: int, r: int, counts: Sequence[int]) -> VertexBounds:
    if r < d:
        raise ValueError(f"vertex bounds need r >= d (r={r}, d={d})")
    if len(counts) != r:
        raise ValueError(f"expected {r} vertex counts, got {len(counts)}")
    product_bound = sum(prod(counts[i] for i in S) for S in combinations(range(r), d - 1))
    out = VertexBounds(
        product_bound=product_bound,
        choose_total=binomial(sum(counts), d - 1),
        choose_each=binomial(r, d - 1) * max(counts) ** (d - 1),
    )
    if out.product_bound > out.choose_total:
        raise ClaimViolation(f"product bound {out.product_bound} exceeds "
                             f"C(n, d-1) = {out.choose_total}")
    return out


def exact_count_even_d(d: int, r: int, n: int) -> int:
    """Vertex count of the sum when every (d-1)-subset sum has n^(d-1) vertices."""
    if d % 2:
        raise ValueError("the closed form is stated for even d only")
    if r < d:
        raise ValueError(f"need r >= d (r={r}, d={d})")
    return sum(theorem1_coefficient(d, r, j) * binomial(r, j) * n ** j for j in range(1, d))

"""Minkowski sums with vertex provenance, face decomposition and supports."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import lcm
from typing import Iterable

from .errors import ClaimViolation, DegenerateCoincidence, NotFullDimensional
from .polytope import FaceLatticeEntry, Polytope, _from_int, extreme_indices

__all__ = [
    "SumInstance",
    "DecomposedFace",
    "sum_polytopes",
    "minkowski_sum",
    "partial_sum",
    "decompose_face",
    "first_inexact_face",
    "is_general_orientation",
    "lemma1_check",
]


@dataclass(frozen=True)
class SumInstance:
    summands: tuple[Polytope, ...]
    _sums: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if not self.summands:
            raise ValueError("a sum instance needs at least one summand")
        dims = {P.dim for P in self.summands}
        if len(dims) != 1:
            raise ValueError(f"summands live in different dimensions: {sorted(dims)}")

    @property
    def d(self) -> int:
        return self.summands[0].dim

    @property
    def r(self) -> int:
        return len(self.summands)


@dataclass(frozen=True)
class DecomposedFace:
    face: FaceLatticeEntry
    parts: tuple[tuple[int, ...], ...]   # per summand: vertex indices of S(P_i; l)
    support: tuple[int, ...]             # I_F, 0-based summand indices
    exact: bool
    normal: tuple[int, ...] = field(compare=False, default=())


def sum_polytopes(polys) -> Polytope:
    """Minkowski sum; each vertex carries its tuple of summand vertex indices.

    Summands are added one at a time, keeping only extreme points between
    steps; this yields the same vertex set as hulling all products at once.
    """
    polys = list(polys)
    d = polys[0].dim
    L = reduce(lcm, (c.denominator for P in polys for v in P.vertices for c in v), 1)
    ivs = [[tuple(int(c * L) for c in v) for v in P.vertices] for P in polys]
    current = [(p, (i,)) for i, p in enumerate(ivs[0])]
    for k in range(1, len(polys)):
        cand: dict[tuple, tuple] = {}
        clashes: set[tuple] = set()
        for a, ta in current:
            for j, b in enumerate(ivs[k]):
                pt = tuple(x + y for x, y in zip(a, b))
                if pt in cand:
                    clashes.add(pt)
                else:
                    cand[pt] = ta + (j,)
        pts = list(cand)
        keep = extreme_indices(pts)
        for i in keep:
            if pts[i] in clashes:
                raise DegenerateCoincidence(
                    f"extreme point {pts[i]} has two vertex decompositions")
        current = [(pts[i], cand[pts[i]]) for i in sorted(keep)]
    return _from_int([p for p, _ in current], L, d, full=False,
                     tags=[t for _, t in current])


def partial_sum(inst: SumInstance, S: Iterable[int]) -> Polytope:
    """P_S for a nonempty set of 0-based summand indices (cached)."""
    key = tuple(sorted(set(S)))
    if not key:
        raise ValueError("partial sum over the empty set")
    if key[0] < 0 or key[-1] >= inst.r:
        raise ValueError(f"summand index out of range in {key}")
    if key not in inst._sums:
        inst._sums[key] = sum_polytopes(inst.summands[i] for i in key)
    return inst._sums[key]


def minkowski_sum(inst: SumInstance) -> Polytope:
    return partial_sum(inst, range(inst.r))


def _decompose(inst, total, face, l):
    masks = [P.support_mask(l) for P in inst.summands]
    dims = [P.subset_dim(m) for P, m in zip(inst.summands, masks)]
    parts = tuple(tuple(i for i in range(P.n) if m >> i & 1)
                  for P, m in zip(inst.summands, masks))
    support = tuple(i for i, k in enumerate(dims) if k > 0)
    return DecomposedFace(face=face, parts=parts, support=support,
                          exact=face.face_dim == sum(dims), normal=tuple(l))


def decompose_face(inst: SumInstance, total: Polytope, face: FaceLatticeEntry,
                   l=None, check: bool = False) -> DecomposedFace:
    """Decompose a face of the sum into support faces of the summands.

    ``l`` defaults to the sum of the outward normals of the facets
    containing the face. With ``check``, a second interior direction
    (weights 1, 2, 3, ...) must give the same parts.
    """
    if not total.full:
        raise NotFullDimensional("face decomposition needs a full-dimensional sum")
    if l is None:
        l = total.interior_normal(face)
    out = _decompose(inst, total, face, l)
    if check:
        l2 = total.interior_normal(face, weights=range(1, len(face.facets) + 1))
        other = _decompose(inst, total, face, l2)
        if other.parts != out.parts:
            raise ClaimViolation(f"decomposition of face {face.vertex_set} "
                                 "depends on the chosen normal")
    return out


def first_inexact_face(inst: SumInstance) -> DecomposedFace | None:
    total = minkowski_sum(inst)
    for face in total.face_lattice:
        dec = decompose_face(inst, total, face)
        if not dec.exact:
            return dec
    return None


def is_general_orientation(inst: SumInstance) -> bool:
    """True iff every proper face of the sum decomposes exactly."""
    return first_inexact_face(inst) is None


def lemma1_check(inst: SumInstance, facet: FaceLatticeEntry, S: Iterable[int]) -> bool:
    """Is the normal of ``facet`` (a facet of the full sum) a facet normal of P_S?

    Raises :class:`ClaimViolation` if the answer differs from I_F <= S.
    """
    total = minkowski_sum(inst)
    if facet.face_dim != inst.d - 1:
        raise ValueError("lemma1_check expects a facet of the full sum")
    S = set(S)
    dec = decompose_face(inst, total, facet)
    PS = partial_sum(inst, S)
    l = dec.normal
    is_node = PS.subset_dim(PS.support_mask(l)) == inst.d - 1
    if is_node != set(dec.support).issubset(S):
        raise ClaimViolation(
            f"facet {facet.vertex_set}: node of G(P_S)={is_node} but "
            f"I_F={dec.support}, S={sorted(S)}")
    return is_node

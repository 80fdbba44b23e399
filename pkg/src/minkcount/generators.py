"""Seeded, deterministic instance generators.

Every random draw goes through ``_rng(seed, *stream)`` so the retry
counter is part of the seed stream and identical arguments give identical
instances.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ExtremalSearchFailed, GenerationFailed, MinkcountError
from .exact import identity, int_rank, mat_inv, mat_mul, mat_vec
from .minkowski import SumInstance, is_general_orientation, partial_sum
from .polytope import Polytope, normalize

__all__ = [
    "GenSpec",
    "FAMILIES",
    "cayley_rotation",
    "rotate",
    "random_polytope",
    "make_general",
    "ortho_polygons",
    "extremal_family",
    "random_segments",
    "random_polygons",
    "generate",
]

FAMILIES = ("random", "segments", "ortho-polygons", "extremal", "cyclic")
MAX_COORD = 10 ** 4


@dataclass(frozen=True)
class GenSpec:
    d: int
    r: int
    n: tuple[int, ...] = ()
    family: str = "random"
    seed: int = 0
    make_general: bool = True

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(self.n))
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if any(k < 2 for k in self.n):
            raise ValueError("every summand needs at least 2 vertices")

    def counts(self) -> tuple[int, ...]:
        if not self.n:
            return (self.d + 1,) * self.r
        if len(self.n) == 1:
            return self.n * self.r
        if len(self.n) != self.r:
            raise ValueError(f"got {len(self.n)} vertex counts for r={self.r}")
        return self.n

    def to_dict(self) -> dict:
        return {"d": self.d, "r": self.r, "n": list(self.counts()),
                "family": self.family, "seed": self.seed}


def _rng(seed: int, *stream: int) -> random.Random:
    key = seed
    for s in stream:
        key = key * 1_000_003 + s
    return random.Random(key)


def _skew(d, params):
    a = [[Fraction(0)] * d for _ in range(d)]
    it = iter(params)
    for i in range(d):
        for j in range(i + 1, d):
            x = Fraction(next(it))
            a[i][j], a[j][i] = x, -x
    return a


def cayley_rotation(d: int, params=None, seed: int = 0):
    """Rational rotation Q = (I - A)(I + A)^-1 for skew-symmetric A.

    ``params`` are the d(d-1)/2 entries above the diagonal of A, row by
    row; when omitted they are drawn from ``seed``.
    """
    k = d * (d - 1) // 2
    if params is not None and len(params) != k:
        raise ValueError(f"need {k} skew parameters for d={d}")
    for attempt in range(100):
        if params is not None and attempt == 0:
            p = list(params)
        else:
            rng = _rng(seed, 17, attempt)
            p = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(k)]
        A = _skew(d, p)
        I = identity(d)
        inv = mat_inv([[I[i][j] + A[i][j] for j in range(d)] for i in range(d)])
        if inv is not None:
            return mat_mul([[I[i][j] - A[i][j] for j in range(d)] for i in range(d)], inv)
    raise GenerationFailed("could not draw an invertible I + A")


def rotate(P: Polytope, Q) -> Polytope:
    return normalize([mat_vec(Q, v) for v in P.vertices], P.dim, full=P.full)


def _rand_point(rng, d):
    return [Fraction(rng.randint(-60, 60), rng.randint(1, 6)) for _ in range(d)]


def _sphere_point(rng, d):
    # inverse stereographic projection of a rational point keeps it rational
    t = [Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(d - 1)]
    q = sum(x * x for x in t)
    return [2 * x / (q + 1) for x in t] + [(q - 1) / (q + 1)]


def random_polytope(d: int, n: int, seed: int = 0, budget: int = 200) -> Polytope:
    """Full-dimensional polytope with exactly ``n`` vertices.

    Points are drawn from a box; if ``budget`` draws never leave all n in
    convex position, they are drawn on the unit sphere instead, where every
    distinct point is a vertex.
    """
    if n < d + 1:
        raise ValueError(f"a full-dimensional polytope in R^{d} needs n >= {d + 1}")
    for attempt in range(2 * budget):
        rng = _rng(seed, 1, attempt)
        draw = _rand_point if attempt < budget else _sphere_point
        pts = [draw(rng, d) for _ in range(n)]
        try:
            P = normalize(pts, d)
        except MinkcountError:
            continue
        if P.n == n:
            return P
    raise GenerationFailed(f"no {n}-vertex polytope in R^{d} within {2 * budget} draws")


def random_polygons(r: int, counts, seed: int = 0) -> SumInstance:
    """Random convex polygons in the plane (d = 2), not rotated."""
    return SumInstance(tuple(random_polytope(2, k, seed=seed * 101 + i)
                             for i, k in enumerate(counts)))


def make_general(inst: SumInstance, seed: int = 0, budget: int = 50) -> SumInstance:
    """Rotate summands independently until every face of the sum is exact.

    An instance that already passes is returned unchanged.
    """
    if is_general_orientation(inst):
        return inst
    for attempt in range(budget):
        rotated = tuple(rotate(P, cayley_rotation(inst.d, seed=seed * 7919 + attempt * 131 + i))
                        for i, P in enumerate(inst.summands))
        cand = SumInstance(rotated)
        if is_general_orientation(cand):
            return cand
    raise GenerationFailed(f"no general orientation found within {budget} rotations")


def _circle_points(n: int):
    """n distinct rational points on the unit circle."""
    pts = []
    for k in range(n):
        t = Fraction(2 * k - n + 1, n)  # distinct parameters in (-1, 1)
        den = 1 + t * t
        pts.append(((1 - t * t) / den, 2 * t / den))
    return pts


def ortho_polygons(d: int, r: int, n: int) -> SumInstance:
    """r n-gons in the pairwise orthogonal planes span(e_{2i-1}, e_{2i}).

    Summands are 2-dimensional; the sum is their Cartesian product.
    """
    if 2 * r > d:
        raise ValueError(f"ortho_polygons needs 2r <= d (d={d}, r={r})")
    if n < 3:
        raise ValueError("polygons need n >= 3")
    out = []
    for i in range(r):
        pts = []
        for x, y in _circle_points(n):
            v = [Fraction(0)] * d
            v[2 * i], v[2 * i + 1] = x, y
            pts.append(v)
        out.append(normalize(pts, d, full=False))
    return SumInstance(tuple(out))


def random_segments(d: int, r: int, seed: int = 0, budget: int = 200) -> SumInstance:
    """Segments [0, v_i] with any min(d, r) directions linearly independent."""
    k = min(d, r)
    for attempt in range(budget):
        rng = _rng(seed, 3, attempt)
        dirs = [[rng.randint(-9, 9) for _ in range(d)] for _ in range(r)]
        if all(int_rank([dirs[i] for i in S]) == k for S in combinations(range(r), k)):
            return SumInstance(tuple(normalize([[0] * d, v], d, full=False) for v in dirs))
    raise GenerationFailed("could not draw segments in general position")


def _moment_summand(rng, d, n):
    ts = sorted(rng.sample(range(-12, 13), n))
    pts = []
    for t in ts:
        p = [Fraction(t) ** (k + 1) / (4 ** k) for k in range(d)]
        p = [x + Fraction(rng.randint(-3, 3), 7) for x in p]
        pts.append(p)
    return pts


def extremal_family(d: int, r: int, n: int, seed: int = 0, budget: int = 200) -> SumInstance:
    """Search for r summands whose (d-1)-subset sums all have n^(d-1) vertices.

    Summands are n points near a moment curve, independently rotated. Only
    verified instances (every (d-1)-subset extremal, general orientation)
    are returned.
    """
    if d < 3 or n < 2 or r < d - 1:
        raise ValueError("extremal_family needs d >= 3, n >= 2, r >= d - 1")
    target = n ** (d - 1)
    full = n >= d + 1
    for attempt in range(budget):
        rng = _rng(seed, 5, attempt)
        summands = []
        try:
            for i in range(r):
                Q = cayley_rotation(d, seed=rng.randrange(1 << 30))
                P = normalize([mat_vec(Q, p) for p in _moment_summand(rng, d, n)], d, full=full)
                if P.n != n:
                    raise GenerationFailed("summand lost a vertex")
                summands.append(P)
            inst = SumInstance(tuple(summands))
            ok = all(partial_sum(inst, S).n == target
                     for S in combinations(range(r), d - 1))
            if ok and is_general_orientation(inst):
                return inst
        except GenerationFailed:
            continue
    raise ExtremalSearchFailed(
        f"no extremal instance for d={d}, r={r}, n={n} within {budget} attempts")


def _cyclic_polytope(d, n, shift):
    return normalize([[Fraction(t + shift) ** (k + 1) for k in range(d)]
                      for t in range(n)], d)


def generate(spec: GenSpec) -> SumInstance:
    """Instance for a :class:`GenSpec`; rotated into general orientation
    when ``spec.make_general`` and the summands are full-dimensional."""
    d, r, seed = spec.d, spec.r, spec.seed
    counts = spec.counts()
    if spec.family == "random":
        if d == 2:
            inst = random_polygons(r, counts, seed)
        else:
            inst = SumInstance(tuple(random_polytope(d, k, seed=seed * 101 + i)
                                     for i, k in enumerate(counts)))
    elif spec.family == "segments":
        inst = random_segments(d, r, seed)
    elif spec.family == "ortho-polygons":
        if len(set(counts)) != 1:
            raise ValueError("ortho-polygons uses one common n")
        return ortho_polygons(d, r, max(3, counts[0]))
    elif spec.family == "extremal":
        if len(set(counts)) != 1:
            raise ValueError("extremal family uses one common n")
        return extremal_family(d, r, counts[0], seed)
    else:  # cyclic
        inst = SumInstance(tuple(
            rotate(_cyclic_polytope(d, k, i), cayley_rotation(d, seed=seed * 101 + i))
            for i, k in enumerate(counts)))
    if spec.make_general and all(P.full for P in inst.summands):
        inst = make_general(inst, seed)
    return inst

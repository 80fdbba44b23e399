"""Gaussian maps of 3-polytopes as exact spherical cell complexes.

Nothing here touches the unit sphere itself: points of S^2 are rational
rays (primitive integer vectors), arcs are minor arcs between two rays and
regions are convex cones given by their boundary cycle of rays. All
predicates are signs of integer determinants and dot products.

West is the angular coordinate around a pole axis ``u``. With a basis
``e1, e2`` of the plane orthogonal to ``u``, a ray ``p`` has angle theta
where ``(cos theta, sin theta)`` is proportional to ``(e2.p, e1.p)``;
``p`` is west of ``q`` when theta(p) lies in [theta(q), theta(q) + pi].
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property, cmp_to_key
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ClaimViolation, NotFullDimensional, NotGeneralOrientation, PoleCell
from .exact import cross, det3, dot, primitive
from .minkowski import SumInstance
from .polytope import Polytope

__all__ = [
    "Cell",
    "GaussianMap3",
    "Poles",
    "WitnessCount",
    "gaussian_map",
    "overlay",
    "poles_valid",
    "choose_poles",
    "west_compare",
    "westernmost",
    "local_optima",
    "within_half_turn",
    "contains_pole",
    "count_witnesses",
    "MapFamily",
    "witness_membership",
    "witness_identity",
]

Ray = tuple  # tuple[int, int, int]


@dataclass(frozen=True, order=True)
class Cell:
    dim: int    # 0 node, 1 arc, 2 region
    index: int


def _neg(v):
    return tuple(-x for x in v)


def _on_open_arc(x, a, b, n=None) -> bool:
    """Is ray x strictly inside the minor arc from a to b?"""
    if n is None:
        n = cross(a, b)
    if det3(a, b, x) != 0:
        return False
    return dot(cross(a, x), n) > 0 and dot(cross(x, b), n) > 0


def _tangent(v, m):
    vv, vm = dot(v, v), dot(v, m)
    return tuple(vv * mi - vm * vi for mi, vi in zip(m, v))


def _ccw_sorted(v, nbrs, rays):
    """Neighbours of node ``v`` in counter-clockwise order seen from outside."""
    vr = rays[v]
    tang = {w: _tangent(vr, rays[w]) for w in nbrs}
    ref = tang[nbrs[0]]

    def half(t):
        s = det3(vr, ref, t)
        return 0 if s > 0 or (s == 0 and dot(ref, t) > 0) else 1

    def cmp(a, b):
        ha, hb = half(tang[a]), half(tang[b])
        if ha != hb:
            return ha - hb
        s = det3(vr, tang[a], tang[b])
        return -1 if s > 0 else (1 if s < 0 else 0)

    return sorted(nbrs, key=cmp_to_key(cmp))


def _trace_regions(rays, arcs):
    adj: dict[int, list[int]] = {i: [] for i in range(len(rays))}
    for a, b in arcs:
        adj[a].append(b)
        adj[b].append(a)
    order = {v: _ccw_sorted(v, nb, rays) for v, nb in adj.items() if nb}
    pos = {v: {w: k for k, w in enumerate(nb)} for v, nb in order.items()}
    seen = set()
    regions = []
    for a, b in arcs:
        for start in ((a, b), (b, a)):
            if start in seen:
                continue
            cyc = []
            u, v = start
            while (u, v) not in seen:
                seen.add((u, v))
                cyc.append(u)
                ring = order[v]
                w = ring[(pos[v][u] - 1) % len(ring)]
                u, v = v, w
            regions.append(_canon_cycle(cyc))
    return regions


def _canon_cycle(cyc):
    k = cyc.index(min(cyc))
    return tuple(cyc[k:] + cyc[:k])


@dataclass(eq=False)
class GaussianMap3:
    nodes: tuple[Ray, ...]
    arcs: tuple[tuple[int, int], ...]
    regions: tuple[tuple[int, ...], ...]   # counter-clockwise seen from outside
    summands: tuple[Polytope, ...]
    indices: tuple[int, ...]               # global summand labels, sorted
    _labels: dict = field(default_factory=dict, repr=False)

    @property
    def counts(self) -> tuple[int, int, int]:
        return len(self.nodes), len(self.arcs), len(self.regions)

    @cached_property
    def node_index(self) -> dict[Ray, int]:
        return {r: i for i, r in enumerate(self.nodes)}

    @cached_property
    def arc_index(self) -> dict[frozenset, int]:
        return {frozenset(a): i for i, a in enumerate(self.arcs)}

    def cells(self, dim: int | None = None) -> list[Cell]:
        sizes = self.counts
        dims = range(3) if dim is None else [dim]
        return [Cell(k, i) for k in dims for i in range(sizes[k])]

    def cell_nodes(self, cell: Cell) -> tuple[int, ...]:
        if cell.dim == 0:
            return (cell.index,)
        if cell.dim == 1:
            return self.arcs[cell.index]
        return self.regions[cell.index]

    def direction(self, cell: Cell) -> Ray:
        """A ray in the relative interior of the cell."""
        vs = [self.nodes[i] for i in self.cell_nodes(cell)]
        return tuple(sum(c) for c in zip(*vs))

    def label(self, cell: Cell) -> tuple[int, ...]:
        """Per-summand support face (vertex bitmask) for the cell's directions."""
        if cell not in self._labels:
            l = self.direction(cell)
            self._labels[cell] = tuple(P.support_mask(l) for P in self.summands)
        return self._labels[cell]

    def parts(self, cell: Cell) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(i for i in range(P.n) if m >> i & 1)
                     for P, m in zip(self.summands, self.label(cell)))

    def support(self, cell: Cell) -> tuple[int, ...]:
        """Global indices of summands contributing a positive-dimensional part."""
        return tuple(g for g, P, m in zip(self.indices, self.summands, self.label(cell))
                     if P.subset_dim(m) > 0)

    @cached_property
    def label_index(self) -> dict[tuple[int, ...], Cell]:
        return {self.label(c): c for c in self.cells()}

    def region_arcs(self, k: int) -> list[int]:
        cyc = self.regions[k]
        return [self.arc_index[frozenset((cyc[i], cyc[(i + 1) % len(cyc)]))]
                for i in range(len(cyc))]

    def to_dict(self) -> dict:
        return {
            "summands": [i + 1 for i in self.indices],
            "nodes": [list(r) for r in self.nodes],
            "arcs": [list(a) for a in self.arcs],
            "regions": [self.region_arcs(k) for k in range(len(self.regions))],
            "node_support": [[i + 1 for i in self.support(c)] for c in self.cells(0)],
        }


def _build(rays: Sequence[Ray], arcs, summands, indices) -> GaussianMap3:
    order = sorted(range(len(rays)), key=lambda i: rays[i])
    new = {old: k for k, old in enumerate(order)}
    nodes = tuple(rays[i] for i in order)
    arcs = tuple(sorted(tuple(sorted((new[a], new[b]))) for a, b in arcs))
    regions = tuple(sorted(_trace_regions(nodes, arcs)))
    gm = GaussianMap3(nodes=nodes, arcs=arcs, regions=regions,
                      summands=tuple(summands), indices=tuple(indices))
    n, a, f = gm.counts
    if n - a + f != 2:
        raise ClaimViolation(f"cell complex is not a sphere: {n} - {a} + {f} != 2")
    return gm


def gaussian_map(P: Polytope, index: int = 0) -> GaussianMap3:
    """Gaussian map of a full-dimensional 3-polytope.

    Nodes are outward facet normals, arcs join the two facets of each edge
    and regions are the normal cones of vertices.
    """
    if P.dim != 3:
        raise ValueError(f"Gaussian maps are implemented for d = 3, not d = {P.dim}")
    if not P.full:
        raise NotFullDimensional("Gaussian map of a lower-dimensional polytope")
    rays = [tuple(f.normal) for f in P.facets]
    arcs = [e.facets for e in P.face_lattice if e.face_dim == 1]
    if any(len(a) != 2 for a in arcs):
        raise ClaimViolation("an edge of a 3-polytope must lie on exactly two facets")
    return _build(rays, arcs, [P], [index])


def overlay(maps: Sequence[GaussianMap3]) -> GaussianMap3:
    """Common refinement of Gaussian maps of summands in general orientations.

    Raises :class:`NotGeneralOrientation` when a node of one map lies on a
    node or arc of another, arcs of different maps overlap, or three arcs
    pass through one point.
    """
    maps = sorted(maps, key=lambda m: m.indices)
    indices = [i for m in maps for i in m.indices]
    if len(set(indices)) != len(indices):
        raise ValueError("overlay of maps sharing a summand")

    rays: list[Ray] = []
    src: dict[Ray, int] = {}
    arcs = []  # (a_ray, b_ray, map)
    for k, m in enumerate(maps):
        for r in m.nodes:
            if r in src:
                raise NotGeneralOrientation(f"node {r} is shared by two maps")
            src[r] = k
            rays.append(r)
        for a, b in m.arcs:
            arcs.append((m.nodes[a], m.nodes[b], k))
    normals = [cross(a, b) for a, b, _ in arcs]

    for x, k in src.items():
        for (a, b, k2), n in zip(arcs, normals):
            if k2 != k and _on_open_arc(x, a, b, n):
                raise NotGeneralOrientation(f"node {x} lies on an arc of another map")

    cuts: dict[int, list[Ray]] = {i: [] for i in range(len(arcs))}
    crossings: dict[Ray, tuple[int, int]] = {}
    for i, j in combinations(range(len(arcs)), 2):
        (a1, b1, k1), (a2, b2, k2) = arcs[i], arcs[j]
        if k1 == k2:
            continue
        n1, n2 = normals[i], normals[j]
        c = cross(n1, n2)
        if not any(c):
            if (_on_open_arc(a2, a1, b1, n1) or _on_open_arc(b2, a1, b1, n1)
                    or _on_open_arc(a1, a2, b2, n2) or {a1, b1} == {a2, b2}):
                raise NotGeneralOrientation("two arcs of different maps overlap")
            continue
        c = primitive(c)
        for x in (c, _neg(c)):
            if _on_open_arc(x, a1, b1, n1) and _on_open_arc(x, a2, b2, n2):
                if x in crossings or x in src:
                    raise NotGeneralOrientation(f"three arcs meet at {x}")
                crossings[x] = (i, j)
                cuts[i].append(x)
                cuts[j].append(x)

    all_rays = rays + list(crossings)
    idx = {r: t for t, r in enumerate(all_rays)}
    pieces = []
    for i, (a, b, _) in enumerate(arcs):
        n = normals[i]
        inner = sorted(cuts[i], key=cmp_to_key(
            lambda x, y: -1 if dot(cross(x, y), n) > 0 else 1))
        chain = [a] + inner + [b]
        pieces.extend((idx[p], idx[q]) for p, q in zip(chain, chain[1:]))
    summands = [P for m in maps for P in m.summands]
    return _build(all_rays, pieces, summands, indices)


# -- poles and west ----------------------------------------------------------

@dataclass(frozen=True)
class Poles:
    axis: Ray
    e1: Ray
    e2: Ray

    @classmethod
    def from_axis(cls, u) -> "Poles":
        u = tuple(int(x) for x in u)
        if not any(u):
            raise ValueError("pole axis must be nonzero")
        e1 = (-u[1], u[0], 0) if (u[0] or u[1]) else (1, 0, 0)
        e2 = cross(u, e1)
        return cls(axis=u, e1=e1, e2=e2)

    def coords(self, p) -> tuple[int, int]:
        """(cos, sin) of the angle around the axis, up to a positive factor."""
        return dot(self.e2, p), dot(self.e1, p)


def poles_valid(gm: GaussianMap3, u) -> bool:
    """No arc's great circle passes through the pole axis."""
    if not any(u):
        return False
    return all(det3(gm.nodes[a], gm.nodes[b], u) != 0 for a, b in gm.arcs)


def choose_poles(gm: GaussianMap3, seed: int = 0, attempts: int = 1000) -> Poles:
    for t in range(attempts):
        rng = random.Random(seed + t)
        u = tuple(rng.randint(-50, 50) for _ in range(3))
        if poles_valid(gm, u):
            return Poles.from_axis(u)
    raise RuntimeError("no valid pole axis found")


def west_compare(p, q, poles: Poles) -> int:
    """+1 if p is west of q, -1 if q is west of p, 0 if their angles tie.

    When the angles differ by exactly half a turn both relations hold; the
    lexicographically smaller ray is then reported as the western one.
    """
    cp, cq = poles.coords(p), poles.coords(q)
    if cp == (0, 0) or cq == (0, 0):
        raise ValueError("west is undefined on the pole axis")
    s = cq[0] * cp[1] - cq[1] * cp[0]
    if s > 0:
        return 1
    if s < 0:
        return -1
    if cq[0] * cp[0] + cq[1] * cp[1] > 0:
        return 0
    return 1 if tuple(p) < tuple(q) else -1


def contains_pole(gm: GaussianMap3, cell: Cell, poles: Poles) -> bool:
    if cell.dim != 2:
        return False
    cyc = [gm.nodes[i] for i in gm.regions[cell.index]]
    pairs = list(zip(cyc, cyc[1:] + cyc[:1]))
    u = poles.axis
    return (all(det3(a, b, u) > 0 for a, b in pairs)
            or all(det3(a, b, _neg(u)) > 0 for a, b in pairs))


def westernmost(gm: GaussianMap3, cell: Cell, poles: Poles) -> int:
    """The unique node of the cell lying west of every other node."""
    if contains_pole(gm, cell, poles):
        raise PoleCell(f"region {cell.index} contains a pole")
    nodes = gm.cell_nodes(cell)
    best = nodes[0]
    for v in nodes[1:]:
        if west_compare(gm.nodes[v], gm.nodes[best], poles) > 0:
            best = v
    if any(west_compare(gm.nodes[best], gm.nodes[v], poles) <= 0
           for v in nodes if v != best):
        raise ClaimViolation(f"cell {cell} spans half a turn or more around the axis")
    return best


def local_optima(gm: GaussianMap3, cell: Cell, poles: Poles) -> list[int]:
    """Nodes of the cell that are west of their neighbours along its boundary."""
    nodes = gm.cell_nodes(cell)
    if cell.dim == 0:
        return list(nodes)
    if cell.dim == 1:
        a, b = nodes
        return [a] if west_compare(gm.nodes[a], gm.nodes[b], poles) > 0 else [b]
    k = len(nodes)
    return [nodes[i] for i in range(k)
            if west_compare(gm.nodes[nodes[i]], gm.nodes[nodes[i - 1]], poles) > 0
            and west_compare(gm.nodes[nodes[i]], gm.nodes[nodes[(i + 1) % k]], poles) > 0]


def within_half_turn(gm: GaussianMap3, cell: Cell, poles: Poles) -> bool:
    """Do the cell's nodes span strictly less than half a turn around the axis?

    True iff no two nodes sit exactly half a turn apart and one node is
    strictly west of all the others.
    """
    rays = [gm.nodes[i] for i in gm.cell_nodes(cell)]
    coords = [poles.coords(p) for p in rays]
    for (a, b), (c, e) in combinations(coords, 2):
        if a * e - b * c == 0 and a * c + b * e < 0:
            return False
    return any(all(west_compare(p, q, poles) > 0 for q in rays if q != p) for p in rays) \
        or len(rays) == 1


@dataclass
class WitnessCount:
    w: tuple[int, int, int]
    per_cell: dict[Cell, int]
    pole_cells: tuple[Cell, ...]


def count_witnesses(gm: GaussianMap3, poles: Poles) -> WitnessCount:
    """Western-most corner of every cell except the two pole regions."""
    per_cell = {}
    pole_cells = []
    w = [0, 0, 0]
    for c in gm.cells():
        if contains_pole(gm, c, poles):
            pole_cells.append(c)
            continue
        per_cell[c] = westernmost(gm, c, poles)
        w[c.dim] += 1
    if len(pole_cells) != 2:
        raise ClaimViolation(f"expected two pole regions, found {len(pole_cells)}")
    return WitnessCount(w=tuple(w), per_cell=per_cell, pole_cells=tuple(pole_cells))


# -- families of partial-sum maps ------------------------------------------

class MapFamily:
    """Gaussian maps of all partial sums of a 3-d instance, with shared poles."""

    def __init__(self, inst: SumInstance, seed: int = 0, poles: Poles | None = None):
        if inst.d != 3:
            raise ValueError("the witness machinery is implemented for d = 3")
        self.inst = inst
        self.singles = [gaussian_map(P, index=i) for i, P in enumerate(inst.summands)]
        self._overlays: dict[tuple[int, ...], GaussianMap3] = {}
        self.full = self.overlay(range(inst.r))
        self.poles = poles if poles is not None else choose_poles(self.full, seed)
        if not poles_valid(self.full, self.poles.axis):
            raise ValueError("pole axis lies on a great circle of the map")
        self._counts: dict[tuple[int, ...], WitnessCount] = {}

    def overlay(self, S: Iterable[int]) -> GaussianMap3:
        key = tuple(sorted(set(S)))
        if key not in self._overlays:
            self._overlays[key] = (self.singles[key[0]] if len(key) == 1
                                   else overlay([self.singles[i] for i in key]))
        return self._overlays[key]

    def witnesses(self, S: Iterable[int]) -> WitnessCount:
        key = tuple(sorted(set(S)))
        if key not in self._counts:
            self._counts[key] = count_witnesses(self.overlay(key), self.poles)
        return self._counts[key]


def witness_membership(fam: MapFamily, cell: Cell, S: Iterable[int], check: bool = True) -> bool:
    """Is the western-most corner of ``cell`` (a cell of the full overlay) also
    the western-most corner of a same-dimensional cell of the map of P_S?

    With ``check``, raises :class:`ClaimViolation` unless the answer equals
    I_F <= S, F being the facet underlying the corner's node.
    """
    S = tuple(sorted(set(S)))
    full = fam.full
    w = westernmost(full, cell, fam.poles)
    ray = full.nodes[w]
    sub = fam.overlay(S)
    result = False
    if ray in sub.node_index:
        pos = {g: k for k, g in enumerate(full.indices)}
        target = sub.label_index[tuple(full.label(cell)[pos[g]] for g in sub.indices)]
        if target.dim == cell.dim:
            try:
                result = westernmost(sub, target, fam.poles) == sub.node_index[ray]
            except PoleCell:
                result = False
    if check:
        expected = set(full.support(Cell(0, w))) <= set(S)
        if result != expected:
            raise ClaimViolation(
                f"corner of {cell} at node {ray}: membership {result} in S={S}, "
                f"support {full.support(Cell(0, w))}")
    return result


def witness_identity(fam: MapFamily) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """w_k of the full map, directly and from pair and single maps."""
    r = fam.inst.r
    direct = fam.witnesses(range(r)).w
    pairs = [fam.witnesses(S).w for S in combinations(range(r), 2)]
    singles = [fam.witnesses((i,)).w for i in range(r)]
    predicted = tuple(sum(p[k] for p in pairs) - (r - 2) * sum(s[k] for s in singles)
                      for k in range(3))
    return direct, predicted

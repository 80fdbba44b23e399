"""Exact incremental convex hull (beneath-beyond with conflict lists).

Works on distinct integer points spanning R^m. The boundary is kept as a
triangulation; a point is inserted only if it lies strictly beyond some
simplicial facet, so coplanar points never create spurious facets. At the
end simplices are merged by supporting hyperplane and non-extreme boundary
points are dropped.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .exact import affine_rank, int_rank, normal_of, primitive

__all__ = ["HullFacet", "Hull", "convex_hull"]


@dataclass(frozen=True)
class HullFacet:
    normal: tuple[int, ...]   # primitive, outward
    offset: int               # normal . x <= offset on the hull
    vertices: frozenset[int]  # indices (into the input) of incident extreme points


@dataclass(frozen=True)
class Hull:
    vertices: tuple[int, ...]
    facets: tuple[HullFacet, ...]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _initial_simplex(points):
    m = len(points[0])
    order = sorted(range(len(points)), key=lambda i: points[i])
    chosen = [order[0], order[-1]]
    p0 = points[chosen[0]]
    basis = [tuple(a - b for a, b in zip(points[chosen[1]], p0))]
    for i in order[1:-1]:
        if len(chosen) == m + 1:
            break
        row = tuple(a - b for a, b in zip(points[i], p0))
        if int_rank(basis + [row]) > len(basis):
            basis.append(row)
            chosen.append(i)
    if len(chosen) < m + 1:
        raise ValueError("points are not full-dimensional")
    return chosen


def _hull_1d(points):
    lo = min(range(len(points)), key=lambda i: points[i][0])
    hi = max(range(len(points)), key=lambda i: points[i][0])
    return Hull(
        vertices=tuple(sorted({lo, hi})),
        facets=(HullFacet((-1,), -points[lo][0], frozenset([lo])),
                HullFacet((1,), points[hi][0], frozenset([hi]))),
    )


def convex_hull(points, seed: int = 0) -> Hull:
    """Hull of distinct integer points that affinely span R^m.

    ``seed`` only fixes the insertion order; the result does not depend on it.
    """
    n = len(points)
    m = len(points[0])
    if n < m + 1 or affine_rank(points) < m:
        raise ValueError("points are not full-dimensional")
    if m == 1:
        return _hull_1d(points)

    simplex = _initial_simplex(points)
    centre = [sum(points[i][k] for i in simplex) for k in range(m)]
    scale = m + 1

    verts: dict[int, tuple[int, ...]] = {}
    normal: dict[int, tuple[int, ...]] = {}
    offset: dict[int, int] = {}
    conflicts: dict[int, set[int]] = {}
    ridges: dict[frozenset, list[int]] = {}
    pconf: dict[int, set[int]] = {}
    next_id = 0

    def make_facet(vs):
        nonlocal next_id
        p0 = points[vs[0]]
        rows = [tuple(a - b for a, b in zip(points[v], p0)) for v in vs[1:]]
        nv = normal_of(rows)
        off = _dot(nv, p0)
        if _dot(nv, centre) > off * scale:
            nv = tuple(-x for x in nv)
            off = -off
        f = next_id
        next_id += 1
        verts[f], normal[f], offset[f] = vs, nv, off
        conflicts[f] = set()
        for k in range(len(vs)):
            ridges.setdefault(frozenset(vs[:k] + vs[k + 1:]), []).append(f)
        return f

    for k in range(m + 1):
        make_facet(tuple(simplex[:k] + simplex[k + 1:]))

    in_simplex = set(simplex)
    rest = [i for i in range(n) if i not in in_simplex]
    for q in rest:
        pq = points[q]
        s = {f for f in verts if _dot(normal[f], pq) > offset[f]}
        if s:
            pconf[q] = s
            for f in s:
                conflicts[f].add(q)

    order = list(pconf)
    random.Random(seed).shuffle(order)
    for p in order:
        visible = pconf.pop(p, None)
        if not visible:
            continue
        horizon = []
        for f in visible:
            vs = verts[f]
            for k in range(len(vs)):
                r = frozenset(vs[:k] + vs[k + 1:])
                owners = ridges[r]
                g = owners[0] if owners[1] == f else owners[1]
                if g not in visible:
                    horizon.append((r, f, g))
        # detach visible facets
        for f in visible:
            vs = verts[f]
            for k in range(len(vs)):
                r = frozenset(vs[:k] + vs[k + 1:])
                owners = ridges[r]
                owners.remove(f)
                if not owners:
                    del ridges[r]
        for r, f, g in horizon:
            h = make_facet(tuple(sorted(r)) + (p,))
            nh, oh = normal[h], offset[h]
            for q in (conflicts[f] | conflicts[g]):
                if q != p and q in pconf and _dot(nh, points[q]) > oh:
                    conflicts[h].add(q)
                    pconf[q].add(h)
        for f in visible:
            for q in conflicts[f]:
                if q != p and q in pconf:
                    pconf[q].discard(f)
                    if not pconf[q]:
                        del pconf[q]
            del verts[f], normal[f], offset[f], conflicts[f]

    # merge coplanar simplices into facets
    merged: dict[tuple, set[int]] = {}
    for f, vs in verts.items():
        g = primitive(normal[f] + (offset[f],))
        merged.setdefault(g, set()).update(vs)

    facet_list = [(key[:-1], key[-1], vs) for key, vs in merged.items()]
    incident: dict[int, list[int]] = {}
    for fi, (_, _, vs) in enumerate(facet_list):
        for v in vs:
            incident.setdefault(v, []).append(fi)
    extreme = set()
    for v, fs in incident.items():
        # extreme iff the normals of the facets through v span R^m
        if len(fs) >= m and int_rank([facet_list[fi][0] for fi in fs]) == m:
            extreme.add(v)
    facets = tuple(
        HullFacet(nv, off, frozenset(vs & extreme)) for nv, off, vs in facet_list
    )
    return Hull(vertices=tuple(sorted(extreme)), facets=facets)

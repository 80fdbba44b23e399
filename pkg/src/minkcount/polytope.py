"""V-polytopes with exact facets, face lattices and f-vectors.

A :class:`Polytope` is normally full-dimensional in its ambient space R^d.
Lower-dimensional polytopes (segments, polygons in R^4, ...) are allowed
when built with ``full=False``; their facets and face lattice then live in
the affine hull, expressed in the coordinates listed in ``frame``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .errors import ClaimViolation, NotFullDimensional, TooFewVertices
from .exact import (
    affine_rank,
    canonical,
    normal_of,
    pivot_columns,
    row_to_int,
    scale_to_int,
    vector,
)
from .hull import convex_hull

__all__ = [
    "Facet",
    "FaceLatticeEntry",
    "Polytope",
    "normalize",
    "facet_enum",
    "facet_scan",
    "face_lattice",
    "f_vector",
    "support_face",
    "euler_characteristic",
]


@dataclass(frozen=True)
class Facet:
    normal: tuple[int, ...]   # outward, primitive integer (frame coordinates)
    offset: Fraction
    vertices: frozenset[int]


@dataclass(frozen=True)
class FaceLatticeEntry:
    vertex_set: tuple[int, ...]
    face_dim: int
    parents: tuple[int, ...] = ()
    children: tuple[int, ...] = ()
    facets: tuple[int, ...] = ()  # facets of the polytope containing this face
    mask: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: tuple[tuple[Fraction, ...], ...]
    affine_dim: int = field(compare=False)
    facets: tuple[Facet, ...] = field(compare=False, repr=False)
    frame: tuple[int, ...] = field(compare=False, repr=False)
    provenance: tuple[tuple[int, ...], ...] | None = field(
        default=None, compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def full(self) -> bool:
        return self.affine_dim == self.dim

    @cached_property
    def int_vertices(self) -> list[tuple[int, ...]]:
        """Vertices scaled by a common positive factor to integers."""
        return scale_to_int(self.vertices)[0]

    @cached_property
    def facet_masks(self) -> list[int]:
        return [_mask(f.vertices) for f in self.facets]

    @cached_property
    def face_lattice(self) -> list[FaceLatticeEntry]:
        return _build_lattice(self)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * self.affine_dim
        for e in self.face_lattice:
            counts[e.face_dim] += 1
        counts = tuple(counts)
        chi = euler_characteristic(counts)
        if chi != 1 + (-1) ** (self.affine_dim - 1):
            raise ClaimViolation(f"Euler-Poincare fails for f-vector {counts}")
        return counts

    @cached_property
    def _dim_cache(self) -> dict[int, int]:
        return {}

    def subset_dim(self, mask: int) -> int:
        """Affine dimension of the vertex subset encoded by ``mask``."""
        cache = self._dim_cache
        if mask not in cache:
            pts = [self.int_vertices[i] for i in _indices(mask)]
            cache[mask] = affine_rank(pts)
        return cache[mask]

    def support_mask(self, l_int: Sequence[int]) -> int:
        vals = [sum(a * b for a, b in zip(l_int, v)) for v in self.int_vertices]
        best = max(vals)
        mask = 0
        for i, x in enumerate(vals):
            if x == best:
                mask |= 1 << i
        return mask

    def interior_normal(self, entry: FaceLatticeEntry, weights=None) -> tuple[int, ...]:
        """A direction whose support face is exactly ``entry``.

        Positive combination of the outward normals of all facets containing
        the face; with no weights, their plain sum.
        """
        if not self.full:
            raise NotFullDimensional("normal regions need a full-dimensional polytope")
        if weights is None:
            weights = [1] * len(entry.facets)
        out = [0] * self.dim
        for w, fi in zip(weights, entry.facets):
            for k, x in enumerate(self.facets[fi].normal):
                out[k] += w * x
        return tuple(out)


def _mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def euler_characteristic(counts: Sequence[int]) -> int:
    return sum((-1) ** k * c for k, c in enumerate(counts))


def frame_of(int_points: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """Affine dimension and coordinates on which projection is injective."""
    p0 = int_points[0]
    diffs = [tuple(a - b for a, b in zip(p, p0)) for p in int_points[1:]]
    d = len(p0)
    if not diffs:
        return 0, ()
    cols = pivot_columns(diffs)
    if len(cols) == d:
        return d, tuple(range(d))
    return len(cols), tuple(cols)


def extreme_indices(int_points: Sequence[Sequence[int]]) -> list[int]:
    """Indices of the extreme points among distinct integer points."""
    if len(int_points) == 1:
        return [0]
    m, frame = frame_of(int_points)
    pts = [tuple(p[c] for c in frame) for p in int_points] if m < len(int_points[0]) else int_points
    return list(convex_hull(pts).vertices)


def _from_int(ipts, L, d, *, full=True, tags=None) -> Polytope:
    """Polytope from distinct integer points ``ipts / L``."""
    if len(ipts) < 2:
        raise TooFewVertices("a polytope needs at least two distinct points")
    m, frame = frame_of(ipts)
    if full and m < d:
        raise NotFullDimensional(f"affine hull has dimension {m} < {d}")
    proj = [tuple(p[c] for c in frame) for p in ipts] if m < d else list(ipts)
    hull = convex_hull(proj)
    order = sorted(hull.vertices, key=lambda i: ipts[i])
    new_index = {old: k for k, old in enumerate(order)}
    verts = tuple(tuple(Fraction(c, L) for c in ipts[i]) for i in order)
    facets = tuple(sorted(
        (Facet(f.normal, Fraction(f.offset, L),
               frozenset(new_index[v] for v in f.vertices)) for f in hull.facets),
        key=lambda f: (sorted(f.vertices), f.normal),
    ))
    prov = tuple(tags[i] for i in order) if tags is not None else None
    return Polytope(dim=d, vertices=verts, affine_dim=m, facets=facets,
                    frame=frame, provenance=prov)


def normalize(points, d: int | None = None, *, full: bool = True) -> Polytope:
    """Build a polytope from points, dropping duplicates and non-extreme points.

    Raises :class:`TooFewVertices` for fewer than two distinct points and,
    unless ``full=False``, :class:`NotFullDimensional` when the points do not
    span R^d.
    """
    pts = [vector(p) for p in points]
    if not pts:
        raise TooFewVertices("no points given")
    if d is None:
        d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError(f"all points must have dimension {d}")
    pts = sorted(set(pts))
    ipts, L = scale_to_int(pts)
    return _from_int(ipts, L, d, full=full)


def facet_enum(P: Polytope) -> tuple[Facet, ...]:
    return P.facets


def facet_scan(P: Polytope) -> list[Facet]:
    """Exhaustive facet enumeration over all d-subsets of vertices.

    O(C(n, d) n); meant as a cross-check on small full-dimensional inputs.
    """
    if not P.full:
        raise NotFullDimensional("facet_scan needs a full-dimensional polytope")
    pts = P.int_vertices
    L = scale_to_int(P.vertices)[1]
    d = P.dim
    found: dict[tuple, frozenset[int]] = {}
    for sub in combinations(range(len(pts)), d):
        p0 = pts[sub[0]]
        rows = [tuple(a - b for a, b in zip(pts[i], p0)) for i in sub[1:]]
        nv = normal_of(rows)
        if not any(nv):
            continue
        nv = canonical(nv)
        off = sum(a * b for a, b in zip(nv, p0))
        vals = [sum(a * b for a, b in zip(nv, p)) for p in pts]
        if all(v <= off for v in vals):
            key = (nv, off)
        elif all(v >= off for v in vals):
            key = (tuple(-x for x in nv), -off)
        else:
            continue
        if key not in found:
            found[key] = frozenset(i for i, v in enumerate(vals) if v == off)
    return sorted(
        (Facet(nv, Fraction(off, L), found[(nv, off)]) for nv, off in found),
        key=lambda f: (sorted(f.vertices), f.normal),
    )


def _build_lattice(P: Polytope) -> list[FaceLatticeEntry]:
    m = P.affine_dim
    fmasks = P.facet_masks
    touching: dict[int, list[int]] = {}
    for g, fm in enumerate(fmasks):
        for v in _indices(fm):
            touching.setdefault(v, []).append(g)

    levels: list[dict[int, list[int]]] = [dict() for _ in range(m)]
    # levels[k]: mask -> list of child masks (one level down)
    levels[m - 1] = {fm: [] for fm in fmasks}
    for k in range(m - 1, 0, -1):
        below = levels[k - 1]
        for face in levels[k]:
            cand = set()
            for v in _indices(face):
                for g in touching[v]:
                    x = face & fmasks[g]
                    if x != face:
                        cand.add(x)
            maximal = [c for c in cand
                       if not any(c != o and c & o == c for o in cand)]
            levels[k][face] = maximal
            for c in maximal:
                below.setdefault(c, [])

    order: list[tuple[int, int]] = []
    for k in range(m):
        for mask in sorted(levels[k], key=lambda x: _indices(x)):
            order.append((k, mask))
    pos = {(k, mask): i for i, (k, mask) in enumerate(order)}
    children = {i: [pos[(k - 1, c)] for c in levels[k][mask]] for i, (k, mask) in enumerate(order)}
    parents: dict[int, list[int]] = {i: [] for i in range(len(order))}
    for i, ch in children.items():
        for c in ch:
            parents[c].append(i)
    out = []
    for i, (k, mask) in enumerate(order):
        containing = tuple(g for g, fm in enumerate(fmasks) if fm & mask == mask)
        out.append(FaceLatticeEntry(
            vertex_set=tuple(_indices(mask)),
            face_dim=k,
            parents=tuple(sorted(parents[i])),
            children=tuple(sorted(children[i])),
            facets=containing,
            mask=mask,
        ))
    return out


def face_lattice(P: Polytope) -> list[FaceLatticeEntry]:
    """All proper nonempty faces, ordered by dimension then vertex set."""
    return P.face_lattice


def f_vector(P: Polytope) -> tuple[int, ...]:
    """(f_0, ..., f_{m-1}) for a polytope of affine dimension m."""
    return P.f_vector


def support_face(P: Polytope, l) -> tuple[int, ...]:
    """Indices of the vertices maximising ``<l, x>``."""
    if len(l) != P.dim:
        raise ValueError(f"direction has dimension {len(l)}, expected {P.dim}")
    li = row_to_int(vector(l)) if not all(isinstance(x, int) for x in l) else tuple(l)
    if not any(li):
        raise ValueError("support face of the zero functional is undefined")
    return tuple(_indices(P.support_mask(li)))

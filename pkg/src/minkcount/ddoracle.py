"""Double-description facet enumeration, kept independent of :mod:`hull`.

Facets of conv(V) are the extreme rays (a, b) of the cone of valid
inequalities {a.v - b <= 0 for all v in V}, apart from the trivial ray
(0, ..., 0, 1). The cone is built one constraint at a time with the
combinatorial adjacency test.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from functools import reduce

from .exact import scale_to_int

__all__ = ["dd_facets"]


def _prim(v):
    g = reduce(gcd, v, 0)
    return tuple(x // g for x in v) if g else tuple(v)


def _solve_initial(rows):
    """Extreme rays of {y : rows y <= 0} for an invertible square ``rows``."""
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(rows)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    inv = [r[n:] for r in aug]
    rays = []
    for j in range(n):
        col = [-inv[i][j] for i in range(n)]
        den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in col), 1)
        rays.append(_prim([int(x * den) for x in col]))
    return rays


def _rank(rows):
    m = [list(map(Fraction, r)) for r in rows]
    rk = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(rk + 1, len(m)):
            f = m[i][c] / m[rk][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


def dd_facets(points):
    """Facets of a full-dimensional V-polytope as ``{(normal, offset_int): indices}``.

    Normals are primitive outward integer vectors and offsets refer to the
    integer-scaled points; the scale factor is returned alongside.
    """
    pts, L = scale_to_int(points)
    d = len(pts[0])
    cons = [tuple(p) + (-1,) for p in pts]
    basis = []
    for i, c in enumerate(cons):
        if _rank([cons[b] for b in basis] + [c]) > len(basis):
            basis.append(i)
        if len(basis) == d + 1:
            break
    if len(basis) < d + 1:
        raise ValueError("points are not full-dimensional")
    rays = _solve_initial([cons[i] for i in basis])
    done = list(basis)

    def zero_set(y):
        return frozenset(i for i in done if sum(a * b for a, b in zip(cons[i], y)) == 0)

    zs = [zero_set(y) for y in rays]
    for i in range(len(cons)):
        if i in basis:
            continue
        c = cons[i]
        vals = [sum(a * b for a, b in zip(c, y)) for y in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        if not pos:
            done.append(i)
            zs = [z | {i} if vals[k] == 0 else z for k, z in enumerate(zs)]
            continue
        neg = [k for k, v in enumerate(vals) if v < 0]
        new_rays, new_zs = [], []
        for kp in pos:
            for kn in neg:
                common = zs[kp] & zs[kn]
                if len(common) < d - 1:
                    continue
                if any(k not in (kp, kn) and common <= zs[k] for k in range(len(rays))):
                    continue
                vp, vn = vals[kp], vals[kn]
                y = _prim([vp * b - vn * a for a, b in zip(rays[kp], rays[kn])])
                new_rays.append(y)
                new_zs.append(common | {i})
        keep = [k for k, v in enumerate(vals) if v <= 0]
        done.append(i)
        rays = [rays[k] for k in keep] + new_rays
        zs = [zs[k] | {i} if vals[k] == 0 else zs[k] for k in keep] + new_zs

    out = {}
    for y in rays:
        a, b = y[:d], y[d]
        if not any(a):
            continue
        nv, off = _prim(a + (b,))[:d], _prim(a + (b,))[d]
        out[(nv, off)] = frozenset(
            k for k, p in enumerate(pts) if sum(x * z for x, z in zip(nv, p)) == off)
    return out, L

"""Independent reference computations used only by the tests."""
import math
from fractions import Fraction
from itertools import product

from minkcount.ddoracle import dd_facets


def frac_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rk, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][c] != 0:
                f = m[i][c] / m[rk][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


def frac_affine_dim(points):
    points = list(points)
    if len(points) <= 1:
        return len(points) - 1
    p0 = points[0]
    return frac_rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def dd_f_vector(points):
    """f-vector from double-description facets, closing incidence sets under
    intersection; face dimensions by affine rank."""
    facets, _ = dd_facets(points)
    d = len(points[0])
    sets = set(facets.values())
    frontier = set(sets)
    while frontier:
        new = set()
        for a in frontier:
            for b in sets:
                c = a & b
                if c and c not in sets:
                    new.add(c)
        sets |= new
        frontier = new
    f = [0] * d
    for s in sets:
        k = frac_affine_dim([points[i] for i in s])
        if 0 <= k < d:
            f[k] += 1
    return tuple(f)


def dd_vertices(points):
    """Points lying on facets whose normals span R^d, via the DD oracle."""
    facets, _ = dd_facets(points)
    d = len(points[0])
    out = set()
    for i, p in enumerate(points):
        normals = [n for (n, _), inc in facets.items() if i in inc]
        if normals and frac_rank(normals) == d:
            out.add(tuple(p))
    return out


def brute_sum_points(polys):
    return sorted({tuple(sum(c) for c in zip(*combo))
                   for combo in product(*[P.vertices for P in polys])})


def theta(p, poles):
    c, s = poles.coords(p)
    return math.atan2(s, c)


def float_westernmost(rays, poles):
    """Western-most ray by floating-point angles: the one whose angle exceeds
    all others when measured in a half-turn window."""
    ts = [theta(p, poles) for p in rays]
    best = None
    for i, t in enumerate(ts):
        if all(0 < (t - u) % (2 * math.pi) < math.pi for j, u in enumerate(ts) if j != i):
            best = i
    return best

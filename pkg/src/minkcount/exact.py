"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`, vectors are tuples and matrices are
tuples of row tuples. Hot loops elsewhere in the package run on
integer-scaled copies of the coordinates (:func:`scale_to_int`); every
predicate used there is invariant under a positive common scaling.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]
RatMatrix = tuple  # tuple[RatVector, ...]


def rational(x) -> Fraction:
    """Parse ``x`` (int, Fraction, or a ``"p/q"`` string) as a Fraction."""
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact coordinates")
    return Fraction(x)


def vector(coords: Iterable) -> tuple:
    return tuple(rational(c) for c in coords)


def matrix(rows: Iterable[Iterable]) -> tuple:
    rows = tuple(vector(r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("matrix rows must all have the same length")
    return rows


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), 0)


def sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def cross(a: Sequence, b: Sequence) -> tuple:
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def det3(a: Sequence, b: Sequence, c: Sequence):
    return dot(cross(a, b), c)


# -- integer scaling ---------------------------------------------------------

def common_denominator(values: Iterable[Fraction]) -> int:
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


def scale_to_int(points: Sequence[Sequence]) -> tuple[list[tuple[int, ...]], int]:
    """Multiply all coordinates by their common denominator ``L``.

    Returns the integer points and ``L``.
    """
    L = common_denominator(c for p in points for c in p)
    return [tuple(int(Fraction(c) * L) for c in p) for p in points], L


def row_to_int(row: Sequence) -> tuple[int, ...]:
    """Scale one rational row to integers (direction preserved)."""
    L = common_denominator(row)
    return tuple(int(Fraction(c) * L) for c in row)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = reduce(gcd, v, 0)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def canonical(v: Sequence[int]) -> tuple[int, ...]:
    """Primitive integer vector with first nonzero entry positive."""
    v = primitive(v)
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


# -- fraction-free elimination ----------------------------------------------

def _bareiss(m: list[list[int]]) -> tuple[int, list[int], int]:
    """Fraction-free forward elimination in place.

    Returns ``(rank, pivot_columns, swaps)``.
    """
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r, prev, swaps = 0, 1, 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            swaps += 1
        pr = m[r]
        prc = pr[c]
        for i in range(r + 1, nrows):
            mi = m[i]
            mic = mi[c]
            for j in range(c + 1, ncols):
                mi[j] = (mi[j] * prc - mic * pr[j]) // prev
            mi[c] = 0
        prev = prc
        pivots.append(c)
        r += 1
    return r, pivots, swaps


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return _bareiss([list(r) for r in rows])[0]


def rank(m: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix."""
    if not m:
        raise ValueError("rank of an empty matrix is undefined")
    return int_rank([row_to_int(r) for r in m])


def int_det(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        return det3(rows[0], rows[1], rows[2])
    m = [list(r) for r in rows]
    r, _, swaps = _bareiss(m)
    if r < n:
        return 0
    return -m[-1][-1] if swaps % 2 else m[-1][-1]


def pivot_columns(rows: Sequence[Sequence[int]]) -> list[int]:
    if not rows:
        return []
    return _bareiss([list(r) for r in rows])[1]


def independent_rows(rows: Sequence[Sequence[int]]) -> list[int]:
    """Indices of a greedy maximal linearly independent subset of rows."""
    chosen: list[int] = []
    basis: list[Sequence[int]] = []
    for i, r in enumerate(rows):
        if int_rank(basis + [r]) > len(basis):
            basis.append(r)
            chosen.append(i)
    return chosen


def normal_of(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Integer vector orthogonal to ``d - 1`` rows in dimension ``d``.

    Generalised cross product by cofactor expansion; zero iff the rows are
    dependent.
    """
    d = len(rows) + 1
    if d == 2:
        a, b = rows[0]
        return (b, -a)
    if d == 3:
        return cross(rows[0], rows[1])
    out = []
    for j in range(d):
        minor = [r[:j] + r[j + 1:] for r in rows]
        c = int_det(minor)
        out.append(c if j % 2 == 0 else -c)
    return tuple(out)


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return int_rank([sub(p, p0) for p in points[1:]])


def solve_hyperplane(points: Sequence[Sequence]):
    """Hyperplane ``<normal, x> = offset`` through the given points.

    ``normal`` is a primitive integer vector (as Fractions) whose first
    nonzero entry is positive. Returns ``None`` when the points do not span
    an affine space of dimension exactly ``d - 1``.
    """
    if not points:
        raise ValueError("no points given")
    d = len(points[0])
    if len(points) < d:
        raise ValueError(f"need at least {d} points in dimension {d}")
    pts = [vector(p) for p in points]
    ipts, _ = scale_to_int(pts)
    diffs = [sub(p, ipts[0]) for p in ipts[1:]]
    if int_rank(diffs) != d - 1:
        return None
    basis = [diffs[i] for i in independent_rows(diffs)]
    n = canonical(normal_of(basis))
    normal = tuple(Fraction(x) for x in n)
    return normal, dot(normal, pts[0])


# -- small dense rational matrices ------------------------------------------

def identity(n: int) -> tuple:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*m))


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = transpose(b)
    return tuple(tuple(dot(r, c) for c in bt) for r in a)


def mat_vec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(r, v) for r in a)


def mat_inv(m: Sequence[Sequence]):
    """Gauss-Jordan inverse over the rationals; ``None`` if singular."""
    n = len(m)
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(r[n:]) for r in aug)

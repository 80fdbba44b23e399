"""Plain-text polytope files.

Line 1 is ``d n``; then n lines of d rationals (``p/q`` or ``p``). Lines
starting with ``#`` and blank lines are ignored.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .polytope import Polytope, normalize

__all__ = ["PolyFormatError", "parse_poly", "format_poly", "read_poly", "write_poly"]


class PolyFormatError(ValueError):
    pass


def _rat(tok: str) -> Fraction:
    try:
        if "/" in tok:
            p, q = tok.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError) as exc:
        raise PolyFormatError(f"bad rational {tok!r}") from exc


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_poly(text: str, *, full: bool = False) -> Polytope:
    """Parse POLY text; lower-dimensional point sets pass unless ``full``."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise PolyFormatError("empty file")
    head = lines[0].split()
    if len(head) != 2:
        raise PolyFormatError("header must be 'd n'")
    try:
        d, n = int(head[0]), int(head[1])
    except ValueError as exc:
        raise PolyFormatError("header must be 'd n'") from exc
    body = lines[1:]
    if len(body) != n:
        raise PolyFormatError(f"header announces {n} points, found {len(body)}")
    pts = []
    for ln in body:
        toks = ln.split()
        if len(toks) != d:
            raise PolyFormatError(f"expected {d} coordinates in {ln!r}")
        pts.append([_rat(t) for t in toks])
    return normalize(pts, d, full=full)


def format_poly(P: Polytope, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"{P.dim} {P.n}")
    out.extend(" ".join(_fmt(x) for x in v) for v in P.vertices)
    return "\n".join(out) + "\n"


def read_poly(path, **kw) -> Polytope:
    return parse_poly(Path(path).read_text(), **kw)


def write_poly(P: Polytope, path, comment: str | None = None) -> None:
    Path(path).write_text(format_poly(P, comment))

"""Assembly of the JSON run reports shared by the CLI and the scripts.

Everything except the ``timing`` block is a pure function of the instance
and seed, so two runs can be compared byte for byte after dropping it.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

from .formulas import corollary_bound, verify_theorem1, vertex_bounds, exact_count_even_d
from .gaussmap3d import (MapFamily, contains_pole, local_optima, westernmost,
                         within_half_turn, witness_identity, witness_membership)
from .minkowski import SumInstance, minkowski_sum, partial_sum
from .errors import ClaimViolation

__all__ = ["SCHEMA_VERSION", "thread_count", "instance_block", "relation_block",
           "bounds_block", "witness_block", "strip_timing"]

SCHEMA_VERSION = 1


def thread_count() -> int:
    """Parallel width from MINKCOUNT_THREADS (0 or unset: one per CPU)."""
    try:
        n = int(os.environ.get("MINKCOUNT_THREADS", "0"))
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


def _prefill(inst: SumInstance, subsets) -> None:
    # results land in the instance cache; order of completion is irrelevant
    with ThreadPoolExecutor(max_workers=thread_count()) as ex:
        list(ex.map(lambda S: partial_sum(inst, S), subsets))


def instance_block(inst: SumInstance, source: dict) -> dict:
    total = minkowski_sum(inst)
    return {
        **source,
        "d": inst.d,
        "r": inst.r,
        "n": [P.n for P in inst.summands],
        "summand_f_vectors": [list(P.f_vector) for P in inst.summands],
        "sum_f_vector": list(total.f_vector),
    }


def relation_block(inst: SumInstance, ks) -> list[dict]:
    d, r = inst.d, inst.r
    _prefill(inst, [S for j in range(1, d) for S in combinations(range(r), j)])
    out = []
    for k in ks:
        rep = verify_theorem1(inst, k)
        entry = rep.to_dict()
        bound = corollary_bound(inst, k, check_orientation=False)
        entry["corollary_bound"] = bound
        entry["corollary_holds"] = rep.lhs <= bound
        out.append(entry)
    return out


def bounds_block(inst: SumInstance) -> dict:
    counts = [P.n for P in inst.summands]
    vb = vertex_bounds(inst.d, inst.r, counts)
    f0 = minkowski_sum(inst).n
    out = {"f0": f0, **vb.to_dict(),
           "holds": f0 <= vb.product_bound <= vb.choose_total}
    if inst.d % 2 == 0 and len(set(counts)) == 1:
        out["exact_count_even_d"] = exact_count_even_d(inst.d, inst.r, counts[0])
    return out


def _check_cells(gm, poles) -> int:
    n = 0
    for c in gm.cells():
        if contains_pole(gm, c, poles):
            continue
        w = westernmost(gm, c, poles)
        if local_optima(gm, c, poles) != [w]:
            raise ClaimViolation(f"cell {c}: local optima differ from the western-most node")
        if not within_half_turn(gm, c, poles):
            raise ClaimViolation(f"cell {c} spans half a turn around the axis")
        n += 1
    return n


def witness_block(inst: SumInstance, seed: int = 0) -> tuple[dict, MapFamily]:
    """Witness counts of every single, pair and full map plus the exhaustive
    membership and local/global checks. Raises :class:`ClaimViolation` on
    the first disagreement."""
    fam = MapFamily(inst, seed)
    r = inst.r
    maps = {}
    for S in [(i,) for i in range(r)] + list(combinations(range(r), 2)) + [tuple(range(r))]:
        if S in maps:
            continue
        wc = fam.witnesses(S)
        f = partial_sum(inst, S).f_vector
        expected = (f[2], f[1], f[0] - 2)
        if wc.w != expected:
            raise ClaimViolation(f"w{S} = {wc.w}, expected {expected}")
        maps[S] = wc.w
    direct, predicted = witness_identity(fam)
    if direct != predicted:
        raise ClaimViolation(f"witness identity: {direct} != {predicted}")

    full = fam.full
    small = [S for j in (1, 2) for S in combinations(range(r), j)]
    cells_checked = sum(_check_cells(fam.overlay(S), fam.poles) for S in maps)
    checked = 0
    for c in full.cells():
        if contains_pole(full, c, fam.poles):
            continue
        for S in small:
            witness_membership(fam, c, S)
            checked += 1
    supports = sorted({len(full.support(c)) for c in full.cells(0)})
    block = {
        "poles": list(fam.poles.axis),
        "w": {",".join(str(i + 1) for i in S): list(w) for S, w in maps.items()},
        "identity": {"direct": list(direct), "predicted": list(predicted),
                     "equal": direct == predicted},
        "local_global_cells": cells_checked,
        "membership_checks": checked,
        "node_support_sizes": supports,
    }
    return block, fam


def strip_timing(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing"}

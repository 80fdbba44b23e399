"""minkcount command line.

Exit codes: 0 success, 2 usage or precondition error, 3 degenerate input
(orientation, coincidences, failed searches), 4 a checked identity or bound
failed on a valid instance.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from .errors import ClaimViolation, MinkcountError, NotGeneralOrientation
from .formulas import exact_count_even_d, lemma6_sum, vertex_bounds
from .generators import FAMILIES, GenSpec, generate, make_general
from .minkowski import SumInstance, first_inexact_face
from .polyfile import PolyFormatError, read_poly, write_poly
from .report import (SCHEMA_VERSION, bounds_block, instance_block, relation_block,
                     witness_block)


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _add_spec_flags(p: argparse.ArgumentParser, files: bool) -> None:
    if files:
        p.add_argument("files", nargs="*", help="POLY files, one per summand")
    p.add_argument("--d", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=str, default="", help="vertex count(s), e.g. 4 or 4,5,6")
    p.add_argument("--family", default="random", help="|".join(FAMILIES))
    p.add_argument("--seed", type=int, default=0)


def _spec(args, make_gen: bool = True) -> GenSpec:
    if args.d is None or args.r is None:
        raise UsageError("--d and --r are required without input files")
    return GenSpec(d=args.d, r=args.r, n=tuple(_ints(args.n)), family=args.family,
                   seed=args.seed, make_general=make_gen)


def _instance(args, make_gen: bool = True) -> tuple[SumInstance, dict]:
    if getattr(args, "files", None):
        polys = [read_poly(f) for f in args.files]
        return SumInstance(tuple(polys)), {"source": "files", "files": list(args.files)}
    spec = _spec(args, make_gen)
    return generate(spec), {"source": "generated", "spec": spec.to_dict()}


def cmd_gen(args) -> int:
    spec = _spec(args)
    inst = generate(spec)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    files = []
    for i, P in enumerate(inst.summands, start=1):
        name = f"P{i}.poly"
        write_poly(P, out / name, comment=f"summand {i} of {spec.family} d={spec.d} r={spec.r} "
                                          f"seed={spec.seed}")
        files.append({"file": name, "n": P.n, "affine_dim": P.affine_dim})
    manifest = {"schema_version": SCHEMA_VERSION, "spec": spec.to_dict(), "summands": files}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {len(files)} files and manifest.json to {out}")
    return 0


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    inst, source = _instance(args)
    if args.make_general:
        inst = make_general(inst, args.seed)
    else:
        bad = first_inexact_face(inst)
        if bad is not None:
            raise NotGeneralOrientation(
                f"face with vertices {sorted(bad.face.vertex_set)} of the sum decomposes "
                f"inexactly (support {[i + 1 for i in bad.support]}); "
                "use --make-general to rotate", bad)
    d, r = inst.d, inst.r
    if r < d:
        raise UsageError(f"the relation needs r >= d (r={r}, d={d})")
    ks = _ints(args.k) if args.k else list(range(d))
    if any(not 0 <= k < d for k in ks):
        raise UsageError(f"k must lie in 0..{d - 1}")
    report = {"schema_version": SCHEMA_VERSION, "command": "verify",
              "instance": instance_block(inst, source), "seed": args.seed}
    report["relations"] = relation_block(inst, ks)
    report["bounds"] = bounds_block(inst)
    if d == 3 and all(P.full for P in inst.summands) and not args.no_witness:
        report["witness"], _ = witness_block(inst, args.seed)
    ok = (all(e["equal"] and e["corollary_holds"] for e in report["relations"])
          and report["bounds"]["holds"])
    report["ok"] = ok
    report["timing"] = {"seconds": round(time.perf_counter() - t0, 3)}
    _emit(report, args.out)
    return 0 if ok else 4


def cmd_identity(args) -> int:
    if args.dmax > args.rmax or args.dmax < 2:
        raise UsageError("need 2 <= dmax <= rmax")
    rows = [(s, d, r, lemma6_sum(s, d, r))
            for r in range(2, args.rmax + 1)
            for d in range(2, min(args.dmax, r) + 1)
            for s in range(1, d)]
    ok = all(v == 1 for *_, v in rows)
    if args.json:
        _emit({"schema_version": SCHEMA_VERSION, "command": "identity",
               "entries": [{"s": s, "d": d, "r": r, "value": v} for s, d, r, v in rows],
               "all_one": ok}, args.out)
    else:
        print("s d r value")
        for row in rows:
            print(*row)
        print(f"{len(rows)} entries, all equal to 1: {ok}")
    return 0 if ok else 4


def cmd_gauss3(args) -> int:
    t0 = time.perf_counter()
    inst, source = _instance(args)
    if inst.d != 3:
        raise UsageError(f"gauss3 needs d = 3, got d = {inst.d}")
    block, fam = witness_block(inst, args.seed)
    report = {"schema_version": SCHEMA_VERSION, "command": "gauss3",
              "instance": instance_block(inst, source), "seed": args.seed,
              "witness": block, "ok": True,
              "timing": {"seconds": round(time.perf_counter() - t0, 3)}}
    if args.dump:
        Path(args.dump).write_text(json.dumps(fam.full.to_dict(), indent=2) + "\n")
    _emit(report, args.out)
    return 0


def cmd_bounds(args) -> int:
    d, r = args.d, args.r
    if r < d:
        raise UsageError(f"vertex bounds need r >= d (r={r}, d={d})")
    if not args.n:
        raise UsageError("--n is required")
    counts = _ints(args.n)
    if len(counts) == 1:
        counts = counts * r
    vb = vertex_bounds(d, r, counts)
    row = {"d": d, "r": r, "n": ",".join(map(str, counts)), **vb.to_dict(),
           "exact_count_even_d": (exact_count_even_d(d, r, counts[0])
                                  if d % 2 == 0 and len(set(counts)) == 1 else "")}
    if args.format == "json":
        _emit({"schema_version": SCHEMA_VERSION, "command": "bounds", **row}, None)
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
        w.writeheader()
        w.writerow(row)
        sys.stdout.write(buf.getvalue())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="minkcount", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="generate an instance as POLY files")
    _add_spec_flags(p, files=False)
    p.add_argument("--out", default="instance")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check the face-count relation and bounds")
    _add_spec_flags(p, files=True)
    p.add_argument("--k", type=str, default="", help="face dimensions, e.g. 0,1,2")
    p.add_argument("--make-general", action="store_true")
    p.add_argument("--no-witness", action="store_true", help="skip the d=3 witness block")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identity", help="tabulate the alternating binomial identity")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("gauss3", help="witness counts on d=3 Gaussian maps")
    _add_spec_flags(p, files=True)
    p.add_argument("--dump", help="write the full overlay as a JSON cell complex")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gauss3)

    p = sub.add_parser("bounds", help="vertex-count bounds table")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=str, default="")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_bounds)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ClaimViolation as exc:
        print(f"claim violation: {exc}", file=sys.stderr)
        return 4
    except MinkcountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (UsageError, PolyFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Sweep seeded instances and check the face-count relation for every k.

    python scripts/relation_sweep.py --d 3 --rmin 3 --rmax 5 --seeds 20
"""
import argparse
import json
import time

from minkcount.generators import GenSpec, generate
from minkcount.report import relation_block


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--rmin", type=int, default=3)
    ap.add_argument("--rmax", type=int, default=5)
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--out", help="write one JSON line per instance")
    args = ap.parse_args()

    lines, fails = [], 0
    for r in range(args.rmin, args.rmax + 1):
        for seed in range(args.seeds):
            counts = tuple(args.n[(seed + i) % len(args.n)] for i in range(r))
            spec = GenSpec(args.d, r, counts, seed=seed)
            t0 = time.perf_counter()
            rels = relation_block(generate(spec), range(args.d))
            ok = all(e["equal"] for e in rels)
            fails += not ok
            print(f"d={args.d} r={r} seed={seed:3d} n={counts} "
                  f"lhs={[e['lhs'] for e in rels]} {'ok' if ok else 'MISMATCH'} "
                  f"{time.perf_counter() - t0:.2f}s")
            lines.append(json.dumps({"spec": spec.to_dict(), "relations": rels}))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    print(f"{len(lines)} instances, {fails} mismatches")
    return 1 if fails else 0


if __name__ == "__main__":
    raise SystemExit(main())

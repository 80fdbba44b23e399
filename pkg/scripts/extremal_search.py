"""Search for instances whose (d-1)-subset sums all attain n^(d-1) vertices.

Failures are reported, not raised: the search is heuristic.
"""
import argparse
import time

from minkcount.errors import ExtremalSearchFailed
from minkcount.formulas import exact_count_even_d, verify_theorem1
from minkcount.generators import extremal_family
from minkcount.minkowski import minkowski_sum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cases", nargs="+", default=["3,2,3", "3,3,3", "3,4,3", "3,3,4"],
                    help="d,r,n triples")
    ap.add_argument("--budget", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for case in args.cases:
        d, r, n = map(int, case.split(","))
        t0 = time.perf_counter()
        try:
            inst = extremal_family(d, r, n, seed=args.seed, budget=args.budget)
        except ExtremalSearchFailed as exc:
            print(f"d={d} r={r} n={n}: {exc} ({time.perf_counter() - t0:.1f}s)")
            continue
        f0 = minkowski_sum(inst).n
        extra = ""
        if r >= d:
            extra = f", relation k=0 equal={verify_theorem1(inst, 0).equal}"
            if d % 2 == 0:
                extra += f", closed form {exact_count_even_d(d, r, n)}"
        print(f"d={d} r={r} n={n}: found, f0(sum)={f0}{extra} ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()

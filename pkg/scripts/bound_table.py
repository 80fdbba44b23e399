"""Compare actual vertex counts of sums with the vertex bounds.

For each (d, r, n) a few seeded random instances are summed and their f_0
is printed next to the product bound, C(sum n, d-1) and C(r, d-1) n^(d-1).
"""
import argparse
import csv
import sys

from minkcount.formulas import exact_count_even_d, vertex_bounds
from minkcount.generators import GenSpec, generate
from minkcount.minkowski import minkowski_sum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--d", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--r", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--n", type=int, nargs="+", default=[4, 6])
    ap.add_argument("--seeds", type=int, default=3)
    args = ap.parse_args()

    w = csv.writer(sys.stdout)
    w.writerow(["d", "r", "n", "seed", "f0", "product_bound", "choose_total",
                "choose_each", "exact_count_even_d"])
    for d in args.d:
        for r in args.r:
            if r < d:
                continue
            for n in args.n:
                if n < d + 1:
                    continue
                for seed in range(args.seeds):
                    inst = generate(GenSpec(d, r, (n,), seed=seed))
                    vb = vertex_bounds(d, r, [n] * r)
                    exact = exact_count_even_d(d, r, n) if d % 2 == 0 else ""
                    w.writerow([d, r, n, seed, minkowski_sum(inst).n, vb.product_bound,
                                vb.choose_total, vb.choose_each, exact])


if __name__ == "__main__":
    main()

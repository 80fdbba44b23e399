"""Western-most corners on the Gaussian maps of a d=3 instance.

Prints w for every single map, pair overlay and the full overlay, the two
sides of the counting identity, and the support of each witness node.
"""
import argparse
from collections import Counter
from itertools import combinations

from minkcount.gaussmap3d import Cell, MapFamily, witness_identity
from minkcount.generators import GenSpec, generate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    inst = generate(GenSpec(3, args.r, (args.n,), seed=args.seed))
    fam = MapFamily(inst, args.seed)
    print(f"pole axis {fam.poles.axis}")
    for j in (1, 2):
        for S in combinations(range(args.r), j):
            print(f"  S={tuple(i + 1 for i in S)}  w={fam.witnesses(S).w}  "
                  f"map={fam.overlay(S).counts}")
    direct, predicted = witness_identity(fam)
    print(f"full overlay w={direct}, from pairs and singles {predicted}")
    wc = fam.witnesses(range(args.r))
    sizes = Counter((c.dim, len(fam.full.support(Cell(0, w)))) for c, w in wc.per_cell.items())
    for (dim, k), count in sorted(sizes.items()):
        print(f"  {count:4d} witnesses of {dim}-cells sit on nodes with |I| = {k}")


if __name__ == "__main__":
    main()

"""Tally majorize(T(p), T(q)) over random pinch pairs p < q."""

import argparse
from collections import Counter
from fractions import Fraction

from hypmaj.hyperbolic_order import majorizes
from hypmaj.operator_lab import LinOp, apply
from hypmaj.pinch_chain import random_pinch_pair


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--pairs", type=int, default=1000)
    ap.add_argument("--a", default="1", help="affine operator p(az+b); use 0 for the derivative")
    ap.add_argument("--b", default="0")
    args = ap.parse_args()
    a = Fraction(args.a)
    T = LinOp.derivative(args.n) if a == 0 else LinOp.affine(args.n, a, Fraction(args.b))
    tally = Counter()
    for seed in range(args.pairs):
        p, q = random_pinch_pair(args.n, seed)
        tally[majorizes(apply(T, p), apply(T, q)).relation.value] += 1
    for rel, count in sorted(tally.items()):
        print(f"{rel:18s} {count}")


if __name__ == "__main__":
    main()

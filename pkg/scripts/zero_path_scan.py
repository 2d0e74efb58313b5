"""Scan the zero path of T applied to r(z)((z+s)^2 - t^2) and summarize the checks."""

import argparse
from fractions import Fraction

from hypmaj.eigen_path import promote, run_path_checks, uniform_grid
from hypmaj.exact_poly import Poly
from hypmaj.operator_lab import LinOp

z = Poly.z()
OPERATORS = {
    "derivative": lambda n: LinOp.derivative(n),
    "identity": lambda n: LinOp.identity(n),
    "perturbed": lambda n: LinOp.from_images([1, z, z**2 + 1] + [z**k for k in range(3, n + 1)]),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--operator", choices=sorted(OPERATORS), default="derivative")
    ap.add_argument("--roots", default="0,0", help="comma separated rational zeros of r")
    ap.add_argument("--s", default="0")
    ap.add_argument("--steps", type=int, default=64)
    args = ap.parse_args()
    roots = [Fraction(x) for x in args.roots.split(",") if x]
    r = Poly.from_roots(roots)
    T = OPERATORS[args.operator](len(roots) + 2)
    s = Fraction(args.s)
    samples, rep = run_path_checks(T, r, s, uniform_grid(-2, 2, args.steps))
    print(f"operator={args.operator} n={T.n} r={','.join(map(str, roots))} s={s} points={len(samples)}")
    print(f"convexity={len(rep.convexity_violations)} evenness={len(rep.evenness_violations)} "
          f"monotonicity={len(rep.monotonicity_violations)} anomalies={len(rep.anomalies)}")
    for smp in samples[:: max(1, len(samples) // 8)]:
        if smp.anomalous:
            print(f"  t={float(smp.t):+.3f}  image not hyperbolic")
            continue
        tops = ", ".join(f"{float((lo + hi) / 2):+.6f}" for lo, hi in smp.partial_sums[:-1])
        print(f"  t={float(smp.t):+.3f}  top-k sums: {tops}")
    cert = promote(rep, samples, r, s)
    if cert is not None:
        print(f"certificate: {cert.kind}/{cert.clause}")


if __name__ == "__main__":
    main()

"""Classify a small zoo of operators and print one line per operator."""

import argparse
from fractions import Fraction

from hypmaj.exact_poly import Poly
from hypmaj.operator_lab import Budget, LinOp, classify, verify_certificate

z = Poly.z()


def zoo():
    yield "identity(3)", LinOp.identity(3)
    yield "derivative(3)", LinOp.derivative(3)
    yield "derivative(2)", LinOp.derivative(2)
    yield "p(-2z+1) on R_4", LinOp.affine(4, Fraction(-2), Fraction(1))
    yield "(1, z, z^2+1)", LinOp.from_images([1, z, z**2 + 1])
    yield "(0, 1, 2z, 3z^2+1)", LinOp.from_images([0, 1, 2 * z, 3 * z**2 + 1])
    yield "(1, 0, z^2)", LinOp.from_images([1, 0, z**2])
    yield "(1, -z, z^2)", LinOp.from_images([1, -z, z**2])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()
    for name, T in zoo():
        rep = classify(T, Budget(samples=args.samples, seed=args.seed))
        cert = rep.certificate
        note = "" if cert is None else f"  {cert.kind}/{cert.clause} verified={verify_certificate(T, cert)}"
        print(f"{name:22s} {rep.verdict.value}{note}")


if __name__ == "__main__":
    main()

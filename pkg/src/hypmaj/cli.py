"""``hypmaj`` command line: exact JSON in, JSON reports out.

Exit status: 0 when a verdict was computed (negative ones included),
1 on usage errors, 2 on malformed or rejected input.
"""

from __future__ import annotations

import argparse
import dataclasses
import enum
import hashlib
import json
import math
import random
import re
import sys
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any

from . import __version__
from .eigen_path import (
    DEFAULT_TOLERANCE,
    DEFAULT_WIDTH,
    promote,
    run_path_checks,
    uniform_grid,
)
from .errors import HypmajError, PreconditionViolation
from .exact_poly import IsolatingInterval, Poly, is_hyperbolic, isolate_roots, radical, rational_roots, sturm_count
from .hyperbolic_order import DEFAULT_EQ_THRESHOLD, interlaces, interlacing_is_vacuous, majorizes
from .operator_lab import Budget, Certificate, LinOp, Symbol, classify, symbol
from .pinch_chain import decompose

TOOL = "hypmaj"
EXIT_OK, EXIT_USAGE, EXIT_MALFORMED = 0, 1, 2

_CANONICAL = re.compile(r"-?(0|[1-9][0-9]*)/[1-9][0-9]*")
_FLAG_RATIONAL = re.compile(r"\s*(-?[0-9]+)(?:/([0-9]+))?\s*")
_FLAG_POWER = re.compile(r"\s*(-?[0-9]+)\^(-?[0-9]+)\s*")


class MalformedInput(HypmajError, ValueError):
    pass


# -- rationals and documents -----------------------------------------------


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: Any) -> Fraction:
    """Strict ``num/den`` in lowest terms with ``den > 0``."""
    if not isinstance(text, str) or not _CANONICAL.fullmatch(text):
        raise MalformedInput(f"not a canonical rational string: {text!r}")
    num, den = (int(v) for v in text.split("/"))
    if math.gcd(num, den) != 1 or (num == 0 and (den != 1 or text.startswith("-"))):
        raise MalformedInput(f"rational not in lowest terms: {text!r}")
    return Fraction(num, den)


def flag_rational(text: str) -> Fraction:
    """Lenient flag syntax: ``3``, ``-1/2`` or ``2^-64``."""
    m = _FLAG_POWER.fullmatch(text)
    if m:
        base, exp = int(m.group(1)), int(m.group(2))
        if base == 0 and exp < 0:
            raise argparse.ArgumentTypeError("zero to a negative power")
        return Fraction(base) ** exp
    m = _FLAG_RATIONAL.fullmatch(text)
    if m and m.group(2) != "0":
        return Fraction(int(m.group(1)), int(m.group(2) or 1))
    raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def poly_to_doc(p: Poly) -> dict:
    return {"coeffs": [format_rational(c) for c in p.coeffs]}


def poly_from_doc(doc: Any) -> Poly:
    if not isinstance(doc, dict) or set(doc) != {"coeffs"} or not isinstance(doc["coeffs"], list):
        raise MalformedInput('a polynomial document is {"coeffs": [...]}')
    coeffs = [parse_rational(c) for c in doc["coeffs"]]
    if coeffs and coeffs[-1] == 0:
        raise MalformedInput("last coefficient must be nonzero")
    return Poly(coeffs)


def operator_to_doc(T: LinOp) -> dict:
    return {"n": T.n, "images": [poly_to_doc(p) for p in T.images]}


def operator_from_doc(doc: Any) -> LinOp:
    if not isinstance(doc, dict) or set(doc) != {"n", "images"}:
        raise MalformedInput('an operator document is {"n": ..., "images": [...]}')
    n, images = doc["n"], doc["images"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MalformedInput("n must be a positive integer")
    if not isinstance(images, list) or len(images) != n + 1:
        raise MalformedInput("images must hold n + 1 polynomials")
    return LinOp(n, [poly_from_doc(p) for p in images])


def to_jsonable(obj: Any) -> Any:
    """Exact JSON view: rationals as strings, polynomials as documents."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, float):
        if math.isinf(obj):
            return "-inf" if obj < 0 else "inf"
        raise TypeError("floats are never serialized")
    if isinstance(obj, Poly):
        return poly_to_doc(obj)
    if isinstance(obj, LinOp):
        return operator_to_doc(obj)
    if isinstance(obj, Certificate):
        return {"type": obj.kind, "clause": obj.clause, "data": to_jsonable(obj.data)}
    if isinstance(obj, IsolatingInterval):
        return {"lo": format_rational(obj.lo), "hi": format_rational(obj.hi), "multiplicity": obj.multiplicity}
    if isinstance(obj, Symbol):
        return {
            "matrix": [[format_rational(c) for c in row] for row in obj.coeffs],
            "w_coefficients": [poly_to_doc(p) for p in obj.w_coefficients()],
        }
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# -- input ------------------------------------------------------------------


def _load(path: str) -> tuple[Any, bytes]:
    try:
        if path == "-":
            raw = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                raw = fh.read()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(raw.decode("utf-8")), raw
    except (UnicodeDecodeError, json.JSONDecodeError, RecursionError) as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc})") from exc


def _load_poly(path: str) -> Poly:
    return poly_from_doc(_load(path)[0])


def _load_operator(path: str) -> LinOp:
    return operator_from_doc(_load(path)[0])


# -- reports ----------------------------------------------------------------


def _report(args: argparse.Namespace, inputs: dict, options: dict, body: dict) -> dict:
    canonical = json.dumps(
        {"command": args.command, "inputs": to_jsonable(inputs), "options": to_jsonable(options)},
        sort_keys=True,
        separators=(",", ":"),
    )
    doc = {
        "tool": TOOL,
        "version": __version__,
        "command": args.command,
        "input_digest": hashlib.sha256(canonical.encode()).hexdigest(),
        "options": to_jsonable(options),
    }
    doc.update(to_jsonable(body))
    if not args.deterministic:
        doc["timestamp"] = datetime.now(timezone.utc).isoformat()
    return doc


def cmd_check_hyperbolic(args) -> dict:
    p = _load_poly(args.file)
    options = {"width": args.width}
    body: dict = {"evidence": {"degree": p.degree if p else None}}
    if p.is_zero():
        body["verdict"] = "NotHyperbolic"
        body["evidence"]["reason"] = "zero_polynomial"
    elif is_hyperbolic(p):
        body["verdict"] = "Hyperbolic"
        body["roots"] = isolate_roots(p, args.width)
    else:
        rad = radical(p)
        body["verdict"] = "NotHyperbolic"
        body["evidence"].update(reason="nonreal_roots", distinct_roots=rad.degree, distinct_real_roots=sturm_count(rad))
    return _report(args, {"p": p}, options, body)


def cmd_majorize(args) -> dict:
    p, q = _load_poly(args.p), _load_poly(args.q)
    v = majorizes(p, q, args.eq_threshold)
    body = {"verdict": v.relation, "evidence": {"failing_index": v.failing_index, "margin": v.margin, "reason": v.reason}}
    return _report(args, {"p": p, "q": q}, {"eq_threshold": args.eq_threshold}, body)


def cmd_pinch_chain(args) -> dict:
    p, q = _load_poly(args.p), _load_poly(args.q)
    inputs = {"p": p, "q": q}
    for name, f in inputs.items():
        if not is_hyperbolic(f):
            raise PreconditionViolation(f"{name} is not hyperbolic", {name: str(f)})
    x, y = rational_roots(p), rational_roots(q)
    if x is None or y is None:
        body = {"verdict": "Unsupported", "evidence": {"reason": "irrational_roots"}}
        return _report(args, inputs, {}, body)
    v = majorizes(p, q)
    if p.lc != q.lc or v.relation.value != "Majorized":
        body = {"verdict": "NotMajorized", "evidence": {"failing_index": v.failing_index, "reason": v.reason or "leading_coefficient"}}
        return _report(args, inputs, {}, body)
    chain = decompose(x, y)
    body = {
        "verdict": "Chain",
        "chain": {
            "start": list(chain.start),
            "moves": [{"i": m.index, "j": m.j, "amount": m.amount} for m in chain.moves],
            "vectors": chain.vectors(),
        },
        "evidence": {"length": len(chain)},
    }
    return _report(args, inputs, {}, body)


def cmd_interlace(args) -> dict:
    f, g = _load_poly(args.f), _load_poly(args.g)
    ok = interlaces(f, g)
    body = {"verdict": "Interlacing" if ok else "NotInterlacing", "evidence": {"vacuous": interlacing_is_vacuous(f, g)}}
    return _report(args, {"f": f, "g": g}, {}, body)


def cmd_symbol(args) -> dict:
    T = _load_operator(args.operator)
    body = {"verdict": "Symbol", "symbol": symbol(T, reflect=args.reflect)}
    return _report(args, {"T": T}, {"reflect": args.reflect}, body)


def _seed(args) -> int:
    return args.seed if args.seed is not None else random.SystemRandom().randrange(2**32)


def cmd_classify(args) -> dict:
    T = _load_operator(args.operator)
    seed = _seed(args)
    budget = Budget(samples=args.samples, seed=seed, eq_threshold=args.eq_threshold, stability_samples=args.stability_samples)
    rep = classify(T, budget)
    options = {"samples": args.samples, "seed": seed, "eq_threshold": args.eq_threshold, "stability_samples": args.stability_samples}
    body = {"verdict": rep.verdict, "certificate": rep.certificate, "evidence": rep.evidence, "ledger": rep.ledger}
    return _report(args, {"T": T}, options, body)


def cmd_eigenpath(args) -> dict:
    T, r = _load_operator(args.operator), _load_poly(args.r)
    grid = uniform_grid(args.t_min, args.t_max, args.t_steps)
    samples, rep = run_path_checks(T, r, args.s, grid, args.width, args.tolerance, args.eq_threshold)
    cert = promote(rep, samples, r, args.s, args.width)
    verdict = "Consistent" if rep.clean else ("RefutedNonPreserver" if cert else "Anomalous")
    options = {
        "s": args.s, "t_min": args.t_min, "t_max": args.t_max, "t_steps": args.t_steps,
        "tolerance": args.tolerance, "width": args.width, "eq_threshold": args.eq_threshold,
    }
    body = {
        "verdict": verdict,
        "certificate": cert,
        "evidence": {
            "convexity_violations": rep.convexity_violations,
            "evenness_violations": rep.evenness_violations,
            "monotonicity_violations": rep.monotonicity_violations,
            "anomalies": rep.anomalies,
            "totals_constant": rep.totals_constant,
            "images_even": rep.images_even,
            "totals": [smp.total for smp in samples],
        },
    }
    return _report(args, {"T": T, "r": r}, options, body)


# -- parser -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> Fraction:
    v = flag_rational(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _nonnegative(text: str) -> Fraction:
    v = flag_rational(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _count(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=TOOL, description="Exact tools for real-rooted polynomials and majorization preservers.")
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    parser.add_argument("--deterministic", action="store_true", help="omit the timestamp")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--deterministic", action="store_true", default=argparse.SUPPRESS, help="omit the timestamp")
        return sp

    sp = add("check-hyperbolic", cmd_check_hyperbolic, "decide real-rootedness and isolate the roots")
    sp.add_argument("file")
    sp.add_argument("--width", type=_positive, default=Fraction(1, 2**20))

    sp = add("majorize", cmd_majorize, "decide p ≺ q")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("--eq-threshold", type=_positive, default=DEFAULT_EQ_THRESHOLD)

    sp = add("pinch-chain", cmd_pinch_chain, "pinch chain from q down to p (rational roots)")
    sp.add_argument("p")
    sp.add_argument("q")

    sp = add("interlace", cmd_interlace, "weak interlacing of two real-rooted polynomials")
    sp.add_argument("f")
    sp.add_argument("g")

    sp = add("symbol", cmd_symbol, "bivariate symbol of an operator")
    sp.add_argument("operator")
    sp.add_argument("--reflect", action="store_true", help="substitute w -> -w")

    sp = add("classify", cmd_classify, "classify an operator as a majorization preserver")
    sp.add_argument("operator")
    sp.add_argument("--samples", type=_count, default=2000)
    sp.add_argument("--stability-samples", type=_count, default=None)
    sp.add_argument("--seed", type=_count, default=None)
    sp.add_argument("--eq-threshold", type=_positive, default=DEFAULT_EQ_THRESHOLD)

    sp = add("eigenpath", cmd_eigenpath, "zero-path convexity and monotonicity checks")
    sp.add_argument("operator")
    sp.add_argument("r")
    sp.add_argument("--s", type=flag_rational, default=Fraction(0))
    sp.add_argument("--t-min", type=flag_rational, default=Fraction(-2))
    sp.add_argument("--t-max", type=flag_rational, default=Fraction(2))
    sp.add_argument("--t-steps", type=_count, default=32)
    sp.add_argument("--tolerance", type=_nonnegative, default=DEFAULT_TOLERANCE)
    sp.add_argument("--width", type=_positive, default=DEFAULT_WIDTH)
    sp.add_argument("--eq-threshold", type=_positive, default=DEFAULT_EQ_THRESHOLD)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = args.func(args)
    except MalformedInput as exc:
        print(f"{TOOL}: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except PreconditionViolation as exc:
        print(f"{TOOL}: precondition failed: {exc} {json.dumps(to_jsonable(exc.evidence), sort_keys=True)}", file=sys.stderr)
        return EXIT_MALFORMED
    except (HypmajError, ValueError) as exc:
        print(f"{TOOL}: rejected input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Majorization and interlacing for real-rooted polynomials.

Zero vectors are handled as enclosures (:class:`RootVector`).  Totals are
compared exactly through the coefficients; top-k partial sums are compared
by refining enclosures until the comparison is certified or both sums are
narrower than an equality threshold.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidArgument, PreconditionViolation
from .exact_poly import (
    IsolatingInterval,
    Poly,
    RationalLike,
    SignPattern,
    as_rational,
    is_hyperbolic,
    is_sign_constant,
    isolate_roots,
    radical,
    sturm_count,
)

DEFAULT_EQ_THRESHOLD = Fraction(1, 2**64)
_START_WIDTH = Fraction(1, 2**8)


class Relation(str, enum.Enum):
    MAJORIZED = "Majorized"
    NOT_MAJORIZED = "NotMajorized"
    INDISTINGUISHABLE = "Indistinguishable"


@dataclass(frozen=True)
class MajorizationVerdict:
    """Outcome of a majorization test ``x ≺ y``.

    ``failing_index`` is the ``k`` of the first refuted inequality between
    the sums of the ``k + 1`` largest entries; a total-sum mismatch is
    reported as ``k = n - 1``.  For ``NotMajorized`` the margin is a
    certified positive gap; otherwise it is a lower bound on the smallest
    slack seen.
    """

    relation: Relation
    failing_index: int | None = None
    margin: Fraction = Fraction(0)
    reason: str | None = None

    @property
    def refuted(self) -> bool:
        return self.relation is Relation.NOT_MAJORIZED


@dataclass(frozen=True)
class RootVector:
    """Weakly increasing enclosures of the zeros of a real-rooted polynomial."""

    roots: tuple[IsolatingInterval, ...]
    leading_coeff: Fraction
    degree: int

    @property
    def entries(self) -> tuple[IsolatingInterval, ...]:
        out = []
        for iv in self.roots:
            out.extend([iv] * iv.multiplicity)
        return tuple(out)

    @property
    def width(self) -> Fraction:
        return max((iv.width for iv in self.roots), default=Fraction(0))

    @property
    def is_exact(self) -> bool:
        return all(iv.is_exact for iv in self.roots)

    def refine(self, width: RationalLike) -> RootVector:
        width = as_rational(width)
        return RootVector(tuple(iv.refine(width) for iv in self.roots), self.leading_coeff, self.degree)

    def top_sum_bounds(self, k: int) -> tuple[Fraction, Fraction]:
        """Enclosure of the sum of the ``k`` largest zeros."""
        ents = self.entries
        if not 0 <= k <= len(ents):
            raise InvalidArgument(f"k={k} out of range for {len(ents)} zeros")
        top = ents[len(ents) - k:]
        return sum((iv.lo for iv in top), Fraction(0)), sum((iv.hi for iv in top), Fraction(0))

    def midpoints(self) -> list[Fraction]:
        return [iv.midpoint for iv in self.entries]


def root_vector(p: Poly, width: RationalLike = _START_WIDTH) -> RootVector:
    if not is_hyperbolic(p):
        evidence = {"polynomial": str(p)}
        if p:
            if p.degree > 0:
                rad = radical(p)
                evidence["distinct_real_roots"] = sturm_count(rad)
                evidence["distinct_roots"] = rad.degree
        raise PreconditionViolation(f"{p} is not hyperbolic", evidence)
    return RootVector(tuple(isolate_roots(p, width)), p.lc, p.degree)


def _check_sorted(v: Sequence[Fraction], name: str) -> None:
    if any(a > b for a, b in zip(v, v[1:])):
        raise InvalidArgument(f"{name} is not weakly increasing")


def vec_majorizes(x: Sequence[RationalLike], y: Sequence[RationalLike]) -> MajorizationVerdict:
    """Exact test of ``x ≺ y`` for weakly increasing rational vectors."""
    x = [as_rational(v) for v in x]
    y = [as_rational(v) for v in y]
    if len(x) != len(y) or not x:
        raise InvalidArgument("vectors must be nonempty and of equal length")
    _check_sorted(x, "x")
    _check_sorted(y, "y")
    n = len(x)
    if sum(x) != sum(y):
        return MajorizationVerdict(Relation.NOT_MAJORIZED, n - 1, abs(sum(x) - sum(y)), "total_sum")
    sx = sy = Fraction(0)
    slack = None
    for k in range(n - 1):
        sx += x[n - 1 - k]
        sy += y[n - 1 - k]
        if sx > sy:
            return MajorizationVerdict(Relation.NOT_MAJORIZED, k, sx - sy, "partial_sum")
        slack = sy - sx if slack is None else min(slack, sy - sx)
    return MajorizationVerdict(Relation.MAJORIZED, None, slack or Fraction(0))


def majorizes(
    p: Poly,
    q: Poly,
    eq_threshold: RationalLike = DEFAULT_EQ_THRESHOLD,
    exact: bool = True,
) -> MajorizationVerdict:
    """Decide ``p ≺ q`` for hyperbolic polynomials.

    Comparisons that remain unresolved once both partial-sum enclosures are
    narrower than ``eq_threshold`` are taken as equalities.  With ``exact``
    set, any such tie turns a positive answer into ``Indistinguishable``.
    """
    eq_threshold = as_rational(eq_threshold)
    if eq_threshold <= 0:
        raise InvalidArgument("eq_threshold must be positive")
    if p.degree != q.degree:
        return MajorizationVerdict(Relation.NOT_MAJORIZED, None, Fraction(0), "degree")
    if p.lc != q.lc:
        return MajorizationVerdict(Relation.NOT_MAJORIZED, None, abs(p.lc - q.lc), "leading_coefficient")
    for name, f in (("p", p), ("q", q)):
        if not is_hyperbolic(f):
            raise PreconditionViolation(f"{name} = {f} is not hyperbolic", {name: str(f)})
    n = p.degree
    if n <= 0:
        return MajorizationVerdict(Relation.MAJORIZED)
    # total root sum, exactly: -a_{n-1}/a_n
    tp = -p.coefficient(n - 1) / p.lc
    tq = -q.coefficient(n - 1) / q.lc
    if tp != tq:
        return MajorizationVerdict(Relation.NOT_MAJORIZED, n - 1, abs(tp - tq), "total_sum")
    rp, rq = root_vector(p), root_vector(q)
    width = _START_WIDTH
    tied = False
    slack = None
    for k in range(n - 1):
        while True:
            plo, phi = rp.top_sum_bounds(k + 1)
            qlo, qhi = rq.top_sum_bounds(k + 1)
            if phi <= qlo:
                slack = qlo - phi if slack is None else min(slack, qlo - phi)
                break
            if plo > qhi:
                return MajorizationVerdict(Relation.NOT_MAJORIZED, k, plo - qhi, "partial_sum")
            if phi - plo < eq_threshold and qhi - qlo < eq_threshold:
                tied = True
                slack = Fraction(0)
                break
            width /= 4
            rp, rq = rp.refine(width), rq.refine(width)
    if tied and exact:
        return MajorizationVerdict(Relation.INDISTINGUISHABLE, None, Fraction(0), "threshold_tie")
    return MajorizationVerdict(Relation.MAJORIZED, None, slack or Fraction(0))


def center_polynomial(p: Poly) -> Poly:
    """``a_n (z + a_{n-1}/(n a_n))^n``: the least element of p's class in the order."""
    n = p.degree
    if p.is_zero() or n < 1:
        raise InvalidArgument("center_polynomial needs degree >= 1")
    shift = p.coefficient(n - 1) / (n * p.lc)
    return Poly([shift, 1]) ** n * p.lc


def interlacing_is_vacuous(f: Poly, g: Poly) -> bool:
    """Both polynomials are constants, so the interlacing chain is empty."""
    return f.degree <= 0 and g.degree <= 0


def interlaces(f: Poly, g: Poly) -> bool:
    """Weak interlacing of the zeros of two real-rooted polynomials.

    Decided by the Hermite-Kakeya-Obreschkoff criterion: degrees differ by
    at most one and the Wronskian ``f'g - fg'`` does not change sign.
    """
    if f.is_zero() or g.is_zero():
        raise InvalidArgument("interlaces is undefined for the zero polynomial")
    for name, h in (("f", f), ("g", g)):
        if not is_hyperbolic(h):
            raise PreconditionViolation(f"{name} = {h} is not hyperbolic", {name: str(h)})
    if interlacing_is_vacuous(f, g):
        return True
    if abs(f.degree - g.degree) > 1:
        return False
    wronskian = f.derivative() * g - f * g.derivative()
    return is_sign_constant(wronskian) is not SignPattern.CHANGES_SIGN

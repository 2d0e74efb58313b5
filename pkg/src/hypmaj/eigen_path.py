"""Zeros of an operator image along a pinch path.

For ``p_t = r(z)((z+s)^2 - t^2)`` and a majorization preserver ``T``, the
sum of the ``k`` largest zeros of ``T(p_t)`` is a convex, even function of
``t``, and the images increase in the order as ``|t|`` grows.  This module
samples such paths on a rational grid and checks the discrete versions of
those statements with certified interval bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InvalidArgument
from .exact_poly import Poly, RationalLike, as_rational, is_hyperbolic
from .hyperbolic_order import DEFAULT_EQ_THRESHOLD, Relation, RootVector, majorizes, root_vector
from .operator_lab import Certificate, LinOp, apply

DEFAULT_TOLERANCE = Fraction(1, 2**20)
DEFAULT_WIDTH = Fraction(1, 2**40)


def uniform_grid(t_min: RationalLike = -2, t_max: RationalLike = 2, steps: int = 32) -> list[Fraction]:
    """``steps + 1`` equally spaced points from ``t_min`` to ``t_max``."""
    t_min, t_max = as_rational(t_min), as_rational(t_max)
    if steps < 1 or t_max <= t_min:
        raise InvalidArgument("need t_min < t_max and at least one step")
    h = (t_max - t_min) / steps
    return [t_min + j * h for j in range(steps + 1)]


def path_polynomial(r: Poly, s: RationalLike, t: RationalLike) -> Poly:
    """``r(z)((z+s)^2 - t^2)``."""
    s, t = as_rational(s), as_rational(t)
    return r * Poly([s * s - t * t, 2 * s, 1])


@dataclass(frozen=True)
class PathSample:
    """One grid point.  ``partial_sums[k-1]`` encloses the sum of the ``k`` largest zeros.

    ``zeros`` is ``None`` when the image is not hyperbolic (an anomaly).
    The last partial sum is the exact total ``-a_{m-1}/a_m``.
    """

    t: Fraction
    path: Poly
    image: Poly
    zeros: RootVector | None
    partial_sums: tuple[tuple[Fraction, Fraction], ...]
    total: Fraction | None

    @property
    def anomalous(self) -> bool:
        return self.zeros is None


def _validate(T: LinOp, r: Poly) -> None:
    if T.n < 2:
        raise InvalidArgument("pinch paths need n >= 2")
    if r.is_zero() or r.lc != 1:
        raise InvalidArgument("r must be monic")
    if r.degree != T.n - 2:
        raise InvalidArgument(f"deg r = {r.degree}, expected n - 2 = {T.n - 2}")
    if not is_hyperbolic(r):
        raise InvalidArgument("r must be hyperbolic")


def _sample(t: Fraction, path: Poly, image: Poly, width: Fraction) -> PathSample:
    if image.is_zero() or not is_hyperbolic(image):
        return PathSample(t, path, image, None, (), None)
    m = image.degree
    zeros = root_vector(image, width)
    total = -image.coefficient(m - 1) / image.lc if m >= 1 else Fraction(0)
    sums = [zeros.top_sum_bounds(k) for k in range(1, m)]
    if m >= 1:
        sums.append((total, total))
    return PathSample(t, path, image, zeros, tuple(sums), total)


def path_samples(
    T: LinOp,
    r: Poly,
    s: RationalLike = 0,
    t_grid: Sequence[RationalLike] | None = None,
    width: RationalLike = DEFAULT_WIDTH,
) -> list[PathSample]:
    """Exact images ``T(p_t)`` with root enclosures of width at most ``width``.

    The path depends on ``t`` only through ``t^2``, so ``t`` and ``-t``
    share one image and one set of enclosures.
    """
    _validate(T, r)
    s, width = as_rational(s), as_rational(width)
    if width <= 0:
        raise InvalidArgument("width must be positive")
    grid = uniform_grid() if t_grid is None else [as_rational(t) for t in t_grid]
    cache: dict[Fraction, PathSample] = {}
    out = []
    for t in grid:
        key = t * t
        if key not in cache:
            path = path_polynomial(r, s, t)
            cache[key] = _sample(t, path, apply(T, path), width)
        base = cache[key]
        out.append(PathSample(t, base.path, base.image, base.zeros, base.partial_sums, base.total))
    return out


@dataclass(frozen=True)
class PathViolation:
    """A certified failure: ``margin > 0`` is the excess beyond the tolerance."""

    check: str
    index: int
    k: int | None
    t: tuple[Fraction, ...]
    margin: Fraction
    reason: str | None = None


@dataclass(frozen=True)
class PathReport:
    grid: tuple[Fraction, ...]
    tolerance: Fraction
    convexity_violations: tuple[PathViolation, ...] = ()
    evenness_violations: tuple[PathViolation, ...] = ()
    monotonicity_violations: tuple[PathViolation, ...] = ()
    anomalies: tuple[Fraction, ...] = ()
    totals_constant: bool = True
    images_even: bool = True

    @property
    def clean(self) -> bool:
        return not (
            self.convexity_violations
            or self.evenness_violations
            or self.monotonicity_violations
            or self.anomalies
        ) and self.totals_constant and self.images_even

    def merge(self, other: PathReport) -> PathReport:
        return PathReport(
            self.grid,
            self.tolerance,
            self.convexity_violations + other.convexity_violations,
            self.evenness_violations + other.evenness_violations,
            self.monotonicity_violations + other.monotonicity_violations,
            tuple(sorted(set(self.anomalies) | set(other.anomalies))),
            self.totals_constant and other.totals_constant,
            self.images_even and other.images_even,
        )


def _require_symmetric_uniform(grid: list[Fraction]) -> None:
    if len(grid) < 1:
        raise InvalidArgument("empty grid")
    if any(a >= b for a, b in zip(grid, grid[1:])):
        raise InvalidArgument("grid must be strictly increasing")
    if any(grid[j] != -grid[-1 - j] for j in range(len(grid))):
        raise InvalidArgument("grid must be symmetric about 0")
    steps = {b - a for a, b in zip(grid, grid[1:])}
    if len(steps) > 1:
        raise InvalidArgument("grid must be uniformly spaced")


def _totals_constant(samples: Sequence[PathSample]) -> bool:
    return len({smp.total for smp in samples if not smp.anomalous}) <= 1


def check_convex_even(samples: Sequence[PathSample], tolerance: RationalLike = DEFAULT_TOLERANCE) -> PathReport:
    """Midpoint convexity and evenness of every partial sum on a symmetric uniform grid.

    A convexity violation is recorded when even the upper bound of the
    second difference is below ``-tolerance``; an evenness violation when
    the two enclosures are more than ``tolerance`` apart.
    """
    tolerance = as_rational(tolerance)
    if tolerance < 0:
        raise InvalidArgument("negative tolerance")
    grid = [smp.t for smp in samples]
    _require_symmetric_uniform(grid)
    conv, even = [], []
    for j in range(1, len(samples) - 1):
        a, b, c = samples[j - 1], samples[j], samples[j + 1]
        if a.anomalous or b.anomalous or c.anomalous:
            continue
        for k in range(1, min(len(a.partial_sums), len(b.partial_sums), len(c.partial_sums)) + 1):
            upper = a.partial_sums[k - 1][1] + c.partial_sums[k - 1][1] - 2 * b.partial_sums[k - 1][0]
            if upper < -tolerance:
                conv.append(PathViolation("convexity", j, k, (a.t, b.t, c.t), -tolerance - upper))
    images_even = True
    for j in range(len(samples) // 2):
        u, v = samples[j], samples[-1 - j]
        if u.image != v.image:
            images_even = False
        if u.anomalous or v.anomalous:
            continue
        for k in range(1, len(u.partial_sums) + 1):
            (ulo, uhi), (vlo, vhi) = u.partial_sums[k - 1], v.partial_sums[k - 1]
            gap = max(ulo - vhi, vlo - uhi)
            if gap > tolerance:
                even.append(PathViolation("evenness", j, k, (u.t, v.t), gap - tolerance))
    return PathReport(
        tuple(grid),
        tolerance,
        convexity_violations=tuple(conv),
        evenness_violations=tuple(even),
        anomalies=tuple(smp.t for smp in samples if smp.anomalous),
        totals_constant=_totals_constant(samples),
        images_even=images_even,
    )


def check_majorization_monotone(
    samples: Sequence[PathSample], eq_threshold: RationalLike = DEFAULT_EQ_THRESHOLD
) -> PathReport:
    """``T(p_{t1}) ≺ T(p_{t2})`` for consecutive grid points ``0 <= t1 < t2``."""
    eq_threshold = as_rational(eq_threshold)
    grid = [smp.t for smp in samples]
    if any(a > b for a, b in zip(grid, grid[1:])):
        raise InvalidArgument("grid must be sorted")
    pos = [(i, smp) for i, smp in enumerate(samples) if smp.t >= 0]
    viol = []
    for (_, u), (j, v) in zip(pos, pos[1:]):
        if u.anomalous or v.anomalous:
            continue
        verdict = majorizes(u.image, v.image, eq_threshold)
        if verdict.relation is Relation.NOT_MAJORIZED:
            viol.append(PathViolation("monotonicity", j, verdict.failing_index, (u.t, v.t), verdict.margin, verdict.reason))
    return PathReport(
        tuple(grid),
        Fraction(0),
        monotonicity_violations=tuple(viol),
        anomalies=tuple(smp.t for smp in samples if smp.anomalous),
        totals_constant=_totals_constant(samples),
    )


def run_path_checks(
    T: LinOp,
    r: Poly,
    s: RationalLike = 0,
    t_grid: Sequence[RationalLike] | None = None,
    width: RationalLike = DEFAULT_WIDTH,
    tolerance: RationalLike = DEFAULT_TOLERANCE,
    eq_threshold: RationalLike = DEFAULT_EQ_THRESHOLD,
) -> tuple[list[PathSample], PathReport]:
    samples = path_samples(T, r, s, t_grid, width)
    report = check_convex_even(samples, tolerance).merge(check_majorization_monotone(samples, eq_threshold))
    return samples, report


def promote(
    report: PathReport, samples: Sequence[PathSample], r: Poly, s: RationalLike, width: RationalLike = DEFAULT_WIDTH
) -> Certificate | None:
    """Turn the first certified violation into a refutation certificate.

    Monotonicity failures become majorizing input pairs whose images are
    out of order; convexity failures carry the three grid points.
    """
    s = as_rational(s)
    by_t = {smp.t: smp for smp in samples}
    for v in report.monotonicity_violations:
        t1, t2 = v.t
        return Certificate(
            "zero_path",
            "image_not_majorized",
            {"p": by_t[t1].path, "q": by_t[t2].path, "t1": t1, "t2": t2, "r": r, "s": s,
             "failing_index": v.k, "margin": v.margin},
        )
    for v in report.convexity_violations:
        return Certificate(
            "zero_path",
            "path_not_convex",
            {"r": r, "s": s, "k": v.k, "t": list(v.t), "width": as_rational(width), "margin": v.margin},
        )
    return None


def convexity_still_fails(T: LinOp, data: dict) -> bool:
    """Recompute a ``path_not_convex`` certificate: the second difference must be certifiably negative."""
    r, s, k, ts, width = data["r"], data["s"], data["k"], data["t"], data["width"]
    a, b, c = ts
    if not (b - a == c - b > 0):
        return False
    try:
        samples = path_samples(T, r, s, ts, width)
    except InvalidArgument:
        return False
    if any(smp.anomalous or len(smp.partial_sums) < k for smp in samples):
        return False
    sa, sb, sc = (smp.partial_sums[k - 1] for smp in samples)
    return sa[1] + sc[1] - 2 * sb[0] < 0

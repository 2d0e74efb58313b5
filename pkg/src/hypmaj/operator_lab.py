"""Linear operators on polynomials and their classification as majorization preservers.

An operator ``T: R_n[z] -> R[z]`` is stored by its monomial images
``T(z^0), ..., T(z^n)``.  Degenerate operators (image of dimension at most
two) are decided exactly.  For nondegenerate operators the classifier runs
exact necessary conditions first and then two randomized falsifiers: line
restrictions of the symbol (against real stability) and sampled pinch pairs
(against preservation itself).  Only refutations are certified there.
"""

from __future__ import annotations

import enum
import hashlib
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Sequence

from .errors import InvalidArgument, WrongBranch
from .exact_poly import MINUS_INFINITY, Poly, RationalLike, as_rational, is_hyperbolic
from .hyperbolic_order import (
    DEFAULT_EQ_THRESHOLD,
    Relation,
    interlaces,
    interlacing_is_vacuous,
    majorizes,
)
from .pinch_chain import random_pinch_pair


def derive_seed(master: int, *parts) -> int:
    """Per-sample seed as a pure function of the master seed and a label."""
    key = ":".join(str(x) for x in (master, *parts)).encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big")


# -- operators --------------------------------------------------------------


@dataclass(frozen=True)
class LinOp:
    """``images[k] = T(z^k)`` for ``k = 0..n``."""

    n: int
    images: tuple[Poly, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgument("operators act on R_n[z] with n >= 1")
        imgs = tuple(_to_poly(p) for p in self.images)
        if len(imgs) != self.n + 1:
            raise InvalidArgument(f"expected {self.n + 1} images, got {len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def from_images(cls, images: Sequence) -> LinOp:
        return cls(len(images) - 1, tuple(images))

    @classmethod
    def identity(cls, n: int) -> LinOp:
        return cls(n, tuple(Poly.monomial(k) for k in range(n + 1)))

    @classmethod
    def derivative(cls, n: int) -> LinOp:
        return cls(n, tuple(Poly.monomial(k).derivative() for k in range(n + 1)))

    @classmethod
    def affine(cls, n: int, a: RationalLike, b: RationalLike) -> LinOp:
        """``p(z) -> p(a z + b)``."""
        return cls(n, tuple(Poly.monomial(k).compose_affine(a, b) for k in range(n + 1)))

    def __call__(self, p: Poly) -> Poly:
        return apply(self, p)

    def __add__(self, other: LinOp) -> LinOp:
        if other.n != self.n:
            raise InvalidArgument("operators on different spaces")
        return LinOp(self.n, tuple(a + b for a, b in zip(self.images, other.images)))

    def scaled(self, c: RationalLike) -> LinOp:
        return LinOp(self.n, tuple(p * c for p in self.images))

    def degrees(self) -> tuple:
        return tuple(p.degree for p in self.images)


def _to_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction, str)):
        return Poly([x])
    return Poly(x)


def apply(T: LinOp, p: Poly) -> Poly:
    if p.degree > T.n:
        raise InvalidArgument(f"deg p = {p.degree} exceeds n = {T.n}")
    out = Poly()
    for a, img in zip(p.coeffs, T.images):
        if a:
            out = out + img * a
    return out


# -- symbol -----------------------------------------------------------------


@dataclass(frozen=True)
class Symbol:
    """Bivariate polynomial with ``coeffs[j][l]`` the coefficient of ``z^j w^l``."""

    coeffs: tuple[tuple[Fraction, ...], ...]

    @property
    def w_degree(self) -> int:
        return len(self.coeffs[0]) - 1 if self.coeffs else -1

    def w_coefficients(self) -> list[Poly]:
        """``P_l(z)`` with ``F = sum_l P_l(z) w^l``."""
        if not self.coeffs:
            return []
        return [Poly(row[l] for row in self.coeffs) for l in range(len(self.coeffs[0]))]

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.coeffs for c in row)

    def reflect(self) -> Symbol:
        """Substitute ``w -> -w``."""
        return Symbol(tuple(tuple(c if l % 2 == 0 else -c for l, c in enumerate(row)) for row in self.coeffs))

    def __call__(self, z: RationalLike, w: RationalLike) -> Fraction:
        z, w = as_rational(z), as_rational(w)
        return sum((c * z**j * w**l for j, row in enumerate(self.coeffs) for l, c in enumerate(row)), Fraction(0))

    def restrict(self, a: RationalLike, b: RationalLike, c: RationalLike, d: RationalLike) -> Poly:
        """The univariate polynomial ``t -> F(a t + c, b t + d)``."""
        out = Poly()
        wline = Poly([d, b])
        wpow = Poly([1])
        for P in self.w_coefficients():
            if P:
                out = out + P.compose_affine(a, c) * wpow
            wpow = wpow * wline
        return out

    @cached_property
    def _int_rows(self) -> tuple[tuple[int, ...], ...]:
        den = 1
        for row in self.coeffs:
            for c in row:
                den = den * c.denominator // math.gcd(den, c.denominator)
        return tuple(tuple(int(c * den) for c in row) for row in self.coeffs)

    def restrict_scaled(self, a, b, c, d) -> tuple[int, ...]:
        """Integer coefficients of a positive multiple of :meth:`restrict`."""
        a, b, c, d = (as_rational(v) for v in (a, b, c, d))
        D = math.lcm(a.denominator, b.denominator, c.denominator, d.denominator)
        A, B, C, E = (int(v * D) for v in (a, b, c, d))
        rows = self._int_rows
        jmax = len(rows) - 1
        lmax = self.w_degree
        top = jmax + lmax
        zp = _int_powers(A, C, jmax)
        wp = _int_powers(B, E, lmax)
        Dp = [D**k for k in range(top + 1)]
        out = [0] * (top + 1)
        for j, row in enumerate(rows):
            for l, coef in enumerate(row):
                if coef:
                    m = coef * Dp[top - j - l]
                    for u, x in enumerate(zp[j]):
                        if x:
                            mx = m * x
                            for v, y in enumerate(wp[l]):
                                out[u + v] += mx * y
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def __add__(self, other: Symbol) -> Symbol:
        rows = max(len(self.coeffs), len(other.coeffs))
        cols = max(self.w_degree, other.w_degree) + 1

        def entry(S, j, l):
            if j < len(S.coeffs) and l < len(S.coeffs[j]):
                return S.coeffs[j][l]
            return Fraction(0)

        summed = tuple(tuple(entry(self, j, l) + entry(other, j, l) for l in range(cols)) for j in range(rows))
        return Symbol(_trim_rows(summed))


def _int_powers(a: int, c: int, k: int) -> list[list[int]]:
    """Ascending coefficients of ``(a t + c)^i`` for ``i = 0..k``."""
    out = [[1]]
    for _ in range(k):
        prev = out[-1]
        nxt = [0] * (len(prev) + 1)
        for i, v in enumerate(prev):
            nxt[i] += v * c
            nxt[i + 1] += v * a
        out.append(nxt)
    return out


def _trim_rows(rows):
    rows = list(rows)
    while rows and all(c == 0 for c in rows[-1]):
        rows.pop()
    return tuple(rows)


def symbol(T: LinOp, reflect: bool = False) -> Symbol:
    """``F_T(z, w) = sum_k C(n, k) T(z^k) w^(n-k)``, optionally with ``w -> -w``."""
    n = T.n
    zdeg = max((len(p.coeffs) for p in T.images), default=0)
    m = [[Fraction(0)] * (n + 1) for _ in range(zdeg)]
    for k, img in enumerate(T.images):
        for j, c in enumerate(img.coeffs):
            m[j][n - k] += comb(n, k) * c
    F = Symbol(tuple(tuple(row) for row in m))
    return F.reflect() if reflect else F


# -- rank and degeneracy -----------------------------------------------------


def rank_of_image(T: LinOp) -> int:
    """Exact rank of the coefficient matrix of the images."""
    rows = [list(p.coeffs) for p in T.images if p]
    width = max((len(r) for r in rows), default=0)
    rows = [r + [Fraction(0)] * (width - len(r)) for r in rows]
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col] / pr[col]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
    return rank


def is_degenerate(T: LinOp) -> bool:
    return rank_of_image(T) <= 2


def is_scalar_multiple(f: Poly, g: Poly) -> bool:
    """True iff ``f = c g`` for some rational ``c`` (``g`` nonzero)."""
    if not g:
        raise InvalidArgument("reference polynomial must be nonzero")
    if not f:
        return True
    if f.degree != g.degree:
        return False
    c = f.lc / g.lc
    return f == g * c


# -- reports ----------------------------------------------------------------


class Verdict(str, enum.Enum):
    CERTIFIED_PRESERVER = "CertifiedPreserver"
    CERTIFIED_NON_PRESERVER = "CertifiedNonPreserver"
    REFUTED_NON_PRESERVER = "RefutedNonPreserver"
    NOT_REFUTED = "NotRefuted"


@dataclass(frozen=True)
class Certificate:
    """Exactly re-checkable evidence against preservation.

    ``kind`` is one of ``"clause"`` (degenerate case), ``"structure"`` (degree
    or gamma filters), ``"stability"`` (line restrictions of both symbols),
    ``"behavioral"`` (a pinch pair whose images break the order) or
    ``"zero_path"`` (a monotonicity failure along a pinch path).
    """

    kind: str
    clause: str
    data: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    certificate: Certificate | None = None
    evidence: dict = field(default_factory=dict)
    ledger: tuple[dict, ...] = ()


def _entry(check: str, passed: bool, **detail) -> dict:
    return {"check": check, "passed": passed, **detail}


def _degenerate_clauses(T: LinOp) -> tuple[list[dict], Certificate | None, dict]:
    n, imgs = T.n, T.images
    ledger = []
    evidence = {}
    for k in range(n - 1):
        if imgs[k]:
            ledger.append(_entry("lower_images_vanish", False, k=k))
            return ledger, Certificate("clause", "lower_images_vanish", {"k": k, "image": imgs[k]}), evidence
    ledger.append(_entry("lower_images_vanish", True))
    top, second = imgs[n], imgs[n - 1]
    if not top:
        ledger.append(_entry("top_image_nonzero", False))
        return ledger, Certificate("clause", "top_image_nonzero", {"image": top}), evidence
    ledger.append(_entry("top_image_nonzero", True))
    if not is_hyperbolic(top):
        ledger.append(_entry("top_image_hyperbolic", False))
        return ledger, Certificate("clause", "top_image_hyperbolic", {"image": top}), evidence
    ledger.append(_entry("top_image_hyperbolic", True))
    if not second:
        ledger.append(_entry("second_image", True, case="zero"))
        return ledger, None, evidence
    if not is_hyperbolic(second):
        ledger.append(_entry("second_image_hyperbolic", False))
        return ledger, Certificate("clause", "second_image_hyperbolic", {"image": second}), evidence
    ledger.append(_entry("second_image_hyperbolic", True))
    if is_scalar_multiple(second, top):
        ledger.append(_entry("second_image_not_multiple", False))
        return ledger, Certificate("clause", "second_image_not_multiple", {"image": second, "top": top}), evidence
    ledger.append(_entry("second_image_not_multiple", True))
    if not interlaces(second, top):
        ledger.append(_entry("images_interlace", False))
        return ledger, Certificate("clause", "images_interlace", {"image": second, "top": top}), evidence
    vacuous = interlacing_is_vacuous(second, top)
    ledger.append(_entry("images_interlace", True, vacuous=vacuous))
    if vacuous:
        evidence["vacuous_interlacing"] = True
    return ledger, None, evidence


def classify_degenerate(T: LinOp) -> ClassificationReport:
    """Exact decision for degenerate operators (at most two-dimensional image)."""
    rank = rank_of_image(T)
    if rank > 2:
        raise WrongBranch(f"operator has image rank {rank}; use classify")
    ledger, cert, evidence = _degenerate_clauses(T)
    evidence = {"branch": "degenerate", "rank": rank, **evidence}
    verdict = Verdict.CERTIFIED_PRESERVER if cert is None else Verdict.CERTIFIED_NON_PRESERVER
    return ClassificationReport(verdict, cert, evidence, tuple(ledger))


# -- exact necessary filters -------------------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    """Degrees of ``T(z^k)`` and the indices ``K <= L <= M <= N`` read off them."""

    degs: tuple
    K: int | None
    L: int | None
    M: int | None
    N: int | None
    violation: str | None = None


def degree_profile(T: LinOp) -> tuple[DegreeProfile, bool]:
    degs = T.degrees()
    n = T.n
    support = [k for k, d in enumerate(degs) if d != MINUS_INFINITY]
    if not support:
        return DegreeProfile(degs, None, None, None, None, "empty_support"), False
    K, N = support[0], support[-1]
    if support != list(range(K, N + 1)):
        return DegreeProfile(degs, K, None, None, N, "support_not_interval"), False
    L = K
    while L < N and degs[L + 1] == degs[L] + 1:
        L += 1
    M = N
    while M > L and degs[M - 1] == degs[M] + 1:
        M -= 1
    violation = None
    if degs[L] != degs[M] or any(degs[k] > degs[L] for k in range(L, M + 1)):
        violation = "plateau"
    elif not L == M == N == n:
        violation = "top_not_n"
    return DegreeProfile(degs, K, L, M, N, violation), violation is None


@dataclass(frozen=True)
class GammaSeq:
    """``gamma[k]`` is the coefficient of ``z^(r+k)`` in ``T(z^k)``."""

    r: int
    gamma: tuple[Fraction, ...]
    violation: str | None = None

    @property
    def support(self) -> list[int]:
        return [k for k, g in enumerate(self.gamma) if g != 0]


def gamma_sequence(T: LinOp) -> tuple[GammaSeq, bool]:
    prof, _ = degree_profile(T)
    if prof.K is None:
        raise WrongBranch("all images vanish; gamma sequence undefined")
    r = T.images[prof.K].degree - prof.K
    gamma = tuple(T.images[k].coefficient(r + k) if r + k >= 0 else Fraction(0) for k in range(T.n + 1))
    support = [k for k, g in enumerate(gamma) if g != 0]
    violation = None
    if support != list(range(support[0], support[-1] + 1)):
        violation = "support_not_interval"
    else:
        signs = [1 if gamma[k] > 0 else -1 for k in support]
        constant = all(s == signs[0] for s in signs)
        alternating = all(u == -v for u, v in zip(signs, signs[1:]))
        if not (constant or alternating):
            violation = "sign_pattern"
    return GammaSeq(r, gamma, violation), violation is None


def top_degree_dominates(T: LinOp) -> tuple[bool, int | None]:
    """``deg T(z^n) > deg T(z^k)`` for all ``k < n``; returns the first offending ``k``."""
    top = T.images[T.n].degree
    for k in range(T.n):
        if not T.images[k].degree < top:
            return False, k
    return True, None


# -- falsifiers -------------------------------------------------------------

# Offsets outside, directions inside; c = 0 loses nothing since t can be shifted.
_GRID_OFFSETS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(-1, 2))
_GRID_DIRECTIONS = ((1, 2), (2, 1), (1, 1), (1, 3), (3, 1), (2, 3), (3, 2))


def line_grid() -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    return [(Fraction(a), Fraction(b), Fraction(0), d) for d in _GRID_OFFSETS for a, b in _GRID_DIRECTIONS]


def random_line(seed: int, index: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    rng = random.Random(derive_seed(seed, "line", index))
    a = Fraction(rng.randint(1, 1000), rng.randint(1, 1000))
    b = Fraction(rng.randint(1, 1000), rng.randint(1, 1000))
    c = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
    d = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
    return a, b, c, d


@dataclass(frozen=True)
class FalsifierRun:
    """Outcome of a falsifier: a certificate (lowest failing sample) or the tallies."""

    certificate: Certificate | None
    trials: int
    tally: dict = field(default_factory=dict)

    @property
    def refuted(self) -> bool:
        return self.certificate is not None


def restriction_refutes(F: Symbol, line) -> Poly | None:
    """The restriction of ``F`` to ``line`` when it proves ``F`` is not stable."""
    g = F.restrict_scaled(*line)
    if g and not is_hyperbolic(Poly(g)):
        return F.restrict(*line)
    return None


def falsify_stability(F: Symbol, samples: int, seed: int) -> FalsifierRun:
    """Look for a line ``t -> (a t + c, b t + d)`` with ``a, b > 0`` on which ``F`` is not real-rooted.

    A fixed grid is swept before ``samples`` seeded random lines.
    """
    if samples < 0:
        raise InvalidArgument("samples must be nonnegative")
    grid = line_grid()
    for index in range(len(grid) + samples):
        line = grid[index] if index < len(grid) else random_line(seed, index - len(grid))
        g = restriction_refutes(F, line)
        if g is not None:
            a, b, c, d = line
            cert = Certificate(
                "stability",
                "line_restriction",
                {"a": a, "b": b, "c": c, "d": d, "restriction": g, "sample": index, "grid": index < len(grid)},
            )
            return FalsifierRun(cert, index + 1)
    return FalsifierRun(None, len(grid) + samples)


def _behavioral_check(T: LinOp, p: Poly, q: Poly, eq_threshold) -> tuple[tuple[str, dict] | None, Relation | None]:
    """``(failure, relation)``: the failed clause with details, and the order verdict if reached."""
    Tp, Tq = apply(T, p), apply(T, q)
    for name, img in (("T(q)", Tq), ("T(p)", Tp)):
        if not is_hyperbolic(img):
            return ("image_not_hyperbolic", {"which": name}), None
    if Tp.degree != Tq.degree:
        return ("image_degree_mismatch", {}), None
    if Tp.lc != Tq.lc:
        return ("image_leading_coefficient_mismatch", {}), None
    verdict = majorizes(Tp, Tq, eq_threshold)
    if verdict.relation is Relation.NOT_MAJORIZED:
        detail = {"failing_index": verdict.failing_index, "margin": verdict.margin, "reason": verdict.reason}
        return ("image_not_majorized", detail), verdict.relation
    return None, verdict.relation


def falsify_preservation(
    T: LinOp,
    samples: int,
    seed: int,
    eq_threshold: RationalLike = DEFAULT_EQ_THRESHOLD,
    bound: RationalLike = 10,
) -> FalsifierRun:
    """Sample pinch pairs ``p ≺ q`` and look for ``T(p) ⊀ T(q)``.

    Also enforces ``T(H_n) ⊆ H_m``: every sampled image must be hyperbolic of
    one common degree.  Ties under ``eq_threshold`` never refute.
    """
    if samples < 1:
        raise InvalidArgument("samples must be >= 1")
    n = T.n
    tally = {r.value: 0 for r in Relation}
    common = None  # (degree, witness input)
    for index in range(samples):
        p, q = random_pinch_pair(max(n, 2), derive_seed(seed, "pinch", index), bound)
        if n == 1:
            # reduce to R_1 through the derivative
            p, q = p.derivative() * Fraction(1, 2), q.derivative() * Fraction(1, 2)
        fail, rel = _behavioral_check(T, p, q, eq_threshold)
        if fail is None:
            m = apply(T, q).degree
            if common is None:
                common = (m, q)
            elif m != common[0]:
                fail = "image_degree_varies", {"other_input": common[1], "other_degree": common[0]}
        if fail is not None:
            clause, extra = fail
            data = {"p": p, "q": q, "T(p)": apply(T, p), "T(q)": apply(T, q), "sample": index, **extra}
            return FalsifierRun(Certificate("behavioral", clause, data), index + 1, tally)
        tally[rel.value] += 1
    if common is not None:
        tally["image_degree"] = common[0]
    return FalsifierRun(None, samples, tally)


# -- orchestration ----------------------------------------------------------


@dataclass(frozen=True)
class Budget:
    """Sampling parameters for :func:`classify`."""

    samples: int = 2000
    seed: int = 0
    eq_threshold: Fraction = DEFAULT_EQ_THRESHOLD
    stability_samples: int | None = None
    bound: Fraction = Fraction(10)

    @property
    def lines(self) -> int:
        return self.samples if self.stability_samples is None else self.stability_samples


def classify(T: LinOp, budget: Budget = Budget()) -> ClassificationReport:
    """Classify ``T`` as a majorization preserver.

    Degenerate operators are decided exactly.  Nondegenerate ones are either
    refuted with a checkable certificate or reported as not refuted.
    """
    rank = rank_of_image(T)
    if rank <= 2:
        return classify_degenerate(T)
    ledger = []
    evidence: dict = {"branch": "nondegenerate", "rank": rank, "seed": budget.seed}

    def refuted(cert: Certificate) -> ClassificationReport:
        return ClassificationReport(Verdict.REFUTED_NON_PRESERVER, cert, evidence, tuple(ledger))

    ok, k = top_degree_dominates(T)
    ledger.append(_entry("top_degree_dominates", ok, **({} if ok else {"k": k})))
    if not ok:
        return refuted(Certificate("structure", "top_degree_dominates", {"k": k}))

    prof, ok = degree_profile(T)
    ledger.append(_entry("degree_profile", ok, K=prof.K, L=prof.L, M=prof.M, N=prof.N, violation=prof.violation))
    if not ok:
        return refuted(Certificate("structure", "degree_profile", {"violation": prof.violation, "degs": prof.degs}))

    gam, ok = gamma_sequence(T)
    ledger.append(_entry("gamma_sequence", ok, r=gam.r, violation=gam.violation))
    if not ok:
        return refuted(Certificate("structure", "gamma_sequence", {"violation": gam.violation, "gamma": gam.gamma}))

    plain = falsify_stability(symbol(T), budget.lines, derive_seed(budget.seed, "symbol"))
    reflected = falsify_stability(symbol(T, reflect=True), budget.lines, derive_seed(budget.seed, "reflected"))
    both = plain.refuted and reflected.refuted
    ledger.append(
        _entry(
            "symbol_stability",
            not both,
            plain_refuted=plain.refuted,
            reflected_refuted=reflected.refuted,
            lines_tested=[plain.trials, reflected.trials],
        )
    )
    evidence["lines_tested"] = {"plain": plain.trials, "reflected": reflected.trials}
    if both:
        return refuted(
            Certificate(
                "stability",
                "symbol_not_stable",
                {"plain": plain.certificate.data, "reflected": reflected.certificate.data},
            )
        )

    run = falsify_preservation(T, budget.samples, derive_seed(budget.seed, "behavior"), budget.eq_threshold, budget.bound)
    ledger.append(_entry("behavioral", not run.refuted, samples=run.trials))
    evidence["behavioral_samples"] = run.trials
    evidence["tally"] = run.tally
    if run.refuted:
        return refuted(run.certificate)
    return ClassificationReport(Verdict.NOT_REFUTED, None, evidence, tuple(ledger))


# -- certificate checking ---------------------------------------------------


def verify_certificate(T: LinOp, cert: Certificate, eq_threshold: RationalLike = DEFAULT_EQ_THRESHOLD) -> bool:
    """Re-derive a certificate from scratch; True iff it still refutes ``T``."""
    d = cert.data
    if cert.kind == "clause":
        _, again, _ = _degenerate_clauses(T)
        return is_degenerate(T) and again is not None and again.clause == cert.clause
    if cert.kind == "structure":
        if cert.clause == "top_degree_dominates":
            k = d["k"]
            return T.images[k].degree >= T.images[T.n].degree
        if cert.clause == "degree_profile":
            return not degree_profile(T)[1]
        if cert.clause == "gamma_sequence":
            return not gamma_sequence(T)[1]
        return False
    if cert.kind == "stability":
        if cert.clause == "line_restriction":
            return _line_still_refutes(symbol(T), d) or _line_still_refutes(symbol(T, reflect=True), d)
        return _line_still_refutes(symbol(T), d["plain"]) and _line_still_refutes(symbol(T, reflect=True), d["reflected"])
    if cert.kind == "zero_path" and cert.clause == "path_not_convex":
        from .eigen_path import convexity_still_fails

        return convexity_still_fails(T, d)
    if cert.kind in ("behavioral", "zero_path"):
        p, q = d["p"], d["q"]
        # the inputs must be a genuine majorizing pair in H_n
        if not (is_hyperbolic(p) and is_hyperbolic(q) and p.degree == q.degree == T.n):
            return False
        if majorizes(p, q, eq_threshold).relation is not Relation.MAJORIZED:
            return False
        if cert.clause == "image_degree_varies":
            other = d["other_input"]
            return is_hyperbolic(other) and other.degree == T.n and apply(T, other).degree != apply(T, q).degree
        return _behavioral_check(T, p, q, eq_threshold)[0] is not None
    return False


def _line_still_refutes(F: Symbol, d: dict) -> bool:
    a, b = d["a"], d["b"]
    if not (a > 0 and b > 0):
        return False
    g = F.restrict(a, b, d["c"], d["d"])
    return g == d["restriction"] and bool(g) and not is_hyperbolic(g)

"""Exact univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` values stored in ascending
degree order.  On top of the arithmetic this module provides Yun's
squarefree decomposition, Sturm sequences, real-root isolation by
bisection and an exact test for sign-constancy on the real line.  No
floating point enters any of the decisions made here.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from . import _zpoly as _z
from .errors import ContractViolation, InvalidArgument

# Degree of the zero polynomial.  A float so it orders below every int and
# survives ``deg + 1`` style bookkeeping.
MINUS_INFINITY = float("-inf")

RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact coefficient {value!r}")
    return Fraction(value)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


class Poly:
    """Immutable dense polynomial in ``z`` with rational coefficients.

    >>> Poly([-1, 0, 1])
    Poly('z^2 - 1')
    >>> Poly([-1, 0, 1]).derivative()
    Poly('2*z')
    """

    __slots__ = ("coeffs", "_hash", "_ints")

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None
        self._ints = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def constant(cls, c: RationalLike) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> Poly:
        if k < 0:
            raise InvalidArgument("monomial exponent must be nonnegative")
        return cls([0] * k + [c])

    @classmethod
    def z(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike], lead: RationalLike = 1) -> Poly:
        out = cls([lead])
        for r in roots:
            out = out * cls([-as_rational(r), 1])
        return out

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self):
        """Degree, or ``MINUS_INFINITY`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def integer_coeffs(self) -> tuple[int, ...]:
        """Primitive integer coefficients, a positive multiple of ``self``."""
        if self._ints is None:
            den = 1
            for c in self.coeffs:
                den = den * c.denominator // math.gcd(den, c.denominator)
            ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
            g = 0
            for v in ints:
                g = math.gcd(g, v)
            self._ints = tuple(v // g for v in ints) if g > 1 else tuple(ints)
        return self._ints

    def sign_at(self, x: Fraction) -> int:
        """Sign of ``p(x)`` using integer arithmetic only."""
        ints = self.integer_coeffs()
        if not ints:
            return 0
        a, b = x.numerator, x.denominator
        # acc = p(a/b) * b^deg, with b > 0
        acc = ints[-1]
        bp = b
        for c in reversed(ints[:-1]):
            acc = acc * a + c * bp
            bp *= b
        return (acc > 0) - (acc < 0)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly([other])

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            c = as_rational(other)
            return Poly([c * a for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise InvalidArgument("negative polynomial power")
        out, base = Poly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        other = self._coerce(other)
        if other.is_zero():
            raise InvalidArgument("division by the zero polynomial")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lb = other.coeffs[-1]
        if len(rem) - 1 < db:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] / lb
            quo[i - db] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i - db + j] -= c * b
        return Poly(quo), Poly(rem[:db])

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise InvalidArgument(f"{other} does not divide {self}")
        return q

    def derivative(self) -> Poly:
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def compose_affine(self, a: RationalLike, b: RationalLike) -> Poly:
        """Return ``p(a*z + b)``."""
        lin = Poly([b, a])
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def monic(self) -> Poly:
        if self.is_zero():
            raise InvalidArgument("the zero polynomial has no monic associate")
        return self * (1 / self.lc)

    def scale_positive(self) -> Poly:
        """Divide by ``|lc|``; keeps signs everywhere, shrinks coefficients."""
        if self.is_zero():
            return self
        return self * (1 / abs(self.lc))

    # -- display ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "z" if k == 1 else f"z^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    if not q:
        return p.monic() if p else p
    if not p:
        return q.monic()
    return Poly(_z.gcd(p.integer_coeffs(), q.integer_coeffs())).monic()


def cauchy_bound(p: Poly) -> Fraction:
    """All complex roots of ``p`` lie strictly inside ``|z| < bound``."""
    if p.degree == MINUS_INFINITY or p.degree < 1:
        return Fraction(1)
    lead = abs(p.lc)
    return 1 + max(abs(c) / lead for c in p.coeffs[:-1])


def _ceil_log2(r: Fraction) -> int:
    """Smallest integer ``e`` with ``r <= 2**e`` for ``r > 0``."""
    e = r.numerator.bit_length() - r.denominator.bit_length()
    while Fraction(2) ** e < r:
        e += 1
    while Fraction(2) ** (e - 1) >= r:
        e -= 1
    return e


def root_bound(p: Poly) -> Fraction:
    """A power of two strictly exceeding the modulus of every root.

    Fujiwara's bound ``2 max |a_{n-i}/a_n|^(1/i)`` rounded up to a power
    of two; usually far tighter than :func:`cauchy_bound`.
    """
    n = p.degree
    if n == MINUS_INFINITY or n < 1:
        return Fraction(1)
    lead = abs(p.lc)
    e = None
    for i in range(1, n + 1):
        c = abs(p.coeffs[n - i])
        if c:
            ei = -((-_ceil_log2(c / lead)) // i)  # ceil(log2(c)/i)
            e = ei if e is None else max(e, ei)
    if e is None:
        return Fraction(1)
    return Fraction(2) ** (e + 2)


# -- squarefree decomposition ----------------------------------------------


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """``p = content * prod(f**m for f, m in factors)`` with monic coprime ``f``."""

    content: Fraction
    factors: tuple[tuple[Poly, int], ...]

    @property
    def radical(self) -> Poly:
        out = Poly([1])
        for f, _ in self.factors:
            out = out * f
        return out

    @property
    def odd_part(self) -> Poly:
        out = Poly([1])
        for f, m in self.factors:
            if m % 2:
                out = out * f
        return out

    def expand(self) -> Poly:
        out = Poly([self.content])
        for f, m in self.factors:
            out = out * f**m
        return out

    def multiplicity_of(self, x: Fraction) -> int:
        for f, m in self.factors:
            if f(x) == 0:
                return m
        return 0


@lru_cache(maxsize=4096)
def squarefree_decomposition(p: Poly) -> SquarefreeDecomposition:
    """Yun's algorithm (run over Z on the primitive integer form).

    >>> d = squarefree_decomposition(Poly.from_roots([1, 1, -2]))
    >>> [(str(f), m) for f, m in d.factors]
    [('z + 2', 1), ('z - 1', 2)]
    """
    if p.is_zero():
        raise InvalidArgument("squarefree decomposition of the zero polynomial")
    content = p.lc
    if p.degree == 0:
        return SquarefreeDecomposition(content, ())
    factors = [(Poly(f).monic(), m) for f, m in _z.yun(p.integer_coeffs())]
    return SquarefreeDecomposition(content, tuple(factors))


def radical(p: Poly) -> Poly:
    """Monic squarefree part ``p / gcd(p, p')``."""
    if p.is_zero():
        raise InvalidArgument("radical of the zero polynomial")
    if p.degree == 0:
        return Poly([1])
    return p.exact_div(gcd(p, p.derivative())).monic()


# -- Sturm sequences --------------------------------------------------------


@lru_cache(maxsize=4096)
def sturm_sequence(p: Poly) -> tuple[Poly, ...]:
    """Signed remainder chain of ``(p, p')``, each entry rescaled by a positive constant."""
    if p.is_zero():
        raise InvalidArgument("Sturm sequence of the zero polynomial")
    return tuple(Poly(q) for q in _z.sturm(p.integer_coeffs()))


def _sign_at(p: Poly, x) -> int:
    if isinstance(x, float):
        if x == math.inf:
            return _sign(p.lc)
        if x == -math.inf:
            return _sign(p.lc) * (-1 if p.degree % 2 else 1)
        raise InvalidArgument("finite evaluation points must be rational")
    return p.sign_at(x)


def sign_variations(chain: Sequence[Poly], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _checked_chain(p: Poly) -> tuple[Poly, ...]:
    chain = sturm_sequence(p)
    if chain[-1].degree > 0:
        raise ContractViolation(
            f"sturm_count needs a squarefree polynomial; gcd(p, p') = {chain[-1].monic()}"
        )
    return chain


def sturm_count(p: Poly, a=-math.inf, b=math.inf, chain: Sequence[Poly] | None = None) -> int:
    """Number of distinct real roots of squarefree ``p`` in ``(a, b]``.

    ``a`` and ``b`` may be ``-math.inf`` / ``math.inf``.
    """
    if p.is_zero():
        raise InvalidArgument("sturm_count of the zero polynomial")
    if not a < b:
        raise InvalidArgument(f"empty interval ({a}, {b}]")
    if chain is None:
        chain = _checked_chain(p)
    return sign_variations(chain, a) - sign_variations(chain, b)


def real_root_count(p: Poly) -> int:
    """Distinct real roots of a nonzero polynomial."""
    if p.degree == 0:
        return 0
    return sturm_count(radical(p))


@lru_cache(maxsize=4096)
def is_hyperbolic(p: Poly) -> bool:
    """True iff ``p`` is nonzero and all of its complex roots are real.

    Nonzero constants count as hyperbolic.
    """
    if p.is_zero():
        return False
    if p.degree == 0:
        return True
    rad = squarefree_decomposition(p).radical
    return sturm_count(rad) == rad.degree


# -- root isolation ---------------------------------------------------------


def simplest_rational_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational of least denominator in the closed interval ``[lo, hi]``."""
    if lo > hi:
        raise InvalidArgument("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational_between(-hi, -lo)
    a, b, c, d = lo.numerator, lo.denominator, hi.numerator, hi.denominator
    # continued-fraction walk on lo = a/b <= hi = c/d, integers only
    terms = []
    while True:
        fl = a // b
        if fl * b == a:
            num, den = fl, 1
            break
        if (fl + 1) * d <= c:
            num, den = fl + 1, 1
            break
        terms.append(fl)
        a, b, c, d = d, c - fl * d, b, a - fl * b
    for t in reversed(terms):
        num, den = t * num + den, num
    return Fraction(num, den)


@dataclass(frozen=True)
class IsolatingInterval:
    """Closed interval ``[lo, hi]`` holding exactly one root of ``poly``.

    ``poly`` is squarefree.  Either ``lo == hi`` (the root is known exactly)
    or ``poly`` takes opposite nonzero signs at ``lo`` and ``hi``.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1
    poly: Poly | None = field(default=None, repr=False, compare=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def refine(self, width: Fraction) -> IsolatingInterval:
        """Return a copy whose width is at most ``width``.

        Rational roots are detected exactly along the way (the interval
        collapses to a point), so ties between rational roots resolve
        without reaching the requested width.
        """
        if width < 0:
            raise InvalidArgument("negative width")
        lo, hi = self.lo, self.hi
        if hi - lo <= width:
            return self
        p = self.poly
        if p is None:
            raise InvalidArgument("interval carries no polynomial to refine against")
        s_hi = p.sign_at(hi)
        while hi - lo > width:
            c = simplest_rational_between(lo, hi)
            if p.sign_at(c) == 0:
                lo = hi = c
                break
            mid = (lo + hi) / 2
            s = p.sign_at(mid)
            if s == 0:
                lo = hi = mid
            elif s == s_hi:
                hi = mid
            else:
                lo = mid
        return IsolatingInterval(lo, hi, self.multiplicity, p)


def _isolate_squarefree(p: Poly, chain: Sequence[Poly]) -> list[tuple[Fraction, Fraction]]:
    """Disjoint ``(lo, hi)`` pairs, one per real root of squarefree ``p``.

    Each pair is either a point root or has ``p(lo) * p(hi) < 0``.
    """
    bound = root_bound(p)
    out: list[tuple[Fraction, Fraction]] = []
    # stack of half-open (lo, hi] intervals with their root counts
    stack = [(-bound, bound, sturm_count(p, -bound, bound, chain))]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append(_tighten(p, chain, lo, hi))
            continue
        mid = (lo + hi) / 2
        left = sturm_count(p, lo, mid, chain)
        stack.append((mid, hi, cnt - left))
        stack.append((lo, mid, left))
    out.sort()
    return out


def _tighten(p: Poly, chain, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    # one root in (lo, hi]; make the endpoints nonroots or collapse to a point
    if p.sign_at(hi) == 0:
        return hi, hi
    while p.sign_at(lo) == 0:
        mid = (lo + hi) / 2
        if p.sign_at(mid) == 0:
            return mid, mid
        if sturm_count(p, lo, mid, chain) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def isolate_roots(p: Poly, width: RationalLike = Fraction(1, 8)) -> list[IsolatingInterval]:
    """Ascending disjoint enclosures of the real roots of ``p`` with multiplicities.

    >>> [(str(iv.lo), str(iv.hi), iv.multiplicity) for iv in isolate_roots(Poly.from_roots([1, 1]))]
    [('1', '1', 2)]
    """
    width = as_rational(width)
    if p.is_zero():
        raise InvalidArgument("isolate_roots of the zero polynomial")
    if width < 0:
        raise InvalidArgument("negative width")
    if p.degree == 0:
        return []
    dec = squarefree_decomposition(p)
    rad = dec.radical
    chain = _checked_chain(rad)
    out = []
    for lo, hi in _isolate_squarefree(rad, chain):
        if lo == hi:
            mult = dec.multiplicity_of(lo)
        else:
            mult = next(m for f, m in dec.factors if f.sign_at(lo) * f.sign_at(hi) < 0)
        out.append(IsolatingInterval(lo, hi, mult, rad).refine(width))
    return out


def rational_roots(p: Poly, max_width: Fraction = Fraction(1, 2**64)) -> list[Fraction] | None:
    """All real roots with multiplicity if every one of them is rational, else ``None``.

    Rational roots are found by refinement; a root that stays inexact down to
    ``max_width`` is treated as irrational (denominators up to ``2**32`` are
    always caught).
    """
    out: list[Fraction] = []
    for iv in isolate_roots(p, max_width):
        if not iv.is_exact:
            return None
        out.extend([iv.lo] * iv.multiplicity)
    return out


# -- sign constancy ---------------------------------------------------------


class SignPattern(str, enum.Enum):
    NONNEGATIVE = "Nonnegative"
    NONPOSITIVE = "Nonpositive"
    CHANGES_SIGN = "ChangesSign"
    ZERO = "Zero"


def is_sign_constant(h: Poly) -> SignPattern:
    """Decide exactly whether ``h`` keeps one sign on the real line."""
    if h.is_zero():
        return SignPattern.ZERO
    if h.degree > 0:
        odd = squarefree_decomposition(h).odd_part
        if odd.degree > 0 and sturm_count(odd) > 0:
            return SignPattern.CHANGES_SIGN
    # no odd-multiplicity real root: the sign is that of h at +infinity
    return SignPattern.NONNEGATIVE if h.lc > 0 else SignPattern.NONPOSITIVE

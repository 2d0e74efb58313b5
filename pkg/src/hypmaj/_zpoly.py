"""Integer-coefficient kernels behind :mod:`hypmaj.exact_poly`.

Polynomials are tuples of Python ints in ascending order with no trailing
zeros.  Everything here works up to positive scalar factors, which leaves
signs (and hence Sturm counts) unchanged.
"""

from __future__ import annotations

import math
from functools import lru_cache

ZPoly = tuple  # tuple[int, ...]


def trim(a: list) -> ZPoly:
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def primitive(a) -> ZPoly:
    """Divide by the positive content."""
    g = 0
    for v in a:
        g = math.gcd(g, v)
        if g == 1:
            return tuple(a)
    if g == 0:
        return ()
    return tuple(v // g for v in a)


def positive_primitive(a) -> ZPoly:
    """Primitive with positive leading coefficient."""
    a = primitive(a)
    if a and a[-1] < 0:
        return tuple(-v for v in a)
    return a


def deriv(a: ZPoly) -> ZPoly:
    return tuple(k * a[k] for k in range(1, len(a)))


def sub(a: ZPoly, b: ZPoly) -> ZPoly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return trim(out)


def prem(a: ZPoly, b: ZPoly) -> tuple[ZPoly, int]:
    """Pseudo-remainder ``lc(b)^(da-db+1) a mod b`` and the sign of the multiplier."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    steps = len(r) - 1 - db + 1
    if steps <= 0:
        return tuple(a), 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        r = [v * lb for v in r]
        if c:
            for j, v in enumerate(b):
                r[i - db + j] -= c * v
    r = trim(r[:db])
    sign = -1 if (lb < 0 and steps % 2) else 1
    return r, sign


def exact_quotient(a: ZPoly, b: ZPoly) -> ZPoly:
    """``a / b`` over Z when ``b`` is primitive and divides ``a``."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    if len(r) - 1 < db:
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return ()
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c, rem = divmod(r[i], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[i - db] = c
        if c:
            for j, v in enumerate(b):
                r[i - db + j] -= c * v
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return trim(q)


@lru_cache(maxsize=8192)
def gcd(a: ZPoly, b: ZPoly) -> ZPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    a, b = positive_primitive(a), positive_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r, _ = prem(a, b)
        a, b = b, positive_primitive(r)
    return a


@lru_cache(maxsize=8192)
def sturm(a: ZPoly) -> tuple[ZPoly, ...]:
    """Sturm chain of ``a``: entries are positive multiples of the classical ones."""
    chain = [primitive(a), primitive(deriv(a))]
    while chain[-1]:
        r, s = prem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(primitive(tuple(-s * v for v in r)))
    if not chain[-1]:
        chain.pop()
    return tuple(chain)


@lru_cache(maxsize=8192)
def yun(a: ZPoly) -> tuple[tuple[ZPoly, int], ...]:
    """Squarefree factors ``(f_i, i)`` of ``a`` (degree >= 1), primitive, positive leading coefficient."""
    da = deriv(a)
    g = gcd(a, da)
    b = exact_quotient(a, g)
    c = exact_quotient(da, g)
    d = sub(c, deriv(b))
    out = []
    m = 1
    while len(b) > 1:
        f = gcd(b, d)
        if len(f) > 1:
            out.append((f, m))
        b = exact_quotient(b, f)
        c = exact_quotient(d, f)
        d = sub(c, deriv(b))
        m += 1
    return tuple(out)


def sign_at(a: ZPoly, num: int, den: int) -> int:
    """Sign of ``a(num/den)`` for ``den > 0``."""
    if not a:
        return 0
    acc = a[-1]
    bp = den
    for c in reversed(a[:-1]):
        acc = acc * num + c * bp
        bp *= den
    return (acc > 0) - (acc < 0)


def sign_at_infinity(a: ZPoly, positive: bool) -> int:
    s = (a[-1] > 0) - (a[-1] < 0)
    if not positive and (len(a) - 1) % 2:
        s = -s
    return s


def variations(chain, num: int, den: int) -> int:
    count = 0
    last = 0
    for a in chain:
        s = sign_at(a, num, den)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def variations_at_infinity(chain, positive: bool) -> int:
    count = 0
    last = 0
    for a in chain:
        s = sign_at_infinity(a, positive)
        if last and s != last:
            count += 1
        last = s
    return count

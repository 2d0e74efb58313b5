"""Pinch moves and constructive pinch chains for majorization.

A pinch pushes two zeros ``y_i <= y_j`` towards each other by the same
amount ``t <= (y_j - y_i)/2``.  In polynomial terms it replaces
``r(z)((z+s)^2 - t2^2)`` by ``r(z)((z+s)^2 - t1^2)`` with ``0 <= t1 <= t2``.
The two zeros are usually adjacent, but need not be: with adjacent moves
only, ``(1, 1, 1) ≺ (0, 0, 3)`` has no finite chain at all.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidArgument, InvalidMove, PreconditionViolation
from .exact_poly import Poly, RationalLike, as_rational
from .hyperbolic_order import Relation, vec_majorizes


@dataclass(frozen=True)
class PinchMove:
    """Move the entries at 1-based positions ``index < partner`` inward by ``amount``."""

    index: int
    amount: Fraction
    partner: int | None = None

    @property
    def j(self) -> int:
        return self.index + 1 if self.partner is None else self.partner

    @property
    def adjacent(self) -> bool:
        return self.j == self.index + 1


def _rationals(v: Sequence[RationalLike]) -> list[Fraction]:
    return [as_rational(a) for a in v]


def _require_sorted(v: Sequence[Fraction]) -> None:
    if any(a > b for a, b in zip(v, v[1:])):
        raise InvalidArgument("vector is not weakly increasing")


def apply_move(y: Sequence[RationalLike], move: PinchMove) -> list[Fraction]:
    """Apply ``move`` to the sorted vector ``y`` and return the sorted result."""
    y = _rationals(y)
    _require_sorted(y)
    i, j, t = move.index, move.j, as_rational(move.amount)
    if not 1 <= i < j <= len(y):
        raise InvalidMove(f"positions ({i}, {j}) out of range for length {len(y)}")
    half_gap = (y[j - 1] - y[i - 1]) / 2
    if not 0 <= t <= half_gap:
        raise InvalidMove(f"amount {t} outside [0, {half_gap}]")
    x = list(y)
    x[i - 1] += t
    x[j - 1] -= t
    x.sort()
    return x


def is_pinch(
    x: Sequence[RationalLike], y: Sequence[RationalLike], adjacent: bool = False
) -> PinchMove | None:
    """Return a move taking ``y`` to ``x``, or ``None``.

    ``adjacent=True`` only accepts moves on neighbouring positions of ``y``.
    Equal vectors give the trivial move ``(1, 0)``.
    """
    x, y = _rationals(x), _rationals(y)
    if len(x) != len(y):
        raise InvalidArgument("vectors must have equal length")
    _require_sorted(x)
    _require_sorted(y)
    n = len(y)
    if n < 2:
        return None
    if x == y:
        return PinchMove(1, Fraction(0))
    # compare as multisets: exactly two entries of y are replaced
    rest_y, rest_x = list(y), list(x)
    for v in y:
        if v in rest_x:
            rest_x.remove(v)
            rest_y.remove(v)
    if len(rest_y) != 2 or len(rest_x) != 2:
        return None
    lo_y, hi_y = rest_y
    lo_x, hi_x = sorted(rest_x)
    t = lo_x - lo_y
    if t <= 0 or hi_y - hi_x != t or lo_x > hi_x:
        return None
    i = y.index(lo_y) + 1
    j = n - y[::-1].index(hi_y)
    # any copy of a repeated value works; pick the pair closest together
    candidates_i = [k + 1 for k, v in enumerate(y) if v == lo_y]
    candidates_j = [k + 1 for k, v in enumerate(y) if v == hi_y]
    i, j = max(candidates_i), min(k for k in candidates_j if k > max(candidates_i))
    move = PinchMove(i, t, None if j == i + 1 else j)
    if adjacent and not move.adjacent:
        return None
    if apply_move(y, move) != x:
        return None
    return move


@dataclass(frozen=True)
class PinchChain:
    start: tuple[Fraction, ...]
    moves: tuple[PinchMove, ...]

    def vectors(self) -> list[list[Fraction]]:
        """The start vector followed by every intermediate vector."""
        out = [list(self.start)]
        for m in self.moves:
            out.append(apply_move(out[-1], m))
        return out

    @property
    def end(self) -> list[Fraction]:
        return self.vectors()[-1]

    def __len__(self) -> int:
        return len(self.moves)


def decompose(x: Sequence[RationalLike], y: Sequence[RationalLike]) -> PinchChain:
    """Chain of at most ``n - 1`` pinches taking ``y`` to ``x`` when ``x ≺ y``.

    Each step equalizes one more coordinate: take the lowest position where
    the current vector exceeds ``x`` and the nearest position below it where
    it falls short, and pinch that pair by the smaller of the two
    discrepancies.  Entries strictly between the two already agree with
    ``x``, which keeps every intermediate vector sorted.
    """
    x, y = _rationals(x), _rationals(y)
    verdict = vec_majorizes(x, y)
    if verdict.relation is not Relation.MAJORIZED:
        raise PreconditionViolation(
            "decompose needs x ≺ y",
            {"failing_index": verdict.failing_index, "margin": str(verdict.margin), "reason": verdict.reason},
        )
    n = len(y)
    cur = list(y)
    moves = []
    while cur != x:
        hi = min(k for k in range(n) if cur[k] > x[k])
        lo = max(k for k in range(hi) if cur[k] < x[k])
        delta = min(cur[hi] - x[hi], x[lo] - cur[lo])
        move = PinchMove(lo + 1, delta, None if hi == lo + 1 else hi + 1)
        nxt = apply_move(cur, move)
        if nxt[lo] != cur[lo] + delta or nxt[hi] != cur[hi] - delta:
            # sorting moved entries: the greedy invariant is broken
            raise AssertionError(f"pinch step left the vector unsorted: {cur} -> {nxt}")
        moves.append(move)
        cur = nxt
    return PinchChain(tuple(y), tuple(moves))


def random_pinch_vectors(
    n: int, rng_seed: int, bound: RationalLike = 10
) -> tuple[list[Fraction], list[Fraction]]:
    """Sorted rational vectors ``(x, y)`` with ``x`` reached from ``y`` by 1-3 pinches."""
    if n < 2:
        raise InvalidArgument("pinch pairs need n >= 2")
    bound = as_rational(bound)
    rng = random.Random(rng_seed)
    den = rng.choice((1, 2, 3, 4, 6, 8, 12, 16))
    y = sorted(bound * Fraction(rng.randint(-den, den), den) for _ in range(n))
    x = list(y)
    for _ in range(rng.randint(1, 3)):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if x[j] > x[i]]
        if not pairs:
            break
        i, j = rng.choice(pairs)
        t = (x[j] - x[i]) / 2 * Fraction(rng.randint(1, 8), 8)
        x = apply_move(x, PinchMove(i + 1, t, None if j == i + 1 else j + 1))
    return x, y


def random_pinch_pair(n: int, rng_seed: int, bound: RationalLike = 10) -> tuple[Poly, Poly]:
    """Monic ``(p, q)`` of degree ``n`` with rational zeros in ``[-bound, bound]`` and ``p ≺ q``."""
    x, y = random_pinch_vectors(n, rng_seed, bound)
    return Poly.from_roots(x), Poly.from_roots(y)

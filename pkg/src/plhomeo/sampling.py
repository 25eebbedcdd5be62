"""Random rational PL maps with small denominators, for tests and demos."""

from __future__ import annotations

import random
from fractions import Fraction

from .pl import IntervalMap, Piece, PLFunc, PLLift

__all__ = ["random_lift", "random_fn", "random_interval_map", "random_breakpoints"]


def random_breakpoints(rng: random.Random, n: int, denom: int) -> list[Fraction]:
    """``0`` plus ``n - 1`` distinct grid points ``k/denom`` in ``(0, 1)``."""
    n = max(1, min(n, denom))
    inner = sorted(rng.sample(range(1, denom), n - 1))
    return [Fraction(0)] + [Fraction(k, denom) for k in inner]


def _pieces(xs, ys, end):
    xs = list(xs) + [Fraction(1)]
    ys = list(ys) + [end]
    return tuple(
        Piece(xs[i], ys[i], (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])) for i in range(len(xs) - 1)
    )


def random_lift(rng: random.Random, max_pieces: int = 4, denom: int = 12, offset=None) -> PLLift:
    n = rng.randint(1, max_pieces)
    xs = random_breakpoints(rng, n, denom)
    weights = [rng.randint(1, 4) for _ in xs]
    total = sum(weights)
    v0 = Fraction(rng.randrange(denom), denom) if offset is None else Fraction(offset)
    ys = [v0]
    for w in weights[:-1]:
        ys.append(ys[-1] + Fraction(w, total))
    return PLLift(_pieces(xs, ys, v0 + 1))


def random_fn(rng: random.Random, max_pieces: int = 4, denom: int = 12) -> PLFunc:
    n = rng.randint(1, max_pieces)
    xs = random_breakpoints(rng, n, denom)
    ys = [Fraction(rng.randint(-denom, denom), denom) for _ in xs]
    return PLFunc(_pieces(xs, ys, ys[0]))


def random_interval_map(rng: random.Random, lo, hi, max_knots: int = 3, denom: int = 8) -> IntervalMap:
    """Random increasing PL self-map of ``[lo, hi]`` fixing both ends."""
    lo, hi = Fraction(lo), Fraction(hi)
    k = rng.randint(0, max_knots)
    length = hi - lo
    xs = sorted({lo + length * Fraction(rng.randint(1, denom - 1), denom) for _ in range(k)})
    ys = sorted({lo + length * Fraction(rng.randint(1, denom - 1), denom) for _ in range(len(xs))})
    if len(ys) < len(xs):
        xs = xs[: len(ys)]
    knots = [(lo, lo)] + list(zip(xs, ys)) + [(hi, hi)]
    return IntervalMap(tuple(knots))

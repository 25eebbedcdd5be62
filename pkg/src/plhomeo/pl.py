"""Exact piecewise-linear maps of the line with rational data.

Two periodic classes share one piece layout:

* :class:`PLFunc` -- a 1-periodic continuous PL function ``R -> R``.
* :class:`PLLift` -- an increasing PL homeomorphism ``F`` of ``R`` with
  ``F(x + 1) = F(x) + 1`` (the lift of a circle homeomorphism).

Both are stored on the fundamental domain ``[0, 1)`` as a tuple of
:class:`Piece` ``(x, v, s)``: on ``[x_i, x_{i+1})`` the map is
``v + s * (x - x_i)``.  Pieces are left-closed, right-open.  Instances are
always canonical (sorted, first breakpoint 0, no two consecutive pieces with
the same slope), so ``==`` decides equality of maps.

:class:`IntervalMap` covers PL homeomorphisms of a closed interval, used for
seeds of group actions and for windowed maps.  :class:`FixedSet` is a finite
union of closed rational intervals and points.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

__all__ = [
    "PLError",
    "Piece",
    "PLFunc",
    "PLLift",
    "IntervalMap",
    "FixedSet",
    "as_rational",
    "pl_normalize",
    "evaluate",
    "compose_lift",
    "compose_fn_lift",
    "invert",
    "fn_linear_combine",
    "fn_precompose_shift",
    "fixed_set",
    "zero_set",
    "sup_displacement",
    "equal",
    "identity",
    "translation",
    "constant",
    "half_shift_extension",
    "lift_power",
]

ZERO = Fraction(0)
ONE = Fraction(1)

RationalLike = Union[Fraction, int, str]


class PLError(ValueError):
    """Invalid piecewise-linear data."""


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    return Fraction(value)


class Piece(NamedTuple):
    x: Fraction
    v: Fraction
    s: Fraction

    def at(self, x: Fraction) -> Fraction:
        return self.v + self.s * (x - self.x)


def _canonical_pieces(kind: str, raw: Iterable[Sequence[RationalLike]]) -> tuple[Piece, ...]:
    pieces = [Piece(*(as_rational(c) for c in p)) for p in raw]
    if not pieces:
        raise PLError("a PL map needs at least one piece")
    if pieces[0].x != 0:
        raise PLError(f"first breakpoint must be 0, got {pieces[0].x}")
    for p in pieces:
        if not 0 <= p.x < 1:
            raise PLError(f"breakpoint {p.x} outside [0, 1)")
    for a, b in zip(pieces, pieces[1:]):
        if b.x <= a.x:
            if b.x == a.x:
                raise PLError(f"zero-length piece at {a.x}")
            raise PLError(f"breakpoints not increasing: {a.x} then {b.x}")
    if kind == "lift":
        for p in pieces:
            if p.s <= 0:
                raise PLError(f"lift slope must be positive, got {p.s} at x={p.x}")
    for a, b in zip(pieces, pieces[1:]):
        if a.at(b.x) != b.v:
            raise PLError(f"discontinuity at x={b.x}: {a.at(b.x)} != {b.v}")
    end = pieces[-1].at(ONE)
    expected = pieces[0].v + (1 if kind == "lift" else 0)
    if end != expected:
        raise PLError(f"wraparound mismatch: value at 1 is {end}, expected {expected}")
    merged = [pieces[0]]
    for p in pieces[1:]:
        if p.s != merged[-1].s:
            merged.append(p)
    return tuple(merged)


def _fmt(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class _Periodic:
    pieces: tuple[Piece, ...]

    kind = "fn"

    def __post_init__(self):
        object.__setattr__(self, "pieces", _canonical_pieces(self.kind, self.pieces))

    @cached_property
    def breakpoints(self) -> tuple[Fraction, ...]:
        return tuple(p.x for p in self.pieces)

    def _piece_index(self, r: Fraction) -> int:
        return bisect_right(self.breakpoints, r) - 1

    def _eval_frac(self, r: Fraction) -> Fraction:
        return self.pieces[self._piece_index(r)].at(r)

    def slope_at(self, x: RationalLike) -> Fraction:
        """Right derivative at ``x``."""
        x = as_rational(x)
        r = x - math.floor(x)
        return self.pieces[self._piece_index(r)].s

    def __repr__(self):
        body = ", ".join(f"({_fmt(p.x)}, {_fmt(p.v)}, {_fmt(p.s)})" for p in self.pieces)
        return f"{type(self).__name__}([{body}])"


class PLFunc(_Periodic):
    """1-periodic continuous PL function."""

    kind = "fn"

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        return self._eval_frac(x - math.floor(x))

    def __add__(self, other: PLFunc) -> PLFunc:
        if not isinstance(other, PLFunc):
            return NotImplemented
        return fn_linear_combine([(ONE, self), (ONE, other)])

    def __sub__(self, other: PLFunc) -> PLFunc:
        if not isinstance(other, PLFunc):
            return NotImplemented
        return fn_linear_combine([(ONE, self), (-ONE, other)])

    def __neg__(self) -> PLFunc:
        return fn_linear_combine([(-ONE, self)])

    def __rmul__(self, c: RationalLike) -> PLFunc:
        return fn_linear_combine([(as_rational(c), self)])

    def is_constant(self) -> bool:
        return len(self.pieces) == 1 and self.pieces[0].s == 0


class PLLift(_Periodic):
    """Lift of an orientation-preserving PL circle homeomorphism."""

    kind = "lift"

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        n = math.floor(x)
        return self._eval_frac(x - n) + n

    def __matmul__(self, other: PLLift) -> PLLift:
        if isinstance(other, PLLift):
            return compose_lift(self, other)
        return NotImplemented

    def __pow__(self, n: int) -> PLLift:
        return lift_power(self, n)

    def inverse(self) -> PLLift:
        return invert(self)

    def is_translation(self) -> bool:
        return len(self.pieces) == 1 and self.pieces[0].s == 1

    def shifted(self, c: RationalLike) -> PLLift:
        """The lift ``x -> F(x) + c``."""
        c = as_rational(c)
        return PLLift(tuple(Piece(p.x, p.v + c, p.s) for p in self.pieces))


PLMap = Union[PLFunc, PLLift]


def pl_normalize(raw: Iterable[Sequence[RationalLike]], kind: str = "fn") -> PLMap:
    """Validate raw ``(x, v, s)`` pieces and return the canonical map.

    Raises :class:`PLError` for discontinuities, zero-length or
    out-of-range pieces, and non-positive slopes in a lift.
    """
    if kind == "fn":
        return PLFunc(tuple(raw))
    if kind == "lift":
        return PLLift(tuple(raw))
    raise PLError(f"unknown map kind {kind!r}")


def _from_knots(cls, xs: Sequence[Fraction], f) -> PLMap:
    # f must be affine between consecutive xs (and between xs[-1] and 1).
    xs = sorted(set(xs))
    if xs[0] != 0:
        xs.insert(0, ZERO)
    vals = [f(x) for x in xs]
    end = vals[0] + (1 if cls is PLLift else 0)
    pieces = []
    for i, x in enumerate(xs):
        nx = xs[i + 1] if i + 1 < len(xs) else ONE
        nv = vals[i + 1] if i + 1 < len(xs) else end
        pieces.append(Piece(x, vals[i], (nv - vals[i]) / (nx - x)))
    return cls(tuple(pieces))


def _mod1(x: Fraction) -> Fraction:
    return x - math.floor(x)


def identity() -> PLLift:
    return PLLift(((ZERO, ZERO, ONE),))


def translation(t: RationalLike) -> PLLift:
    return PLLift(((ZERO, as_rational(t), ONE),))


def constant(c: RationalLike) -> PLFunc:
    return PLFunc(((ZERO, as_rational(c), ZERO),))


def evaluate(f: PLMap, x: RationalLike) -> Fraction:
    return f(x)


def _inverse_eval(f: PLLift):
    v0 = f.pieces[0].v
    values = [p.v for p in f.pieces] + [v0 + 1]

    def inv(y: Fraction) -> Fraction:
        k = math.floor(y - v0)
        y1 = y - k
        i = bisect_right(values, y1) - 1
        p = f.pieces[i]
        return p.x + (y1 - p.v) / p.s + k

    return inv


def invert(f: PLLift) -> PLLift:
    return _from_knots(PLLift, [_mod1(p.v) for p in f.pieces], _inverse_eval(f))


def compose_lift(f: PLLift, g: PLLift) -> PLLift:
    """``f o g``; breakpoints are those of ``g`` plus ``g``-preimages of ``f``'s."""
    g_inv = _inverse_eval(g)
    xs = list(g.breakpoints) + [_mod1(g_inv(b)) for b in f.breakpoints]
    return _from_knots(PLLift, xs, lambda x: f(g(x)))


def compose_fn_lift(tau: PLFunc, sigma: PLLift) -> PLFunc:
    s_inv = _inverse_eval(sigma)
    xs = list(sigma.breakpoints) + [_mod1(s_inv(b)) for b in tau.breakpoints]
    return _from_knots(PLFunc, xs, lambda x: tau(sigma(x)))


def fn_linear_combine(terms: Iterable[tuple[RationalLike, PLFunc]]) -> PLFunc:
    terms = [(as_rational(c), t) for c, t in terms]
    if not terms:
        return constant(0)
    xs = [b for _, t in terms for b in t.breakpoints]
    return _from_knots(PLFunc, xs, lambda x: sum((c * t(x) for c, t in terms), ZERO))


def fn_precompose_shift(tau: PLFunc, s: RationalLike) -> PLFunc:
    """The function ``x -> tau(x - s)``."""
    s = as_rational(s)
    return _from_knots(PLFunc, [_mod1(b + s) for b in tau.breakpoints], lambda x: tau(x - s))


def lift_power(f: PLLift, n: int) -> PLLift:
    if n < 0:
        f, n = invert(f), -n
    result = identity()
    base = f
    while n:
        if n & 1:
            result = compose_lift(result, base)
        n >>= 1
        if n:
            base = compose_lift(base, base)
    return result


def sup_displacement(f: PLMap) -> Fraction:
    """Exact ``max |F(x) - x|`` for a lift, ``max |tau(x)|`` for a function.

    Both are PL and periodic, so the extremes sit at breakpoints.
    """
    if isinstance(f, PLLift):
        return max(abs(p.v - p.x) for p in f.pieces)
    return max(abs(p.v) for p in f.pieces)


def equal(a: PLMap, b: PLMap) -> bool:
    return type(a) is type(b) and a.pieces == b.pieces


# ---------------------------------------------------------------------------
# fixed sets


@dataclass(frozen=True)
class FixedSet:
    """Finite union of closed rational intervals/points inside ``domain``.

    ``items`` holds sorted, pairwise disjoint ``(lo, hi)`` pairs, with
    ``lo == hi`` for isolated points.  With ``periodic=True`` the domain is
    the circle ``[0, 1]/(0~1)``: a component ending at 1 always comes with
    the point 0, and membership is tested modulo 1.
    """

    items: tuple[tuple[Fraction, Fraction], ...] = ()
    domain: tuple[Fraction, Fraction] = (ZERO, ONE)
    periodic: bool = True

    def __post_init__(self):
        lo_d, hi_d = (as_rational(d) for d in self.domain)
        raw = []
        for lo, hi in self.items:
            lo, hi = as_rational(lo), as_rational(hi)
            if hi < lo:
                raise PLError(f"empty interval [{lo}, {hi}]")
            if lo < lo_d or hi > hi_d:
                raise PLError(f"[{lo}, {hi}] not inside domain [{lo_d}, {hi_d}]")
            raw.append((lo, hi))
        if self.periodic:
            if any(hi == hi_d for _, hi in raw):
                raw.append((lo_d, lo_d))
            raw = [(lo_d, lo_d) if lo == hi == hi_d else (lo, hi) for lo, hi in raw]
        raw.sort()
        merged: list[tuple[Fraction, Fraction]] = []
        for lo, hi in raw:
            if merged and lo <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(hi, merged[-1][1]))
            else:
                merged.append((lo, hi))
        object.__setattr__(self, "items", tuple(merged))
        object.__setattr__(self, "domain", (lo_d, hi_d))

    @property
    def full(self) -> bool:
        return self.items == (self.domain,)

    def __bool__(self):
        return bool(self.items)

    def is_empty(self) -> bool:
        return not self.items

    def points(self) -> tuple[Fraction, ...]:
        return tuple(lo for lo, hi in self.items if lo == hi)

    def intervals(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple((lo, hi) for lo, hi in self.items if lo < hi)

    def is_infinite(self) -> bool:
        return bool(self.intervals())

    def __contains__(self, x: RationalLike) -> bool:
        x = as_rational(x)
        if self.periodic:
            x = self.domain[0] + _mod1(x - self.domain[0])
        i = bisect_right(self.items, (x, x)) - 1
        candidates = [j for j in (i, i + 1) if 0 <= j < len(self.items)]
        return any(self.items[j][0] <= x <= self.items[j][1] for j in candidates)

    def first(self) -> Fraction | None:
        return self.items[0][0] if self.items else None

    def intersection(self, other: FixedSet) -> FixedSet:
        out = []
        for a_lo, a_hi in self.items:
            for b_lo, b_hi in other.items:
                lo, hi = max(a_lo, b_lo), min(a_hi, b_hi)
                if lo <= hi:
                    out.append((lo, hi))
        return FixedSet(tuple(out), self.domain, self.periodic)

    def union(self, other: FixedSet) -> FixedSet:
        return FixedSet(self.items + other.items, self.domain, self.periodic)

    def issubset(self, other: FixedSet) -> bool:
        return self.intersection(other) == self

    def image(self, f: PLLift) -> FixedSet:
        """Image of a periodic set under a lift, reduced modulo 1."""
        out = []
        for lo, hi in self.items:
            a, b = f(lo), f(hi)
            n = math.floor(a)
            a, b = a - n, b - n
            if b <= 1:
                out.append((a, b))
            else:
                out.append((a, ONE))
                out.append((ZERO, b - 1))
        return FixedSet(tuple(out))

    def complement_arcs(self) -> list[tuple[Fraction, Fraction]]:
        """Open gaps between consecutive components, cyclically when periodic.

        A periodic gap that wraps through 0 is reported with ``hi`` shifted
        by +1, so ``lo < hi`` always.
        """
        if not self.items:
            return [self.domain] if not self.periodic else []
        lo_d, hi_d = self.domain
        gaps = []
        for (_, a), (b, _) in zip(self.items, self.items[1:]):
            gaps.append((a, b))
        if self.periodic:
            first_lo, last_hi = self.items[0][0], self.items[-1][1]
            wrap = (last_hi, first_lo + (hi_d - lo_d))
            if wrap[0] < wrap[1]:
                gaps.append(wrap)
        else:
            if self.items[0][0] > lo_d:
                gaps.insert(0, (lo_d, self.items[0][0]))
            if self.items[-1][1] < hi_d:
                gaps.append((self.items[-1][1], hi_d))
        return gaps

    def __str__(self):
        if self.full:
            return "full"
        if not self.items:
            return "empty"
        parts = [str(lo) if lo == hi else f"[{lo}, {hi}]" for lo, hi in self.items]
        return "{" + ", ".join(parts) + "}"


def _solve_pieces(knots, shift: Fraction):
    """Solutions of ``F(x) = x + shift`` on consecutive ``(x, F(x))`` knots."""
    out = []
    for (x0, y0), (x1, y1) in zip(knots, knots[1:]):
        d0, d1 = y0 - x0 - shift, y1 - x1 - shift
        if d0 == 0 and d1 == 0:
            out.append((x0, x1))
        elif d0 == 0:
            out.append((x0, x0))
        elif d1 == 0:
            out.append((x1, x1))
        elif (d0 < 0) != (d1 < 0):
            x = x0 + d0 * (x1 - x0) / (d0 - d1)
            out.append((x, x))
    return out


def _knots(f: _Periodic) -> list[tuple[Fraction, Fraction]]:
    end = f.pieces[0].v + (1 if isinstance(f, PLLift) else 0)
    return [(p.x, p.v) for p in f.pieces] + [(ONE, end)]


def fixed_set(f: PLLift, shift: RationalLike = 0) -> FixedSet:
    """Solutions of ``F(x) = x + shift`` in one period, as a periodic set."""
    return FixedSet(tuple(_solve_pieces(_knots(f), as_rational(shift))))


def zero_set(tau: PLFunc) -> FixedSet:
    """Zeros of a periodic PL function in one period."""
    knots = [(x, v + x) for x, v in _knots(tau)]
    return FixedSet(tuple(_solve_pieces(knots, ZERO)))


# ---------------------------------------------------------------------------
# homeomorphisms of a closed interval


@dataclass(frozen=True)
class IntervalMap:
    """Increasing PL homeomorphism of ``[x_0, x_n]`` onto itself.

    ``knots`` are the points ``(x_i, y_i)`` of the graph; the map is affine
    between consecutive knots.  Both endpoints are fixed.
    """

    knots: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        ks = [(as_rational(x), as_rational(y)) for x, y in self.knots]
        if len(ks) < 2:
            raise PLError("an interval map needs at least two knots")
        for (xa, ya), (xb, yb) in zip(ks, ks[1:]):
            if xb <= xa:
                raise PLError(f"knots not increasing at x={xb}")
            if yb <= ya:
                raise PLError(f"map not increasing on [{xa}, {xb}]")
        if ks[0][0] != ks[0][1] or ks[-1][0] != ks[-1][1]:
            raise PLError(
                f"interval map must fix its endpoints {ks[0][0]} and {ks[-1][0]}"
            )
        merged = [ks[0]]
        for i in range(1, len(ks) - 1):
            (xa, ya), (xb, yb), (xc, yc) = merged[-1], ks[i], ks[i + 1]
            if (yb - ya) * (xc - xb) != (yc - yb) * (xb - xa):
                merged.append(ks[i])
        merged.append(ks[-1])
        object.__setattr__(self, "knots", tuple(merged))

    @classmethod
    def identity(cls, lo: RationalLike, hi: RationalLike) -> IntervalMap:
        lo, hi = as_rational(lo), as_rational(hi)
        return cls(((lo, lo), (hi, hi)))

    @property
    def lo(self) -> Fraction:
        return self.knots[0][0]

    @property
    def hi(self) -> Fraction:
        return self.knots[-1][0]

    @cached_property
    def breakpoints(self) -> tuple[Fraction, ...]:
        return tuple(x for x, _ in self.knots)

    def __contains__(self, x) -> bool:
        return self.lo <= as_rational(x) <= self.hi

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        if not self.lo <= x <= self.hi:
            raise PLError(f"{x} outside [{self.lo}, {self.hi}]")
        i = min(bisect_right(self.breakpoints, x) - 1, len(self.knots) - 2)
        (xa, ya), (xb, yb) = self.knots[i], self.knots[i + 1]
        return ya + (yb - ya) * (x - xa) / (xb - xa)

    def slope_at(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        i = min(bisect_right(self.breakpoints, x) - 1, len(self.knots) - 2)
        (xa, ya), (xb, yb) = self.knots[i], self.knots[i + 1]
        return (yb - ya) / (xb - xa)

    def inverse(self) -> IntervalMap:
        return IntervalMap(tuple((y, x) for x, y in self.knots))

    def __matmul__(self, other: IntervalMap) -> IntervalMap:
        if (self.lo, self.hi) != (other.lo, other.hi):
            raise PLError("interval maps live on different intervals")
        inv = other.inverse()
        xs = sorted(set(other.breakpoints) | {inv(b) for b in self.breakpoints})
        return IntervalMap(tuple((x, self(other(x))) for x in xs))

    def __pow__(self, n: int) -> IntervalMap:
        base = self if n >= 0 else self.inverse()
        out = IntervalMap.identity(self.lo, self.hi)
        for _ in range(abs(n)):
            out = base @ out
        return out

    def shifted(self, c: RationalLike) -> IntervalMap:
        """Conjugate by the translation ``x -> x + c``."""
        c = as_rational(c)
        return IntervalMap(tuple((x + c, y + c) for x, y in self.knots))

    def fixed_set(self) -> FixedSet:
        return FixedSet(
            tuple(_solve_pieces(self.knots, ZERO)), (self.lo, self.hi), periodic=False
        )

    def is_identity(self) -> bool:
        return len(self.knots) == 2

    def __repr__(self):
        body = ", ".join(f"({x}, {y})" for x, y in self.knots)
        return f"IntervalMap([{body}])"


def half_shift_extension(h: IntervalMap) -> PLLift:
    """The lift ``g`` with ``g = h`` on ``[0, 1/2]`` and ``g(x + 1/2) = g^-1(x) + 1/2``.

    ``h`` must be a homeomorphism of ``[0, 1/2]``.  Conjugating ``g`` by the
    half-turn gives ``g^-1``.
    """
    half = Fraction(1, 2)
    if (h.lo, h.hi) != (ZERO, half):
        raise PLError(f"seed must live on [0, 1/2], got [{h.lo}, {h.hi}]")
    upper = h.inverse().shifted(half)
    knots = list(h.knots[:-1]) + list(upper.knots[:-1])
    end = dict(upper.knots)[ONE]
    ys = [y for _, y in knots] + [end]
    xs = [x for x, _ in knots] + [ONE]
    pieces = [
        Piece(xs[i], ys[i], (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]))
        for i in range(len(knots))
    ]
    return PLLift(tuple(pieces))

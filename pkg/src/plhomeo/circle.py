"""Orientation-preserving PL circle homeomorphisms, via lifts.

Rotation numbers are decided exactly when a periodic orbit of period at
most ``q_max`` exists (a rational point ``x`` with ``F^q(x) = x + p``);
otherwise a certified bracket on the translation number is returned.
"""

from __future__ import annotations

import bisect
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .pl import (
    ZERO,
    FixedSet,
    IntervalMap,
    PLLift,
    as_rational,
    compose_lift,
    fixed_set,
    half_shift_extension,
    invert,
    lift_power,
    translation,
)

__all__ = [
    "CircleMap",
    "RotationResult",
    "KleinContainmentReport",
    "KleinRelationError",
    "rotation_number",
    "circle_fix",
    "power_rotation_check",
    "klein_circle_pair",
    "klein_relation_holds",
    "klein_fix_containment",
]

log = logging.getLogger(__name__)

DEFAULT_Q_MAX = 64
DEFAULT_WIDTH = Fraction(1, 1024)
DEFAULT_BUDGET = 2**16


@dataclass(frozen=True)
class CircleMap:
    """Circle map given by a lift; the stored lift has ``F(0)`` in ``[0, 1)``."""

    lift: PLLift

    def __post_init__(self):
        n = math.floor(self.lift.pieces[0].v)
        if n:
            object.__setattr__(self, "lift", self.lift.shifted(-n))

    @classmethod
    def rotation(cls, t) -> CircleMap:
        return cls(translation(t))

    def __call__(self, x) -> Fraction:
        y = self.lift(x)
        return y - math.floor(y)

    def __matmul__(self, other: CircleMap) -> CircleMap:
        return CircleMap(compose_lift(self.lift, other.lift))

    def __pow__(self, n: int) -> CircleMap:
        return CircleMap(lift_power(self.lift, n))

    def inverse(self) -> CircleMap:
        return CircleMap(invert(self.lift))


@dataclass(frozen=True)
class RotationResult:
    kind: str
    value: Fraction | None = None
    bounds: tuple[Fraction, Fraction] | None = None
    certificate: tuple[Fraction, int, int] | None = None
    converged: bool = True

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def contains(self, rho) -> bool:
        """Whether the rotation number ``rho`` (mod 1) is consistent with this result."""
        rho = as_rational(rho)
        if self.is_exact:
            return (rho - self.value) % 1 == 0
        lo, hi = self.bounds
        return math.floor(hi - rho) >= math.ceil(lo - rho)

    def __str__(self):
        if self.is_exact:
            return f"exact {self.value}"
        return f"bracket [{self.bounds[0]}, {self.bounds[1]}]"


def _displacement_range(f: PLLift) -> tuple[Fraction, Fraction]:
    d = [p.v - p.x for p in f.pieces]
    return min(d), max(d)


_GRID_BITS = 64
_GRID = 1 << _GRID_BITS


class _GridStepper:
    """``F`` on the grid ``Z / 2**64`` with outward rounding, in integer arithmetic."""

    def __init__(self, F: PLLift):
        self.thresholds = []
        self.coeffs = []
        for p in F.pieces:
            # r / 2**64 >= x  iff  r >= ceil(x * 2**64), for integer r
            self.thresholds.append(-((-p.x.numerator * _GRID) // p.x.denominator))
            c = p.v - p.s * p.x
            den = math.lcm(c.denominator, p.s.denominator)
            self.coeffs.append((
                den,
                c.numerator * (den // c.denominator) * _GRID,
                p.s.numerator * (den // p.s.denominator),
            ))

    def __call__(self, a: int, up: bool) -> int:
        k, r = divmod(a, _GRID)
        den, c, s = self.coeffs[bisect.bisect_right(self.thresholds, r) - 1]
        num = k * _GRID * den + c + s * r
        return -((-num) // den) if up else num // den


def _candidates(lo: Fraction, hi: Fraction, q_max: int) -> list[Fraction]:
    out = set()
    for q in range(1, q_max + 1):
        for p in range(math.ceil(lo * q), math.floor(hi * q) + 1):
            out.add(Fraction(p, q))
    return sorted(out, key=lambda r: (r.denominator, r))


def _periodic_point(F: PLLift, p: int, q: int) -> Fraction | None:
    return fixed_set(lift_power(F, q), p).first()


def rotation_number(
    m: CircleMap,
    q_max: int = DEFAULT_Q_MAX,
    width=DEFAULT_WIDTH,
    budget: int = DEFAULT_BUDGET,
) -> RotationResult:
    """Exact rotation number if a periodic orbit of period ``<= q_max`` exists.

    A certified bracket on the translation number of ``m.lift`` comes from
    two orbits of 0 rounded outward to a ``2**-64`` grid
    (``|F^n(0) - n rho| < 1``).  Once the bracket holds at most two
    fractions ``p/q`` with ``q <= q_max``, each is tested exactly: ``rho =
    p/q`` iff ``F^q(x) = x + p`` has a solution.  If none is left and the
    bracket is narrower than ``width``, the bracket is returned.  The
    bracket is a running intersection, so a larger budget or smaller width
    only shrinks it.  Running out of ``budget`` lift applications returns
    the achieved bracket with ``converged=False``.
    """
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    width = as_rational(width)
    if width <= 0:
        raise ValueError("width must be positive")
    F = m.lift
    lo, hi = _displacement_range(F)
    p = math.ceil(lo)
    if p <= hi:
        return RotationResult("exact", value=Fraction(p) % 1, certificate=(fixed_set(F, p).first(), p, 1))

    tested: set[Fraction] = set()
    step = _GridStepper(F)
    a = b = 0
    n = 0
    check_at = 1
    while True:
        if n == check_at or n >= budget:
            check_at *= 2
            # fewer than three candidates needs a bracket shorter than 3 / q_max
            cands = [] if (hi - lo) * q_max >= 3 else [c for c in _candidates(lo, hi, q_max) if c not in tested]
            if (hi - lo) * q_max < 3 and len(cands) <= 2:
                for c in cands:
                    tested.add(c)
                    x = _periodic_point(F, c.numerator, c.denominator)
                    if x is not None:
                        return RotationResult(
                            "exact", value=c % 1, certificate=(x, c.numerator, c.denominator)
                        )
                if hi - lo <= width:
                    return RotationResult("bracket", bounds=(lo, hi))
            if n >= budget:
                log.warning(
                    "rotation bracket width %s after %d iterations (target %s)", hi - lo, n, width
                )
                return RotationResult("bracket", bounds=(lo, hi), converged=False)
        a, b = step(a, False), step(b, True)
        n += 1
        lo = max(lo, Fraction(a - _GRID, n * _GRID))
        hi = min(hi, Fraction(b + _GRID, n * _GRID))


def circle_fix(m: CircleMap) -> FixedSet:
    """Fixed points on the circle: solutions of ``F(x) = x + j`` for integer ``j``."""
    dmin, dmax = _displacement_range(m.lift)
    out = FixedSet()
    for j in range(math.ceil(dmin), math.floor(dmax) + 1):
        out = out.union(fixed_set(m.lift, j))
    return out


def _consistent(a: RotationResult, b: RotationResult, n: int) -> bool:
    # a describes rot(m^n), b describes rot(m)
    if b.is_exact:
        return a.contains(n * b.value)
    lo, hi = sorted((n * b.bounds[0], n * b.bounds[1]))
    if a.is_exact:
        return RotationResult("bracket", bounds=(lo, hi)).contains(a.value)
    alo, ahi = a.bounds
    # exists integer k with [alo, ahi] and [lo + k, hi + k] overlapping
    return math.floor(ahi - lo) >= math.ceil(alo - hi)


def power_rotation_check(
    m: CircleMap, n: int, q_max: int = DEFAULT_Q_MAX, width=DEFAULT_WIDTH
) -> bool:
    """Is ``rot(m^n)`` consistent with ``n * rot(m)`` modulo 1?"""
    if n == 0:
        raise ValueError("n must be nonzero")
    r1 = rotation_number(m, q_max, width)
    rn = rotation_number(m**n, q_max, width)
    return _consistent(rn, r1, n)


# ---------------------------------------------------------------------------
# Klein bottle group on the circle


class KleinRelationError(ValueError):
    pass


def klein_circle_pair(h: IntervalMap) -> tuple[CircleMap, CircleMap]:
    """``f`` = half-turn, ``g`` = ``h`` on ``[0, 1/2]`` and ``f h^-1 f^-1`` on ``[1/2, 1]``."""
    if (h.lo, h.hi) != (ZERO, Fraction(1, 2)):
        raise KleinRelationError("seed must be a homeomorphism of [0, 1/2] fixing both ends")
    return CircleMap.rotation(Fraction(1, 2)), CircleMap(half_shift_extension(h))


def klein_relation_holds(f: CircleMap, g: CircleMap) -> bool:
    return f @ g @ f.inverse() == g.inverse()


@dataclass(frozen=True)
class KleinContainmentReport:
    relation_holds: bool
    fix_f: FixedSet
    fix_g2: FixedSet
    contained: bool
    components: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return self.relation_holds and self.contained

    def lines(self) -> list[str]:
        out = [
            f"relation f g f^-1 = g^-1: {'yes' if self.relation_holds else 'NO'}",
            f"Fix(f) = {self.fix_f}",
            f"Fix(g^2) = {self.fix_g2}",
            f"Fix(f) in Fix(g^2): {'yes' if self.contained else 'NO'}",
        ]
        for (a, b), inter, infinite in self.components:
            out.append(f"  arc ({a}, {b}): Fix(g^2) meets it in {inter}"
                       f"{' (infinite)' if infinite else ''}")
        return out


def _arc_intersection(fix: FixedSet, a: Fraction, b: Fraction) -> FixedSet:
    # open arc (a, b), b possibly > 1 when wrapping through 0
    pieces = [(a, min(b, Fraction(1)))]
    if b > 1:
        pieces.append((ZERO, b - 1))
    items = []
    for lo, hi in pieces:
        for ilo, ihi in fix.items:
            l, h = max(lo, ilo), min(hi, ihi)
            if l < h or (l == h and lo < l < hi):
                items.append((l, h))
    return FixedSet(tuple(items))


def klein_fix_containment(f: CircleMap, g: CircleMap, strict: bool = True) -> KleinContainmentReport:
    """Check ``Fix(f) <= Fix(g^2)`` for a Klein pair and list ``Fix(g^2)`` per gap of ``Fix(f)``.

    With ``strict`` the relation ``f g f^-1 = g^-1`` is required; pass
    ``strict=False`` to produce a report for arbitrary pairs (negative
    controls).  ``Fix(f)`` must be nonempty either way.
    """
    relation = klein_relation_holds(f, g)
    if strict and not relation:
        raise KleinRelationError("f g f^-1 != g^-1")
    fix_f = circle_fix(f)
    if not fix_f:
        raise KleinRelationError("Fix(f) is empty")
    fix_g2 = circle_fix(g @ g)
    comps = []
    for a, b in fix_f.complement_arcs():
        inter = _arc_intersection(fix_g2, a, b)
        comps.append(((a, b), inter, inter.is_infinite()))
    return KleinContainmentReport(relation, fix_f, fix_g2, fix_f.issubset(fix_g2), tuple(comps))

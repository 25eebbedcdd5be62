"""Skew-product homeomorphisms of the plane.

A :class:`SkewMap` over the x-axis is ``(x, y) -> (base(x), y + fiber(x))``;
over the y-axis it is the mirror image ``(x, y) -> (x + fiber(y), base(y))``.
Pure translations ``(x + p, y + q)`` belong to both families and are always
stored over x, so ``==`` is exact equality of planar maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .pl import (
    ONE,
    ZERO,
    PLFunc,
    PLLift,
    as_rational,
    compose_fn_lift,
    compose_lift,
    constant,
    fn_linear_combine,
    identity,
    invert,
    sup_displacement,
    translation,
)

__all__ = [
    "OrientationError",
    "SkewMap",
    "skew_identity",
    "skew_compose",
    "skew_invert",
    "skew_power",
    "skew_equal",
    "mirror",
    "skew_displacement",
]

Point = tuple[Fraction, Fraction]


class OrientationError(ValueError):
    """Skew maps over different axes cannot be composed in normal form."""


@dataclass(frozen=True)
class SkewMap:
    orientation: str
    base: PLLift
    fiber: PLFunc

    def __post_init__(self):
        if self.orientation not in ("x", "y"):
            raise ValueError(f"orientation must be 'x' or 'y', got {self.orientation!r}")
        if self.orientation == "y" and self.is_translation():
            object.__setattr__(self, "orientation", "x")
            base, fiber = self.base, self.fiber
            object.__setattr__(self, "base", translation(fiber.pieces[0].v))
            object.__setattr__(self, "fiber", constant(base.pieces[0].v))

    def is_translation(self) -> bool:
        return self.base.is_translation() and self.fiber.is_constant()

    def translation_vector(self) -> Point | None:
        if not self.is_translation():
            return None
        return self.base.pieces[0].v, self.fiber.pieces[0].v

    def as_orientation(self, orientation: str) -> SkewMap:
        """Same map in the requested normal form; only translations can switch."""
        if orientation == self.orientation:
            return self
        if not self.is_translation():
            raise OrientationError(f"map over {self.orientation} has no form over {orientation}")
        p, q = self.translation_vector()
        m = object.__new__(SkewMap)
        object.__setattr__(m, "orientation", "y")
        object.__setattr__(m, "base", translation(q))
        object.__setattr__(m, "fiber", constant(p))
        return m

    def __call__(self, point) -> Point:
        x, y = (as_rational(c) for c in point)
        if self.orientation == "x":
            return self.base(x), y + self.fiber(x)
        return x + self.fiber(y), self.base(y)

    def __matmul__(self, other: SkewMap) -> SkewMap:
        return skew_compose(self, other)

    def __pow__(self, n: int) -> SkewMap:
        return skew_power(self, n)

    def inverse(self) -> SkewMap:
        return skew_invert(self)

    def __str__(self):
        v = self.translation_vector()
        if v is not None:
            return f"translation({v[0]}, {v[1]})"
        return f"skew over {self.orientation}: base={self.base!r} fiber={self.fiber!r}"


def skew_identity() -> SkewMap:
    return SkewMap("x", identity(), constant(ZERO))


def _align(a: SkewMap, b: SkewMap) -> tuple[SkewMap, SkewMap]:
    if a.orientation == b.orientation:
        return a, b
    if a.is_translation():
        return a.as_orientation(b.orientation), b
    if b.is_translation():
        return a, b.as_orientation(a.orientation)
    raise OrientationError(
        "cannot compose a skew map over x with a non-translation skew map over y"
    )


def skew_compose(a: SkewMap, b: SkewMap) -> SkewMap:
    """``a o b``: base ``sa o sb``, fiber ``tb + ta o sb``."""
    a, b = _align(a, b)
    base = compose_lift(a.base, b.base)
    fiber = fn_linear_combine([(ONE, b.fiber), (ONE, compose_fn_lift(a.fiber, b.base))])
    return SkewMap(a.orientation, base, fiber)


def skew_invert(a: SkewMap) -> SkewMap:
    inv = invert(a.base)
    return SkewMap(a.orientation, inv, fn_linear_combine([(-ONE, compose_fn_lift(a.fiber, inv))]))


def skew_power(a: SkewMap, n: int) -> SkewMap:
    if n < 0:
        a, n = skew_invert(a), -n
    out = skew_identity()
    base = a
    while n:
        if n & 1:
            out = skew_compose(out, base)
        n >>= 1
        if n:
            base = skew_compose(base, base)
    return out


def skew_equal(a: SkewMap, b: SkewMap) -> bool:
    return a == b


def mirror(a: SkewMap) -> SkewMap:
    """Conjugate by the coordinate swap ``(x, y) -> (y, x)``."""
    if a.is_translation():
        p, q = a.translation_vector()
        return SkewMap("x", translation(q), constant(p))
    return SkewMap("y" if a.orientation == "x" else "x", a.base, a.fiber)


def skew_displacement(a: SkewMap) -> Fraction:
    """Max over both coordinates of the exact sup displacement."""
    return max(sup_displacement(a.base), sup_displacement(a.fiber))

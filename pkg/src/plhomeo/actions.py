"""Actions of Z^2 and of the Klein bottle group on the line.

``f`` is the unit translation ``x -> x + direction``.  A seed ``h`` on
``I = [x0, f(x0)]`` fixing both ends determines a unique ``g`` with
``f g f^-1 = g^eps`` (``eps = +1`` for Z^2, ``-1`` for K): on the block
``f^n(I)``, ``g`` is ``h^(eps^n)`` translated by ``n * direction``.  Global
maps are held on a finite window of blocks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .pl import FixedSet, IntervalMap, PLError, PLLift, as_rational, fixed_set, identity, zero_set
from .skew import SkewMap

__all__ = [
    "ActionSpec",
    "WindowedMap",
    "OrbitEscape",
    "CheckItem",
    "extend_action",
    "eval_action",
    "parse_action_word",
    "check_fix_lemmas",
    "common_fixed_set",
    "abelian_fix_witness",
    "common_fixed_fibers",
    "DEFAULT_WINDOW",
]

DEFAULT_WINDOW = (-8, 8)


class OrbitEscape(ValueError):
    """An orbit left the window; widen it and retry."""


@dataclass(frozen=True)
class ActionSpec:
    group: str
    direction: int
    x0: Fraction
    seed: IntervalMap

    def __post_init__(self):
        if self.group not in ("Z2", "K"):
            raise ValueError(f"group must be 'Z2' or 'K', got {self.group!r}")
        if self.direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")
        x0 = as_rational(self.x0)
        object.__setattr__(self, "x0", x0)
        lo, hi = sorted((x0, x0 + self.direction))
        if (self.seed.lo, self.seed.hi) != (lo, hi):
            raise PLError(
                f"seed lives on [{self.seed.lo}, {self.seed.hi}], expected [{lo}, {hi}]"
            )

    @property
    def eps(self) -> int:
        return 1 if self.group == "Z2" else -1

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self.seed.lo, self.seed.hi


@dataclass(frozen=True)
class WindowedMap:
    """``g`` on the blocks ``f^n(I)`` for ``n`` in ``[n_min, n_max]``."""

    spec: ActionSpec
    window: tuple[int, int]
    blocks: dict = field(compare=False)

    def __eq__(self, other):
        return (
            isinstance(other, WindowedMap)
            and self.window == other.window
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.window, tuple(sorted(self.blocks.items()))))

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        los = [b.lo for b in self.blocks.values()]
        his = [b.hi for b in self.blocks.values()]
        return min(los), max(his)

    def block_for(self, x: Fraction) -> IntervalMap:
        for b in self.blocks.values():
            if b.lo <= x <= b.hi:
                return b
        raise OrbitEscape(f"{x} lies outside the window {self.window}")

    def __call__(self, x) -> Fraction:
        x = as_rational(x)
        return self.block_for(x)(x)

    def inverse_at(self, x) -> Fraction:
        x = as_rational(x)
        return self.block_for(x).inverse()(x)

    def as_interval_map(self) -> IntervalMap:
        """All blocks glued into one homeomorphism of the window's domain."""
        knots = []
        for n in sorted(self.blocks, key=lambda n: self.blocks[n].lo):
            ks = self.blocks[n].knots
            knots.extend(ks[1:] if knots else ks)
        return IntervalMap(tuple(knots))

    def fixed_set(self) -> FixedSet:
        return self.as_interval_map().fixed_set()

    def with_block(self, n: int, block: IntervalMap) -> WindowedMap:
        blocks = dict(self.blocks)
        blocks[n] = block
        return replace(self, blocks=blocks)


def extend_action(spec: ActionSpec, window: tuple[int, int] = DEFAULT_WINDOW) -> WindowedMap:
    n_min, n_max = window
    if n_min > n_max:
        raise ValueError(f"empty window {window}")
    h_inv = spec.seed.inverse()
    blocks = {}
    for n in range(n_min, n_max + 1):
        h = spec.seed if spec.eps == 1 or n % 2 == 0 else h_inv
        blocks[n] = h.shifted(n * spec.direction)
    return WindowedMap(spec, (n_min, n_max), blocks)


_F_G_RE = re.compile(r"^([fg])(?:\^([+-]?\d+))?$")


def parse_action_word(text: str) -> list[tuple[str, int]]:
    out = []
    for pos, tok in enumerate(text.split(), start=1):
        m = _F_G_RE.match(tok)
        if not m:
            raise ValueError(f"atom {pos}: cannot parse {tok!r}")
        out.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
    return out


def eval_action(w: WindowedMap, word: str | Sequence[tuple[str, int]], x) -> Fraction:
    """Exact image of ``x`` under a word in ``f`` and ``g`` (rightmost acts first).

    Raises :class:`OrbitEscape` if any intermediate point leaves the window.
    """
    atoms = parse_action_word(word) if isinstance(word, str) else list(word)
    x = as_rational(x)
    lo, hi = w.domain
    if not lo <= x <= hi:
        raise OrbitEscape(f"{x} lies outside the window {w.window}")
    d = w.spec.direction
    for sym, e in reversed(atoms):
        for _ in range(abs(e)):
            if sym == "f":
                x = x + d if e > 0 else x - d
            else:
                x = w(x) if e > 0 else w.inverse_at(x)
            if not lo <= x <= hi:
                raise OrbitEscape(f"orbit reached {x}, outside the window {w.window}")
    return x


@dataclass(frozen=True)
class CheckItem:
    name: str
    ok: bool
    detail: str = ""

    def __str__(self):
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.detail}"


def check_fix_lemmas(spec: ActionSpec, window=DEFAULT_WINDOW, w: WindowedMap | None = None) -> list[CheckItem]:
    """Fixed-point facts and the defining relation, exactly on the window.

    Pass ``w`` to check an already built (possibly corrupted) windowed map.
    """
    w = extend_action(spec, window) if w is None else w
    n_min, n_max = w.window
    fix_g = w.fixed_set()
    orbit = [spec.x0 + n * spec.direction for n in range(n_min, n_max + 1)]
    orbit += [spec.x0 + (n + 1) * spec.direction for n in range(n_min, n_max + 1)]
    missing = [x for x in orbit if x not in fix_g]
    items = [
        CheckItem(
            "fix-g-contains-orbit",
            not missing,
            f"{len(set(orbit))} translates of the seed endpoints"
            + (f"; missing {missing[:3]}" if missing else " all fixed"),
        )
    ]
    f_fix = fixed_set(PLLift(((0, spec.direction, 1),)))
    items.append(
        CheckItem("fix-f-empty", f_fix.is_empty(), f"f = x {'+' if spec.direction > 0 else '-'} 1, Fix(f) = {f_fix}")
    )
    bad = []
    for n in range(n_min, n_max):
        lhs = w.blocks[n].shifted(spec.direction)  # f g f^-1 on f^(n+1)(I)
        rhs = w.blocks[n + 1] if spec.eps == 1 else w.blocks[n + 1].inverse()
        if lhs != rhs:
            bad.append(n + 1)
    rel = "f g f^-1 = g" if spec.eps == 1 else "f g f^-1 = g^-1"
    items.append(
        CheckItem(
            "relation",
            not bad,
            f"{rel} on blocks {n_min + 1}..{n_max}" + (f"; fails on blocks {bad}" if bad else ""),
        )
    )
    return items


def _as_interval_map(m) -> IntervalMap:
    if isinstance(m, IntervalMap):
        return m
    if isinstance(m, WindowedMap):
        return m.as_interval_map()
    if isinstance(m, PLLift):
        knots = [(p.x, p.v) for p in m.pieces] + [(Fraction(1), m.pieces[0].v + 1)]
        return IntervalMap(tuple(knots))
    raise TypeError(f"cannot use {type(m).__name__} as an interval map")


def common_fixed_set(maps: Iterable) -> FixedSet:
    """Intersection of the exact fixed sets, after checking pairwise commutation."""
    ims = [_as_interval_map(m) for m in maps]
    if not ims:
        raise ValueError("need at least one map")
    for i, a in enumerate(ims):
        for b in ims[i + 1:]:
            if (a.lo, a.hi) != (b.lo, b.hi):
                raise ValueError("maps act on different intervals")
            if a @ b != b @ a:
                raise ValueError("maps do not commute")
    out = ims[0].fixed_set()
    for m in ims[1:]:
        out = out.intersection(m.fixed_set())
    return out


def abelian_fix_witness(maps: Iterable) -> Fraction | None:
    """Smallest common fixed point of commuting maps, or ``None``.

    Accepts :class:`IntervalMap`, :class:`WindowedMap` or lifts (a lift with
    ``F(0) = 0`` is read on ``[0, 1]``).
    """
    return common_fixed_set(maps).first()


def common_fixed_fibers(fibers: Sequence) -> FixedSet:
    """Base points ``x`` where every fiber translation ``y -> y + tau(x)`` is trivial.

    ``fibers`` are :class:`~plhomeo.pl.PLFunc` or skew maps over x with
    identity base; the result is the intersection of the zero sets.
    """
    out = None
    for t in fibers:
        if isinstance(t, SkewMap):
            if t.orientation != "x" or t.base != identity():
                raise ValueError("expected a fiber translation over x")
            t = t.fiber
        z = zero_set(t)
        out = z if out is None else out.intersection(z)
    return out if out is not None else FixedSet(((0, 1),))

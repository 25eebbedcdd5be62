"""Words in the generators of ``G = <H, H_bar>`` and their exact evaluation.

Text syntax: whitespace-separated atoms ``a b g d gb db e`` (alpha, beta,
gamma, delta, gamma_bar, delta_bar, eta) with optional ``^n`` exponents,
e.g. ``"a^6 g a^-6"``.  A word is a product, so the rightmost atom acts
first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .generators import generator
from .pl import as_rational
from .skew import OrientationError, SkewMap, mirror, skew_compose, skew_identity, skew_invert, skew_power

__all__ = ["WordSyntaxError", "Atom", "PlanarWord", "parse_word", "word_eval", "word_reduce"]

ATOM_NAMES = {
    "a": "alpha",
    "b": "beta",
    "g": "gamma",
    "d": "delta",
    "gb": "gamma_bar",
    "db": "delta_bar",
    "e": "eta",
}

_ATOM_RE = re.compile(r"^(gb|db|a|b|g|d|e)(?:\^([+-]?\d+))?$")


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"atom {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class Atom:
    symbol: str
    exponent: int = 1

    def __post_init__(self):
        if self.symbol not in ATOM_NAMES:
            raise ValueError(f"unknown atom {self.symbol!r}")
        if self.symbol == "e" and self.exponent not in (1, -1):
            raise ValueError("eta is an involution; only exponent +-1 is allowed")

    def __str__(self):
        return self.symbol if self.exponent == 1 else f"{self.symbol}^{self.exponent}"


@dataclass(frozen=True)
class PlanarWord:
    atoms: tuple[Atom, ...] = ()

    @classmethod
    def of(cls, *atoms) -> PlanarWord:
        return cls(tuple(a if isinstance(a, Atom) else Atom(*a) for a in atoms))

    def __str__(self):
        return " ".join(str(a) for a in self.atoms)

    def __len__(self):
        return len(self.atoms)


def parse_word(text: str) -> PlanarWord:
    atoms = []
    for pos, token in enumerate(text.split(), start=1):
        m = _ATOM_RE.match(token)
        if not m:
            raise WordSyntaxError(f"cannot parse {token!r}", pos)
        exp = int(m.group(2)) if m.group(2) is not None else 1
        try:
            atoms.append(Atom(m.group(1), exp))
        except ValueError as exc:
            raise WordSyntaxError(str(exc), pos) from None
    return PlanarWord(tuple(atoms))


def _as_word(w) -> PlanarWord:
    return parse_word(w) if isinstance(w, str) else w


@lru_cache(maxsize=None)
def _atom_map(symbol: str, sign: int) -> SkewMap:
    g = generator(ATOM_NAMES[symbol])
    return g if sign > 0 else skew_invert(g)


def word_eval(w: PlanarWord | str, point: Iterable) -> tuple[Fraction, Fraction]:
    """Exact image of ``point``, applying atoms right to left."""
    x, y = (as_rational(c) for c in point)
    for atom in reversed(_as_word(w).atoms):
        if atom.symbol == "e":
            x, y = y, x
            continue
        m = _atom_map(atom.symbol, 1 if atom.exponent > 0 else -1)
        for _ in range(abs(atom.exponent)):
            x, y = m((x, y))
    return x, y


def word_reduce(w: PlanarWord | str) -> SkewMap | None:
    """Normal form of a word as one skew map, or ``None`` if it has none here.

    Every ``eta`` is pushed to the right end, mirroring the atoms it passes.
    ``None`` means the word needs an odd number of swaps or mixes
    non-translation maps over both axes; such words are only evaluable
    pointwise with :func:`word_eval`.
    """
    out = skew_identity()
    flipped = False
    for atom in _as_word(w).atoms:
        if atom.symbol == "e":
            flipped = not flipped
            continue
        m = skew_power(generator(ATOM_NAMES[atom.symbol]), atom.exponent)
        if flipped:
            m = mirror(m)
        try:
            out = skew_compose(out, m)
        except OrientationError:
            return None
    if flipped:
        return None
    return out

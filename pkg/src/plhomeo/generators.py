"""The concrete planar generators and the derived elements ``g_k``.

Families ``a^t``, ``b^t``, ``c^t`` are horizontal translation, vertical
translation and the vertical shear by ``t * gamma0(x)``.  The fixed
generators are ``alpha = a^(1/12)``, ``beta = b^(1/12)``,
``gamma = c^(1/168)``, ``delta = (delta0(x), y)`` and their mirrors
``gamma_bar``, ``delta_bar``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .pl import (
    ONE,
    IntervalMap,
    PLFunc,
    PLLift,
    as_rational,
    compose_fn_lift,
    constant,
    fn_linear_combine,
    fn_precompose_shift,
    half_shift_extension,
    identity,
    translation,
)
from .skew import SkewMap, mirror, skew_compose, skew_identity, skew_invert, skew_power

__all__ = [
    "SHEAR",
    "gamma0",
    "delta0",
    "delta0_seed",
    "delta0_squared_table",
    "generator",
    "make_g",
    "product_g",
    "phi",
    "phi_slope_terms",
    "phi_at_zero_terms",
    "half_parameter_root",
    "GENERATOR_NAMES",
]

SHEAR = Fraction(1, 168)
STEP = Fraction(1, 12)
HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def gamma0() -> PLFunc:
    """1-periodic tent: ``-4x + 1`` on ``[0, 1/2)``, ``4x - 3`` on ``[1/2, 1)``."""
    return PLFunc(((0, 1, -4), (HALF, -1, 4)))


def delta0_seed() -> IntervalMap:
    # x/2 on [0, 1/3), 2x - 1/2 on [1/3, 1/2)
    return IntervalMap(((0, 0), (Fraction(1, 3), Fraction(1, 6)), (HALF, HALF)))


@lru_cache(maxsize=None)
def delta0() -> PLLift:
    """Lift determined by its seed on ``[0, 1/2)`` and ``d(x + 1/2) = d^-1(x) + 1/2``."""
    return half_shift_extension(delta0_seed())


def delta0_squared_table() -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    """Displayed form of ``delta0^2`` on ``[0, 1/2)`` as ``(lo, hi, slope, intercept)``."""
    return [
        (Fraction(0), Fraction(4, 12), Fraction(1, 4), Fraction(0)),
        (Fraction(4, 12), Fraction(5, 12), Fraction(1), Fraction(-1, 4)),
        (Fraction(5, 12), HALF, Fraction(4), Fraction(-3, 2)),
    ]


def _family(name: str, t: Fraction) -> SkewMap:
    if name == "a":
        return SkewMap("x", translation(t), constant(0))
    if name == "b":
        return SkewMap("x", identity(), constant(t))
    if name == "c":
        return SkewMap("x", identity(), fn_linear_combine([(t, gamma0())]))
    raise KeyError(name)


GENERATOR_NAMES = ("alpha", "beta", "gamma", "delta", "gamma_bar", "delta_bar")
_ALIASES = {
    "α": "alpha", "β": "beta", "γ": "gamma", "δ": "delta",
    "γ̄": "gamma_bar", "δ̄": "delta_bar",
}


@lru_cache(maxsize=None)
def _named(name: str) -> SkewMap:
    if name == "alpha":
        return _family("a", STEP)
    if name == "beta":
        return _family("b", STEP)
    if name == "gamma":
        return _family("c", SHEAR)
    if name == "delta":
        return SkewMap("x", delta0(), constant(0))
    if name == "gamma_bar":
        return mirror(_named("gamma"))
    if name == "delta_bar":
        return mirror(_named("delta"))
    raise KeyError(name)


def generator(symbol: str, t=None) -> SkewMap:
    """Planar generator by name.

    ``"a"``, ``"b"``, ``"c"`` are the one-parameter families and need ``t``.
    The fixed generators are ``alpha``, ``beta``, ``gamma``, ``delta``,
    ``gamma_bar`` and ``delta_bar`` (Greek spellings accepted).
    """
    symbol = _ALIASES.get(symbol, symbol)
    if symbol in ("a", "b", "c"):
        if t is None:
            raise ValueError(f"family {symbol}^t needs a parameter")
        return _family(symbol, as_rational(t))
    if symbol in ("eta", "η", "e"):
        raise ValueError("eta swaps the axes and is not a skew map; use mirror() or a word")
    if t is not None:
        raise ValueError(f"fixed generator {symbol!r} takes no parameter")
    try:
        return _named(symbol)
    except KeyError:
        raise ValueError(f"unknown generator {symbol!r}") from None


@lru_cache(maxsize=None)
def _g0() -> SkewMap:
    d2 = skew_power(generator("delta"), 2)
    return skew_compose(skew_invert(d2), skew_compose(generator("gamma"), d2))


@lru_cache(maxsize=None)
def make_g(k: int) -> SkewMap:
    """``alpha^k delta^-2 gamma delta^2 alpha^-k``, computed by composition."""
    ak = skew_power(generator("alpha"), k)
    return skew_compose(ak, skew_compose(_g0(), skew_invert(ak)))


def product_g(exponent: int = 1, ks=range(12)) -> SkewMap:
    out = skew_identity()
    for k in ks:
        out = skew_compose(out, skew_power(make_g(k), exponent))
    return out


@lru_cache(maxsize=None)
def phi() -> PLFunc:
    """``sum_k gamma0(delta0^2(x - k/12))`` over ``k = 0..11``, as an exact PL sum."""
    inner = compose_fn_lift(gamma0(), delta0() @ delta0())
    return fn_linear_combine([(ONE, fn_precompose_shift(inner, k * STEP)) for k in range(12)])


def phi_slope_terms(x=Fraction(1, 24)) -> list[tuple[Fraction, Fraction]]:
    """Per-summand ``(gamma0', (delta0^2)')`` at ``x - k/12`` for ``x`` in ``(0, 1/12)``."""
    x = as_rational(x)
    if not 0 < x < STEP:
        raise ValueError("x must lie in (0, 1/12)")
    d2 = delta0() @ delta0()
    terms = []
    for k in range(12):
        xk = x - k * STEP
        terms.append((gamma0().slope_at(d2(xk)), d2.slope_at(xk)))
    return terms


def phi_at_zero_terms() -> list[Fraction]:
    d2 = delta0() @ delta0()
    return [gamma0()(d2(-k * STEP)) for k in range(12)]


def half_parameter_root(symbol: str, t) -> SkewMap:
    """Square root of a family member: ``(family(t/2))^2 == family(t)``."""
    return generator(symbol, as_rational(t) / 2)


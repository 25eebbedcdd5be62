"""Named suite of exact checks on the planar construction.

Each check returns a :class:`CheckResult` whose status is ``pass`` only when
every sub-item holds as an exact equality of canonical forms.  Some checks
carry negative controls (a deliberately wrong variant that must *fail*);
these are reported as sub-items of the same check.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable

from .actions import ActionSpec, CheckItem, check_fix_lemmas, common_fixed_fibers, extend_action
from .circle import (
    CircleMap,
    circle_fix,
    klein_circle_pair,
    klein_fix_containment,
    klein_relation_holds,
    rotation_number,
)
from .generators import (
    SHEAR,
    delta0,
    delta0_seed,
    delta0_squared_table,
    gamma0,
    generator,
    half_parameter_root,
    make_g,
    phi,
    phi_at_zero_terms,
    phi_slope_terms,
    product_g,
)
from .pl import (
    IntervalMap,
    Piece,
    PLLift,
    constant,
    fn_precompose_shift,
    half_shift_extension,
    invert,
    translation,
)
from .skew import SkewMap, mirror, skew_compose, skew_displacement, skew_invert, skew_power
from .words import word_eval, word_reduce

__all__ = ["CheckResult", "CHECKS", "UnknownCheck", "verify_paper", "describe"]

HALF = Fraction(1, 2)


class UnknownCheck(KeyError):
    pass


@dataclass
class CheckResult:
    check_id: str
    name: str
    status: str
    witness: str
    expected: str
    items: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["items"] = [{"name": i.name, "ok": i.ok, "detail": i.detail} for i in self.items]
        return d

    def text_lines(self) -> list[str]:
        head = f"{self.status.upper():5} {self.check_id:<4} {self.name:<16} witness: {self.witness}"
        lines = [head]
        if self.status != "pass" or self.expected != self.witness:
            lines.append(f"      expected: {self.expected}")
        lines += [f"      {'ok ' if i.ok else 'BAD'} {i.name}: {i.detail}" for i in self.items]
        return lines


def describe(m: SkewMap) -> str:
    v = m.translation_vector()
    if v is None:
        return str(m)
    p, q = v
    if p == 0 and q == 0:
        return "id"
    if p == 0:
        return f"b^{{{q}}}"
    if q == 0:
        return f"a^{{{p}}}"
    return f"a^{{{p}}} b^{{{q}}}"


def _g(name):
    return generator(name)


def _conj(a: SkewMap, b: SkewMap) -> SkewMap:
    return skew_compose(a, skew_compose(b, skew_invert(a)))


# -- individual checks -------------------------------------------------------
# Each returns (items, witness, expected).


def _c1():
    g0 = gamma0()
    lhs = fn_precompose_shift(g0, -HALF)  # x -> gamma0(x + 1/2)
    items = [
        CheckItem("shift-equals-negation", lhs == -g0, f"gamma0(x+1/2) = {lhs!r}"),
        CheckItem("control: shift by 1/4", fn_precompose_shift(g0, -Fraction(1, 4)) != -g0, "differs from -gamma0"),
    ]
    return items, "gamma0(x+1/2) = -gamma0(x)", "gamma0(x+1/2) = -gamma0(x)"


def _c2():
    d = delta0()
    t = translation(HALF)
    lhs, rhs = d @ t, t @ invert(d)
    items = [
        CheckItem("half-shift", lhs == rhs, f"delta0(x+1/2) = {lhs!r}"),
        CheckItem("seed", all(d(x) == delta0_seed()(x) for x in delta0_seed().breakpoints), "delta0 = seed on [0,1/2]"),
        CheckItem("control: d(x+1/2) != d(x)+1/2", lhs != t @ d, "delta0 does not commute with the half-turn"),
    ]
    return items, "delta0(x+1/2) = delta0^-1(x) + 1/2", "delta0(x+1/2) = delta0^-1(x) + 1/2"


def _c3():
    d2 = delta0() @ delta0()
    table = delta0_squared_table()
    got = [p for p in d2.pieces if p.x < HALF]
    want = [Piece(lo, s * lo + c, s) for lo, hi, s, c in table]
    items = [CheckItem("pieces on [0,1/2)", got == want, f"{len(got)} pieces")]
    seed = IntervalMap(tuple((lo, s * lo + c) for lo, _, s, c in table) + ((HALF, HALF),))
    items.append(CheckItem("full lift from table", d2 == half_shift_extension(seed), "table + half-shift law"))
    ends = [p.x for p in got[1:]] + [HALF]
    w = "; ".join(f"{_affine(p.s, p.v - p.s * p.x)} on [{p.x}, {e})" for p, e in zip(got, ends))
    e = "; ".join(f"{_affine(s, c)} on [{lo}, {hi})" for lo, hi, s, c in table)
    return items, w, e


def _affine(s: Fraction, c: Fraction) -> str:
    lin = "x" if s == 1 else f"{s}x"
    if c == 0:
        return lin
    return f"{lin} {'+' if c > 0 else '-'} {abs(c)}"


def _c4():
    bound = Fraction(1, 3)
    expected = {
        "alpha": Fraction(1, 12), "beta": Fraction(1, 12), "gamma": SHEAR,
        "delta": Fraction(1, 6), "gamma_bar": SHEAR, "delta_bar": Fraction(1, 6),
    }
    got = {name: skew_displacement(_g(name)) for name in expected}
    items = [CheckItem(n, got[n] == expected[n], f"sup displacement {got[n]}") for n in expected]
    parts = [f"{n}={d}" for n, d in got.items()]
    top = max(got.values())
    items.append(CheckItem("bound", top <= bound, f"max {top} <= {bound}"))
    return items, ", ".join(parts), ", ".join(f"{k}={v}" for k, v in expected.items())


def _c5():
    b = _g("beta")
    items = [
        CheckItem(f"beta {n}", skew_compose(b, _g(n)) == skew_compose(_g(n), b), "commute")
        for n in ("alpha", "gamma", "delta")
    ]
    return items, "beta central in <alpha, beta, gamma, delta>", "beta central in <alpha, beta, gamma, delta>"


def _alpha6(name):
    a6 = skew_power(_g("alpha"), 6)
    x = _g(name)
    lhs = _conj(a6, x)
    a5 = skew_power(_g("alpha"), 5)
    items = [
        CheckItem(f"alpha^6 {name} alpha^-6 = {name}^-1", lhs == skew_invert(x), describe(lhs)),
        CheckItem("control: alpha^5 conjugate differs", _conj(a5, x) != skew_invert(x), "as expected"),
    ]
    return items, f"{name}^-1", f"{name}^-1"


def _c8():
    gs = [make_g(k) for k in range(12)]
    bad = [(i, j) for i, j in combinations(range(12), 2) if gs[i] @ gs[j] != gs[j] @ gs[i]]
    items = [CheckItem("66 pairs", not bad, f"non-commuting pairs: {bad}" if bad else "all commute")]
    control = skew_compose(gs[0], _g("delta")) != skew_compose(_g("delta"), gs[0])
    items.append(CheckItem("control: g_0 and delta do not commute", control, ""))
    return items, f"{66 - len(bad)}/66 pairs commute", "66/66 pairs commute"


def _c9():
    bad = [k for k in range(12) if make_g(k) != make_g(k + 12)]
    items = [CheckItem("g_k = g_(k+12)", not bad, f"k = 0..11, failures {bad}")]
    items.append(CheckItem("control: g_0 != g_1", make_g(0) != make_g(1), ""))
    items.append(CheckItem("alpha^12 central", all(
        skew_compose(skew_power(_g("alpha"), 12), _g(n)) == skew_compose(_g(n), skew_power(_g("alpha"), 12))
        for n in ("gamma", "delta")), "alpha^12 commutes with gamma, delta"))
    return items, "period 12", "period 12"


def _c10():
    f = phi()
    terms = phi_at_zero_terms()
    by_formula = 2 * (sum(1 - Fraction(k, 12) for k in range(1, 5)) - 4 * Fraction(5, 12) + 2)
    items = [
        CheckItem("constant", f == constant(7), repr(f)),
        CheckItem("1/12-periodic", fn_precompose_shift(f, Fraction(1, 12)) == f, ""),
        CheckItem("phi(0) summands", sum(terms) == 7, " + ".join(str(t) for t in terms)),
        CheckItem("closed form at 0", by_formula == 7, f"2((sum_(k=1..4)(1-k/12)) - 4*5/12 + 2) = {by_formula}"),
    ]
    return items, f"phi = {f.pieces[0].v}" if f.is_constant() else repr(f), "phi = 7"


def _c11():
    terms = phi_slope_terms()
    neg = sorted(d for g, d in terms if g == -4)
    pos = sorted(d for g, d in terms if g == 4)
    quarter = Fraction(1, 4)
    want = sorted([quarter] * 4 + [Fraction(1), Fraction(4)])
    total = sum(g * d for g, d in terms)
    formula = -4 * (4 * quarter + 1 + 4) + 4 * (4 + 1 + 4 * quarter)
    items = [
        CheckItem("decreasing branch slopes", neg == want, f"{[str(d) for d in neg]}"),
        CheckItem("increasing branch slopes", pos == want, f"{[str(d) for d in pos]}"),
        CheckItem("sum", total == 0 == formula, f"-4*{sum(neg)} + 4*{sum(pos)} = {total}"),
    ]
    # phi' on every subinterval, not just at the sample point
    other = [phi_slope_terms(Fraction(j, 12 * 7)) for j in range(1, 7)]
    items.append(CheckItem("all of (0,1/12)", all(sum(g * d for g, d in t) == 0 for t in other), "phi' = 0"))
    return items, f"phi' = {total}", "phi' = 0"


def _c12():
    p1, p2 = product_g(1), product_g(2)
    want1 = generator("b", Fraction(1, 24))
    items = [
        CheckItem("prod g_k = b^(1/24)", p1 == want1, describe(p1)),
        CheckItem("prod g_k^2 = beta", p2 == _g("beta"), describe(p2)),
        CheckItem("order immaterial", product_g(1, ks=reversed(range(12))) == p1, "k descending"),
        CheckItem("control: prod g_k != beta", p1 != _g("beta"), ""),
    ]
    fib = common_fixed_fibers([make_g(k) for k in range(12)])
    items.append(CheckItem("no common fixed fiber", fib.is_empty(), f"common zero set of the 12 fibers: {fib}"))
    return items, describe(p1), "b^{1/24}"


def _c13():
    a, b, g, d = (_g(n) for n in ("alpha", "beta", "gamma", "delta"))
    pts = [(Fraction(1, 7), Fraction(-2, 3)), (Fraction(5, 3), Fraction(3, 11)), (Fraction(0), Fraction(1, 2))]
    items = [
        CheckItem("eta alpha eta = beta", mirror(a) == b, describe(mirror(a))),
        CheckItem("word e a e", word_reduce("e a e") == b, "reduces to beta"),
        CheckItem("gamma_bar = eta gamma eta", word_reduce("e g e") == _g("gamma_bar") == mirror(g), ""),
        CheckItem("delta_bar = eta delta eta", word_reduce("e d e") == _g("delta_bar") == mirror(d), ""),
        CheckItem("pointwise", all(word_eval("e g e", p) == _g("gamma_bar")(p) and word_eval("e d e", p) == _g("delta_bar")(p) for p in pts), f"{len(pts)} points"),
        CheckItem("mirror involution", mirror(mirror(d)) == d and mirror(mirror(g)) == g, ""),
        CheckItem("control: gamma_bar != gamma", _g("gamma_bar") != g, ""),
    ]
    return items, "eta alpha eta = beta", "eta alpha eta = beta"


def klein_line_seeds() -> list[ActionSpec]:
    q = Fraction
    return [
        ActionSpec("K", 1, q(0), IntervalMap(((0, 0), (q(1, 2), q(1, 4)), (1, 1)))),
        ActionSpec("K", 1, q(1, 3), IntervalMap(((q(1, 3), q(1, 3)), (q(2, 3), q(5, 6)), (q(5, 6), q(11, 12)), (q(4, 3), q(4, 3))))),
        ActionSpec("K", -1, q(0), IntervalMap(((-1, -1), (q(-3, 4), q(-7, 8)), (q(-1, 2), q(-1, 2)), (q(-1, 4), q(-1, 8)), (0, 0)))),
        ActionSpec("Z2", 1, q(0), IntervalMap(((0, 0), (q(1, 2), q(1, 4)), (1, 1)))),
    ]


def _c14():
    items = []
    for i, spec in enumerate(klein_line_seeds()):
        tag = f"seed {i + 1} ({spec.group}, dir {spec.direction:+d})"
        for it in check_fix_lemmas(spec, (-8, 8)):
            items.append(CheckItem(f"{tag} {it.name}", it.ok, it.detail))
        w1, w2 = extend_action(spec, (-8, 8)), extend_action(spec, (-3, 12))
        agree = all(w1.blocks[n] == w2.blocks[n] for n in range(-3, 9))
        items.append(CheckItem(f"{tag} windows agree", agree, "blocks -3..8"))
    spec = klein_line_seeds()[0]
    w = extend_action(spec, (-8, 8))
    corrupted = w.with_block(2, IntervalMap(((2, 2), (Fraction(5, 2), Fraction(7, 3)), (3, 3))))
    rel = [it for it in check_fix_lemmas(spec, w=corrupted) if it.name == "relation"][0]
    items.append(CheckItem("control: corrupted block detected", not rel.ok, rel.detail))
    n_ok = sum(1 for it in items if it.ok)
    return items, f"{n_ok}/{len(items)} sub-checks", f"{len(items)}/{len(items)} sub-checks"


def klein_circle_seeds() -> list[IntervalMap]:
    q = Fraction
    return [
        IntervalMap(((0, 0), (q(1, 4), q(1, 8)), (HALF, HALF))),
        IntervalMap(((0, 0), (q(1, 6), q(1, 4)), (q(1, 3), q(3, 8)), (HALF, HALF))),
        delta0_seed(),
    ]


def _c15():
    items = []
    for i, h in enumerate(klein_circle_seeds()):
        f, g = klein_circle_pair(h)
        rot = rotation_number(g)
        items.append(CheckItem(f"seed {i + 1} relation", klein_relation_holds(f, g), "f g f^-1 = g^-1"))
        items.append(CheckItem(f"seed {i + 1} rot(g)", rot.is_exact and rot.value in (0, HALF), str(rot)))
    # g with rotation number 1/2: the half-turn itself, paired with a map commuting with it
    half = CircleMap.rotation(HALF)
    f = CircleMap(PLLift(((0, 0, Fraction(1, 2)), (Fraction(1, 4), Fraction(1, 8), Fraction(3, 2)),
                          (HALF, HALF, Fraction(1, 2)), (Fraction(3, 4), Fraction(5, 8), Fraction(3, 2)))))
    rep = klein_fix_containment(f, half)
    items.append(CheckItem("rot(g) = 1/2 pair", str(rotation_number(half)) == "exact 1/2", "g = half-turn"))
    items.append(CheckItem("Fix(f) in Fix(g^2)", rep.ok and all(inf for _, _, inf in rep.components),
                           f"Fix(f) = {rep.fix_f}, Fix(g^2) = {rep.fix_g2}"))
    ident = CircleMap(translation(0))
    rep2 = klein_fix_containment(CircleMap(delta0()), ident)
    items.append(CheckItem("g = id", rep2.ok, f"Fix(f) = {rep2.fix_f}"))
    bump = CircleMap(PLLift(((0, 0, Fraction(1, 2)), (HALF, Fraction(1, 4), Fraction(3, 2)))))
    bad = klein_fix_containment(bump, CircleMap.rotation(Fraction(1, 3)), strict=False)
    items.append(CheckItem("control: non-Klein pair rejected", not bad.ok,
                           f"relation {bad.relation_holds}, contained {bad.contained}"))
    items.append(CheckItem("rot 0 iff fixed point (seed pairs)", all(
        (rotation_number(klein_circle_pair(h)[1]).value == 0) == bool(circle_fix(klein_circle_pair(h)[1]))
        for h in klein_circle_seeds()), ""))
    n_ok = sum(1 for it in items if it.ok)
    return items, f"{n_ok}/{len(items)} sub-checks", f"{len(items)}/{len(items)} sub-checks"


def _c16():
    items = []
    for sym, t, name in (("a", Fraction(1, 12), "alpha"), ("b", Fraction(1, 12), "beta"), ("c", SHEAR, "gamma")):
        root = half_parameter_root(sym, t)
        items.append(CheckItem(f"({sym}^{{{t / 2}}})^2 = {name}", skew_power(root, 2) == _g(name), describe(root)))
    return items, "a^{1/24}, b^{1/24}, c^{1/336}", "a^{1/24}, b^{1/24}, c^{1/336}"


CHECKS: list[tuple[str, str, Callable]] = [
    ("C1", "gamma0-halfshift", _c1),
    ("C2", "delta0-halfshift", _c2),
    ("C3", "delta0-squared", _c3),
    ("C4", "displacement", _c4),
    ("C5", "beta-central", _c5),
    ("C6", "alpha6-gamma", lambda: _alpha6("gamma")),
    ("C7", "alpha6-delta", lambda: _alpha6("delta")),
    ("C8", "gk-commute", _c8),
    ("C9", "gk-period", _c9),
    ("C10", "phi-constant", _c10),
    ("C11", "phi-derivative", _c11),
    ("C12", "key-relation", _c12),
    ("C13", "eta-swap", _c13),
    ("C14", "klein-line", _c14),
    ("C15", "klein-circle", _c15),
    ("C16", "halfparam-roots", _c16),
]


def _resolve(selection: Iterable[str] | None) -> list[tuple[str, str, Callable]]:
    if selection is None:
        return list(CHECKS)
    wanted = []
    for s in selection:
        s = s.strip()
        for entry in CHECKS:
            if s in (entry[0], entry[1]):
                wanted.append(entry)
                break
        else:
            raise UnknownCheck(f"unknown check id {s!r}")
    return [e for e in CHECKS if e in wanted]


def verify_paper(selection: Iterable[str] | None = None) -> list[CheckResult]:
    """Run the suite (or the selected ids/names) in fixed id order."""
    results = []
    for cid, name, fn in _resolve(selection):
        t0 = time.perf_counter()
        try:
            items, witness, expected = fn()
            status = "pass" if all(i.ok for i in items) and witness == expected else "fail"
        except Exception as exc:  # reported, not raised
            items, witness, expected, status = [], f"{type(exc).__name__}: {exc}", "", "error"
        results.append(CheckResult(cid, name, status, witness, expected, items, time.perf_counter() - t0))
    return results

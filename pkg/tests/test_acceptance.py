"""Acceptance criteria 1-9, all exact (tolerance 0).

Each test records one ``criterion N: PASS|FAIL ...`` line; the lines are
printed in the terminal summary of a pytest run, and directly when this file
is executed as a script.
"""

import random
import time
from fractions import Fraction as Q

from click.testing import CliRunner

from oracles import grid_fixed_points, naive_eval, naive_preimages, refining_grid
from plhomeo import (
    CircleMap,
    circle_fix,
    common_fixed_fibers,
    compose_fn_lift,
    compose_lift,
    extend_action,
    check_fix_lemmas,
    fixed_set,
    fn_precompose_shift,
    generator,
    invert,
    klein_circle_pair,
    klein_fix_containment,
    klein_relation_holds,
    make_g,
    phi,
    product_g,
    rotation_number,
    verify_paper,
)
from plhomeo.cli import main
from plhomeo.generators import delta0, gamma0, phi_slope_terms
from plhomeo.pl import PLLift
from plhomeo.sampling import random_fn, random_interval_map, random_lift
from plhomeo.skew import skew_displacement
from plhomeo.verify import klein_line_seeds

LINES = {}
HALF = Q(1, 2)


def record(n, ok, detail):
    LINES[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    assert ok, LINES[n]


def test_criterion_1_key_relation():
    t0 = time.perf_counter()
    out = CliRunner().invoke(main, ["verify", "--only", "C12"])
    elapsed = time.perf_counter() - t0
    ok = (
        out.exit_code == 0
        and product_g(1) == generator("b", Q(1, 24))
        and product_g(2) == generator("beta")
        and "b^{1/24}" in out.output
        and elapsed < 1
    )
    record(1, ok, f"prod g_k = b^(1/24), prod g_k^2 = beta, exit {out.exit_code}, {elapsed:.2f}s")


def test_criterion_2_phi_claim():
    t0 = time.perf_counter()
    f = phi()
    d2 = delta0() @ delta0()
    summand = [fn_precompose_shift(compose_fn_lift(gamma0(), d2), k * Q(1, 12)) for k in range(13)]
    # shifting by 1/12 carries summand k to summand k+1, and summand 12 is summand 0
    shift_permutes = all(fn_precompose_shift(summand[k], Q(1, 12)) == summand[k + 1] for k in range(12))
    shift_permutes = shift_permutes and summand[12] == summand[0]
    slopes = phi_slope_terms()
    hand_sum = -4 * (4 * Q(1, 4) + 1 + 4) + 4 * (4 + 1 + 4 * Q(1, 4))
    elapsed = time.perf_counter() - t0
    ok = (
        len(f.pieces) == 1 and f.pieces[0] == (0, 7, 0)
        and fn_precompose_shift(f, Q(1, 12)) == f
        and shift_permutes
        and sum(g * d for g, d in slopes) == 0 == hand_sum
        and elapsed < 1
    )
    record(2, ok, f"phi = constant {f.pieces[0].v}, 1/12-periodic, slope sum 0, {elapsed:.2f}s")


def test_criterion_3_delta0_squared():
    table = [  # [lo, hi), slope, intercept as displayed
        (Q(0), Q(4, 12), Q(1, 4), Q(0)),
        (Q(4, 12), Q(5, 12), Q(1), Q(-1, 4)),
        (Q(5, 12), HALF, Q(4), Q(-3, 2)),
    ]
    d2 = compose_lift(delta0(), delta0())
    half = [p for p in d2.pieces if p.x < HALF]
    ok = len(half) == 3
    for (lo, hi, s, c), p in zip(table, half):
        ok = ok and p.x == lo and p.s == s and p.v == s * lo + c
    nxt = [p.x for p in d2.pieces if p.x >= HALF]
    ok = ok and nxt[0] > Q(5, 12) and d2(HALF) == 4 * HALF - Q(3, 2)
    record(3, ok, "delta0^2 on [0,1/2) = x/4 | x-1/4 | 4x-3/2 with breaks 4/12, 5/12")


def test_criterion_4_relation_suite():
    t0 = time.perf_counter()
    results = verify_paper()
    elapsed = time.perf_counter() - t0
    wanted = {f"C{i}" for i in (1, 2, 3, 4, 5, 6, 7, 8, 9, 13)}
    sel = [r for r in results if r.check_id in wanted]
    ok = len(sel) == 10 and all(r.passed for r in sel) and elapsed < 5
    record(4, ok, f"{sum(r.passed for r in sel)}/10 relation checks, full suite "
                  f"{sum(r.passed for r in results)}/16 in {elapsed:.2f}s")


def test_criterion_5_displacement():
    expected = {"alpha": Q(1, 12), "beta": Q(1, 12), "gamma": Q(1, 168), "delta": Q(1, 6)}
    got = {name: skew_displacement(generator(name)) for name in expected}
    # breakpoint-extremum oracle for delta0, read straight from the pieces
    grid = refining_grid(delta0().breakpoints)
    oracle = max(abs(naive_eval(delta0(), x) - x) for x in grid)
    bars = [skew_displacement(generator(n)) for n in ("gamma_bar", "delta_bar")]
    ok = got == expected and oracle == Q(1, 6) and all(v <= Q(1, 3) for v in [*got.values(), *bars])
    record(5, ok, ", ".join(f"{k} {v}" for k, v in got.items()) + " (all <= 1/3)")


def test_criterion_6_klein_constructor():
    seeds = [s for s in klein_line_seeds() if s.group == "K"]
    assert len(seeds) >= 3 and len({(s.x0, s.direction, s.seed) for s in seeds}) == len(seeds)
    ok = True
    for spec in seeds:
        items = check_fix_lemmas(spec, (-8, 8))
        a, b = extend_action(spec, (-8, 8)), extend_action(spec, (-2, 14))
        agree = all(a.blocks[n] == b.blocks[n] for n in range(-2, 9))
        fix = a.fixed_set()
        translates = all(spec.x0 + n * spec.direction in fix for n in range(-8, 10))
        ok = ok and all(i.ok for i in items) and agree and translates
    record(6, ok, f"{len(seeds)} K seeds on [-8,8]: relation block-exact, windows agree, seed endpoints fixed")


def _consistent(a, b):
    if a.is_exact and b.is_exact:
        return a.value == b.value
    if a.is_exact:
        return b.contains(a.value)
    if b.is_exact:
        return a.contains(b.value)
    lo = max(a.bounds[0], b.bounds[0])
    return lo <= min(a.bounds[1], b.bounds[1])


def test_criterion_7_circle_dynamics():
    rng = random.Random(7)
    t0 = time.perf_counter()
    n_maps, zero_ok, conj_ok, refine_ok = 120, 0, 0, 0
    corpus = []
    for _ in range(n_maps):
        m = CircleMap(random_lift(rng))
        r = rotation_number(m, q_max=64)
        corpus.append((m, r))
        zero_ok += (r.is_exact and r.value == 0) == (not circle_fix(m).is_empty())
        h = CircleMap(random_lift(rng, max_pieces=3))
        conj_ok += _consistent(r, rotation_number(h @ m @ h.inverse(), q_max=64))
    elapsed = time.perf_counter() - t0
    n_exact = sum(r.is_exact for _, r in corpus)
    for m, r in corpus:
        if r.is_exact:
            refine_ok += 1
            continue
        fine = rotation_number(m, q_max=128, width=Q(1, 4096))
        if fine.is_exact:
            refine_ok += r.contains(fine.value)
        else:
            refine_ok += r.bounds[0] <= fine.bounds[0] <= fine.bounds[1] <= r.bounds[1]

    klein_ok = 0
    n_klein = 30
    for _ in range(n_klein):
        f, g = klein_circle_pair(random_interval_map(rng, 0, HALF))
        rg = rotation_number(g)
        klein_ok += (klein_relation_holds(f, g) and rg.is_exact and rg.value in (0, HALF)
                     and circle_fix(f).issubset(circle_fix(g @ g)))
    # a Klein pair with Fix(f) nonempty: g the half-turn, f commuting with it
    f = CircleMap(PLLift(((0, 0, HALF), (Q(1, 4), Q(1, 8), Q(3, 2)), (HALF, HALF, HALF), (Q(3, 4), Q(5, 8), Q(3, 2)))))
    g = CircleMap.rotation(HALF)
    rep = klein_fix_containment(f, g)
    ok = (
        zero_ok == conj_ok == refine_ok == n_maps and elapsed < 30
        and klein_ok == n_klein and rep.ok and str(rotation_number(g)) == "exact 1/2"
    )
    record(7, ok, f"{n_maps} maps ({n_exact} exact): rot 0 iff fixed {zero_ok}, conjugacy {conj_ok}, "
                  f"refinement {refine_ok}; Klein pairs {klein_ok}/{n_klein}; corpus {elapsed:.1f}s")


def test_criterion_8_oracle_equivalence():
    rng = random.Random(8)
    cases = bad = 0
    t0 = time.perf_counter()
    for _ in range(350):  # composition of lifts
        f, g = random_lift(rng), random_lift(rng)
        h = compose_lift(f, g)
        grid = refining_grid([*h.breakpoints, *g.breakpoints, *naive_preimages(g, f.breakpoints)])
        cases += 1
        bad += any(naive_eval(h, x) != naive_eval(f, naive_eval(g, x)) for x in grid)
    for _ in range(150):  # function after lift
        tau, g = random_fn(rng), random_lift(rng)
        h = compose_fn_lift(tau, g)
        grid = refining_grid([*h.breakpoints, *g.breakpoints, *naive_preimages(g, tau.breakpoints)])
        cases += 1
        bad += any(naive_eval(h, x) != naive_eval(tau, naive_eval(g, x)) for x in grid)
    for _ in range(250):  # inversion
        f = random_lift(rng)
        fi = invert(f)
        grid = refining_grid([*fi.breakpoints, *(naive_eval(f, b) for b in f.breakpoints)])
        cases += 1
        bad += any(naive_eval(f, naive_eval(fi, y)) != y for y in grid)
    for _ in range(300):  # fixed sets, including maps with fixed intervals
        f = random_lift(rng, offset=0) if rng.random() < 0.6 else random_lift(rng)
        if rng.random() < 0.3:
            f = _identity_on_right_half(random_interval_map(rng, 0, HALF))
        s = fixed_set(f)
        grid = refining_grid(f.breakpoints)
        pts, cells = grid_fixed_points(f, grid)
        wrong = any((naive_eval(f, x) == x) != (x in s) for x in grid)
        wrong = wrong or any(x not in s for x in pts)
        wrong = wrong or any(not any(a <= lo and hi <= b for a, b in s.intervals()) for lo, hi in cells)
        cases += 1
        bad += wrong
    elapsed = time.perf_counter() - t0
    record(8, cases >= 1000 and bad == 0, f"{cases} randomized oracle comparisons, {bad} discrepancies, {elapsed:.1f}s")


def _identity_on_right_half(h):
    # h on [0, 1/2], identity on [1/2, 1]: a lift with a whole interval of fixed points
    knots = [*h.knots, (Q(1), Q(1))]
    return PLLift(tuple((x0, y0, (y1 - y0) / (x1 - x0)) for (x0, y0), (x1, y1) in zip(knots, knots[1:])))


def test_criterion_9_declared_scope():
    fibers = [make_g(k) for k in range(12)]
    commute = all(a @ b == b @ a for a in fibers for b in fibers)
    common = common_fixed_fibers(fibers)
    shift = product_g(1).translation_vector()
    ok = commute and common.is_empty() and shift == (0, Q(1, 24))
    record(9, ok, "non-existence theorems not finitely checkable (declared); "
                  f"12 commuting g_k fibers, common fixed fiber {common}, product shift {shift[1]}")


if __name__ == "__main__":
    import sys

    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(LINES[k] for k in sorted(LINES)))
    sys.exit(0 if all("PASS" in line for line in LINES.values()) and len(LINES) == 9 else 1)

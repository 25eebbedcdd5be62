from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from conftest import rngs
from plhomeo import (
    OrientationError,
    PlanarWord,
    SkewMap,
    WordSyntaxError,
    compose_fn_lift,
    constant,
    generator,
    identity,
    make_g,
    mirror,
    parse_word,
    phi,
    product_g,
    skew_compose,
    skew_equal,
    skew_identity,
    skew_invert,
    skew_power,
    translation,
    word_eval,
    word_reduce,
)
from plhomeo.generators import GENERATOR_NAMES, delta0, gamma0, half_parameter_root, phi_at_zero_terms, phi_slope_terms
from plhomeo.sampling import random_fn, random_lift
from plhomeo.skew import skew_displacement

points = st.tuples(
    st.fractions(min_value=-3, max_value=3, max_denominator=40),
    st.fractions(min_value=-3, max_value=3, max_denominator=40),
)
skews = rngs.map(lambda r: SkewMap(r.choice("xy"), random_lift(r, 3), random_fn(r, 3)))
over_x = rngs.map(lambda r: SkewMap("x", random_lift(r, 3), random_fn(r, 3)))


def G(name):
    return generator(name)


class TestGenerators:
    def test_a_zero_is_identity(self):
        assert generator("a", 0) == skew_identity()

    def test_gamma(self):
        g = G("gamma")
        assert g.orientation == "x" and g.base == identity()
        assert g.fiber == Q(1, 168) * gamma0()

    def test_delta(self):
        d = G("δ")
        assert (d.orientation, d.base, d.fiber) == ("x", delta0(), constant(0))

    def test_families(self):
        assert generator("a", Q(1, 12))((0, 0)) == (Q(1, 12), 0)
        assert generator("b", Q(1, 12))((0, 0)) == (0, Q(1, 12))
        assert generator("c", 1)((0, 5)) == (0, 6)

    @pytest.mark.parametrize("args", [("eta",), ("e",), ("zeta",), ("a",), ("alpha", 1)])
    def test_errors(self, args):
        with pytest.raises(ValueError):
            generator(*args)


class TestCompose:
    def test_g0_formula(self):
        d2 = skew_power(G("delta"), 2)
        g0 = skew_compose(skew_invert(d2), skew_compose(G("gamma"), d2))
        assert g0.base == identity()
        assert g0.fiber == Q(1, 168) * compose_fn_lift(gamma0(), delta0() @ delta0())
        assert g0 == make_g(0)

    def test_alpha6_conjugation(self):
        a6 = skew_power(G("alpha"), 6)
        assert a6 @ G("gamma") @ a6.inverse() == G("gamma").inverse()
        assert a6 @ G("delta") @ a6.inverse() == G("delta").inverse()

    def test_gamma_inverse(self):
        assert skew_compose(G("gamma"), skew_invert(G("gamma"))) == skew_identity()

    def test_orientation_mismatch(self):
        with pytest.raises(OrientationError):
            skew_compose(G("gamma"), G("gamma_bar"))

    def test_translations_align(self):
        assert (G("beta") @ G("gamma_bar")).orientation == "y"
        assert (G("gamma_bar") @ G("alpha"))((0, 0)) == G("gamma_bar")((Q(1, 12), 0))

    @given(over_x, over_x, points)
    def test_closure(self, a, b, p):
        assert skew_compose(a, b)(p) == a(b(p))

    @given(skews)
    def test_inverse_two_sided(self, a):
        assert a @ a.inverse() == skew_identity()
        assert a.inverse() @ a == skew_identity()

    @given(over_x, st.integers(-4, 4), points)
    def test_power(self, a, n, p):
        q = p
        step = a if n >= 0 else a.inverse()
        for _ in range(abs(n)):
            q = step(q)
        assert skew_power(a, n)(p) == q


class TestEqual:
    def test_beta_central(self):
        b = G("beta")
        for name in ("alpha", "gamma", "delta"):
            assert skew_equal(b @ G(name), G(name) @ b)

    def test_alpha12(self):
        a12 = skew_power(G("alpha"), 12)
        for name in ("gamma", "delta"):
            assert a12 @ G(name) == G(name) @ a12

    @pytest.mark.parametrize("k", range(4))
    def test_gk_period(self, k):
        assert skew_equal(make_g(k), make_g(k + 12))

    def test_not_identity(self):
        assert not skew_equal(G("alpha"), skew_identity())


class TestMirror:
    def test_alpha_to_beta(self):
        m = mirror(G("alpha"))
        assert m == G("beta") == generator("b", Q(1, 12))
        assert m.as_orientation("y").orientation == "y"

    def test_bars(self):
        assert mirror(G("gamma")) == G("gamma_bar")
        assert G("gamma_bar").orientation == "y"
        assert G("delta_bar")((Q(1, 3), 7)) == (Q(1, 3), delta0()(7))

    def test_involution(self):
        assert mirror(mirror(G("delta"))) == G("delta")

    @given(skews, skews)
    def test_homomorphism(self, a, b):
        try:
            ab = a @ b
        except OrientationError:
            return
        assert mirror(ab) == mirror(a) @ mirror(b)

    @given(skews, points)
    def test_conjugation(self, a, p):
        x, y = p
        assert mirror(a)((x, y)) == a((y, x))[::-1]


class TestGk:
    def test_g0_at_zero(self):
        assert make_g(0)((0, 5)) == (0, 5 + Q(1, 168))

    def test_commute(self):
        for k in range(12):
            for j in range(k + 1, 12):
                assert make_g(k) @ make_g(j) == make_g(j) @ make_g(k)

    def test_periodic(self):
        assert make_g(5) == make_g(17)
        assert make_g(-1) == make_g(11)

    def test_products(self):
        assert product_g(1) == generator("b", Q(1, 24))
        assert product_g(2) == G("beta")
        assert product_g(1, ks=()) == skew_identity()

    def test_order_immaterial(self):
        assert product_g(1, ks=reversed(range(12))) == product_g(1)


class TestPhi:
    def test_constant_seven(self):
        f = phi()
        assert f.is_constant() and len(f.pieces) == 1 and f(0) == 7
        assert sum(phi_at_zero_terms()) == 7
        assert phi_at_zero_terms()[:2] == [1, Q(11, 12)]

    def test_slope_bookkeeping(self):
        terms = phi_slope_terms()
        down = [d for g, d in terms if g == -4]
        up = [d for g, d in terms if g == 4]
        assert sorted(down) == sorted([Q(1, 4)] * 4 + [1, 4])
        assert sorted(up) == sorted([4, 1] + [Q(1, 4)] * 4)
        assert sum(g * d for g, d in terms) == 0

    @pytest.mark.parametrize("x", [Q(1, 100), Q(1, 24), Q(1, 13)])
    def test_slope_zero_anywhere(self, x):
        assert sum(g * d for g, d in phi_slope_terms(x)) == 0

    def test_slope_terms_domain(self):
        with pytest.raises(ValueError):
            phi_slope_terms(Q(1, 12))


class TestDisplacement:
    @pytest.mark.parametrize("name, value", [
        ("alpha", Q(1, 12)), ("beta", Q(1, 12)), ("gamma", Q(1, 168)), ("delta", Q(1, 6)),
        ("gamma_bar", Q(1, 168)), ("delta_bar", Q(1, 6)),
    ])
    def test_per_generator(self, name, value):
        assert skew_displacement(G(name)) == value <= Q(1, 3)


class TestRoots:
    @pytest.mark.parametrize("sym, t, name", [("a", Q(1, 12), "alpha"), ("b", Q(1, 12), "beta"),
                                               ("c", Q(1, 168), "gamma")])
    def test_square(self, sym, t, name):
        assert skew_power(half_parameter_root(sym, t), 2) == G(name)


class TestWords:
    def test_parse(self):
        w = parse_word("a^6 g a^-6 gb db^2 e")
        assert str(w) == "a^6 g a^-6 gb db^2 e"
        assert len(w) == 6
        assert PlanarWord.of(("a", 6)).atoms[0].exponent == 6

    @pytest.mark.parametrize("text, pos", [("a q", 2), ("a b e^2", 3), ("a^x", 1), ("g ^2", 2)])
    def test_parse_errors(self, text, pos):
        with pytest.raises(WordSyntaxError) as exc:
            parse_word(text)
        assert exc.value.position == pos
        assert str(exc.value).startswith(f"atom {pos}:")

    def test_empty(self):
        assert word_eval("", (Q(3, 7), -2)) == (Q(3, 7), -2)
        assert word_reduce("") == skew_identity()

    def test_eta(self):
        assert word_eval("e", (1, 2)) == (2, 1)

    def test_rightmost_first(self):
        assert word_eval("d a", (Q(1, 4), 0)) == (delta0()(Q(1, 3)), 0)

    @given(points)
    def test_alpha6_gamma_word(self, p):
        assert word_eval("a^6 g a^-6 g", p) == p

    def test_reduce(self):
        assert word_reduce("e a e") == G("beta")
        assert word_reduce("a b") == SkewMap("x", translation(Q(1, 12)), constant(Q(1, 12)))
        assert word_reduce("g gb") is None
        assert word_reduce("e a") is None
        assert word_reduce("e g e gb^-1") == skew_identity()

    @given(st.lists(st.sampled_from(["a", "a^-1", "b", "g", "d^-1", "gb", "db", "e"]), max_size=6), points)
    def test_reduce_agrees_with_eval(self, atoms, p):
        w = " ".join(atoms)
        m = word_reduce(w)
        if m is not None:
            assert m(p) == word_eval(w, p)

    def test_names(self):
        assert set(GENERATOR_NAMES) == {"alpha", "beta", "gamma", "delta", "gamma_bar", "delta_bar"}

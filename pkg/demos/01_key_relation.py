# %% [markdown]
# # Twelve commuting shears that multiply to a translation
#
# The planar maps here are skew products over the x axis:
# (x, y) -> (sigma(x), y + tau(x)) with sigma a PL lift and tau a periodic PL function.
# Everything is exact; no floats appear anywhere.

# %%
from fractions import Fraction as Q

from plhomeo import generator, identity, make_g, phi, product_g, skew_power
from plhomeo.generators import delta0, phi_at_zero_terms, phi_slope_terms

alpha, beta, gamma, delta = (generator(n) for n in ("alpha", "beta", "gamma", "delta"))
print("delta0 =", delta0())
print("delta0^2 =", delta0() @ delta0())

# %% [markdown]
# g_k is alpha^k delta^-2 gamma delta^2 alpha^-k.  It only moves the fiber coordinate.

# %%
g0 = make_g(0)
print("g_0 base is identity:", g0.base == identity())
print("g_0 sends (0, 0) to (%s, %s)" % g0((0, 0)))
print("g_5 == g_17:", make_g(5) == make_g(17))

# %% [markdown]
# Summing the fiber functions gives a constant.  At x = 0 the twelve summands are:

# %%
terms = phi_at_zero_terms()
print(" + ".join(str(t) for t in terms), "=", sum(terms))
print("phi as a PL function:", phi())
print("slope terms on (0, 1/12):", [(str(g), str(d)) for g, d in phi_slope_terms(Q(1, 24))])

# %%
p1, p2 = product_g(1), product_g(2)
print("prod g_k   =", p1, "  equals b^{1/24}:", p1 == generator("b", Q(1, 24)))
print("prod g_k^2 =", p2, "  equals beta:", p2 == beta)
print("alpha^6 gamma alpha^-6 == gamma^-1:",
      skew_power(alpha, 6) @ gamma @ skew_power(alpha, -6) == gamma.inverse())

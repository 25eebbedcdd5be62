# %% [markdown]
# # Rotation numbers of PL circle maps
#
# A circle map is stored as a lift F with F(x + 1) = F(x) + 1.  The rotation number
# comes back exact when a periodic orbit exists with period up to q_max.  Otherwise
# you get a certified bracket.

# %%
import random
from fractions import Fraction as Q

from plhomeo import CircleMap, IntervalMap, circle_fix, klein_circle_pair, rotation_number
from plhomeo.generators import delta0
from plhomeo.sampling import random_lift

print(rotation_number(CircleMap.rotation(Q(5, 12))))
print(rotation_number(CircleMap(delta0())), "with fixed points", circle_fix(CircleMap(delta0())))

# %% [markdown]
# Conjugating a rotation by a PL homeomorphism keeps its rotation number, even though
# the map itself looks nothing like a rotation.

# %%
rng = random.Random(1)
h = CircleMap(random_lift(rng))
m = h @ CircleMap.rotation(Q(1, 3)) @ h.inverse()
print("conjugated map:", m.lift)
r = rotation_number(m)
print(r, "certificate (x, p, q):", r.certificate)

# %%
kinds = {"exact": 0, "bracket": 0}
for _ in range(40):
    kinds[rotation_number(CircleMap(random_lift(rng))).kind] += 1
print("40 random maps:", kinds)
print("1/97 with q_max 64:", rotation_number(CircleMap.rotation(Q(1, 97))))

# %% [markdown]
# Klein pairs on the circle: f is the half turn and g is built from a seed on [0, 1/2].

# %%
f, g = klein_circle_pair(IntervalMap(((0, 0), (Q(1, 4), Q(1, 8)), (Q(1, 2), Q(1, 2)))))
print("f g f^-1 == g^-1:", f @ g @ f.inverse() == g.inverse())
print("rot(g) =", rotation_number(g))

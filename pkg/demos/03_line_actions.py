# %% [markdown]
# # Actions on the line from a seed on one interval
#
# Take f(x) = x + 1 and a homeomorphism h of I = [0, 1] fixing both ends.  There is
# exactly one g with g = h on I and f g f^-1 = g^-1.  We build it on the window of
# translates f^n(I) with n in [-8, 8].

# %%
from fractions import Fraction as Q

from plhomeo import ActionSpec, IntervalMap, check_fix_lemmas, eval_action, extend_action, read_action, write_action

h = IntervalMap(((0, 0), (Q(1, 2), Q(1, 4)), (1, 1)))
spec = ActionSpec("K", 1, 0, h)
w = extend_action(spec)
for n in (-1, 0, 1, 2):
    print(f"block {n}:", w.blocks[n])

# %%
for item in check_fix_lemmas(spec):
    print(item)
print("f g f^-1 g at 1/2:", eval_action(w, "f g f^-1 g", Q(1, 2)))

# %% [markdown]
# Breaking one block is caught by the relation check.

# %%
bad = w.with_block(3, IntervalMap(((3, 3), (Q(7, 2), Q(10, 3)), (4, 4))))
print([str(i) for i in check_fix_lemmas(spec, w=bad) if not i.ok])

# %%
text = write_action(spec)
print(text)
print("round trip:", read_action(text) == spec)

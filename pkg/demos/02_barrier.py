# %% [markdown]
"""
The barrier function and its inverse
=====================================

h(x) = 1 / (1 - p(x)) blows up at delta, the root of p = 1. Both delta and
h^-1(c) come back as certified rational enclosures.
"""

# %%
from fractions import Fraction

from alphakn import barrier, delta_kn, h_eval, h_inv
from alphakn.exact import to_scidec

d = delta_kn(2, 2)
p = barrier(2, 2)
print("delta_{2,2} =", to_scidec(d, 6))
print("certificate p(lo) < 1 < p(hi):", p(d.lo) < 1 < p(d.hi))

# %% [markdown]
"""
Round trip: feeding the enclosure of h^-1(c) back through h brackets c.
"""

# %%
for c in (Fraction(3, 2), 2, 10, 10**6):
    x = h_inv(2, 2, "section3", c)
    print(c, to_scidec(x, 6), h_eval(2, 2, "section3", x.lo) <= c <= h_eval(2, 2, "section3", x.hi))

# %% [markdown]
"""
Tiny magnitudes are no problem since nothing here is a float.
"""

# %%
print("delta_{3,10} =", to_scidec(delta_kn(3, 10), 4))

# %% [markdown]
"""
Expanding beta into chains
==========================

beta(k, c, n) unrolls into one 1 - gamma term per strictly decreasing chain
starting at k. Only the leading and the full-descent chains ever win.
"""

# %%
from fractions import Fraction

from alphakn import beta_eval, beta_terms
from alphakn.exact import format_enc

print([str(ch) for ch in beta_terms(3)])

# %%
for c in (Fraction(3, 2), 10**4, 10**12):
    res = beta_eval(3, 3, c)
    print(f"c = {c}")
    for ch, term in res.terms:
        print(f"   {str(ch):<9} {format_enc(term, 3, one_minus=True)}")
    print("   argmax:", ", ".join(map(str, res.argmax)))

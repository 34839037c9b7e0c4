# %% [markdown]
"""
Scanning for the infimum
========================

alpha is an infimum over c. A log grid in c - 1 plus ternary refinement
finds the minimiser; for k = 1 it sits at c = 2.
"""

# %%
from alphakn import gap_report, scan
from alphakn.exact import format_enc, to_scidec

res = scan(1, 4)
print("best c ~", to_scidec(res.best_c, 6), " beta =", format_enc(res.best_beta, 3, one_minus=True))

# %% [markdown]
"""
For k >= 2 the limit 1 - eps is not attained; the scanned infimum sits just
above it, and the gap is certified.
"""

# %%
for k, n in [(2, 2), (2, 3), (3, 3)]:
    g = gap_report(k, n)
    print(k, n, "relative gap", to_scidec(g.relative_gap, 3), "certified", g.certified_above)

# %% [markdown]
"""
Auditing the constants, then the tables
=======================================

The audit evaluates the identities and inequalities exactly. Under the
section3 recurrence Ineq1 fails at i = 0 whenever n >= 2.
"""

# %%
from alphakn import audit, delta_kn, make_table, render

d0 = delta_kn(1, 2, "section3").lo / 2
print(audit(1, 2, "section3", d0).to_text())

# %%
d0 = delta_kn(2, 3, "appendix").lo / 2
print("appendix passes:", audit(2, 3, "appendix", d0).passed)

# %%
print(render(make_table("epsilons", 3, 4), "markdown"))

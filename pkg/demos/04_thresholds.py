# %% [markdown]
"""
Limits eps and thresholds alpha
===============================

alpha(k, n) = 1 - eps_{k,n}. The defect eps reaches 10^-20180 for k = 3,
n = 10; it is printed in "1 - x" form.
"""

# %%
from alphakn import alpha_kn, alpha_revised, epsilon_kn
from alphakn.exact import to_scidec

for k, n in [(1, 1), (2, 3), (3, 3), (3, 10)]:
    print(k, n, to_scidec(alpha_kn(k, n), 3, one_minus=True))

# %% [markdown]
"""
The (2, 2) cell disagrees with the printed 1.89e-37.
"""

# %%
print(to_scidec(epsilon_kn(2, 2), 6))

# %%
for n in (2, 4, 6):
    print(n, [str(alpha_revised(k, n)) if k <= n else "-" for k in (1, 2, 3)])

# %% [markdown]
"""
Integer constants
=================

The constants C_{k,n}(i) are exact integers that grow doubly exponentially.
Two recurrences are in circulation; they agree at n = 1 and split after.
"""

# %%
from alphakn import Variant, c_kn, seq_bundle
from alphakn.exact import int_to_str, to_scidec

for n in (1, 2, 3):
    s3 = c_kn(2, n, variant=Variant.SECTION3)
    app = c_kn(2, n, variant=Variant.APPENDIX)
    print(f"n={n}  section3 {to_scidec(s3, 3)}   appendix {to_scidec(app, 3)}")

# %% [markdown]
"""
The largest tabulated constant has 1829 digits. Python caps int/str
conversion at 4300 digits, so printing goes through a chunked converter.
"""

# %%
big = c_kn(3, 10)
digits = int_to_str(big)
print(len(digits), digits[:20] + "...")

# %%
sb = seq_bundle(1, 2, Variant.SECTION3)
print("C =", sb.C, " b =", sb.b)

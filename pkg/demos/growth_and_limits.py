"""
Growth constants and the limit as the gap grows
===============================================

Each closed form has a simple real pole closest to the origin; its
reciprocal is the growth constant.  The constants for levels 0 to 3 climb
with shrinking steps, which suggests a geometric extrapolation.
"""

import numpy as np

from cheesyhex import asymptotic_form, extrapolate_growth, find_roots, paper_gf
from cheesyhex.reference import CHEESY_GROWTH
from cheesyhex.transfer import count_blocks, fitted_gf

forms = {0: asymptotic_form(fitted_gf(0))}
for level in (1, 2, 3):
    forms[level] = asymptotic_form(paper_gf(level))

for level, f in forms.items():
    print(f"level {level}: a_n ~ {float(f.amplitude):.6f} * {float(f.growth):.6f}^n")

print("\nlevel 1 poles:")
for r in find_roots(paper_gf(1).den).as_complex():
    print(f"  {r.real:+.6f} {r.imag:+.6f}i   |r| = {abs(r):.6f}")

# how fast the ratio approaches the asymptotic form
a = count_blocks(1, 60).counts
ratio = np.array([float(a[n]) / float(forms[1].estimate(n)) for n in range(5, 61, 5)])
print("\na_n / estimate:", np.round(ratio, 9))

growth = [float(forms[m].growth) for m in range(4)]
print("\nblocks limit:", round(extrapolate_growth(growth), 3))
print("cheesy limit:", round(extrapolate_growth([CHEESY_GROWTH[m] for m in range(4)]), 3))
print("measured-ratio variant:", round(extrapolate_growth(growth, ratio="measured"), 3))

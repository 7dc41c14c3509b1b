"""
Non-congruent packings
======================

Starting from the congruent arrangement, one hyperball is inflated while the
other shrinks (or stays put). The parameter x measures the change of height.
"""

import numpy as np

from hyperpack import density_noncongruent, noncongruent_cases, optimize_noncongruent
from hyperpack.packing import boundary_optimum

t = (5, 4, 5)
for case in noncongruent_cases(t):
    print(f"case {case.label}: x in [{case.x_lo:.6f}, {case.x_hi:.6f}]")

# %%
# Density along case 1a: it increases up to the end of the interval.
case = noncongruent_cases(t)[0]
for x in np.linspace(case.x_lo, case.x_hi, 6):
    cfg = case.config(float(x))
    print(f"x={x:.5f}  h0={cfg.h0:.5f}  h3={cfg.h3:.5f}  density={density_noncongruent(t, cfg).density:.6f}")

# %%
# The optimum is found twice: by walking the cases and by maximizing on the
# boundary of the feasible height region.
best = optimize_noncongruent(t)
edge = boundary_optimum(t)
print("case walk:", best.case_label, f"x*={best.x:.6f}", f"density={best.density:.6f}")
print("boundary :", edge.case_label, f"h0={edge.h0:.6f}", f"h3={edge.h3:.6f}")

"""
Congruent hyperball packings
============================

Two congruent hyperballs around the truncating planes (delta1) or a single
hyperball as large as the tile allows (delta2). A scan over all integer
symbols finds the densest tile.
"""

from hyperpack import density_one_hyperball, density_two_congruent, height_profile, scan_integer

for t in [(7, 3, 7), (5, 4, 5), (4, 6, 5)]:
    hp = height_profile(t)
    print(t, f"h={hp.h:.5f}  delta1={density_two_congruent(t).density:.5f}  delta2={density_one_hyperball(t).density:.5f}")

# %%
# Exhaustive scan; swapping u and w gives a congruent tile, so only u <= w is kept.
top = scan_integer("two_congruent", range(3, 21), range(3, 21), range(3, 21))[:5]
for r in top:
    print(r.params.label(), f"{r.density:.6f}")

# %%
# In the single-hyperball mode symbols {3,v,3} with large v come out on top.
top = scan_integer("one_hyperball", range(3, 21), range(3, 21), range(3, 21))[:5]
for r in top:
    print(r.params.label(), f"{r.density:.6f}", "base plane", r.base)

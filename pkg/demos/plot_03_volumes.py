"""
Volumes
=======

The orthoscheme volume comes from the closed Lobachevsky-sum formula, and a
hyperball piece over a truncating triangle of area A with height h has
volume A/4 (sinh 2h + 2h).
"""

import math

from hyperpack import SchlafliParams, hyperball_piece_volume, orthoscheme_volume

for t in [(7, 3, 7), (8, 3, 8), (5, 4, 5), (4, 5, 50)]:
    print(SchlafliParams(*t).label(), f"{orthoscheme_volume(SchlafliParams(*t)).value:.6f}")

# %%
# The volume grows as the angle pi/w shrinks, tending to a finite limit.
for w in (7, 8, 10, 20, 50, 200):
    print(f"Vol(7,3,{w}) = {orthoscheme_volume(SchlafliParams(7, 3, w)).value:.6f}")

# %%
# Hyperball pieces grow quickly with the height.
for h in (0.25, 0.5, 1.0, 1.5):
    print(f"h={h:.2f}  piece={hyperball_piece_volume(math.pi / 42, h):.6f}")

"""
Real Schläfli parameters
========================

Allowing {p,3,p} with real 6 < p < 7 gives a one-parameter family of tiles.
The congruent density has a single peak that beats the Böröczky-Florian
bound for ball packings.
"""

import numpy as np

from hyperpack import scan_real_p
from hyperpack.packing import density_pp
from hyperpack.packing import BOROCZKY_FLORIAN

for p in np.linspace(6.01, 6.99, 8):
    print(f"p={p:.4f}  density={density_pp(float(p)):.6f}")

p_opt, dens = scan_real_p(6.001, 6.999)
print(f"optimum p={p_opt:.6f}, density={dens:.6f}, ball-packing bound {BOROCZKY_FLORIAN}")

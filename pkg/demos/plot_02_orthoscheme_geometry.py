"""
Geometry of a doubly truncated orthoscheme
==========================================

The Schläfli symbol {u,v,w} fixes the essential dihedral angles pi/u, pi/v,
pi/w. When 1/u + 1/v < 1/2 and 1/v + 1/w < 1/2 both principal vertices lie
beyond the sphere at infinity and are cut off by their polar planes.
"""

import numpy as np

from hyperpack import SchlafliParams, build_gram, key_distances, truncation_areas, truncation_points
from hyperpack.errors import HyperpackError
from hyperpack.orthoscheme import point_distance

params = SchlafliParams(7, 3, 7)
g = build_gram(params)
np.set_printoptions(precision=6, suppress=True)
print("Coxeter-Schläfli matrix b:\n", g.b)
print("inverse a (closed form):\n", g.a)
print("det b =", g.B)

# %%
# Points are coefficient vectors over the vertex basis. The truncation
# points lie on the polar planes of A0 and A3.
pts = truncation_points(g)
print("<C, a0> =", g.inner(pts.C, g.vertex(0)))
print("<J, a3> =", g.inner(pts.J, g.vertex(3)))

# %%
# The three lengths that bound the hyperball heights, and the same lengths
# from the general distance formula.
kd = key_distances(g)
print(kd)
print("d(J,H) from points:", point_distance(pts.J, pts.H, g))
print("areas of the truncating triangles:", truncation_areas(params))

# %%
# Invalid symbols are rejected with a typed error.
for t in [(3, 3, 3), (4, 3, 5), (7, 3, 3)]:
    try:
        build_gram(SchlafliParams(*t))
    except HyperpackError as err:
        print(t, type(err).__name__, "-", err)

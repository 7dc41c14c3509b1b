"""
The Lobachevsky function
========================

Volumes of hyperbolic orthoschemes are sums of values of the Lobachevsky
function. ``hyperpack`` evaluates it from a Clausen power series with a
certified tail bound, and offers an independent quadrature for checking.
"""

import numpy as np

from hyperpack import lobachevsky
from hyperpack.hypmath import lobachevsky_quadrature_oracle, lobachevsky_tail_bound

# A few values; the function is odd and pi-periodic with a maximum at pi/6.
xs = np.array([np.pi / 12, np.pi / 6, np.pi / 4, np.pi / 3, np.pi / 2])
for x, y in zip(xs, lobachevsky(xs)):
    print(f"L({x:.6f}) = {y:.15f}")

# %%
# The series and the quadrature are computed in unrelated ways.
for x in (0.1, 0.5, 1.0, 2.0, 3.0):
    s, q = lobachevsky(x), lobachevsky_quadrature_oracle(x)
    print(f"x={x:.1f}  series={s:.15f}  quadrature={q:.15f}  diff={abs(s - q):.1e}")

print("certified series tail bound:", lobachevsky_tail_bound())

# %%
# Duplication formula: L(2x) = 2 L(x) + 2 L(x + pi/2).
x = np.linspace(-3, 3, 7)
print("duplication residual:", np.max(np.abs(lobachevsky(2 * x) - 2 * lobachevsky(x) - 2 * lobachevsky(x + np.pi / 2))))

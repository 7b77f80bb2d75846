# %% [markdown]
# # Continuous least squares on [0, 1]
#
# In the power basis the normal equations are the Hilbert matrix. In an
# orthogonal basis they become diagonal and each coefficient is a projection.

# %%
import math
from fractions import Fraction

import numpy as np

from chebbern import Basis, FitProblem, fit
from chebbern.leastsq import hilbert_normal_matrix

# %%
for n in (4, 8, 12):
    h = np.array(hilbert_normal_matrix(n), dtype=float)
    print(f"n={n:2d}  cond(H) = {np.linalg.cond(h):.3e}")

# %% [markdown]
# The best linear fit of x^2 is exact: -1/6 + x with squared error 1/180.

# %%
r = fit(FitProblem([0, 0, 1], 1))
print([str(c) for c in r.coeffs], r.residual)

# %% [markdown]
# Orthogonal coefficients do not change when the degree grows.

# %%
target = [Fraction(1, 3), -2, 0, Fraction(5, 7), 1]
for n in range(5):
    res = fit(FitProblem(target, n, Basis.GEN_CHEB2))
    print(n, [str(c) for c in res.coeffs])

# %% [markdown]
# Non-polynomial targets go through adaptive quadrature in float64.

# %%
for n in range(1, 6):
    res = fit(FitProblem(math.exp, n))
    print(n, f"residual {res.residual:.3e}")

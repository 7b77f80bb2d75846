# %% [markdown]
# # Float64 conversion and its limits
#
# The exact path is the default. A float path exists for speed; its
# conditioning degrades with the degree.

# %%
import numpy as np

from chebbern.transform import forward_matrix, forward_matrix_float

for n in (5, 10, 20, 40):
    a = forward_matrix_float(n, (1, 1))
    exact = forward_matrix(n, (1, 1)).as_array()
    rel = np.max(np.abs(a - exact)) / np.max(np.abs(exact))
    print(f"n={n:2d}  cond={np.linalg.cond(a):.2e}  max rel. entry error vs exact={rel:.1e}")

# %% [markdown]
# A round trip through ``numpy.linalg.solve`` loses digits as the matrix
# becomes ill conditioned.

# %%
rng = np.random.default_rng(0)
for n in (5, 10, 20, 40):
    a = forward_matrix_float(n, (1, 1))
    d = rng.standard_normal(n + 1)
    err = np.max(np.abs(np.linalg.solve(a, a @ d) - d))
    print(f"n={n:2d}  round-trip error {err:.1e}")

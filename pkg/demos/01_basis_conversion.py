# %% [markdown]
# # Converting between Bernstein and generalized Chebyshev-II coefficients
#
# A polynomial on [0, 1] can be stored as Bernstein control points or as a
# series in the generalized Chebyshev polynomials of the second kind, which
# carry point masses M, N at the two endpoints. Everything below is exact.

# %%
from fractions import Fraction

from chebbern import (
    BernsteinPoly,
    Convention,
    GenChebSeries,
    WeightParams,
    convert_coeffs,
    evaluate,
    forward_matrix,
    inverse_matrix_exact,
)

params = WeightParams(Fraction(1, 2), 2)
n = 3

# %% [markdown]
# The forward matrix sends generalized coefficients to Bernstein coefficients.

# %%
fwd = forward_matrix(n, params)
for row in fwd.rows():
    print(["%s" % v for v in row])

# %%
d = [Fraction(1), Fraction(-1, 3), Fraction(0), Fraction(2, 5)]
c = convert_coeffs(d, fwd)
print("Bernstein coefficients:", [str(v) for v in c])

# %% [markdown]
# Both representations describe the same polynomial, so they agree pointwise.

# %%
series = GenChebSeries(params, tuple(d), Convention.PRINTED)
bern = BernsteinPoly.from_coeffs(c)
for x in (Fraction(0), Fraction(1, 4), Fraction(2, 3), Fraction(1)):
    print(x, series(x), evaluate(bern, x))
    assert series(x) == evaluate(bern, x)

# %% [markdown]
# Going back uses the exact inverse and returns the input unchanged.

# %%
back = convert_coeffs(c, inverse_matrix_exact(n, params))
print("round trip:", [str(v) for v in back])
assert back == d

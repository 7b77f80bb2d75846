# %% [markdown]
# # Where the published closed forms need care
#
# Two findings show up when the closed-form formulas are checked against
# independent exact computations.

# %%
from fractions import Fraction

from chebbern import Convention, SignMode, consistency_report, forward_matrix, inverse_matrix_exact, inverse_matrix_printed
from chebbern.bernstein import evaluate
from chebbern.tschebyscheff import classical_u, classical_u_shifted_bernstein

# %% [markdown]
# ## The sign in the Bernstein form of U_n(2x - 1)
#
# Evaluated against the three-term recurrence, only the corrected sign
# reproduces U_1.

# %%
for mode in SignMode:
    p = classical_u_shifted_bernstein(1, mode)
    vals = [evaluate(p, Fraction(x)) for x in (0, 1)]
    print(mode.value, [str(v) for v in vals], "recurrence:", [classical_u(1, 2 * x - 1) for x in (0, 1)])

# %% [markdown]
# ## The closed-form inverse
#
# The printed Bernstein to generalized matrix is not the inverse of the
# forward matrix. At n = 1 the rows are proportional to the exact inverse.

# %%
print("printed:", [[str(v) for v in r] for r in inverse_matrix_printed(1).rows()])
print("exact:  ", [[str(v) for v in r] for r in inverse_matrix_exact(1).rows()])
print("forward @ printed:", [[str(v) for v in r] for r in forward_matrix(1) @ inverse_matrix_printed(1)])

# %%
for conv in Convention:
    rep = consistency_report(1, (0, 0), conv)
    print(conv.value, "row ratios printed/exact:", [str(r) for r in rep.per_row_ratio],
          "expands plain U_i:", rep.matches_classical_u)

# %% [markdown]
# # Floating-point cross-checks
#
# A few statements are spectral. These are checked numerically with a
# small Jacobi eigenvalue routine, always against the exact value.

# %%
import math

from cauchy_binet import Matrix, pseudo_det
from cauchy_binet.numeric import (
    log_trace_check,
    pseudo_pfaffian_abs,
    symmetric_eigenvalues,
    volume_check,
)

A = Matrix([[0, 4, 4], [4, 0, 3], [4, 3, 6]])
print("eigenvalues:", symmetric_eigenvalues(A).eigenvalues)
print("expected:   ", sorted([0, 3 - 5 * math.sqrt(2), 3 + 5 * math.sqrt(2)]))

# %% [markdown]
# For a skew-symmetric matrix the pseudo-Pfaffian squares to `Det`. Only its
# absolute value is computed.

# %%
S = Matrix([[0, 1, 1, 0], [-1, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]])
pf = pseudo_pfaffian_abs(S)
print(pf, pf**2, pseudo_det(S))

# %% [markdown]
# Volume: `|Det A|` against the root of the squared-minor sum.
# Log-trace: the log of `|Det A|` against the sum of `log|lambda|`.

# %%
print(volume_check(A))
print(log_trace_check(A), math.log(41))

# %% [markdown]
# # Pseudo-determinants
#
# The pseudo-determinant `Det(A)` multiplies the nonzero eigenvalues of a
# square matrix. It is read off the characteristic polynomial, so it stays
# exact for rational input.

# %%
from cauchy_binet import Matrix, char_poly, det, pseudo_det, rank, spectral_count

A = Matrix([[0, 4, 4], [4, 0, 3], [4, 3, 6]])
p = char_poly(A)
print("det(A - x) =", p)
print("det(A)     =", det(A))
print("Det(A)     =", pseudo_det(A))

# %% [markdown]
# A singular 2x2 matrix has one nonzero eigenvalue, which equals its trace.

# %%
B = Matrix([[5, 6], [10, 12]])
print(pseudo_det(B), B.trace())

# %% [markdown]
# The number of nonzero eigenvalues can be smaller than the rank. Here the
# rank is 2 but only one eigenvalue is nonzero, so `Det` comes from the
# linear coefficient.

# %%
C = Matrix([[1, -1, -1], [1, -1, -1], [-2, 2, -1]])
print("char poly:", char_poly(C))
print("rank:", rank(C), " nonzero eigenvalues:", spectral_count(C), " Det:", pseudo_det(C))

# %% [markdown]
# Nilpotent matrices (including zero) have `Det = 1`. Nothing ever returns 0.

# %%
N = Matrix([[0, 1], [0, 0]])
print(pseudo_det(N), pseudo_det(Matrix.zeros(3, 3)))

# %% [markdown]
# `Det` is not continuous: a tiny entry changes the answer by a lot.

# %%
for a in ["1/1000", "1/1000000", 0]:
    print(a, pseudo_det(Matrix.diag([a, 2])))

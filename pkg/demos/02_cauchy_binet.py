# %% [markdown]
# # Minor sums and the characteristic polynomial
#
# For two n x m matrices F and G, every coefficient of the characteristic
# polynomial of `F^T G` is a sum over k x k minors:
# `sum_P det(F_P) det(G_P)`. The first nonzero one gives `Det(F^T G)`.

# %%
from cauchy_binet import (
    Matrix,
    append_parallel_rows,
    char_poly,
    exterior_power,
    minor_pair_sum,
    pseudo_det,
    pseudo_det_via_minors,
)

F = Matrix([[1, 4], [2, 5], [3, 6]])
G = Matrix([[1, 0], [1, 1], [1, 0]])
p = char_poly(F.T @ G)
for k in range(3):
    print(k, p.signed(k), minor_pair_sum(F, G, k))
print("Det(F^T G) =", pseudo_det(F.T @ G), " Det(F G^T) =", pseudo_det(F @ G.T))

# %% [markdown]
# Choosing the minor order by rank would be wrong. Here `F^T G` has rank 2
# while `F G^T` has rank 1; the order-2 sum vanishes and the order-1 sum
# carries the answer.

# %%
F = Matrix([[3, 1, 1], [2, 2, 2]])
G = Matrix([[0, 0, 2], [0, 3, 2]])
print(minor_pair_sum(F, G, 2), minor_pair_sum(F, G, 1), pseudo_det_via_minors(F, G))

# %% [markdown]
# Compound matrices multiply: the k-th compound of a product is the product
# of compounds.

# %%
A = Matrix([[1, 2, 0], [0, 1, 3]])
B = Matrix([[2, 1], [1, 1], [0, 4]])
print(exterior_power(A @ B, 2) == exterior_power(A, 2) @ exterior_power(B, 2))

# %% [markdown]
# Appending `lam` times a row of `F^T` and `mu` times the same row of `G^T`
# scales the pseudo-determinant by `1 + lam*mu` when the product was
# invertible.

# %%
F = Matrix([[1, 1], [0, 3], [2, 1]])
G = Matrix([[1, 2], [1, 1], [1, 2]])
at, bt = append_parallel_rows(F.T, G.T, 0, 3, 2)
print(pseudo_det(F.T @ G), "->", pseudo_det(at @ bt.T))

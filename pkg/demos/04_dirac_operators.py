# %% [markdown]
# # Dirac operators of clique complexes
#
# Every clique of a graph is a simplex. The boundary maps assemble into a
# symmetric Dirac matrix `D`; `D^2` splits into one Laplacian per dimension,
# and the kernel sizes of those blocks are the Betti numbers.

# %%
from cauchy_binet import betti_numbers, clique_complex, dirac_operator, pseudo_det
from cauchy_binet.graphs import (
    complete_graph,
    cycle_graph,
    euler_characteristic_check,
    hodge_kernel_dim,
    path_graph,
    simplex_graph,
)

c = clique_complex(cycle_graph(4))
D = dirac_operator(c)
print("simplices per dimension:", c.counts)
print("Betti:", betti_numbers(c), " kernel of D^2:", hodge_kernel_dim(c))
print("Euler check:", euler_characteristic_check(c))
print("Det(D) =", pseudo_det(D), " Det(D^2) =", pseudo_det(D @ D))

# %% [markdown]
# Closed forms for a few families.

# %%
for n in range(2, 6):
    print(f"K{n}", pseudo_det(dirac_operator(clique_complex(complete_graph(n)))), -(n ** (2 ** (n - 1) - 1)))
for n in range(2, 7):
    print(f"P{n}", pseudo_det(dirac_operator(clique_complex(path_graph(n)))))
for n in range(4, 9):
    print(f"C{n}", pseudo_det(dirac_operator(clique_complex(cycle_graph(n)))))

# %% [markdown]
# The triangle is the exception among cycles: its clique complex is a
# filled 2-simplex with 7 cells, not a hollow circle with 6.

# %%
c3 = clique_complex(cycle_graph(3))
print(c3.counts, betti_numbers(c3), pseudo_det(dirac_operator(c3)))

# %% [markdown]
# The simplex graph joins each simplex to its codimension-one faces.

# %%
sg = simplex_graph(complete_graph(3))
print(sg.n, "vertices,", len(sg.edges), "edges")

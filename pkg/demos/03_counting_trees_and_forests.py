# %% [markdown]
# # Trees and forests from Laplacians
#
# With F the signed incidence matrix of a graph, `L = F^T F` is its
# Laplacian. Dividing `Det(L)` by the vertex count gives the number of
# spanning trees; `det(1 + L)` counts rooted spanning forests. Both are
# checked against brute-force enumeration.

# %%
from cauchy_binet import (
    incidence_matrix,
    minor_pair_sum,
    pseudo_det,
    rooted_forest_count,
    scalar_laplacian,
    spanning_tree_count,
)
from cauchy_binet.graphs import (
    brute_force_rooted_forest_count,
    brute_force_tree_count,
    complete_graph,
    cycle_graph,
    parse_graph,
)

K4 = complete_graph(4)
print("trees in K4:", spanning_tree_count(K4), "brute force:", brute_force_tree_count(K4))
print("forests in K3:", rooted_forest_count(complete_graph(3)),
      "brute force:", brute_force_rooted_forest_count(complete_graph(3)))

# %% [markdown]
# Each (n-1) x (n-1) minor of the incidence matrix is 0 or +-1, and the
# nonzero ones correspond to rooted spanning trees.

# %%
F = incidence_matrix(K4)
print(minor_pair_sum(F, F, 3), pseudo_det(scalar_laplacian(K4)))

# %% [markdown]
# Cycles: `Det(L(C_n)) = n^2`.

# %%
for n in range(3, 9):
    print(n, pseudo_det(scalar_laplacian(cycle_graph(n))))

# %% [markdown]
# Graphs can also be read from the edge-list format used by the CLI.

# %%
g = parse_graph("""
# a square with one diagonal
4
0 1
1 2
2 3
3 0
0 2
""")
print(spanning_tree_count(g), brute_force_tree_count(g))

# %% [markdown]
# # Red/blue coloring behind the cube bound
#
# Edges whose endpoints share more than 2d/3 neighbours are red, the rest
# blue. B = vertices on a blue edge, R = other neighbours of B, S = the rest.

# %%
from collections import Counter

from graphpowers import (
    check_b_within_two,
    check_partition_inequalities,
    color_edges,
    partition_brs,
    random_regular_connected,
    regularized_h,
)

for name, G in [("Ĥ_3(9)", regularized_h(3, 9)), ("random 8-regular, n=40", random_regular_connected(40, 8, 3))]:
    C = color_edges(G)
    P = partition_brs(G, C)
    print(name, dict(Counter(c.value for c in C.colors.values())))
    print(f"  |B|={len(P.B)} |R|={len(P.R)} |S|={len(P.S)}")
    print("  every vertex within 2 of B:", check_b_within_two(G, P).holds)
    print("  partition clauses:", check_partition_inequalities(G, C, P).clauses)

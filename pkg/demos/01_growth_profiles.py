# %% [markdown]
# # How fast do powers of a graph fill up?
#
# `growth_profile` lists e(G^r) and the exact ratio e(G^r)/e(G) for every r
# up to the diameter. Circulant graphs of prime order with an arithmetic
# progression as generator set grow exactly linearly until they saturate.

# %%
from graphpowers import cayley_undirected, cycle, growth_profile, random_regular_connected

for name, G in [
    ("C_12", cycle(12)),
    ("Cay(Z_13, {1,2})", cayley_undirected(13, {1, 2})),
    ("Cay(Z_19, {1,2,3})", cayley_undirected(19, {1, 2, 3})),
    ("random 4-regular, n=40", random_regular_connected(40, 4, seed=1)),
]:
    prof = growth_profile(G)
    print(f"{name}: e(G) = {prof.base_edges}, diam = {prof.diam}")
    for row in prof.rows:
        print(f"  r={row.r:2d}  e(G^r)={row.power_edges:4d}  ratio={row.ratio}")

# %% [markdown]
# The same numbers as CSV, ready for a plotting tool:

# %%
print(growth_profile(cycle(12)).to_csv())

# %% [markdown]
# # Layered graphs with slow growth
#
# H_r(d) stacks cliques of sizes d-1, 2, 2, d-1, ... and joins neighbouring
# layers completely. Its r-th power is complete, yet e(G^r)/e(G) tends to
# ceil((r+1)/3) as d grows. Removing one cycle through the interior layers
# gives the d-regular graph Ĥ_r(d).

# %%
from graphpowers import LayeredSpec, diameter, is_connected, layered_h, regularity, regularized_h
from graphpowers.bounds import sweep_h_ratio

spec = LayeredSpec(6, 9)
H, Hhat = layered_h(6, 9), regularized_h(6, 9)
print("layer sizes:", spec.layer_sizes)
print(f"H_6(9): n={H.n} m={H.m} diam={diameter(H)}")
print(f"Ĥ_6(9): n={Hhat.n} m={Hhat.m} regular of degree {regularity(Hhat)}, connected={is_connected(Hhat)}")

# %%
for r in (3, 6, 9):
    print(f"r={r}")
    for row in sweep_h_ratio(r, range(9, 100, 30)):
        print(f"  d={row.d:3d}  n={row.n:4d}  ratio={float(row.ratio):.4f}  limit={row.limit}")

# %% [markdown]
# The regularized graphs approach the same limit from above:

# %%
for row in sweep_h_ratio(6, range(9, 100, 30), regularize=True):
    print(f"  d={row.d:3d}  ratio={float(row.ratio):.4f}")

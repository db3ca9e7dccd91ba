# %% [markdown]
# # Squares of oriented graphs
#
# For out-regular oriented graphs e(D^2) >= 3/2 e(D). For Eulerian oriented
# graphs e(D^2) >= 2 e(D) is only conjectured; directed cycles and circulants
# of arithmetic progressions meet it with equality.

# %%
from graphpowers import cayley_directed, check_eulerian_square_conjecture, check_oriented_square, directed_cycle

for name, D in [
    ("directed C_5", directed_cycle(5)),
    ("Cay->(Z_7, {1,2})", cayley_directed(7, {1, 2})),
    ("Cay->(Z_13, {1,3,9})", cayley_directed(13, {1, 3, 9})),
]:
    sq = check_oriented_square(D)
    eu = check_eulerian_square_conjecture(D)
    print(f"{name}: e(D)={D.m} e(D^2)={sq.lhs}  3/2 slack={sq.slack}  Eulerian slack={eu.slack} ({eu.applicability.value})")

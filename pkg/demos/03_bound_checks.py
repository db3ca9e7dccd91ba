# %% [markdown]
# # Exact bound checks
#
# Each checker returns a `BoundReport` with the exact left side e(G^r), the
# required lower bound as a fraction, the slack, and whether the hypotheses
# hold (`applies`, `vacuous`, `preconditions_unmet`).

# %%
from graphpowers import (
    check_cauchy_davenport,
    check_cube,
    check_cube_conjecture,
    check_higher_power,
    complete,
    cayley_undirected,
    cycle,
    regularized_h,
)

for rep in [
    check_cauchy_davenport(cayley_undirected(13, {1, 2}), 2),
    check_cauchy_davenport(cayley_undirected(13, {1, 2}), 3),
    check_higher_power(regularized_h(9, 9), 9),
    check_cube(regularized_h(3, 9)),
    check_cube_conjecture(regularized_h(3, 9)),
    check_cube(complete(5)),
    check_cube(cycle(7)),
]:
    print(rep.to_json())

"""Graph powers, extremal layered families and exact edge-growth checks."""

from .graph import (
    UNREACHABLE,
    Digraph,
    DisconnectedGraphError,
    Graph,
    GraphInputError,
    LayerDecomposition,
    bfs_distances,
    build_digraph,
    build_graph,
    diameter,
    eccentricity,
    is_connected,
    layers,
    reach_count,
    regularity,
)
from .edgelist import EdgeListError, format_edgelist, parse_edgelist, read_edgelist, write_edgelist
from .power import (
    GrowthProfile,
    digraph_power,
    graph_power,
    growth_profile,
    power_edge_count,
    power_oracle,
)
from .families import (
    FamilyParameterError,
    LayeredSpec,
    cayley_directed,
    cayley_undirected,
    complete,
    cycle,
    directed_cycle,
    layered_h,
    path,
    random_regular_connected,
    regularized_h,
)
from .bounds import (
    Applicability,
    BoundId,
    BoundReport,
    SweepRow,
    check_cauchy_davenport,
    check_cube,
    check_cube_conjecture,
    check_eulerian_square_conjecture,
    check_higher_power,
    check_oriented_square,
    layer_reach_check,
    sweep_h_ratio,
)
from .coloring import (
    BrsPartition,
    Color,
    EdgeColoring,
    blue_neighborhood_bound,
    check_b_within_two,
    check_partition_inequalities,
    color_edges,
    partition_brs,
)

__version__ = "0.1.0"

"""Vertex position numbers of graphs: polynomial solver, brute-force oracle,
and a harness checking the known bounds and formulas on generated graphs."""

from .graph import (
    INF,
    DistanceLayers,
    Graph,
    GraphFormatError,
    GraphMetrics,
    bfs_layers,
    complement,
    distance_matrix,
    encode_graph6,
    join,
    metrics,
    parse_edge_list,
    parse_graph6,
)
from .solver import (
    GeodesicOrder,
    PositionResult,
    VpSummary,
    boundary_position_set,
    geodesic_order,
    max_antichain,
    solve_all,
    solve_px,
    verify_position_set,
)

__version__ = "0.1.0"

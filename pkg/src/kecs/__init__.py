"""Maximal k-edge-connected subgraphs of undirected multigraphs.

Static computation via oracle-driven peeling, decremental maintenance under
edge deletions, and brute-force references for checking both.
"""

from kecs.decremental import DecrementalKECS
from kecs.graph import (
    Graph,
    GraphError,
    ParseError,
    VertexPartition,
    format_partition,
    parse_graph,
    parse_partition,
    serialize_graph,
)
from kecs.local import local_component, race_smaller
from kecs.oracle import (
    ConnectivityOracle,
    CostCounters,
    FlowOracle,
    SimpleFlowOracle,
    st_connectivity_capped,
)
from kecs.sparsify import forest_decomposition, kecs_certificate
from kecs.static import SolverResult, main, maximal_kecs

__all__ = [
    "ConnectivityOracle",
    "CostCounters",
    "DecrementalKECS",
    "FlowOracle",
    "Graph",
    "GraphError",
    "ParseError",
    "SimpleFlowOracle",
    "SolverResult",
    "VertexPartition",
    "forest_decomposition",
    "format_partition",
    "kecs_certificate",
    "local_component",
    "main",
    "maximal_kecs",
    "parse_graph",
    "parse_partition",
    "race_smaller",
    "serialize_graph",
    "st_connectivity_capped",
]

"""Double traces of graphs: decision, construction, and verification.

The package decides which graphs admit double traces of each kind
(plain, d-stable, strong) and direction (parallel, antiparallel, mixed),
constructs witnesses, and verifies them.  The antiparallel d-stable case is
characterized by the minimum degree exceeding d together with a spanning
tree whose odd co-tree components each contain a vertex of degree at least
2d + 2; both directions of that equivalence are implemented constructively.
"""

from .decide import (
    DecisionCertificate,
    build_antiparallel_d_stable,
    condition_table,
    decide_existence,
    extract_qualified_tree_from_trace,
    sufficient_four_edge_connected,
)
from .errors import TraceForgeError
from .graph import (
    Graph,
    SplitSpec,
    betti_number,
    build_graph,
    complete_graph,
    cube_graph,
    cycle_graph,
    edge_connectivity,
    identify_vertices,
    is_connected,
    path_graph,
    split_vertex,
)
from .search import (
    TraceSpec,
    enumerate_traces,
    find_parallel_trace,
    find_trace,
)
from .spanning import (
    CoTreeDecomposition,
    DeficiencyCertificate,
    LocalSplit,
    SpanningTree,
    cotree_decomposition,
    deficiency_of_tree,
    find_even_cotree_tree,
    find_qualified_tree,
    graph_deficiency,
    local_odd_even_split,
    qualified_deficiency,
    spanning_tree,
)
from .transform import (
    SplitOutcome,
    lift_trace_through_identification,
    project_trace_through_split,
    split_reduce_deficiency,
    split_reduce_qualified,
    transfer_tree_on_identification,
)
from .walks import (
    DoubleTrace,
    RepetitionReport,
    TraceClass,
    TransitionGraph,
    classify_trace,
    direction_profile,
    repetition_analysis,
    stability_order,
    transition_graph_at,
    validate_double_trace,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "SplitSpec",
    "build_graph",
    "is_connected",
    "betti_number",
    "edge_connectivity",
    "split_vertex",
    "identify_vertices",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "cube_graph",
    "DoubleTrace",
    "TransitionGraph",
    "RepetitionReport",
    "TraceClass",
    "validate_double_trace",
    "direction_profile",
    "transition_graph_at",
    "repetition_analysis",
    "stability_order",
    "classify_trace",
    "TraceSpec",
    "find_trace",
    "find_parallel_trace",
    "enumerate_traces",
    "SpanningTree",
    "CoTreeDecomposition",
    "DeficiencyCertificate",
    "LocalSplit",
    "spanning_tree",
    "cotree_decomposition",
    "deficiency_of_tree",
    "graph_deficiency",
    "qualified_deficiency",
    "local_odd_even_split",
    "find_even_cotree_tree",
    "find_qualified_tree",
    "SplitOutcome",
    "transfer_tree_on_identification",
    "split_reduce_deficiency",
    "split_reduce_qualified",
    "project_trace_through_split",
    "lift_trace_through_identification",
    "DecisionCertificate",
    "decide_existence",
    "build_antiparallel_d_stable",
    "extract_qualified_tree_from_trace",
    "sufficient_four_edge_connected",
    "condition_table",
    "TraceForgeError",
    "__version__",
]

"""Zero forcing and failed zero forcing on small simple graphs.

The package computes exact zero forcing and failed zero forcing numbers
by subset search, builds guaranteed large stalled sets constructively,
reads and writes graph6, and tallies census tables over all connected
isomorphism classes for small vertex counts.
"""

from .census import (
    BUILTIN_MAX,
    CANON_MAX,
    CensusTable,
    Finding,
    GraphRecord,
    canonical_form,
    canonical_graph,
    check_bounds_and_conjecture,
    check_record,
    generate_graphs,
    run_census,
)
from .exact import (
    EXACT_CAP_DEFAULT,
    ExactCapExceeded,
    ExactResult,
    failed_zero_forcing_number,
    size_k_subsets,
    zero_forcing_number,
)
from .forcing import (
    ForcingTrace,
    closure,
    derived_set,
    is_stalled,
    is_zero_forcing,
    spent_vertices,
)
from .graph6_io import Graph6Error, parse_graph6, read_stream, write_graph6
from .graph_core import (
    Graph,
    bipartition,
    complete_bipartite,
    complete_graph,
    condense_path,
    connected_components,
    cut_vertices,
    cycle_graph,
    find_even_cycle,
    find_odd_cycle,
    from_edges,
    induced_subgraph,
    is_connected,
    iter_bits,
    mask_of,
    path_graph,
    petersen_graph,
    vertices_of,
)
from .witness import (
    ConstructionError,
    Partition,
    WitnessReport,
    WitnessVerdict,
    algo1_partition,
    verify_witness,
    witness_bipartite,
    witness_cut_vertex,
    witness_delta3,
    witness_general,
)

__all__ = [
    "BUILTIN_MAX",
    "CANON_MAX",
    "CensusTable",
    "ConstructionError",
    "EXACT_CAP_DEFAULT",
    "ExactCapExceeded",
    "ExactResult",
    "Finding",
    "ForcingTrace",
    "Graph",
    "Graph6Error",
    "GraphRecord",
    "Partition",
    "WitnessReport",
    "WitnessVerdict",
    "algo1_partition",
    "bipartition",
    "canonical_form",
    "canonical_graph",
    "check_bounds_and_conjecture",
    "check_record",
    "closure",
    "complete_bipartite",
    "complete_graph",
    "condense_path",
    "connected_components",
    "cut_vertices",
    "cycle_graph",
    "derived_set",
    "failed_zero_forcing_number",
    "find_even_cycle",
    "find_odd_cycle",
    "from_edges",
    "generate_graphs",
    "induced_subgraph",
    "is_connected",
    "is_stalled",
    "is_zero_forcing",
    "iter_bits",
    "mask_of",
    "parse_graph6",
    "path_graph",
    "petersen_graph",
    "read_stream",
    "run_census",
    "size_k_subsets",
    "spent_vertices",
    "verify_witness",
    "vertices_of",
    "witness_bipartite",
    "witness_cut_vertex",
    "witness_delta3",
    "witness_general",
    "write_graph6",
    "zero_forcing_number",
]

__version__ = "0.1.0"

"""Graph functionality and companion parameters: exact solvers, witness
constructions, clique-width k-expressions, graph family generators, and a
verification harness for the structural bounds they satisfy."""

__version__ = "0.1.0"

from .families import (
    Hypergraph3,
    IntervalSet,
    Permutation,
    distance_hereditary,
    hypercube,
    line_graph,
    permutation_graph,
    random_graph,
    sd_construction,
    shattering_graph,
    unit_interval_graph,
)
from .functionality import (
    FunResult,
    WitnessFunction,
    fun_graph,
    fun_graph_lower,
    fun_vertex,
    fun_vertex_upper,
    is_function_of,
    min_fun,
)
from .graph import (
    Graph,
    GraphFormatError,
    format_graph,
    induced_subgraph,
    parse_graph,
    read_graph,
    write_graph,
)
from .hyper3 import (
    ThickPair,
    ThickStructure,
    find_thick_structure,
    hyper3_fun_bound,
    intersection_graph,
    matching_or_cover,
    thick_pairs,
    witness_no_thick,
    witness_thick,
)
from .kexpr import (
    CwdBoundReport,
    KExprError,
    check_fun_cwd_bound,
    evaluate,
    label_count,
    parse,
    to_text,
)
from .params import degeneracy, vc_dimension
from .symdiff import min_sd, sd_graph, sd_pair
from .witnesses import (
    DnfWitness,
    classify_middles,
    line_graph_witness,
    permutation_witness,
    strict_middle_witness,
    sum_sd_consecutive,
    unit_interval_pair,
)

__all__ = [
    "__version__",
    "Graph",
    "GraphFormatError",
    "FunResult",
    "WitnessFunction",
    "DnfWitness",
    "Permutation",
    "IntervalSet",
    "Hypergraph3",
    "ThickPair",
    "ThickStructure",
    "CwdBoundReport",
    "KExprError",
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
    "induced_subgraph",
    "is_function_of",
    "fun_vertex",
    "fun_vertex_upper",
    "min_fun",
    "fun_graph",
    "fun_graph_lower",
    "sd_pair",
    "min_sd",
    "sd_graph",
    "degeneracy",
    "vc_dimension",
    "parse",
    "to_text",
    "evaluate",
    "label_count",
    "check_fun_cwd_bound",
    "hypercube",
    "permutation_graph",
    "unit_interval_graph",
    "line_graph",
    "shattering_graph",
    "sd_construction",
    "distance_hereditary",
    "random_graph",
    "unit_interval_pair",
    "sum_sd_consecutive",
    "classify_middles",
    "strict_middle_witness",
    "permutation_witness",
    "line_graph_witness",
    "intersection_graph",
    "thick_pairs",
    "matching_or_cover",
    "witness_no_thick",
    "find_thick_structure",
    "witness_thick",
    "hyper3_fun_bound",
]

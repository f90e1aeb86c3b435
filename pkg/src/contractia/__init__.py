"""Contractible vertex sets in 3-connected graphs: search, oracle, decomposition."""

from .graph import (
    ContractiaError,
    Graph,
    GraphError,
    Relabeling,
    bit,
    bits,
    build_graph,
    connected_components,
    delete_set,
    edges_between,
    induced,
    is_connected,
    is_connected_set,
    mask_of,
    neighbors_of_set,
    vertex_list,
)
from .connectivity import (
    Cutset,
    enumerate_cutsets,
    independent,
    is_biconnected_subgraph,
    is_k_connected,
    splits,
    vertex_connectivity,
)
from .decomposition import (
    BlockTree,
    Decomposition,
    NotTwoConnectedError,
    Part,
    augmented,
    block_tree,
    block_tree_to_dot,
    classify_pendant,
    decompose,
    single_cutsets,
)
from .contractible import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    PreconditionError,
    StructureReport,
    check_remainder_structure,
    connected_subsets,
    extend_once,
    failing_clause,
    is_contractible,
    is_simple_cycle,
    oracle_find,
)
from .search import (
    Level,
    PendantStats,
    PropertyViolationError,
    SearchResult,
    SelectionTrace,
    StepResult,
    constructive_search,
    delta_threshold,
    extend_by_exchange,
    find_k_contractible,
    hypotheses_satisfied,
    pendant_pair_stats,
    select_common_neighbor,
    step_from_maximal,
)
from .generators import (
    FamilySpec,
    generate,
    icosahedron,
    matches_k34,
    parse_family,
    parse_graph6,
    petersen,
    random_3_connected,
    random_k_connected,
    read_corpus,
    to_graph6,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

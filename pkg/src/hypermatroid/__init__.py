"""Matroidal closures, cycles and derived matroids of finite hypergraphs."""

from .closure import (
    ClosureReport,
    NotAMatroidBug,
    epsilon,
    matroidal_closure,
    min_family,
)
from .core import (
    BudgetExceeded,
    CapacityExceeded,
    EmptyEdge,
    GroundMismatch,
    GroundSet,
    Hypergraph,
    HypermatroidError,
    InvalidParams,
    SetFamily,
    UnknownVertex,
    VertexSet,
    connected_components,
    is_k_regular,
    is_simple,
    make_hypergraph,
)
from .cycles import (
    BergeCycle,
    EmptySelection,
    NotACycle,
    berge_cycle_from_matroidal,
    cycle_search,
    has_cycle,
    is_doubly_covering,
    is_matroidal_cycle,
    is_valid_berge_cycle,
    matroidal_cycles,
)
from .derived import (
    Classification,
    DerivationStep,
    DerivationTrace,
    NotInA0,
    a0_contains_cycle_witness,
    circuit_ground,
    classify_matroid,
    derived_matroid,
    hypergraphical_matroid,
    initial_dependents,
    iterate_derivation,
)
from .io import ParseError, format_json, format_text, input_digest, parse_hypergraph
from .matroid import (
    Matroid,
    NotAMatroid,
    RankProfile,
    cosimplify,
    direct_sum,
    dual,
    hypergraph_rank,
    is_matroid,
    is_tricycle,
    isomorphic,
    matroid_components,
    rank_of,
    relabel,
    series_extend,
    simplify,
    simplify_with_map,
    theta,
    uniform,
)
from .trees import (
    NotKRegular,
    TreeReport,
    is_proper_edge,
    lorea_independent,
    main_independent,
    tree_report,
)

__version__ = "0.1.0"

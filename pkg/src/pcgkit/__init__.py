"""Pairwise compatibility graph toolkit.

Construct witness trees for grid graphs, realize any weighted tree plus
interval into its pairwise compatibility graph, and classify graphs
against exact membership conditions and structural complement classes.
"""

from .analysis import (
    CYCLE_COMPLEMENT,
    DEFAULT_HOLE_LIMIT,
    HOLE,
    VERDICT_IS_NOT_PCG,
    VERDICT_IS_PCG,
    VERDICT_UNKNOWN,
    ClassFlags,
    ClassificationReport,
    Hole,
    HoleSearch,
    Obstruction,
    classify,
    find_cycle_complements,
    find_holes,
    is_cycle_complement_witness,
    is_hole,
    necessary_condition_violated,
    obstruction_to_json,
    obstructions_independent,
    render_report,
    report_to_json,
    sufficient_condition,
    validate_obstruction,
)
from .errors import (
    DuplicateEdge,
    DuplicateLabel,
    InvalidInput,
    InvalidInterval,
    LabelMismatch,
    NegativeWeight,
    NotATree,
    OutOfRange,
    PcgError,
    SelfLoop,
    SizeLimitExceeded,
    TooSmall,
    UnknownEndpoint,
    UnknownLabel,
)
from .graphs import (
    Graph,
    GridSpec,
    are_isomorphic,
    complement,
    connected_components,
    dumps_graph,
    gen_H,
    gen_H1,
    gen_H2,
    gen_H4,
    gen_complete,
    gen_cycle,
    gen_cycle_complement,
    gen_empty,
    gen_grid,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    grid_label,
    induced_subgraph,
    loads_graph,
    new_graph,
)
from .grid import (
    GridPctParams,
    construct_grid_pct,
    diagonal_index,
    diagonal_sets,
    first_violation,
    grid_params,
    leaf_weight,
    verify_grid_witness,
)
from .rational import format_rational, parse_rational
from .trees import (
    PcgInstance,
    WeightedTree,
    all_leaf_distances,
    dumps_instance,
    dumps_tree,
    instance_from_json,
    instance_to_json,
    is_witness,
    loads_instance,
    loads_tree,
    new_tree,
    pcg_realize,
    tree_distance,
    tree_from_json,
    tree_to_dot,
    tree_to_json,
)

__version__ = "0.1.0"

"""Recoloring sequences between proper colorings of sparse graphs."""

from .errors import (
    BoundViolationError,
    BudgetExceededError,
    InputError,
    InvalidSequenceError,
    PreconditionError,
    RecoloringError,
)
from .graph import (
    Coloring,
    DegeneracyCertificate,
    Graph,
    RecolorSequence,
    RecolorStep,
    degeneracy_order,
    densest_subgraph,
    is_frozen,
    is_proper,
    mad,
    verify_sequence,
)
from .partition import (
    LevelPartition,
    PartitionFailure,
    PartitionSpec,
    StableSetResult,
    build_partition,
    extract_stable_set,
    level_depth_bound,
    validate_partition,
)
from .linear import InsertionEvent, insert_vertex, transform_linear
from .sparse import (
    ProcedureFrame,
    RecolorBudget,
    canonicalize,
    eliminate_color,
    recolor_vertex,
    sparse_length_bound,
    transform_sparse,
)
from .oracle import ReconfGraphStats, find_frozen, reconf_stats, shortest_transformation
from .generators import (
    grid_vertex,
    icosahedron,
    random_degenerate,
    random_leveled_graph,
    random_proper_coloring,
    square_grid,
    triangulated_grid,
)

__version__ = "0.1.0"

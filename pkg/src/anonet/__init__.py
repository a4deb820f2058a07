"""Leader election and view calculus for anonymous port-labeled networks."""

from .graph import (
    GraphFormatError,
    PortGraph,
    ValidationReport,
    bfs_distances,
    diameter,
    load_graph,
    parse_graph,
    port_isomorphism,
    save_graph,
    serialize_graph,
    validate_graph,
)
from .views import (
    Partition,
    ReconstructionError,
    ViewDepthError,
    ViewInterner,
    ViewTree,
    canonical_encode,
    full_partition,
    is_solvable,
    level_of_symmetry,
    partition_at_depth,
    reconstruct_quotient,
    refine_step,
    shortest_distinguishing_path,
    sigma,
    stabilization_depth,
    view_at_depth,
)
from .families import (
    clique_necklace,
    clique_pair,
    cross_color_table,
    pendant_chorded_ring,
    random_port_graph,
    small_case,
    spiked_torus,
    symmetric_clique,
    tadpole,
    twin_clique,
    twisted_tori,
    uniform_chorded_ring,
    uniform_cycle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

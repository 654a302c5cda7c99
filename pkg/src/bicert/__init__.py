"""Certifying bipartiteness checks.

Four independent algorithms each answer with a verifiable artifact: a proper
two-sided assignment or an odd cycle.  An exhaustive oracle, seeded
generators, and file formats round out the toolkit; the ``bicert`` command
exposes check, gen, and bench.
"""

from .certificates import (
    Bipartition,
    CheckOutcome,
    OddCycle,
    canonicalize_bipartition,
    check_path_parity,
    flip_component,
    merge_bipartitions,
    verify_bipartition,
    verify_odd_cycle,
    verify_outcome,
)
from .checkers import (
    ALGORITHM_NAMES,
    check,
    check_dsu_parity,
    check_forest_recolor,
    check_growth_induced,
    check_incremental_flip,
    leaf_peel_two_color,
    run_instrumented,
)
from .errors import (
    CyclicGraphError,
    InputError,
    InternalInvariantError,
    ParseError,
)
from .formats import (
    parse_dimacs,
    parse_edge_list,
    write_dimacs,
    write_dot,
    write_edge_list,
)
from .generators import (
    GenSpec,
    SplitMix64,
    gen_forest,
    gen_planted_bipartite,
    gen_planted_odd_cycle,
    gen_random,
    generate,
)
from .graph import (
    ComponentLabeling,
    Edge,
    Graph,
    Path,
    build_graph,
    connected_components,
    find_path,
    induced_subgraph,
    simplify,
)
from .oracle import (
    OracleVerdict,
    brute_force_bipartite,
    count_proper_2colorings,
    find_odd_cycle_exhaustive,
    oracle_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_NAMES",
    "Bipartition",
    "CheckOutcome",
    "ComponentLabeling",
    "CyclicGraphError",
    "Edge",
    "GenSpec",
    "Graph",
    "InputError",
    "InternalInvariantError",
    "OddCycle",
    "OracleVerdict",
    "ParseError",
    "Path",
    "SplitMix64",
    "brute_force_bipartite",
    "build_graph",
    "canonicalize_bipartition",
    "check",
    "check_dsu_parity",
    "check_forest_recolor",
    "check_growth_induced",
    "check_incremental_flip",
    "check_path_parity",
    "connected_components",
    "count_proper_2colorings",
    "find_odd_cycle_exhaustive",
    "find_path",
    "flip_component",
    "gen_forest",
    "gen_planted_bipartite",
    "gen_planted_odd_cycle",
    "gen_random",
    "generate",
    "induced_subgraph",
    "leaf_peel_two_color",
    "merge_bipartitions",
    "oracle_verdict",
    "parse_dimacs",
    "parse_edge_list",
    "run_instrumented",
    "simplify",
    "verify_bipartition",
    "verify_odd_cycle",
    "verify_outcome",
    "write_dimacs",
    "write_dot",
    "write_edge_list",
]

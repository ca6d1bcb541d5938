"""Monochromatic monotone paths in ordered hypergraphs.

Core data model, exact small-case searches, lower-bound witness generators,
constructive path finders, the online/lattice Ramsey games, transitive-clique
extraction, and the convex-position application for plane convex bodies.
"""

from monopath.coloring import (
    GraphColoring,
    LengthTable,
    MonotonePath,
    OrderedColoring,
    OrderedGraph,
    colex_rank,
    colex_unrank,
    longest_mono_paths,
    longest_mono_paths_graph,
    read_coloring,
    verify_path,
    write_coloring,
)
from monopath.digraphs import (
    DigraphColoring,
    WalkLengths,
    f_exact,
    lift_digraph_to_graph,
    longest_mono_walks,
    lowf_witness,
    walkfree_witness,
)
from monopath.games import (
    GameTranscript,
    GridPoint,
    LatticeTranscript,
    builder_strategy,
    coordinator_strategy,
    lattice_to_online,
    online_to_lattice,
    play_lattice,
    play_online_ramsey,
    position,
)
from monopath.pathfind import (
    PathNotFound,
    find_path_online_reduction,
    find_path_recursive,
)
from monopath.search import SearchBudget, exists_witness, n_exact, tower
from monopath.transitive import extract_clique, is_transitive, transitive_closure
from monopath.witnesses import (
    grid_witness_k2,
    sparse_adversary_coloring,
    stepup3_witness,
    stepup_k_witness,
)

__all__ = [
    "DigraphColoring",
    "GameTranscript",
    "GraphColoring",
    "GridPoint",
    "LatticeTranscript",
    "LengthTable",
    "MonotonePath",
    "OrderedColoring",
    "OrderedGraph",
    "PathNotFound",
    "SearchBudget",
    "WalkLengths",
    "builder_strategy",
    "colex_rank",
    "colex_unrank",
    "coordinator_strategy",
    "exists_witness",
    "extract_clique",
    "f_exact",
    "find_path_online_reduction",
    "find_path_recursive",
    "grid_witness_k2",
    "is_transitive",
    "lattice_to_online",
    "lift_digraph_to_graph",
    "longest_mono_paths",
    "longest_mono_paths_graph",
    "longest_mono_walks",
    "lowf_witness",
    "n_exact",
    "online_to_lattice",
    "play_lattice",
    "play_online_ramsey",
    "position",
    "read_coloring",
    "sparse_adversary_coloring",
    "stepup3_witness",
    "stepup_k_witness",
    "tower",
    "transitive_closure",
    "verify_path",
    "walkfree_witness",
    "write_coloring",
]

"""Great shadows of graphs: planarity recognition, Kuratowski witnesses and drawings.

The great shadow S(G) adds a twin v' for every vertex v, adjacent to v and to
all neighbours of v. S(G) is planar exactly when G is a bipartite cactus;
this package decides that with a certificate either way.
"""

from .circuit import KeyboardMatrix, RoutabilityReport, interrupt_expansion, parse_matrix, routability_report
from .constructions import ShadowGraph, ShadowKind, great_shadow, mycielskian, shadow, small_shadow
from .embedding import (
    RotationSystem,
    draw_even_cycle_shadow,
    embed_shadow,
    expose_edge,
    glue_bridge,
    glue_shared_edge,
)
from .formats import parse_graph, read_graph
from .graph import (
    Block,
    BlockDecomposition,
    CyclePath,
    Graph,
    GraphError,
    ThetaSubdivision,
    block_decomposition,
    build_graph,
    find_odd_cycle,
    find_theta,
)
from .recognition import (
    BipartiteCactus,
    CycleTree,
    NotBipartite,
    NotCactus,
    classify,
    cycle_tree,
    is_bipartite_cactus,
    small_shadow_planar,
)
from .render import Drawing, render_shadow
from .subdivision import K33Witness, validate_k33
from .witness import k33_from_odd_cycle, k33_from_theta, k33_search, shadow_witness

__version__ = "0.1.0"

__all__ = [
    "BipartiteCactus",
    "Block",
    "BlockDecomposition",
    "CyclePath",
    "CycleTree",
    "Drawing",
    "Graph",
    "GraphError",
    "K33Witness",
    "KeyboardMatrix",
    "NotBipartite",
    "NotCactus",
    "RotationSystem",
    "RoutabilityReport",
    "ShadowGraph",
    "ShadowKind",
    "ThetaSubdivision",
    "block_decomposition",
    "build_graph",
    "classify",
    "cycle_tree",
    "draw_even_cycle_shadow",
    "embed_shadow",
    "expose_edge",
    "find_odd_cycle",
    "find_theta",
    "glue_bridge",
    "glue_shared_edge",
    "great_shadow",
    "interrupt_expansion",
    "is_bipartite_cactus",
    "k33_from_odd_cycle",
    "k33_from_theta",
    "k33_search",
    "mycielskian",
    "parse_graph",
    "parse_matrix",
    "read_graph",
    "render_shadow",
    "routability_report",
    "shadow",
    "shadow_witness",
    "small_shadow",
    "small_shadow_planar",
    "validate_k33",
]

"""Polynomial kernelization for k-dominating set on biclique-free graphs.

Library layout: ``graph`` holds the colored-graph core, ``rules`` the
reduction pipeline, ``degenerate`` the fast search for degenerate inputs,
``transform`` plain/colored conversions, ``ids`` the independent variant,
``oracles`` exact reference solvers, ``graphio``/``generators`` the file
format and corpus builders, and ``cli`` the command-line front end.
"""

from .graph import (
    Color,
    ColoredGraph,
    DegeneracyOrdering,
    GraphError,
    common_black_neighbors,
    contains_kij,
    degeneracy_ordering,
)
from .rules import (
    DecidedNo,
    KernelOutcome,
    KernelParams,
    Reduced,
    black_count_cap,
    common_neighbor_cap,
    degree_cap,
    kernelize_i1,
    kernelize_rwb,
    rule1,
    rule2p,
    rule3,
    rule4,
    rule5,
    rule6,
)
from .degenerate import kernelize_degenerate, rule2p_fast
from .transform import colorize, kernelize_plain, uncolor
from .ids import ids_rule1, ids_rule2p, ids_rule3, ids_rule6, kernelize_ids
from .oracles import (
    CapExceeded,
    KernelReport,
    find_dominating_set,
    find_dominators,
    find_independent_dominating_set,
    find_rwb_dominating_set,
    has_dominating_set,
    has_independent_dominating_set,
    has_rwb_dominating_set,
    verify_kernel,
)
from .graphio import ParseError, parse_graph, relabel_contiguous, serialize_graph
from .generators import (
    SplitMix64,
    biclique,
    cycle,
    degenerate_graph,
    erdos_renyi_kijfree,
    petersen,
    star,
)
from .trace import RuleTrace, TraceEntry

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Color",
    "ColoredGraph",
    "DecidedNo",
    "DegeneracyOrdering",
    "GraphError",
    "KernelOutcome",
    "KernelParams",
    "KernelReport",
    "ParseError",
    "Reduced",
    "RuleTrace",
    "SplitMix64",
    "TraceEntry",
    "biclique",
    "black_count_cap",
    "colorize",
    "common_black_neighbors",
    "common_neighbor_cap",
    "contains_kij",
    "cycle",
    "degeneracy_ordering",
    "degenerate_graph",
    "degree_cap",
    "erdos_renyi_kijfree",
    "find_dominating_set",
    "find_dominators",
    "find_independent_dominating_set",
    "find_rwb_dominating_set",
    "has_dominating_set",
    "has_independent_dominating_set",
    "has_rwb_dominating_set",
    "ids_rule1",
    "ids_rule2p",
    "ids_rule3",
    "ids_rule6",
    "kernelize_degenerate",
    "kernelize_i1",
    "kernelize_ids",
    "kernelize_plain",
    "kernelize_rwb",
    "parse_graph",
    "petersen",
    "relabel_contiguous",
    "rule1",
    "rule2p",
    "rule2p_fast",
    "rule3",
    "rule4",
    "rule5",
    "rule6",
    "serialize_graph",
    "star",
    "uncolor",
    "verify_kernel",
]

"""Transit functions, betweenness axioms and the graph classes they characterise."""

from .axioms import AXIOM_IDS, AxiomResult, check_axiom, check_profile, parse_axiom
from .graph_core import Graph, GraphInputError, parse_edge_list, parse_graph6
from .recognizers import RECOGNIZERS, classify
from .transit import (
    CapabilityError,
    TransitFunction,
    induced_path_function,
    interval_function,
    underlying_graph,
)

__version__ = "0.1.0"

__all__ = [
    "AXIOM_IDS", "AxiomResult", "CapabilityError", "Graph", "GraphInputError", "RECOGNIZERS",
    "TransitFunction", "check_axiom", "check_profile", "classify", "induced_path_function",
    "interval_function", "parse_axiom", "parse_edge_list", "parse_graph6", "underlying_graph",
]

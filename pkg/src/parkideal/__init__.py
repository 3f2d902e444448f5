"""Skeleton ideals of graph parking-function ideals: standard monomials,
Betti numbers by homology and by tropical cell complexes, chip firing and
power ideals."""

from .errors import DomainError, InputError, ResourceError
from .graph import Graph, load_graph, parse_graph
from .monomials import MonomialIdeal, parking_ideal, skeleton_ideal

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "Graph",
    "InputError",
    "MonomialIdeal",
    "ResourceError",
    "load_graph",
    "parking_ideal",
    "parse_graph",
    "skeleton_ideal",
]

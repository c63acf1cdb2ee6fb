"""Galois covers of graphs, net voltage sets, and splitting graphs of plane curves."""

from .cover import (GaloisCover, fiber_edges, fiber_vertices, frontier_sets, net_voltage_class,
                    net_voltage_set, stabilizer, validate_cover)
from .errors import ExtractionError, InvalidArgument, ResourceLimitError
from .fingroup import FiniteGroup, GroupAutomorphism, Subset, make_cyclic, make_symmetric
from .multigraph import GraphMap, Multigraph, Step, Walk

__all__ = [
    "ExtractionError", "FiniteGroup", "GaloisCover", "GraphMap", "GroupAutomorphism",
    "InvalidArgument", "Multigraph", "ResourceLimitError", "Step", "Subset", "Walk",
    "fiber_edges", "fiber_vertices", "frontier_sets", "make_cyclic", "make_symmetric",
    "net_voltage_class", "net_voltage_set", "stabilizer", "validate_cover",
]

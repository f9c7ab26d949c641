"""Switching-isomorphism classes of signed generalized Petersen prisms."""

from .errors import GpgError
from .graphs import Cycle, Graph, SpanningTree, build_petersen, cycle_census, enumerate_cycles
from .signed import ClassId, Signature, SwitchSet, minimal_signature, switch, tree_normalize

__all__ = [
    "ClassId", "Cycle", "GpgError", "Graph", "Signature", "SpanningTree", "SwitchSet",
    "build_petersen", "cycle_census", "enumerate_cycles", "minimal_signature", "switch",
    "tree_normalize",
]
__version__ = "0.1.0"

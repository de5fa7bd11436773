"""Chordal networks of polynomial systems over GF(p)."""

from .chordal import ChordalStructure, complete_with_order, suggest_order, support_graph
from .errors import ChordalNetError
from .network import ChordalNetwork, TriangulateOptions, chordal_triangularize
from .ring import PolySystem, Ring

__version__ = "0.1.0"

__all__ = [
    "ChordalNetError",
    "ChordalNetwork",
    "ChordalStructure",
    "PolySystem",
    "Ring",
    "TriangulateOptions",
    "chordal_triangularize",
    "complete_with_order",
    "suggest_order",
    "support_graph",
]

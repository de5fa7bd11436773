from .build import TriangulateOptions, chordal_triangularize, sniff_mode
from .ops import (
    MODES,
    compress,
    decompose_content,
    eliminate_node,
    induced_network,
    merge_in,
    merge_out,
    strip_inequations,
    triangulate_node,
)
from .types import Chain, ChordalNetwork, Node

__all__ = [
    "MODES",
    "Chain",
    "ChordalNetwork",
    "Node",
    "TriangulateOptions",
    "chordal_triangularize",
    "compress",
    "decompose_content",
    "eliminate_node",
    "induced_network",
    "merge_in",
    "merge_out",
    "sniff_mode",
    "strip_inequations",
    "triangulate_node",
]

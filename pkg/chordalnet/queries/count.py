"""Counting the points of a zero-dimensional triangular network."""

from __future__ import annotations

import logging
import warnings
from typing import Dict, Optional

from ..errors import NotSquarefree, NotTriangularNetwork, NotZeroDimensionalNetwork
from ..network import ChordalNetwork, Node
from ..ring import Poly, format_poly, mdeg, mvar

log = logging.getLogger(__name__)


def node_poly(node: Node) -> Optional[Poly]:
    """The node's equation (None for a "0" node).

    Raises:
        NotTriangularNetwork: if the node holds several equations or one whose
            main variable is not the node's rank.
    """
    eqs = node.content.eqs
    if not eqs:
        return None
    if len(eqs) > 1 or mvar(eqs[0]) != node.rank:
        raise NotTriangularNetwork(
            f"node {node.id} at rank {node.rank} is not triangular: {'; '.join(format_poly(f) for f in eqs)}"
        )
    return eqs[0]


def weights(net: ChordalNetwork) -> Dict[int, int]:
    """w(f) = mdeg(f) times, per child rank, the sum of w over the arcs into f."""
    w: Dict[int, int] = {}
    for l in net.ranks():
        kids = net.child_ranks(l)
        for v in net.rank_nodes(l):
            f = node_poly(v)
            if f is None:
                raise NotZeroDimensionalNetwork(f"node {v.id} at rank {l} has no equation")
            if v.content.ineqs:
                raise NotZeroDimensionalNetwork(f"node {v.id} at rank {l} carries inequations")
            c = mdeg(f)
            for k in kids:
                c *= sum(w[u] for u in net.children_of(v.id, rank=k))
            w[v.id] = c
    return w


def zero_count(net: ChordalNetwork) -> int:
    """Number of points of V(net) over the algebraic closure (an upper bound if not squarefree)."""
    w = weights(net)
    total = 1
    for r in net.roots():
        total *= sum(w[v.id] for v in net.rank_nodes(r))
    if not net.squarefree:
        log.warning("network was not built in squarefree mode; %d is an upper bound", total)
        warnings.warn(f"count {total} counts multiplicities (network not squarefree)", NotSquarefree, stacklevel=2)
    return total

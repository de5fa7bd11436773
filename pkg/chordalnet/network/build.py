"""The chordal triangularization driver (rank-by-rank rounds)."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from ..chordal import ChordalStructure
from ..errors import ChordalNetError
from ..ring import Poly, Ring, is_monomial
from ..utils.env import default_gb_budget
from .ops import MODES, eliminate_node, induced_network, merge_in, merge_out, strip_inequations, triangulate_node
from .types import ChordalNetwork

log = logging.getLogger(__name__)


@dataclass
class TriangulateOptions:
    mode: str = "auto"
    squarefree: bool = False
    strip: bool = False
    gb_budget: int = field(default_factory=default_gb_budget)
    progress: bool = False


def sniff_mode(F: Iterable[Poly]) -> str:
    F = [f for f in F if f]
    if all(is_monomial(f) for f in F):
        return "monomial"
    if all(len(f) <= 2 for f in F):
        return "binomial"
    return "zerodim"


def _rounds(n: int, progress: bool):
    if not progress:
        return range(n)
    try:
        from tqdm import tqdm  # type: ignore
    except ImportError:
        log.warning("tqdm not installed; running without a progress bar")
        return range(n)
    return tqdm(range(n), desc="ranks", unit="rank")


def chordal_triangularize(
    F: Iterable[Poly],
    cs: ChordalStructure,
    options: Optional[TriangulateOptions] = None,
    ring: Optional[Ring] = None,
) -> ChordalNetwork:
    """Triangular chordal network with the same variety as F.

    Each round l triangulates the rank-l nodes, merges, pushes the members
    free of x_l into copies of the parent nodes, merges again and prunes
    nodes that fell off every chain.

    Raises:
        ChordalNetError: backend failures, with ``rank`` set to the round.
    """
    opts = options or TriangulateOptions()
    F = [f for f in F if f]
    if not F:
        raise ValueError("empty polynomial system")
    mode = sniff_mode(F) if opts.mode == "auto" else opts.mode
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected auto or one of {MODES}")
    if opts.mode == "auto":
        log.info("auto mode picked the %s backend", mode)

    net = induced_network(F, cs, ring=ring, mode=mode, squarefree=opts.squarefree)
    for l in _rounds(cs.n, opts.progress):
        todo: List[int] = [v.id for v in net.rank_nodes(l)]
        for node_id in todo:
            try:
                triangulate_node(net, node_id, mode, opts.squarefree, opts.gb_budget)
            except ChordalNetError as e:
                e.rank = l
                raise
        merge_out(net, l)
        p = cs.parent[l]
        if p is not None:
            for v in net.rank_nodes(l):
                eliminate_node(net, v.id)
            merge_out(net, p)
        merge_in(net, l)
        net.prune()
        log.info("rank %d: %d node(s) triangulated, width %d, %d node(s) total", l, len(todo), net.width(), net.node_count())
    if opts.strip:
        net = strip_inequations(net)
    return net

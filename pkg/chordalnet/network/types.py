"""Chordal networks: ranked DAGs of polynomial systems along an elimination tree."""

from __future__ import annotations

import copy
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Set, Tuple

from ..chordal import ChordalStructure
from ..ring import Poly, PolySystem, Ring

log = logging.getLogger(__name__)

Chain = Tuple[int, ...]


@dataclass
class Node:
    id: int
    rank: int
    content: PolySystem

    @property
    def is_zero(self) -> bool:
        return not self.content.eqs

    def label(self) -> str:
        return self.content.label()


class ChordalNetwork:
    """Nodes keyed by id, arcs stored in both directions.

    An arc ``(u, v)`` joins a node of rank l to a node of rank ``parent(l)``.
    Ranks below ``floor`` are absent (elimination subnetworks).
    """

    def __init__(
        self,
        cs: ChordalStructure,
        ring: Ring,
        mode: str = "zerodim",
        squarefree: bool = False,
        floor: int = 0,
    ):
        self.cs = cs
        self.ring = ring
        self.mode = mode
        self.squarefree = squarefree
        self.floor = floor
        self.nodes: Dict[int, Node] = {}
        self.up: Dict[int, Set[int]] = {}
        self.down: Dict[int, Set[int]] = {}
        self._next_id = 0

    @property
    def n(self) -> int:
        return self.cs.n

    def ranks(self) -> range:
        return range(self.floor, self.n)

    def parent_rank(self, l: int) -> Optional[int]:
        return self.cs.parent[l]

    def child_ranks(self, l: int) -> List[int]:
        return [k for k in self.cs.children(l) if k >= self.floor]

    # -- mutation -------------------------------------------------------------

    def add_node(self, rank: int, content: PolySystem, node_id: Optional[int] = None) -> Node:
        if node_id is None:
            node_id = self._next_id
        if node_id in self.nodes:
            raise ValueError(f"duplicate node id {node_id}")
        self._next_id = max(self._next_id, node_id + 1)
        node = Node(node_id, rank, content)
        self.nodes[node_id] = node
        self.up[node_id] = set()
        self.down[node_id] = set()
        return node

    def remove_node(self, node_id: int) -> None:
        for v in self.up.pop(node_id):
            self.down[v].discard(node_id)
        for u in self.down.pop(node_id):
            self.up[u].discard(node_id)
        del self.nodes[node_id]

    def add_arc(self, child: int, parent: int) -> None:
        lc, lp = self.nodes[child].rank, self.nodes[parent].rank
        if self.cs.parent[lc] != lp:
            raise ValueError(f"arc from rank {lc} to rank {lp} does not follow the elimination tree")
        self.up[child].add(parent)
        self.down[parent].add(child)

    def remove_arc(self, child: int, parent: int) -> None:
        self.up[child].discard(parent)
        self.down[parent].discard(child)

    # -- views ----------------------------------------------------------------

    def rank_nodes(self, l: int) -> List[Node]:
        return sorted((v for v in self.nodes.values() if v.rank == l), key=lambda v: v.id)

    def parents_of(self, node_id: int) -> List[int]:
        return sorted(self.up[node_id])

    def children_of(self, node_id: int, rank: Optional[int] = None) -> List[int]:
        kids = self.down[node_id]
        if rank is not None:
            kids = {u for u in kids if self.nodes[u].rank == rank}
        return sorted(kids)

    def arcs(self) -> List[Tuple[int, int]]:
        return sorted((u, v) for u, vs in self.up.items() for v in vs)

    def rank_widths(self) -> Dict[int, int]:
        out = {l: 0 for l in self.ranks()}
        for v in self.nodes.values():
            out[v.rank] += 1
        return out

    def width(self) -> int:
        return max(self.rank_widths().values(), default=0)

    def node_count(self) -> int:
        return len(self.nodes)

    def copy(self) -> "ChordalNetwork":
        out = copy.copy(self)
        out.nodes = {k: Node(v.id, v.rank, v.content) for k, v in self.nodes.items()}
        out.up = {k: set(v) for k, v in self.up.items()}
        out.down = {k: set(v) for k, v in self.down.items()}
        return out

    # -- chains ---------------------------------------------------------------

    def chains(self) -> Iterator[Chain]:
        """Depth-first enumeration; a chain lists node ids by rank (``None`` below the floor)."""
        order = sorted(self.ranks(), reverse=True)
        sel: Dict[int, int] = {}

        def walk(i: int) -> Iterator[Chain]:
            if i == len(order):
                yield tuple(sel.get(l) for l in range(self.n))
                return
            l = order[i]
            p = self.cs.parent[l]
            if p is None or p < self.floor:
                cands = [v.id for v in self.rank_nodes(l)]
            else:
                cands = self.children_of(sel[p], rank=l)
            for u in cands:
                sel[l] = u
                yield from walk(i + 1)
            sel.pop(l, None)

        yield from walk(0)

    def chain_polys(self, chain: Chain) -> Tuple[List[Poly], List[Poly]]:
        eqs: List[Poly] = []
        ineqs: List[Poly] = []
        for u in chain:
            if u is None:
                continue
            eqs.extend(self.nodes[u].content.eqs)
            ineqs.extend(self.nodes[u].content.ineqs)
        return eqs, ineqs

    def _down_counts(self) -> Dict[int, int]:
        down: Dict[int, int] = {}
        for l in self.ranks():
            kids = self.child_ranks(l)
            for v in self.rank_nodes(l):
                c = 1
                for k in kids:
                    c *= sum(down[u] for u in self.children_of(v.id, rank=k))
                down[v.id] = c
        return down

    def _up_counts(self, down: Dict[int, int]) -> Dict[int, int]:
        up: Dict[int, int] = {}
        for l in sorted(self.ranks(), reverse=True):
            p = self.cs.parent[l]
            for u in self.rank_nodes(l):
                if p is None or p < self.floor:
                    up[u.id] = 1
                    continue
                total = 0
                for v in self.up[u.id]:
                    c = up[v]
                    for s in self.child_ranks(p):
                        if s != l:
                            c *= sum(down[w] for w in self.children_of(v, rank=s))
                    total += c
                up[u.id] = total
        return up

    def roots(self) -> List[int]:
        """Ranks whose parent is missing from the network."""
        return [l for l in self.ranks() if self.cs.parent[l] is None or self.cs.parent[l] < self.floor]

    def chain_count(self) -> int:
        down = self._down_counts()
        total = 1
        for r in self.roots():
            total *= sum(down[v.id] for v in self.rank_nodes(r))
        return total

    def prune(self) -> int:
        """Delete nodes lying on no chain; returns how many were removed."""
        down = self._down_counts()
        up = self._up_counts(down)
        dead = [k for k in self.nodes if not down[k] or not up[k]]
        for k in dead:
            self.remove_node(k)
        if dead:
            log.debug("pruned %d dead node(s)", len(dead))
        return len(dead)

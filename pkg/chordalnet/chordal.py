"""Support graphs, chordal completion and elimination trees.

Vertex ``l`` is variable ``x_l``; eliminating in the natural order means x0
goes first. The clique of ``l`` is ``X_l = {l} ∪ {j > l adjacent to l}`` in
the completed graph and ``parent(l)`` is the smallest such ``j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .ring import Poly, Ring, terms, variables


@dataclass(frozen=True, eq=False)
class ChordalStructure:
    g: nx.Graph
    order: Tuple[int, ...]
    cliques: Tuple[FrozenSet[int], ...]
    parent: Tuple[Optional[int], ...]
    fill_edges: Tuple[Tuple[int, int], ...] = field(default=())

    @property
    def n(self) -> int:
        return len(self.cliques)

    @property
    def root(self) -> int:
        return self.n - 1

    @property
    def clique_number(self) -> int:
        return max(len(c) for c in self.cliques)

    def children(self, l: int) -> List[int]:
        return [k for k in range(self.n) if self.parent[k] == l]

    def is_leaf(self, l: int) -> bool:
        return not self.children(l)

    def ancestors(self, l: int) -> List[int]:
        out = []
        p = self.parent[l]
        while p is not None:
            out.append(p)
            p = self.parent[p]
        return out

    def path_to_root(self, l: int) -> FrozenSet[int]:
        return frozenset([l, *self.ancestors(l)])

    @staticmethod
    def from_cliques(cliques: Sequence[Iterable[int]], order: Optional[Sequence[int]] = None) -> "ChordalStructure":
        """Rebuild a structure from its cliques (used when loading a network dump)."""
        cl = tuple(frozenset(c) for c in cliques)
        n = len(cl)
        g = nx.Graph()
        g.add_nodes_from(range(n))
        for c in cl:
            g.add_edges_from(itertools.combinations(sorted(c), 2))
        return ChordalStructure(
            g=g,
            order=tuple(order) if order is not None else tuple(range(n)),
            cliques=cl,
            parent=_parents(cl),
        )


def _parents(cliques: Sequence[FrozenSet[int]]) -> Tuple[Optional[int], ...]:
    n = len(cliques)
    out: List[Optional[int]] = []
    for l, X in enumerate(cliques):
        rest = [j for j in X if j != l]
        if rest:
            out.append(min(rest))
        else:
            # disconnected pieces hang off the next vertex so the tree stays connected
            out.append(l + 1 if l < n - 1 else None)
    return tuple(out)


def support_graph(F: Iterable[Poly], n: Optional[int] = None) -> nx.Graph:
    """Graph with an edge {i, j} whenever some f in F involves both x_i and x_j."""
    F = list(F)
    if n is None:
        n = len(F[0].ring.gens) if F else 0
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for f in F:
        g.add_edges_from(itertools.combinations(sorted(variables(f)), 2))
    return g


def complete_with_order(g: nx.Graph, order: Optional[Sequence[int]] = None) -> ChordalStructure:
    """Relabel so that ``order[k]`` becomes x_k, then add the fill edges of that elimination order."""
    n = g.number_of_nodes()
    order = tuple(order) if order is not None else tuple(range(n))
    if sorted(order) != list(range(n)):
        raise ValueError(f"order must be a permutation of 0..{n - 1}")
    h = nx.relabel_nodes(g, {v: k for k, v in enumerate(order)}, copy=True)
    h.add_nodes_from(range(n))
    fill: List[Tuple[int, int]] = []
    cliques: List[FrozenSet[int]] = []
    for l in range(n):
        higher = sorted(j for j in h.neighbors(l) if j > l)
        for a, b in itertools.combinations(higher, 2):
            if not h.has_edge(a, b):
                h.add_edge(a, b)
                fill.append((a, b))
        cliques.append(frozenset([l, *higher]))
    return ChordalStructure(
        g=h,
        order=order,
        cliques=tuple(cliques),
        parent=_parents(cliques),
        fill_edges=tuple(sorted(fill)),
    )


def suggest_order(g: nx.Graph) -> List[int]:
    """Greedy minimum-degree order; ties go to the smallest vertex index."""
    h = g.copy()
    order: List[int] = []
    while h.number_of_nodes():
        v = min(h.nodes, key=lambda u: (h.degree(u), u))
        nb = list(h.neighbors(v))
        h.add_edges_from(itertools.combinations(nb, 2))
        h.remove_node(v)
        order.append(v)
    return order


def elim_tree(cs: ChordalStructure) -> Dict[int, Optional[int]]:
    return {l: cs.parent[l] for l in range(cs.n)}


def is_perfect_elimination(cs: ChordalStructure) -> bool:
    for X in cs.cliques:
        for a, b in itertools.combinations(sorted(X), 2):
            if not cs.g.has_edge(a, b):
                return False
    return True


def relabel_system(F: Iterable[Poly], order: Sequence[int], ring: Ring) -> List[Poly]:
    """Rewrite F so that original variable ``order[k]`` becomes x_k."""
    pos = {v: k for k, v in enumerate(order)}
    out = []
    for f in F:
        new = {}
        for m, c in terms(f):
            mm = [0] * ring.n
            for i, e in enumerate(m):
                if e:
                    mm[pos[i]] = e
            new[tuple(mm)] = c
        out.append(ring.from_terms(new))
    return out

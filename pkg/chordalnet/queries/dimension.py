"""Dimension, top-dimensional component, census and isolation of chains by dimension.

The cardinality of a chain is its number of nodes carrying an equation; a
chain of cardinality c describes a component of dimension (#ranks - c).
"""

from __future__ import annotations

from collections import Counter
from typing import Dict, Iterator, List, Optional

from ..network import Chain, ChordalNetwork

_INF = float("inf")


def _flag(net: ChordalNetwork, node_id: int) -> int:
    return 1 if net.nodes[node_id].content.eqs else 0


def _span(net: ChordalNetwork) -> int:
    return len(net.ranks())


def shortest(net: ChordalNetwork) -> Dict[int, float]:
    """l(f): fewest equation nodes on a chain of the subtree hanging below f."""
    ell: Dict[int, float] = {}
    for l in net.ranks():
        kids = net.child_ranks(l)
        for v in net.rank_nodes(l):
            total = _flag(net, v.id)
            for k in kids:
                total += min((ell[u] for u in net.children_of(v.id, rank=k)), default=_INF)
            ell[v.id] = total
    return ell


def dimension(net: ChordalNetwork) -> int:
    ell = shortest(net)
    best = sum(min((ell[v.id] for v in net.rank_nodes(r)), default=_INF) for r in net.roots())
    if best == _INF:
        raise ValueError("network has no chains")
    return _span(net) - int(best)


def top_component(net: ChordalNetwork) -> ChordalNetwork:
    """Subnetwork of the arcs and nodes lying on some chain of minimal cardinality."""
    ell = shortest(net)
    out = net.copy()
    up: Dict[int, float] = {}
    for l in sorted(net.ranks(), reverse=True):
        p = net.parent_rank(l)
        for v in net.rank_nodes(l):
            if p is None or p < net.floor:
                roots = net.rank_nodes(l)
                up[v.id] = 0 if ell[v.id] == min(ell[w.id] for w in roots) else _INF
                continue
            best = _INF
            for P in net.parents_of(v.id):
                if up[P] == _INF:
                    continue
                # cost of P's chain with the x_l-subtree left open
                cost = up[P] + ell[P] - min(ell[u] for u in net.children_of(P, rank=l))
                if ell[v.id] + cost == up[P] + ell[P]:
                    best = min(best, up[P] + ell[P] - ell[v.id])
                else:
                    out.remove_arc(v.id, P)
            up[v.id] = best
    for k, val in up.items():
        if val == _INF:
            out.remove_node(k)
    out.prune()
    return out


def census_vectors(net: ChordalNetwork) -> Dict[int, Counter]:
    """Per node: cardinality -> number of subtree chains with that cardinality."""
    cen: Dict[int, Counter] = {}
    for l in net.ranks():
        kids = net.child_ranks(l)
        for v in net.rank_nodes(l):
            acc = Counter({_flag(net, v.id): 1})
            for k in kids:
                group: Counter = Counter()
                for u in net.children_of(v.id, rank=k):
                    group.update(cen[u])
                nxt: Counter = Counter()
                for a, ca in acc.items():
                    for b, cb in group.items():
                        nxt[a + b] += ca * cb
                acc = nxt
            cen[v.id] = acc
    return cen


def dim_census(net: ChordalNetwork) -> Dict[int, int]:
    """dimension -> number of chains of that dimension."""
    cen = census_vectors(net)
    total: Counter = Counter({0: 1})
    for r in net.roots():
        group: Counter = Counter()
        for v in net.rank_nodes(r):
            group.update(cen[v.id])
        nxt: Counter = Counter()
        for a, ca in total.items():
            for b, cb in group.items():
                nxt[a + b] += ca * cb
        total = nxt
    span = _span(net)
    return {span - c: k for c, k in sorted(total.items()) if k}


def _allocations(
    net: ChordalNetwork, cen: Dict[int, Counter], node_id: int, kids: List[int], remaining: int
) -> Iterator[Dict[int, int]]:
    if not kids:
        if remaining == 0:
            yield {}
        return
    k, rest = kids[0], kids[1:]
    group: Counter = Counter()
    for u in net.children_of(node_id, rank=k):
        group.update(cen[u])
    for t in range(remaining + 1):
        if group.get(t, 0):
            for alloc in _allocations(net, cen, node_id, rest, remaining - t):
                yield {k: t, **alloc}


def isolate_dim(net: ChordalNetwork, d: int) -> Iterator[Chain]:
    """Lazily yield exactly the chains of dimension d."""
    cen = census_vectors(net)
    target = _span(net) - d
    if target < 0:
        return
    roots = net.roots()
    if len(roots) != 1:
        raise ValueError("isolate_dim expects a connected elimination tree")
    order = sorted(net.ranks(), reverse=True)
    sel: Dict[int, int] = {}
    need: Dict[int, int] = {roots[0]: target}

    def walk(i: int) -> Iterator[Chain]:
        if i == len(order):
            yield tuple(sel.get(l) for l in range(net.n))
            return
        l = order[i]
        p = net.parent_rank(l)
        if p is None or p < net.floor:
            cands = [v.id for v in net.rank_nodes(l)]
        else:
            cands = net.children_of(sel[p], rank=l)
        t = need[l]
        for u in cands:
            if not cen[u].get(t, 0):
                continue
            sel[l] = u
            for alloc in _allocations(net, cen, u, net.child_ranks(l), t - _flag(net, u)):
                saved = {k: need.get(k) for k in alloc}
                need.update(alloc)
                yield from walk(i + 1)
                for k, val in saved.items():
                    if val is None:
                        need.pop(k, None)
                    else:
                        need[k] = val
        sel.pop(l, None)

    yield from walk(0)


def chain_cardinality(net: ChordalNetwork, chain: Chain) -> int:
    return sum(_flag(net, u) for u in chain if u is not None)


def chain_dimension(net: ChordalNetwork, chain: Chain) -> Optional[int]:
    return _span(net) - chain_cardinality(net, chain)

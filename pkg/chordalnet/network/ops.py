"""Node operations of the triangularization driver.

Every operation mutates the network in place and keeps it G-chordal: node
supports stay inside their cliques and arcs follow the elimination tree.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Optional, Tuple

from ..chordal import ChordalStructure
from ..decomp import tri_binomial, tri_monomial, tri_zero_dim
from ..errors import UnsupportedPolynomial
from ..ring import Poly, PolySystem, Ring, format_poly, is_constant, mvar, ring_of, variables
from .types import ChordalNetwork

log = logging.getLogger(__name__)

MODES = ("zerodim", "monomial", "binomial")


def induced_network(
    F: Iterable[Poly],
    cs: ChordalStructure,
    ring: Optional[Ring] = None,
    mode: str = "zerodim",
    squarefree: bool = False,
) -> ChordalNetwork:
    """One node per rank k holding F ∩ K[X_k], arcs along the elimination tree.

    Raises:
        UnsupportedPolynomial: if a polynomial's variables do not fit in the
            clique of its main variable.
    """
    F = [f for f in F if f]
    if ring is None:
        ring = ring_of(F[0]) if F else Ring(cs.n)
    per_rank: Dict[int, List[Poly]] = {l: [] for l in range(cs.n)}
    for f in F:
        if is_constant(f):
            # a nonzero constant makes the system inconsistent; park it at the root
            per_rank[cs.root].append(f)
            continue
        l = mvar(f)
        if not variables(f) <= cs.cliques[l]:
            raise UnsupportedPolynomial(
                f"{format_poly(f)} uses variables {sorted(variables(f))} outside the clique X_{l}={sorted(cs.cliques[l])}"
            )
        for k in range(cs.n):
            if variables(f) <= cs.cliques[k]:
                per_rank[k].append(f)
    net = ChordalNetwork(cs, ring, mode=mode, squarefree=squarefree)
    for l in range(cs.n):
        net.add_node(l, PolySystem.of(per_rank[l]))
    for l in range(cs.n):
        p = cs.parent[l]
        if p is not None:
            net.add_arc(l, p)
    return net


def decompose_content(
    content: PolySystem,
    mode: str,
    squarefree: bool = False,
    budget: Optional[int] = None,
) -> List[PolySystem]:
    """Run the backend of ``mode`` on a node's content."""
    if not content.eqs:
        return [content]
    if mode == "zerodim":
        vs = set().union(*(variables(f) for f in content.eqs))
        sets = tri_zero_dim(content.eqs, clique=vs, squarefree=squarefree, budget=budget)
        return [PolySystem.of(T.polys, content.ineqs) for T in sets]
    if mode == "monomial":
        return [PolySystem.of(T.polys) for T in tri_monomial(content.eqs)]
    if mode == "binomial":
        return [rs.as_system() for rs in tri_binomial(content)]
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def replace_node(net: ChordalNetwork, node_id: int, contents: List[PolySystem]) -> List[int]:
    """Replace a node by one copy per content, each inheriting all of its arcs."""
    old = net.nodes[node_id]
    parents = net.parents_of(node_id)
    kids = net.children_of(node_id)
    new_ids = []
    for c in contents:
        v = net.add_node(old.rank, c)
        for p in parents:
            net.add_arc(v.id, p)
        for k in kids:
            net.add_arc(k, v.id)
        new_ids.append(v.id)
    net.remove_node(node_id)
    return new_ids


def triangulate_node(
    net: ChordalNetwork,
    node_id: int,
    mode: Optional[str] = None,
    squarefree: Optional[bool] = None,
    budget: Optional[int] = None,
) -> List[int]:
    node = net.nodes[node_id]
    mode = mode or net.mode
    squarefree = net.squarefree if squarefree is None else squarefree
    out = decompose_content(node.content, mode, squarefree, budget)
    if len(out) == 1 and out[0] == node.content:
        return [node_id]
    log.debug("rank %d node %d -> %d node(s)", node.rank, node_id, len(out))
    return replace_node(net, node_id, out)


def _split_content(content: PolySystem, l: int) -> Tuple[PolySystem, PolySystem]:
    """(members involving x_l, members free of x_l)."""
    keep_e = [f for f in content.eqs if l in variables(f)]
    push_e = [f for f in content.eqs if l not in variables(f)]
    keep_i = [h for h in content.ineqs if l in variables(h)]
    push_i = [h for h in content.ineqs if l not in variables(h)]
    return PolySystem.of(keep_e, keep_i), PolySystem.of(push_e, push_i)


def eliminate_node(net: ChordalNetwork, node_id: int) -> None:
    """Push the members free of x_rank into fresh copies of the parent nodes."""
    node = net.nodes[node_id]
    l = node.rank
    p = net.parent_rank(l)
    if p is None or p < net.floor:
        return
    T_l, T_p = _split_content(node.content, l)
    siblings = [s for s in net.child_ranks(p) if s != l]
    for par in net.parents_of(node_id):
        src = net.nodes[par]
        dup = net.add_node(p, src.content + T_p)
        for g in net.parents_of(par):
            net.add_arc(dup.id, g)
        for s in siblings:
            for k in net.children_of(par, rank=s):
                net.add_arc(k, dup.id)
        net.remove_arc(node_id, par)
        net.add_arc(node_id, dup.id)
    node.content = T_l


def _merge(net: ChordalNetwork, l: int, by_out: bool) -> int:
    merged = 0
    changed = True
    while changed:
        changed = False
        groups: Dict[Tuple, int] = {}
        for v in net.rank_nodes(l):
            side = frozenset(net.up[v.id] if by_out else net.down[v.id])
            key = (v.content.key(), side)
            keep = groups.setdefault(key, v.id)
            if keep == v.id:
                continue
            if by_out:
                for k in net.children_of(v.id):
                    net.add_arc(k, keep)
            else:
                for g in net.parents_of(v.id):
                    net.add_arc(keep, g)
            net.remove_node(v.id)
            merged += 1
            changed = True
    return merged


def merge_out(net: ChordalNetwork, l: int) -> int:
    """Merge rank-l nodes with equal content and equal out-arcs; returns merges done."""
    return _merge(net, l, by_out=True)


def merge_in(net: ChordalNetwork, l: int) -> int:
    """Merge rank-l nodes with equal content and equal in-arcs; returns merges done."""
    return _merge(net, l, by_out=False)


def compress(net: ChordalNetwork) -> int:
    """Merge equal nodes to a fixed point and prune; returns merges done.

    Out-merges run from the roots down and in-merges from the leaves up.
    Out-merges are only tried at ranks with a single child rank, where the
    merged node carries exactly the union of the two nodes' chains.
    """
    total = 0
    while True:
        merged = 0
        for l in reversed(net.ranks()):
            if len(net.child_ranks(l)) <= 1:
                merged += merge_out(net, l)
        for l in net.ranks():
            merged += merge_in(net, l)
        if not merged:
            break
        total += merged
    net.prune()
    return total


def strip_inequations(net: ChordalNetwork) -> ChordalNetwork:
    """Drop every inequation, then merge the nodes that became equal."""
    out = net.copy()
    for v in out.nodes.values():
        v.content = v.content.without_ineqs()
    merged = compress(out)
    log.debug("strip: %d merge(s), width %d", merged, out.width())
    return out

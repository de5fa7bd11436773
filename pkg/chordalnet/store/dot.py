"""DOT rendering: one cluster per rank (or group of collapsed ranks)."""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from ..network import ChordalNetwork


def _import_pydot():
    try:
        import pydot  # type: ignore
    except ImportError as e:
        raise ImportError("DOT export needs pydot; install the 'dot' extra (pip install chordalnet[dot])") from e
    return pydot


def parse_collapse(spec: Optional[str]) -> List[List[int]]:
    """``"0,1;2,3"`` -> [[0, 1], [2, 3]]."""
    if not spec:
        return []
    return [[int(t) for t in group.split(",") if t.strip()] for group in spec.split(";") if group.strip()]


def rank_groups(net: ChordalNetwork, collapse: Sequence[Sequence[int]] = ()) -> List[List[int]]:
    taken: Dict[int, int] = {}
    groups: List[List[int]] = []
    for g in collapse:
        idx = len(groups)
        groups.append(sorted(g))
        for r in g:
            taken[r] = idx
    for r in net.ranks():
        if r not in taken:
            taken[r] = len(groups)
            groups.append([r])
    return sorted(groups, key=lambda g: g[0])


def to_pydot(net: ChordalNetwork, collapse: Sequence[Sequence[int]] = ()):
    pydot = _import_pydot()
    g = pydot.Dot("chordal_network", graph_type="digraph", rankdir="TB")
    for group in rank_groups(net, collapse):
        name = "".join(str(r) for r in group)
        sub = pydot.Cluster(f"rank_{name}", label=f'"{name}"')
        for r in group:
            for v in net.rank_nodes(r):
                sub.add_node(pydot.Node(f"n{v.id}", label=f'"{v.label()}"', shape="box"))
        g.add_subgraph(sub)
    for u, w in net.arcs():
        g.add_edge(pydot.Edge(f"n{u}", f"n{w}"))
    return g


def export_dot(net: ChordalNetwork, collapse: Sequence[Sequence[int]] = ()) -> str:
    return to_pydot(net, collapse).to_string()

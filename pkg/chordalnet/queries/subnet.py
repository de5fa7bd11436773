from __future__ import annotations

from ..network import ChordalNetwork


def eliminate_below(net: ChordalNetwork, l: int) -> ChordalNetwork:
    """Subnetwork of ranks >= l; it represents the projection onto x_l, ..., x_(n-1)."""
    if not 0 <= l < net.n:
        raise ValueError(f"rank {l} outside 0..{net.n - 1}")
    out = net.copy()
    for v in list(out.nodes.values()):
        if v.rank < l:
            out.remove_node(v.id)
    out.floor = max(l, net.floor)
    return out

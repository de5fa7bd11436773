"""Uniform sampling of GF(p)-points, top-down along the elimination tree."""

from __future__ import annotations

import logging
import random
from typing import Dict, List, Optional, Sequence

from ..errors import NonSplittingSpecialization
from ..network import ChordalNetwork
from ..ring import deg_in, subst_eval, uni_rational_roots, variables
from .count import node_poly, weights

log = logging.getLogger(__name__)


def _pick(rng: random.Random, ids: Sequence[int], w: Dict[int, int]) -> int:
    return rng.choices(list(ids), weights=[w[i] for i in ids], k=1)[0]


def sample(net: ChordalNetwork, seed: Optional[int] = None, rng: Optional[random.Random] = None) -> List[int]:
    """A point of V(net) with coordinates in [0, p), in the original variable order.

    Raises:
        NonSplittingSpecialization: a specialized node polynomial has fewer
            roots in GF(p) than its degree.
    """
    rng = rng or random.Random(seed)
    w = weights(net)
    point: Dict[int, int] = {}
    chosen: Dict[int, int] = {}
    for l in sorted(net.ranks(), reverse=True):
        p = net.parent_rank(l)
        if p is None or p < net.floor:
            cands = [v.id for v in net.rank_nodes(l)]
        else:
            cands = net.children_of(chosen[p], rank=l)
        u = _pick(rng, cands, w)
        chosen[l] = u
        g = node_poly(net.nodes[u])
        for k in sorted(variables(g) - {l}):
            g = subst_eval(g, k, point[k])
        d = deg_in(g, l)
        roots = uni_rational_roots(g)
        if len(roots) < d:
            raise NonSplittingSpecialization(l, len(roots), d)
        point[l] = rng.choice(roots)
    relabelled = [point.get(k, 0) for k in range(net.n)]
    if tuple(net.cs.order) == tuple(range(net.n)):
        return relabelled
    out = [0] * net.n
    for k, orig in enumerate(net.cs.order):
        out[orig] = relabelled[k]
    return out

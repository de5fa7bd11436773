"""Randomized radical membership on a triangular network.

Every node carries an accumulator H. Ranks are processed bottom-up: H is
reduced by the node's polynomial, x_rank is replaced by a random value, and
a random affine combination of the children's accumulators is added to each
parent. h vanishes on V(net) iff the root accumulators are all zero, up to a
one-sided error of at most 1/2 per trial.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..errors import FieldTooSmall, NotPathDecomposable
from ..network import ChordalNetwork
from ..ring import Poly, format_poly, initial, is_constant, mdeg, mvar, normal_form, prem, subst_eval, variables
from ..utils.env import default_seed
from .count import node_poly

log = logging.getLogger(__name__)


@dataclass
class MemberOptions:
    trials: int = 20
    seed: Optional[int] = field(default_factory=default_seed)


def split_by_mvar(h: Poly, net: ChordalNetwork) -> Dict[int, Poly]:
    """h = sum of h_m, h_m built from the terms of h with main variable x_m.

    Raises:
        NotPathDecomposable: some h_m involves a variable that is neither x_m
            nor an ancestor of x_m in the elimination tree.
    """
    R = h.ring
    parts: Dict[int, Poly] = {}
    root = net.n - 1
    for m, c in h.items():
        t = R.from_dict({m: c})
        r = root if is_constant(t) else mvar(t)
        parts[r] = parts.get(r, R.zero) + t
    for r, part in parts.items():
        allowed = net.cs.path_to_root(r)
        if not variables(part) <= allowed:
            raise NotPathDecomposable(
                f"terms of {format_poly(part)} with main variable x{r} use variables outside x{r} and its ancestors"
            )
    return parts


def _reduce(acc: Poly, f: Optional[Poly]) -> Poly:
    if f is None or not acc:
        return acc
    if is_constant(initial(f)):
        return normal_form(acc, [f])
    return prem(acc, f)


def _affine(rng: random.Random, k: int, p: int) -> List[int]:
    """k random scalars in GF(p) summing to 1."""
    while True:
        r = [rng.randrange(p) for _ in range(k)]
        s = sum(r) % p
        if s:
            inv = pow(s, -1, p)
            return [x * inv % p for x in r]


def _trial(net: ChordalNetwork, parts: Dict[int, Poly], rng: random.Random) -> bool:
    R = net.ring.poly_ring
    p = net.ring.p
    xhat = {l: rng.randrange(p) for l in net.ranks()}
    H: Dict[int, Poly] = {v.id: parts.get(v.rank, R.zero) for v in net.nodes.values()}
    for l in net.ranks():
        for v in net.rank_nodes(l):
            H[v.id] = subst_eval(_reduce(H[v.id], node_poly(v)), l, xhat[l])
        par = net.parent_rank(l)
        if par is None or par < net.floor:
            continue
        for P in net.rank_nodes(par):
            kids = net.children_of(P.id, rank=l)
            if not kids:
                continue
            for r, u in zip(_affine(rng, len(kids), p), kids):
                H[P.id] = H[P.id] + H[u] * r
    return all(not H[v.id] for r in net.roots() for v in net.rank_nodes(r))


def radical_member(net: ChordalNetwork, h: Poly, options: Optional[MemberOptions] = None) -> bool:
    """True if h vanishes on V(net); False answers are always correct.

    Raises:
        FieldTooSmall: if p < 2 n q, q the largest main degree in the network.
        NotTriangularNetwork: a node holds more than one equation.
    """
    opts = options or MemberOptions()
    q = max((mdeg(f) for v in net.nodes.values() if (f := node_poly(v)) is not None), default=1)
    bound = 2 * net.n * q
    if net.ring.p < bound:
        raise FieldTooSmall(net.ring.p, bound)
    seed = opts.seed if opts.seed is not None else random.SystemRandom().randrange(2**32)
    log.info("radical membership: %d trial(s), seed %d", opts.trials, seed)
    rng = random.Random(seed)
    parts = split_by_mvar(h, net)
    for t in range(opts.trials):
        if not _trial(net, parts, rng):
            log.debug("trial %d found a nonzero root accumulator", t)
            return False
    return True

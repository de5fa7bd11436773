from __future__ import annotations

import logging
from typing import List, Optional

from ..decomp import TriangularSet, is_prime_form, sat_generators
from ..errors import NonPrimeChain, PrimalityUnknown
from ..network import ChordalNetwork
from ..ring import Poly, prem_chain
from .dimension import dim_census, isolate_dim

log = logging.getLogger(__name__)


def minimal_primes(
    net: ChordalNetwork,
    max_count: Optional[int] = None,
    min_dim: Optional[int] = None,
    budget: Optional[int] = None,
) -> List[List[Poly]]:
    """Minimal primes of the network's variety as reduced lex Gröbner bases.

    Chains are visited by decreasing dimension. A chain whose saturated ideal
    contains an already found prime is skipped; otherwise its saturated ideal
    is a new minimal prime.

    Raises:
        PrimalityUnknown: the structural primality test cannot decide a chain.
        NonPrimeChain: a chain's saturated ideal is not prime.
    """
    found: List[List[Poly]] = []
    for d in sorted(dim_census(net), reverse=True):
        if min_dim is not None and d < min_dim:
            break
        for chain in isolate_dim(net, d):
            eqs, _ = net.chain_polys(chain)
            T = TriangularSet.of(eqs)
            verdict = is_prime_form(T)
            if verdict is None:
                raise PrimalityUnknown(str(T)[1:-1])
            if verdict is False:
                raise NonPrimeChain(str(T)[1:-1])
            if any(all(not prem_chain(g, T) for g in P) for P in found):
                continue
            found.append(sat_generators(T, budget))
            log.debug("dimension %d: new prime from %s", d, T)
            if max_count is not None and len(found) >= max_count:
                return found
    return found

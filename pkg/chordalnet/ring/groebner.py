"""Reduced lex Gröbner bases by Buchberger's algorithm with a pair budget.

sympy's own ``groebner`` cannot be interrupted, and the triangularization driver needs a way to
say "this clique subproblem is too large", so the pair loop is implemented here
on top of sympy's sparse ring elements.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Set, Tuple

from ..errors import BudgetExceeded
from ..utils.env import default_gb_budget
from .base import Poly

log = logging.getLogger(__name__)


@dataclass
class GroebnerOptions:
    budget: int = field(default_factory=default_gb_budget)


def spoly(f: Poly, g: Poly) -> Poly:
    """S-polynomial of monic f and g."""
    R = f.ring
    lcm = R.monomial_lcm(f.LM, g.LM)
    return f.mul_monom(R.monomial_div(lcm, f.LM)) - g.mul_monom(R.monomial_div(lcm, g.LM))


def _update(G: List[Poly], P: Set[Tuple[int, int]], f: Poly) -> Tuple[List[Poly], Set[Tuple[int, int]], int]:
    """Add f to G, pruning pairs with the Gebauer-Moeller criteria."""
    R = f.ring
    lcm = R.monomial_lcm
    mul = R.monomial_mul
    div = R.monomial_div
    lmf = f.LM
    lmG = [g.LM for g in G]

    P = {
        q for q in P
        if (not div(lcm(lmG[q[0]], lmG[q[1]]), lmf)
            or lcm(lmG[q[0]], lmG[q[1]]) == lcm(lmG[q[0]], lmf)
            or lcm(lmG[q[0]], lmG[q[1]]) == lcm(lmG[q[1]], lmf))
    }
    by_lcm = {}
    for i in range(len(G)):
        by_lcm.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimal: List[tuple] = []
    for L in sorted(by_lcm):
        if all(not div(L, L_) for L_ in minimal):
            minimal.append(L)
    new = set()
    for L in minimal:
        # product criterion: coprime leading monomials
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in by_lcm[L]):
            new.add((min(by_lcm[L]), len(G)))
    return G + [f], P | new, len(new)


def _select(G: List[Poly], P: Set[Tuple[int, int]]) -> Tuple[int, int]:
    """Normal selection: smallest lcm in lex, ties by pair indices."""
    R = G[0].ring
    return min(P, key=lambda q: (R.monomial_lcm(G[q[0]].LM, G[q[1]].LM), q))


def _minimalize(G: List[Poly]) -> List[Poly]:
    out: List[Poly] = []
    for f in sorted(G, key=lambda h: h.LM):
        if all(not f.ring.monomial_div(f.LM, g.LM) for g in out):
            out.append(f)
    return out


def _interreduce(G: List[Poly]) -> List[Poly]:
    out = []
    for i, g in enumerate(G):
        r = g.rem(G[:i] + G[i + 1:]) if len(G) > 1 else g
        out.append(r.monic())
    return out


def buchberger_lex(F: Iterable[Poly], budget: Optional[int] = None) -> List[Poly]:
    """Return the reduced lex Gröbner basis of <F>, sorted by decreasing leading monomial.

    Args:
        F: generators, all in the same ring (zero members are ignored).
        budget: maximum number of S-pairs that may be queued over the run.

    Returns:
        The reduced basis; ``[1]`` for the unit ideal and ``[]`` for the zero ideal.

    Raises:
        BudgetExceeded: if more than ``budget`` pairs are generated.
    """
    if budget is None:
        budget = GroebnerOptions().budget
    gens = [f for f in F if f]
    if not gens:
        return []
    one = gens[0].ring.one
    if any(f.is_ground for f in gens):
        return [one]

    G: List[Poly] = []
    P: Set[Tuple[int, int]] = set()
    queued = 0
    for f in sorted(gens, key=lambda h: h.LM):
        G, P, added = _update(G, P, f.monic())
        queued += added

    while P:
        if queued > budget:
            raise BudgetExceeded(f"S-pair budget of {budget} exceeded ({queued} pairs, basis size {len(G)})")
        i, j = _select(G, P)
        P.remove((i, j))
        r = spoly(G[i], G[j]).rem(G)
        if not r:
            continue
        if r.is_ground:
            log.debug("unit ideal detected after %d pairs", queued)
            return [one]
        G, P, added = _update(G, P, r.monic())
        queued += added

    log.debug("groebner: %d pairs, %d raw generators", queued, len(G))
    basis = _interreduce(_minimalize(G))
    return sorted(basis, key=lambda h: h.LM, reverse=True)


def is_unit_ideal(F: Iterable[Poly], budget: Optional[int] = None) -> bool:
    G = buchberger_lex(F, budget)
    return len(G) == 1 and G[0].is_ground

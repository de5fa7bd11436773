"""Decomposition of binomial systems with monomial inequations into regular systems.

Each branch fixes some variables to zero (``Z``) and some to nonzero
(``N``). The binomials living entirely on ``N`` are solved on the torus by a
Hermite normal form; the rest must already be regular with respect to ``N``,
otherwise the branch is split again on one of their undecided variables.
Nonzero branches are produced before zero branches, and branches are
pairwise disjoint.
"""

from __future__ import annotations

import logging
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from ..errors import NotBinomial
from ..ring import Monomial, Poly, PolySystem, Ring, is_monomial, ring_of, terms
from .hermite import toral_hnf
from .types import RegularSystem, TriangularSet

log = logging.getLogger(__name__)

Term = Tuple[Monomial, int]
Eq = Tuple[Term, ...]


def _support(m: Monomial) -> FrozenSet[int]:
    return frozenset(i for i, e in enumerate(m) if e)


def _eq_vars(eq: Eq) -> FrozenSet[int]:
    out: FrozenSet[int] = frozenset()
    for m, _ in eq:
        out |= _support(m)
    return out


def _normalize(eqs: Sequence[Eq], Z: FrozenSet[int], N: FrozenSet[int]) -> Optional[List[Eq]]:
    """Substitute zeros, cancel known-nonzero factors; None when inconsistent."""
    out: List[Eq] = []
    for eq in eqs:
        kept = [(m, c) for m, c in eq if not (_support(m) & Z)]
        if not kept:
            continue
        if len(kept) == 2:
            a, b = kept[0][0], kept[1][0]
            common = tuple(min(x, y) if i in N else 0 for i, (x, y) in enumerate(zip(a, b)))
            kept = [(tuple(e - g for e, g in zip(m, common)), c) for m, c in kept]
        else:
            m, c = kept[0]
            m = tuple(0 if i in N else e for i, e in enumerate(m))
            if not any(m):
                return None
            kept = [(m, c)]
        out.append(tuple(sorted(kept, reverse=True)))
    return sorted(set(out))


def _to_poly(R: Ring, eq: Eq) -> Poly:
    return R.from_terms(dict(eq))


def _toral_row(eq: Eq, p: int) -> Tuple[List[int], int]:
    (a, ca), (b, cb) = eq
    # ca*x^a + cb*x^b = 0  <=>  x^(a-b) = -cb/ca
    return [x - y for x, y in zip(a, b)], (-cb * pow(ca, -1, p)) % p


def _row_poly(R: Ring, exps: Sequence[int], c: int) -> Poly:
    plus = tuple(max(e, 0) for e in exps)
    minus = tuple(max(-e, 0) for e in exps)
    return R.from_terms({plus: 1, minus: -c})


def _leading(eq: Eq) -> Tuple[int, int, FrozenSet[int], FrozenSet[int]]:
    """(main variable, main degree, initial's variables, other term's variables)."""
    vs = _eq_vars(eq)
    x = min(vs)
    (a, _), (b, _) = eq
    if b[x] > a[x]:
        a, b = b, a
    init = _support(a) - {x}
    return x, a[x], init, _support(b)


def _split(
    R: Ring, eqs: Sequence[Eq], Z: FrozenSet[int], N: FrozenSet[int]
) -> Iterator[RegularSystem]:
    norm = _normalize(eqs, Z, N)
    if norm is None:
        return
    monos = [eq for eq in norm if len(eq) == 1]
    if monos:
        free = sorted(_support(monos[0][0][0]))
        v = free[-1]
        if len(free) > 1:
            yield from _split(R, norm, Z, N | {v})
        yield from _split(R, norm, Z | {v}, N)
        return

    p = R.p
    toral = [eq for eq in norm if _eq_vars(eq) <= N]
    rest = [eq for eq in norm if not _eq_vars(eq) <= N]
    rows = toral_hnf([_toral_row(eq, p) for eq in toral], p)
    if rows is None:
        return
    pivots = {row.pivot() for row in rows}

    taken = set(pivots)
    for eq in sorted(rest, key=lambda e: (min(_eq_vars(e)), e)):
        x, d, init, tail = _leading(eq)
        need = set(init - N)
        if d >= 2 or x in tail:
            need |= tail - N
        if x in taken or x in N:
            need |= _eq_vars(eq) - N
        if need:
            v = max(need)
            yield from _split(R, norm, Z, N | {v})
            yield from _split(R, norm, Z | {v}, N)
            return
        taken.add(x)

    T = [_row_poly(R, row.exps, row.c) for row in rows]
    T += [_to_poly(R, eq) for eq in rest]
    T += [R.gen(z) for z in sorted(Z)]
    U = [R.gen(v) for v in sorted(N - pivots)]
    yield RegularSystem(TriangularSet.of(T), tuple(U))


def tri_binomial(system: PolySystem, ring: Optional[Ring] = None) -> List[RegularSystem]:
    """Split Z(F, H) into regular systems that keep the binomial structure.

    Raises:
        NotBinomial: an equation has three or more terms, or an inequation is
            not a monomial.
    """
    polys = system.polys()
    if ring is None:
        if not polys:
            return [RegularSystem(TriangularSet())]
        ring = ring_of(polys[0])
    eqs: List[Eq] = []
    for f in system.eqs:
        if len(f) > 2:
            raise NotBinomial(f"equation with {len(f)} terms")
        eqs.append(tuple(terms(f)))
    N: FrozenSet[int] = frozenset()
    for h in system.ineqs:
        if not is_monomial(h):
            raise NotBinomial("inequations must be monomials")
        N |= _support(terms(h)[0][0])
    out = list(_split(ring, eqs, frozenset(), N))
    log.debug("binomial split: %d equation(s) -> %d system(s)", len(eqs), len(out))
    return out

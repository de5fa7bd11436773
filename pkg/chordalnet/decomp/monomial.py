"""Monomial ideals: minimal primes are generated by variables (vertex covers)."""

from __future__ import annotations

from typing import FrozenSet, Iterable, List, Set

from ..ring import Poly, is_constant, is_monomial, variables
from .types import TriangularSet


def _covers(gens: List[FrozenSet[int]]) -> Set[FrozenSet[int]]:
    if not gens:
        return {frozenset()}
    first = min(gens, key=lambda s: (len(s), sorted(s)))
    out: Set[FrozenSet[int]] = set()
    for v in sorted(first):
        rest = [g for g in gens if v not in g]
        out.update(c | {v} for c in _covers(rest))
    return out


def minimal_var_covers(gens: Iterable[Iterable[int]]) -> List[FrozenSet[int]]:
    """Inclusion-minimal variable sets meeting every generator's support, sorted."""
    supports = list({frozenset(g) for g in gens})
    found = _covers(supports)
    minimal = [c for c in found if not any(d < c for d in found)]
    return sorted(minimal, key=lambda c: (len(c), sorted(c)))


def tri_monomial(F: Iterable[Poly]) -> List[TriangularSet]:
    """Minimal primes of a monomial ideal, each as the triangular set of its variables."""
    F = [f for f in F if f]
    if not F:
        return [TriangularSet()]
    for f in F:
        if not is_monomial(f):
            raise ValueError("tri_monomial needs single-term polynomials")
    if any(is_constant(f) for f in F):
        return []
    R = F[0].ring
    return [TriangularSet.of(R.gens[v] for v in c) for c in minimal_var_covers(variables(f) for f in F)]

"""Saturated ideals of regular chains and a sufficient primality test."""

from __future__ import annotations

from typing import Iterable, List, Optional

from sympy.ntheory.residue_ntheory import sqrt_mod

from ..ring import (
    Poly,
    Ring,
    buchberger_lex,
    coeff_in,
    deg_in,
    initial,
    is_constant,
    mdeg,
    modulus,
    mvar,
    ring_of,
    uni_is_irreducible,
    variables,
)
from .types import TriangularSet


def lift(f: Poly, aux: Ring) -> Poly:
    """Map x_i to x_(i+1) in a ring with one extra (largest) variable."""
    return aux.from_terms({(0,) + m: int(c) for m, c in f.items()})


def lower(g: Poly, base: Ring) -> Poly:
    return base.from_terms({m[1:]: int(c) for m, c in g.items()})


def sat_generators(T: Iterable[Poly], budget: Optional[int] = None) -> List[Poly]:
    """Reduced lex basis of <T> : h^inf with h the product of the initials."""
    T = list(T)
    if not T:
        return []
    base = ring_of(T[0])
    h = base.one
    for t in T:
        h *= initial(t)
    if is_constant(h):
        return buchberger_lex(T, budget)
    aux = Ring(base.n + 1, base.p)
    y = aux.gen(0)
    G = buchberger_lex([lift(t, aux) for t in T] + [y * lift(h, aux) - 1], budget)
    return [lower(g, base) for g in G if all(m[0] == 0 for m in g.keys())]


def _content_free(coeffs: List[Poly]) -> bool:
    coeffs = [c for c in coeffs if c]
    if any(is_constant(c) for c in coeffs):
        return True
    if any(len(c) == 1 for c in coeffs):
        # a monomial's divisors are monomials: only common variables can be content
        exps = [min(m[i] for c in coeffs for m in c.keys()) for i in range(len(coeffs[0].ring.gens))]
        return not any(exps)
    g = coeffs[0]
    for c in coeffs[1:]:
        g = g.gcd(c)
        if is_constant(g):
            return True
    return is_constant(g)


def poly_sqrt(f: Poly) -> Optional[Poly]:
    """Square root of f in GF(p)[x] if f is a perfect square, else None."""
    if not f:
        return f
    R = f.ring
    p = modulus(f)
    lm = f.LM
    if any(e % 2 for e in lm):
        return None
    r = sqrt_mod(int(f.LC) % p, p)
    if r is None:
        return None
    s = R.from_dict({tuple(e // 2 for e in lm): R.domain(r)})
    lead = s
    two_lead = lead * 2
    rem = f - s * s
    steps = 0
    bound = (len(f) + 1) ** 2 + 8
    while rem:
        steps += 1
        if steps > bound:
            return None
        m = R.monomial_div(rem.LM, two_lead.LM)
        if m is None or m >= lead.LM:
            return None
        s += R.from_dict({m: rem.LC / two_lead.LC})
        rem = f - s * s
    return s


def is_prime_form(T: TriangularSet) -> Optional[bool]:
    """Decide whether sat(T) is prime by a sufficient structural test.

    All members except the one with the smallest main variable must be linear
    in their main variable; that last member must be irreducible. Returns None
    when the test cannot decide.
    """
    polys = list(T)
    if not polys:
        return True
    last = max(polys, key=mvar)
    if any(mdeg(t) != 1 for t in polys if t is not last):
        return None
    x = mvar(last)
    d = deg_in(last, x)
    coeffs = [coeff_in(last, x, k) for k in range(d + 1)]
    if d == 1:
        return _content_free(coeffs)
    if not _content_free(coeffs):
        return False
    if d == 2:
        c, b, a = coeffs
        return poly_sqrt(b * b - 4 * a * c) is None
    if variables(last) == {x}:
        return uni_is_irreducible(last)
    return None

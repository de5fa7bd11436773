from __future__ import annotations

from typing import List, Optional

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_degree,
    gf_edf_zassenhaus,
    gf_gcd,
    gf_irreducible_p,
    gf_monic,
    gf_pow_mod,
    gf_sqf_part,
    gf_strip,
    gf_sub,
)

from .base import Poly, deg_in, modulus, variables, x_power


def univariate_var(f: Poly) -> Optional[int]:
    vs = variables(f)
    if len(vs) > 1:
        raise ValueError("polynomial is not univariate")
    return next(iter(vs)) if vs else None


def to_dense(f: Poly, v: int) -> List[int]:
    """Coefficient list in x_v, highest degree first, entries in [0, p)."""
    p = modulus(f)
    d = deg_in(f, v)
    out = [0] * (d + 1)
    for m, c in f.items():
        out[d - m[v]] = int(c) % p
    return gf_strip(out)


def from_dense(coeffs: List[int], v: int, like: Poly) -> Poly:
    d = len(coeffs) - 1
    f = like.ring.zero
    for i, c in enumerate(coeffs):
        if c:
            f += like.ring.ground_new(c) * x_power(like, v, d - i)
    return f


def uni_squarefree_part(f: Poly) -> Poly:
    """Monic generator of the radical of <f> for univariate f.

    ``gf_sqf_part`` takes p-th roots where the derivative vanishes, so any
    degree is accepted, including field equations ``x^p - x``.
    """
    v = univariate_var(f)
    if v is None:
        return f.monic() if f else f
    return from_dense(gf_sqf_part(to_dense(f, v), modulus(f), ZZ), v, f)


def uni_rational_roots(f: Poly) -> List[int]:
    """All roots of univariate f in GF(p), ascending."""
    v = univariate_var(f)
    if v is None or not f:
        return []
    p = modulus(f)
    _, F = gf_monic(to_dense(f, v), p, ZZ)
    xp = gf_pow_mod([1, 0], p, F, p, ZZ)
    g = gf_gcd(F, gf_sub(xp, [1, 0], p, ZZ), p, ZZ)
    if gf_degree(g) < 1:
        return []
    roots = [(-lin[1]) % p for lin in gf_edf_zassenhaus(g, 1, p, ZZ)]
    return sorted(roots)


def uni_is_irreducible(f: Poly) -> bool:
    v = univariate_var(f)
    if v is None:
        return False
    return bool(gf_irreducible_p(to_dense(f, v), modulus(f), ZZ))

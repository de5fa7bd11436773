"""Zero-dimensional triangular decomposition from a lex Gröbner basis.

Variables are processed from the smallest (largest index) upward while a
*tower* ``{rank: monic polynomial}`` is built. Arithmetic modulo the tower is
arithmetic in a product of fields; whenever an initial or a gcd meets a zero
divisor the tower is split into the part where it vanishes and the part where
it is invertible, and both parts are carried on. The branches stay disjoint.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import InseparableDegree, NotZeroDimensional
from ..ring import Poly, buchberger_lex, coeff_in, deg_in, is_constant, modulus, mvar, normal_form, poly_key, variables, x_power
from .types import TriangularSet

log = logging.getLogger(__name__)

Tower = Dict[int, Poly]

FROBENIUS_ORBIT_LIMIT = 4096


def _reduce(f: Poly, T: Tower) -> Poly:
    if not T or not f:
        return f
    return normal_form(f, [T[k] for k in sorted(T)])


def _rebuild(lower: Tower, upper: Dict[int, Poly]) -> Tower:
    """Stack ``upper`` on ``lower``, reducing each new member by everything below it."""
    out = dict(lower)
    for k in sorted(upper, reverse=True):
        out[k] = _reduce(upper[k], out)
    return out


def _divmod(a: Poly, b: Poly, v: int, T: Tower) -> Tuple[Poly, Poly]:
    """Division in x_v by b, monic in x_v, over the tower's quotient ring."""
    q = a.ring.zero
    r = a
    db = deg_in(b, v)
    while r and deg_in(r, v) >= db:
        dr = deg_in(r, v)
        term = coeff_in(r, v, dr) * x_power(r, v, dr - db)
        q += term
        r = _reduce(r - term * b, T)
    return q, r


def _invert(c: Poly, T: Tower) -> List[Tuple[Tower, Optional[Poly]]]:
    """Split T so that c is zero or a unit on each part.

    Returns ``(tower, inverse)`` pairs; ``inverse`` is None where c vanishes.
    The vanishing part always comes first.
    """
    c = _reduce(c, T)
    if not c:
        return [(T, None)]
    if is_constant(c):
        return [(T, c.ring.one.quo_ground(c.LC))]
    m = mvar(c)
    t = T[m]
    low = {k: g for k, g in T.items() if k > m}
    up = {k: g for k, g in T.items() if k < m}
    out: List[Tuple[Tower, Optional[Poly]]] = []
    for L, g, s in _xgcd(t, c, m, low):
        tl = _reduce(t, L)
        if deg_in(g, m) <= 0:
            full = _rebuild(L, {m: tl, **up})
            out.append((full, _reduce(s, full)))
            continue
        out.append((_rebuild(L, {m: g, **up}), None))
        for L2, rest in _coprime_part(tl, g, m, L):
            if deg_in(rest, m) >= 1:
                out.extend(_invert(c, _rebuild(L2, {m: rest, **up})))
    return out


def _coprime_part(a: Poly, g: Poly, v: int, T: Tower) -> List[Tuple[Tower, Poly]]:
    """``a / gcd(a, g^oo)`` per tower part: the factor of a sharing no root with g."""
    if deg_in(a, v) <= 0:
        return [(T, a)]
    out: List[Tuple[Tower, Poly]] = []
    for T1, h, _ in _xgcd(a, g, v, T):
        a1 = _reduce(a, T1)
        if deg_in(h, v) <= 0:
            out.append((T1, a1))
        else:
            out.extend(_coprime_part(_divmod(a1, h, v, T1)[0], _reduce(g, T1), v, T1))
    return out


def _monic(f: Poly, v: int, T: Tower) -> List[Tuple[Tower, Poly, Poly]]:
    """Make f monic in x_v on each part of a splitting of T.

    Yields ``(tower, g, scale)`` with ``g = scale * f`` modulo the tower; g is
    monic in x_v, equal to 1 when f is a unit there, or zero when f vanishes.
    """
    f = _reduce(f, T)
    if not f:
        return [(T, f, f.ring.zero)]
    d = deg_in(f, v)
    lc = coeff_in(f, v, d)
    out: List[Tuple[Tower, Poly, Poly]] = []
    for T1, inv in _invert(lc, T):
        if inv is None:
            out.extend(_monic(f - lc * x_power(f, v, d), v, T1))
        else:
            out.append((T1, _reduce(inv * f, T1), inv))
    return out


def _xgcd(a: Poly, b: Poly, v: int, T: Tower) -> List[Tuple[Tower, Poly, Poly]]:
    """Monic gcd g of a (monic in x_v) and b with ``s * b = g mod <a, T>``, per tower part."""
    R = a.ring
    return _euclid(T, a, R.zero, b, R.one, v)


def _euclid(T: Tower, r0: Poly, s0: Poly, r1: Poly, s1: Poly, v: int) -> List[Tuple[Tower, Poly, Poly]]:
    out: List[Tuple[Tower, Poly, Poly]] = []
    for T1, g, scale in _monic(r1, v, T):
        a = _reduce(r0, T1)
        sa = _reduce(s0, T1)
        if not g:
            out.append((T1, a, sa))
            continue
        sg = _reduce(scale * s1, T1)
        q, r = _divmod(a, g, v, T1)
        out.extend(_euclid(T1, g, sg, r, _reduce(sa - q * sg, T1), v))
    return out


def _level_gcd(polys: Sequence[Poly], v: int, T: Tower) -> List[Tuple[Tower, Poly]]:
    states: List[Tuple[Tower, Optional[Poly]]] = [(T, None)]
    for f in polys:
        nxt: List[Tuple[Tower, Optional[Poly]]] = []
        for T1, acc in states:
            for T2, fm, _ in _monic(f, v, T1):
                acc2 = _reduce(acc, T2) if acc is not None else None
                if not fm:
                    nxt.append((T2, acc2))
                elif acc2 is None:
                    nxt.append((T2, fm))
                else:
                    nxt.extend((T3, g) for T3, g, _ in _xgcd(acc2, fm, v, T2))
        states = nxt
    # a unit gcd means this part of the tower carries no points
    return [(T1, g) for T1, g in states if g is not None and deg_in(g, v) >= 1]


def _pow_mod(a: Poly, e: int, T: Tower) -> Poly:
    out = a.ring.one
    while e:
        if e & 1:
            out = _reduce(out * a, T)
        a = _reduce(a * a, T)
        e >>= 1
    return out


def _frobenius_inverse(a: Poly, T: Tower) -> Poly:
    """The b with ``b^p = a`` modulo a radical tower.

    Frobenius permutes the product of finite fields, so iterating it from a
    returns to a; the element reached just before is the root.
    """
    if is_constant(a):
        return a
    p = modulus(a)
    b = a
    for _ in range(FROBENIUS_ORBIT_LIMIT):
        nxt = _pow_mod(b, p, T)
        if nxt == a:
            return b
        b = nxt
    raise InseparableDegree(f"no p-th root of {a} found within {FROBENIUS_ORBIT_LIMIT} Frobenius steps")


def _pth_root(g: Poly, v: int, T: Tower) -> Poly:
    """For g with vanishing derivative in x_v, i.e. g = sum a_j x_v^(p*j), return sum a_j^(1/p) x_v^j."""
    p = modulus(g)
    d = deg_in(g, v)
    out = g.ring.zero
    for j in range(0, d + 1, p):
        a = coeff_in(g, v, j)
        if a:
            out += _frobenius_inverse(a, T) * x_power(g, v, j // p)
    return out


def _lcm(a: Poly, b: Poly, v: int, T: Tower) -> List[Tuple[Tower, Poly]]:
    out: List[Tuple[Tower, Poly]] = []
    for T1, c, _ in _xgcd(a, b, v, T):
        a1, b1 = _reduce(a, T1), _reduce(b, T1)
        if deg_in(c, v) >= 1:
            b1 = _divmod(b1, c, v, T1)[0]
        out.append((T1, _reduce(a1 * b1, T1)))
    return out


def _squarefree(g: Poly, v: int, T: Tower) -> List[Tuple[Tower, Poly]]:
    """Radical of <g> (g monic in x_v) over each part of a splitting of T.

    In characteristic p, ``g / gcd(g, g')`` misses the factors whose
    multiplicity is divisible by p; they all divide ``gcd(g, g')``, whose
    radical is taken recursively and merged back in by an lcm.
    """
    g = _reduce(g, T)
    if deg_in(g, v) <= 1:
        return [(T, g)]
    dg = _reduce(g.diff(g.ring.gens[v]), T)
    if not dg:
        return _squarefree(_pth_root(g, v, T), v, T)
    out: List[Tuple[Tower, Poly]] = []
    for T1, h, _ in _xgcd(g, dg, v, T):
        g1 = _reduce(g, T1)
        dh = deg_in(h, v)
        if dh <= 0:
            out.append((T1, g1))
        elif dh == deg_in(g1, v):
            # the derivative vanishes on this part of the tower
            out.extend(_squarefree(_pth_root(g1, v, T1), v, T1))
        else:
            sep = _divmod(g1, h, v, T1)[0]
            for T2, r in _squarefree(h, v, T1):
                out.extend(_lcm(_reduce(sep, T2), r, v, T2))
    return out


def _check_zero_dim(G: Sequence[Poly], clique: Iterable[int]) -> None:
    for v in clique:
        if not any(g.LM[v] > 0 and sum(g.LM) == g.LM[v] for g in G):
            raise NotZeroDimensional(f"no basis element with leading monomial a power of x{v}")


def tri_zero_dim(
    F: Iterable[Poly],
    clique: Optional[Iterable[int]] = None,
    squarefree: bool = False,
    budget: Optional[int] = None,
) -> List[TriangularSet]:
    """Disjoint triangular decomposition of the zero-dimensional ideal <F>.

    Args:
        F: generators involving only the clique variables.
        clique: variables of the ambient ring; defaults to those occurring in F.
        squarefree: make every output generate a radical ideal.
        budget: S-pair budget for the Gröbner basis.

    Returns:
        Triangular sets with monic members covering every clique variable;
        empty iff <F> is the unit ideal.

    Raises:
        NotZeroDimensional: if some clique variable has no univariate head.
        InseparableDegree: squarefree mode needed a p-th root it could not find.
    """
    F = [f for f in F if f]
    vs = set().union(*(variables(f) for f in F)) if F else set()
    clique = sorted(set(clique) if clique is not None else vs)
    if not vs <= set(clique):
        raise ValueError(f"polynomials use variables {sorted(vs - set(clique))} outside the clique")
    if not F:
        if clique:
            raise NotZeroDimensional("no equations on a nonempty clique")
        return [TriangularSet()]

    G = buchberger_lex(F, budget)
    if len(G) == 1 and G[0].is_ground:
        return []
    _check_zero_dim(G, clique)

    towers: List[Tower] = [{}]
    for v in sorted(clique, reverse=True):
        seen = {}
        for f in list(G) + F:
            if not is_constant(f) and mvar(f) == v:
                seen.setdefault(poly_key(f), f)
        level = list(seen.values())
        nxt: List[Tower] = []
        for T in towers:
            for T1, g in _level_gcd(level, v, T):
                parts = _squarefree(g, v, T1) if squarefree else [(T1, g)]
                for T2, h in parts:
                    nxt.append({**T2, v: _reduce(h, T2)})
        towers = nxt
        log.debug("x%d: %d branch(es)", v, len(towers))
    return [TriangularSet.of(T.values()) for T in towers]

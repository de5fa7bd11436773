"""Sparse polynomials over GF(p) in lex order x0 > x1 > ... > x(n-1).

Polynomials are elements of a :mod:`sympy.polys.rings` ``PolyRing`` over
``GF(p)``; this module adds the main-variable vocabulary (mvar / initial /
mdeg), pseudo-division and the evaluation map used by the queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from sympy import isprime
from sympy.polys.domains import GF
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from ..errors import ConstantPolynomial, NonPrimeModulus
from ..utils.env import DEFAULT_PRIME

Poly = PolyElement
Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class Ring:
    """Polynomial ring GF(p)[x0, ..., x(n-1)] with the fixed lex order."""

    n: int
    p: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"ring needs at least one variable, got n={self.n}")
        if self.p < 3 or not isprime(self.p):
            raise NonPrimeModulus(f"modulus must be an odd prime, got p={self.p}")

    @cached_property
    def poly_ring(self) -> PolyRing:
        return PolyRing([f"x{i}" for i in range(self.n)], GF(self.p), lex)

    @property
    def zero(self) -> Poly:
        return self.poly_ring.zero

    @property
    def one(self) -> Poly:
        return self.poly_ring.one

    def gen(self, i: int) -> Poly:
        return self.poly_ring.gens[i]

    def const(self, c: int) -> Poly:
        return self.poly_ring.ground_new(c % self.p)

    def from_terms(self, terms: Dict[Monomial, int]) -> Poly:
        return self.poly_ring.from_dict({m: c % self.p for m, c in terms.items() if c % self.p})

    def monomial(self, exps: Dict[int, int], coeff: int = 1) -> Poly:
        m = [0] * self.n
        for i, e in exps.items():
            m[i] += e
        return self.from_terms({tuple(m): coeff})


def ring_of(f: Poly) -> Ring:
    return Ring(len(f.ring.gens), int(f.ring.domain.mod))


def modulus(f: Poly) -> int:
    return int(f.ring.domain.mod)


def terms(f: Poly) -> List[Tuple[Monomial, int]]:
    """Terms as (exponents, coefficient in [0, p)) in decreasing lex order."""
    p = modulus(f)
    return [(m, int(c) % p) for m, c in sorted(f.items(), reverse=True)]


def variables(f: Poly) -> Set[int]:
    out: Set[int] = set()
    for m in f.keys():
        out.update(i for i, e in enumerate(m) if e)
    return out


def is_constant(f: Poly) -> bool:
    return not variables(f)


def is_monomial(f: Poly) -> bool:
    return len(f) == 1


def deg_in(f: Poly, l: int) -> int:
    """Degree of f in x_l; -1 for the zero polynomial."""
    if not f:
        return -1
    return max(m[l] for m in f.keys())


def coeff_in(f: Poly, l: int, d: int) -> Poly:
    """Coefficient of x_l^d, viewing f as univariate in x_l."""
    out = {}
    for m, c in f.items():
        if m[l] == d:
            mm = list(m)
            mm[l] = 0
            out[tuple(mm)] = c
    return f.ring.from_dict(out) if out else f.ring.zero


def x_power(f: Poly, l: int, d: int) -> Poly:
    m = [0] * len(f.ring.gens)
    m[l] = d
    return f.ring.from_dict({tuple(m): f.ring.domain.one})


def mvar(f: Poly) -> int:
    vs = variables(f)
    if not vs:
        raise ConstantPolynomial(f"constant polynomial {format_poly(f)} has no main variable")
    return min(vs)


def mvar_init_mdeg(f: Poly) -> Tuple[int, Poly, int]:
    """Return (rank, initial, mdeg) of a non-constant polynomial.

    Raises:
        ConstantPolynomial: if f has no variables.
    """
    r = mvar(f)
    d = deg_in(f, r)
    return r, coeff_in(f, r, d), d


def initial(f: Poly) -> Poly:
    return mvar_init_mdeg(f)[1]


def mdeg(f: Poly) -> int:
    return mvar_init_mdeg(f)[2]


def monic(f: Poly) -> Poly:
    """Scale so the lex-leading coefficient is 1 (zero stays zero)."""
    return f.monic() if f else f


def normal_form(f: Poly, G: Sequence[Poly]) -> Poly:
    """Multivariate division remainder of f by G in lex order."""
    G = [g for g in G if g]
    if not G or not f:
        return f
    return f.rem(list(G))


def prem(f: Poly, g: Poly) -> Poly:
    """Pseudo-remainder init(g)^(d-e+1) * f mod g in g's main variable (exact exponent)."""
    x, lc, e = mvar_init_mdeg(g)
    d = deg_in(f, x)
    if d < e:
        return f
    k = d - e + 1
    r = f
    while r and deg_in(r, x) >= e:
        dr = deg_in(r, x)
        r = lc * r - coeff_in(r, x, dr) * g * x_power(g, x, dr - e)
        k -= 1
    return lc ** k * r if k else r


def prem_chain(f: Poly, T: Iterable[Poly]) -> Poly:
    """Iterated pseudo-remainder by the members of T, largest main variable first."""
    r = f
    for t in sorted(T, key=mvar):
        if not r:
            break
        r = prem(r, t)
    return r


def subst_eval(f: Poly, l: int, v: int) -> Poly:
    """Substitute x_l := v; the result no longer involves x_l."""
    p = modulus(f)
    v %= p
    out: Dict[Monomial, int] = {}
    for m, c in f.items():
        e = m[l]
        mm = m
        if e:
            mm = m[:l] + (0,) + m[l + 1:]
        out[mm] = (out.get(mm, 0) + (int(c) % p) * pow(v, e, p)) % p
    return f.ring.from_dict({m: c for m, c in out.items() if c})


def evaluate(f: Poly, point: Sequence[int]) -> int:
    p = modulus(f)
    total = 0
    for m, c in f.items():
        t = int(c) % p
        for i, e in enumerate(m):
            if e:
                t = t * pow(point[i], e, p) % p
        total += t
    return total % p


def format_poly(f: Poly) -> str:
    """Canonical text form, e.g. ``3*x0^2*x3 - x1*x2 + 5``."""
    if not f:
        return "0"
    p = modulus(f)
    out: List[str] = []
    for m, c in terms(f):
        neg = c > p // 2
        k = p - c if neg else c
        mono = "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(m) if e)
        if not mono:
            body = str(k)
        elif k == 1:
            body = mono
        else:
            body = f"{k}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


def poly_key(f: Poly) -> Tuple:
    """Total sort key used for canonical node contents."""
    return tuple(terms(f))

from __future__ import annotations

import itertools
from functools import lru_cache
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Set, Tuple

import pytest

from chordalnet.chordal import complete_with_order, relabel_system, support_graph
from chordalnet.network import ChordalNetwork, TriangulateOptions, chordal_triangularize
from chordalnet.ring import Poly, Ring, evaluate, parse_poly
from chordalnet.store import Problem, parse_problem

DATA = Path(__file__).resolve().parents[1] / "data"


def load_problem(name: str, prime: Optional[int] = None) -> Problem:
    return parse_problem(DATA / name, prime=prime)


@lru_cache(maxsize=None)
def _build(name: str, mode: str, squarefree: bool, prime: Optional[int], strip: bool) -> ChordalNetwork:
    problem = load_problem(name, prime)
    order = list(problem.order) if problem.order else list(range(problem.ring.n))
    cs = complete_with_order(support_graph(problem.polys, problem.ring.n), order)
    F = relabel_system(problem.polys, order, problem.ring)
    opts = TriangulateOptions(mode=mode, squarefree=squarefree, strip=strip)
    return chordal_triangularize(F, cs, opts, ring=problem.ring)


def build(
    name: str, mode: str = "auto", squarefree: bool = False, prime: Optional[int] = None, strip: bool = False
) -> ChordalNetwork:
    """Triangularize a data/ problem; networks are cached, so callers copy before mutating."""
    return _build(name, mode, squarefree, prime, strip)


def brute_force(F: Iterable[Poly], ring: Ring, nonzero: Iterable[Poly] = ()) -> Set[Tuple[int, ...]]:
    """All points of GF(p)^n where F vanishes and no member of ``nonzero`` does."""
    F = list(F)
    H = list(nonzero)
    return {
        pt
        for pt in itertools.product(range(ring.p), repeat=ring.n)
        if all(evaluate(f, pt) == 0 for f in F) and all(evaluate(h, pt) for h in H)
    }


def chain_points(net: ChordalNetwork) -> Set[Tuple[int, ...]]:
    """Union over the chains of their GF(p) points, in network coordinates."""
    pts: Set[Tuple[int, ...]] = set()
    for chain in net.chains():
        eqs, ineqs = net.chain_polys(chain)
        pts |= brute_force(eqs, net.ring, ineqs)
    return pts


def to_original(point: Sequence[int], order: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(order)
    for k, v in enumerate(order):
        out[v] = point[k]
    return tuple(out)


def polys(ring: Ring, *texts: str) -> List[Poly]:
    return [parse_poly(t, ring) for t in texts]


@pytest.fixture
def R4() -> Ring:
    return Ring(4, 5)


@pytest.fixture
def R8() -> Ring:
    return Ring(8, 65521)

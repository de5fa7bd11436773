import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordalnet.decomp import (
    TriangularSet,
    is_prime_form,
    minimal_var_covers,
    poly_sqrt,
    sat_generators,
    toral_hnf,
    tri_binomial,
    tri_monomial,
    tri_zero_dim,
)
from chordalnet.errors import NotBinomial, NotZeroDimensional
from chordalnet.ring import PolySystem, Ring, parse_poly, variables

from conftest import brute_force, load_problem, polys

R2 = Ring(2, 5)


def _points(systems, ring):
    pts = set()
    for T in systems:
        pts |= brute_force(T, ring)
    return pts


# -- zero-dimensional ------------------------------------------------------


def test_idempotent_node_splits_soundly(R4):
    F = polys(R4, "x2^2 - x2", "x2*x3^2 - x3")
    out = tri_zero_dim(F, clique=[2, 3])
    assert out
    for T in out:
        assert set(T.ranks()) == {2, 3}
    assert _points(out, R4) == brute_force(F, R4)


def test_unit_ideal_gives_no_sets():
    assert tri_zero_dim(polys(R2, "x0", "x0 - 1")) == []


def test_empty_input_on_empty_clique():
    assert tri_zero_dim([], clique=[]) == [TriangularSet()]


def test_positive_dimension_is_rejected():
    with pytest.raises(NotZeroDimensional):
        tri_zero_dim(polys(R2, "x0*x1"))


def test_squarefree_mode_drops_multiplicity():
    (T,) = tri_zero_dim(polys(R2, "x0^2 - 2*x0 + 1", "x1^2"), squarefree=True)
    assert str(T) == "(x0 - 1, x1)"


roots = st.lists(st.integers(0, 4), min_size=1, max_size=3)
small_terms = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(1, 4), max_size=3
)


@settings(max_examples=25, deadline=None)
@given(roots, roots, small_terms)
def test_squarefree_decomposition_counts_points(r0, r1, extra):
    x0, x1 = R2.gen(0), R2.gen(1)
    h0, h1 = R2.one, R2.one
    for r in r0:
        h0 *= x0 - r
    for r in r1:
        h1 *= x1 - r
    F = [h0, h1, R2.from_terms(extra)]
    out = tri_zero_dim(F, clique=[0, 1], squarefree=True)
    expected = brute_force(F, R2)
    assert _points(out, R2) == expected
    # disjoint, radical and split: each set has exactly degree-many points
    assert sum(T.degree() for T in out) == len(expected)


def test_squarefree_mode_takes_pth_roots():
    R = Ring(2, 3)
    F = polys(R, "x1^3 - x1", "x0^3 - x1")
    (T,) = tri_zero_dim(F, squarefree=True)
    assert str(T) == "(x0 - x1, x1^3 - x1)"
    assert T.degree() == len(brute_force(F, R)) == 3


def test_squarefree_mode_with_field_equations():
    F = polys(R2, "x0^5 - x0", "x1^5 - x1", "x0*x1 - 1", "x0^2 + x1^2 - 2")
    out = tri_zero_dim(F, squarefree=True)
    expected = brute_force(F, R2)
    assert len(expected) == 2
    assert _points(out, R2) == expected
    assert sum(T.degree() for T in out) == len(expected)


def test_zero_divisor_split_has_no_overlap(R4):
    out = tri_zero_dim(polys(R4, "x3^2", "x2*x3", "x2^2"), clique=[2, 3])
    assert [str(T) for T in out] == ["(x2^2, x3)"]


@pytest.mark.slow
@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from([3, 5]),
    st.integers(1, 3),
    st.lists(st.dictionaries(st.tuples(*[st.integers(0, 2)] * 3), st.integers(1, 4), max_size=3), max_size=3),
)
def test_field_equation_systems_count_like_brute_force(p, n, extra):
    R = Ring(n, p)
    x = R.gen
    F = [x(i) ** p - x(i) for i in range(n)]
    F += [R.from_terms({k[:n]: c for k, c in terms.items()}) for terms in extra]
    out = tri_zero_dim(F, clique=range(n), squarefree=True)
    expected = brute_force(F, R)
    assert _points(out, R) == expected
    assert sum(T.degree() for T in out) == len(expected)


# -- monomial --------------------------------------------------------------


def _brute_covers(supports, n):
    covers = [
        frozenset(c)
        for k in range(n + 1)
        for c in itertools.combinations(range(n), k)
        if all(set(c) & s for s in supports)
    ]
    return {c for c in covers if not any(d < c for d in covers)}


@pytest.mark.parametrize("name,expected", [("monomial6.sys", None), ("tree_edges.sys", 17)])
def test_minimal_covers_match_brute_force(name, expected):
    problem = load_problem(name)
    supports = [variables(f) for f in problem.polys]
    covers = minimal_var_covers(supports)
    assert set(covers) == _brute_covers(supports, problem.ring.n)
    if expected is not None:
        assert len(covers) == expected


def test_tri_monomial_returns_variable_sets():
    R = Ring(3, 5)
    out = tri_monomial(polys(R, "x0*x1", "x1*x2"))
    assert [str(T) for T in out] == ["(x1)", "(x0, x2)"]
    assert tri_monomial(polys(R, "3")) == []


# -- Hermite normal form of toral systems ----------------------------------


def _torus_points(rows, p, n):
    def holds(pt, exps, c):
        v = 1
        for x, e in zip(pt, exps):
            v = v * pow(x, e, p) % p
        return v == c % p

    return {
        pt for pt in itertools.product(range(1, p), repeat=n) if all(holds(pt, a, c) for a, c in rows)
    }


toral_rows = st.lists(
    st.tuples(st.lists(st.integers(-2, 2), min_size=2, max_size=2), st.integers(1, 6)),
    min_size=1,
    max_size=3,
)


@settings(max_examples=50, deadline=None)
@given(toral_rows)
def test_toral_hnf_keeps_the_torus_points(rows):
    p = 7
    H = toral_hnf(rows, p)
    before = _torus_points(rows, p, 2)
    if H is None:
        assert not before
        return
    for i, row in enumerate(H):
        j = row.pivot()
        assert row.exps[j] > 0
        for above in H[:i]:
            assert 0 <= above.exps[j] < row.exps[j]
    assert _torus_points([(r.exps, r.c) for r in H], p, 2) == before


def test_toral_hnf_detects_inconsistency():
    assert toral_hnf([([1, 0], 2), ([1, 0], 3)], 7) is None


# -- binomial --------------------------------------------------------------


def test_single_binomial_keeps_initial_nonzero():
    (S,) = tri_binomial(PolySystem.of(polys(R2, "x0*x1 - 1")))
    assert str(S) == "(x0*x1 - 1) / x1"


def test_minor_splits_cover_the_variety(R4):
    F = polys(R4, "x0*x3 - x1*x2")
    out = tri_binomial(PolySystem.of(F))
    pts = set()
    for S in out:
        pts |= brute_force(S.T, R4, S.U)
    assert pts == brute_force(F, R4)


def test_non_binomial_is_rejected():
    with pytest.raises(NotBinomial):
        tri_binomial(PolySystem.of(polys(R2, "x0 + x1 + 1")))


R3 = Ring(3, 5)
exps3 = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
binomials = st.tuples(exps3, exps3, st.integers(1, 4)).map(
    lambda t: R3.from_terms({t[0]: 1}) - R3.from_terms({t[1]: t[2]})
)


@settings(max_examples=25, deadline=None)
@given(st.lists(binomials, min_size=1, max_size=3))
def test_binomial_decomposition_is_sound(F):
    F = [f for f in F if f]
    if not F:
        return
    out = tri_binomial(PolySystem.of(F))
    pts = set()
    for S in out:
        pts |= brute_force(S.T, R3, S.U)
    assert pts == brute_force(F, R3)


# -- saturation and primality ----------------------------------------------


def test_saturation_removes_the_initial():
    assert sat_generators(polys(R2, "x0*x1 - x1")) == polys(R2, "x0 - 1")


def test_poly_sqrt():
    f = parse_poly("x0^2 + 4*x0*x1 + 4*x1^2", R2)
    s = poly_sqrt(f)
    assert s is not None and s * s == f
    assert poly_sqrt(parse_poly("x0^2 + x1", R2)) is None


def test_prime_form_verdicts():
    R7 = Ring(2, 7)
    assert is_prime_form(TriangularSet.of(polys(R7, "x1^2 + 1"))) is True
    assert is_prime_form(TriangularSet.of(polys(R7, "x1^2 - 1"))) is False
    assert is_prime_form(TriangularSet.of(polys(R7, "x0^2 - x1", "x1^2 - 2"))) is None
    R8 = Ring(8, 65521)
    top = TriangularSet.of(polys(R8, "x0*x3 - x1*x2", "x2*x5 - x3*x4", "x4*x7 - x5*x6"))
    assert is_prime_form(top) is True

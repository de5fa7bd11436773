import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordalnet.chordal import complete_with_order, support_graph
from chordalnet.errors import ChordalNetError, NotZeroDimensional, UnsupportedPolynomial
from chordalnet.network import (
    ChordalNetwork,
    TriangulateOptions,
    chordal_triangularize,
    compress,
    eliminate_node,
    induced_network,
    merge_in,
    merge_out,
    sniff_mode,
    strip_inequations,
    triangulate_node,
)
from chordalnet.ring import PolySystem, Ring, format_poly, mvar, parse_poly, poly_key

from conftest import brute_force, build, chain_points, load_problem, polys


def _small_network():
    """Path tree 0 -> 1 -> 2 over GF(5)."""
    cs = complete_with_order(nx.path_graph(3))
    return ChordalNetwork(cs, Ring(3, 5))


def test_induced_network_holds_clique_restrictions():
    problem = load_problem("star4.sys")
    cs = complete_with_order(support_graph(problem.polys, 4))
    net = induced_network(problem.polys, cs, ring=problem.ring)
    contents = {v.rank: v.content for v in net.nodes.values()}
    assert set(contents[2].eqs) == set(polys(problem.ring, "x2^2 - x2", "x2*x3^2 - x3"))
    assert contents[3].label() == "0"
    assert set(contents[0].eqs) == set(polys(problem.ring, "x0^3 - x0", "x0*x2 - x2", "x2^2 - x2"))
    assert net.chain_count() == 1


def test_induced_network_rejects_polynomial_outside_clique():
    cs = complete_with_order(nx.path_graph(3))
    R = Ring(3, 5)
    with pytest.raises(UnsupportedPolynomial):
        induced_network(polys(R, "x0*x2 - 1"), cs, ring=R)


def test_example_network_has_three_triangular_chains():
    net = build("star4.sys", mode="zerodim")
    assert net.chain_count() == 3
    for chain in net.chains():
        eqs, ineqs = net.chain_polys(chain)
        assert not ineqs
        assert sorted(mvar(f) for f in eqs) == [0, 1, 2, 3]
    problem = load_problem("star4.sys")
    assert chain_points(net) == brute_force(problem.polys, problem.ring)


def test_cycle_coloring_has_fibonacci_many_chains():
    net = build("coloring9.sys", squarefree=True)
    assert net.chain_count() == 21
    assert sum(1 for _ in net.chains()) == 21


def test_monomial_and_binomial_chain_counts():
    assert build("monomial6.sys").chain_count() == 9
    minors = build("minors2x4.sys", mode="binomial")
    assert minors.mode == "binomial"
    assert minors.chain_count() == 8


def test_binomial_network_is_sound_on_small_field():
    problem = load_problem("minors2x4.sys", prime=3)
    net = build("minors2x4.sys", mode="binomial", prime=3)
    pts = chain_points(net)
    assert pts == brute_force(problem.polys, problem.ring)


def test_backend_failure_reports_rank():
    R = Ring(2, 5)
    F = polys(R, "x0*x1")
    cs = complete_with_order(support_graph(F, 2))
    with pytest.raises(ChordalNetError) as exc:
        chordal_triangularize(F, cs, TriangulateOptions(mode="zerodim"), ring=R)
    assert exc.value.rank == 0


def test_sniff_mode():
    R = Ring(2, 5)
    assert sniff_mode(polys(R, "x0*x1", "x1^2")) == "monomial"
    assert sniff_mode(polys(R, "x0*x1 - 1")) == "binomial"
    assert sniff_mode(polys(R, "x0 + x1 + 1")) == "zerodim"


def test_arcs_follow_the_elimination_tree():
    net = _small_network()
    a = net.add_node(0, PolySystem.of())
    c = net.add_node(2, PolySystem.of())
    with pytest.raises(ValueError):
        net.add_arc(a.id, c.id)


def test_merges_and_pruning():
    net = _small_network()
    R = net.ring
    top = net.add_node(2, PolySystem.of([parse_poly("x2", R)]))
    m1 = net.add_node(1, PolySystem.of([parse_poly("x1 - 1", R)]))
    m2 = net.add_node(1, PolySystem.of([parse_poly("x1 - 1", R)]))
    leaf = net.add_node(0, PolySystem.of([parse_poly("x0", R)]))
    for m in (m1, m2):
        net.add_arc(m.id, top.id)
    net.add_arc(leaf.id, m1.id)
    net.add_arc(leaf.id, m2.id)
    assert net.chain_count() == 2
    assert merge_out(net, 1) == 1
    assert net.chain_count() == 1
    dangling = net.add_node(0, PolySystem.of([parse_poly("x0 - 2", R)]))
    assert net.prune() == 1
    assert dangling.id not in net.nodes
    assert merge_in(net, 1) == 0


def test_copy_is_independent():
    net = build("star4.sys", mode="zerodim")
    twin = net.copy()
    some = next(iter(twin.nodes))
    twin.remove_node(some)
    assert some in net.nodes


def test_strip_inequations_is_idempotent():
    net = build("minors2x4.sys", mode="binomial")
    assert any(v.content.ineqs for v in net.nodes.values())
    once = strip_inequations(net)
    twice = strip_inequations(once)
    assert not any(v.content.ineqs for v in once.nodes.values())
    assert [v.content for v in once.nodes.values()] == [v.content for v in twice.nodes.values()]
    assert any(v.content.ineqs for v in net.nodes.values())


def _minors(cols: int, strip: bool) -> ChordalNetwork:
    R = Ring(2 * cols, 65521)
    x = R.gen
    F = [x(2 * i) * x(2 * i + 3) - x(2 * i + 1) * x(2 * i + 2) for i in range(cols - 1)]
    cs = complete_with_order(support_graph(F, R.n))
    return chordal_triangularize(F, cs, TriangulateOptions(mode="binomial", strip=strip), ring=R)


def _chain_equations(net: ChordalNetwork):
    return {frozenset(poly_key(f) for f in net.chain_polys(chain)[0]) for chain in net.chains()}


def test_strip_merges_nodes_that_became_equal():
    net = build("minors2x4.sys", mode="binomial")
    stripped = build("minors2x4.sys", mode="binomial", strip=True)
    assert stripped.node_count() < net.node_count()
    assert _chain_equations(stripped) == _chain_equations(net)
    assert compress(stripped.copy()) == 0


@pytest.mark.parametrize("cols", [6, pytest.param(10, marks=pytest.mark.slow)])
def test_stripped_minors_width_does_not_grow(cols):
    full = _minors(cols, strip=False)
    net = _minors(cols, strip=True)
    # columns past the third carry the same six nodes per rank
    assert net.width() <= 6 < full.width()
    assert net.node_count() <= 12 * cols


def test_positive_dimensional_content_is_rejected():
    R = Ring(2, 5)
    F = polys(R, "x0 - x1")
    cs = complete_with_order(support_graph(F, 2))
    with pytest.raises(NotZeroDimensional) as exc:
        chordal_triangularize(F, cs, TriangulateOptions(mode="zerodim"), ring=R)
    assert exc.value.rank == 0


def test_example_network_chains_match_hand_decomposition():
    net = build("star4.sys", mode="zerodim")
    got = {tuple(format_poly(f) for f in sorted(net.chain_polys(c)[0], key=mvar)) for c in net.chains()}
    assert got == {
        ("x0^3 - x0", "x1 - x2", "x2", "x3"),
        ("x0 - 1", "x1 - x2", "x2 - 1", "x3"),
        ("x0 - 1", "x1 - x2", "x2 - 1", "x3 - 1"),
    }


pair_terms = st.dictionaries(st.tuples(st.integers(1, 2), st.integers(0, 2)), st.integers(1, 2), max_size=3)


@settings(max_examples=25, deadline=None)
@given(pair_terms, pair_terms)
def test_every_operation_keeps_the_points(g01, g12):
    R = Ring(3, 3)
    x = R.gen
    F = [x(i) ** 3 - x(i) for i in range(3)]
    F += [R.from_terms({(a, b, 0): c for (a, b), c in g01.items()})]
    F += [R.from_terms({(0, a, b): c for (a, b), c in g12.items()})]
    F = [f for f in F if f]
    cs = complete_with_order(support_graph(F, 3))
    net = induced_network(F, cs, ring=R, mode="zerodim", squarefree=True)
    expected = brute_force(F, R)

    def check():
        assert chain_points(net) == expected

    check()
    for l in range(cs.n):
        for v in net.rank_nodes(l):
            triangulate_node(net, v.id)
            check()
        merge_out(net, l)
        check()
        p = cs.parent[l]
        if p is not None:
            for v in net.rank_nodes(l):
                eliminate_node(net, v.id)
                check()
            merge_out(net, p)
            check()
        merge_in(net, l)
        check()
        net.prune()
        check()
    # squarefree chains are disjoint: their point counts add up
    sizes = []
    for chain in net.chains():
        eqs, ineqs = net.chain_polys(chain)
        sizes.append(len(brute_force(eqs, R, ineqs)))
    assert sum(sizes) == len(expected)


band_monomials = st.lists(
    st.tuples(st.integers(0, 5), st.lists(st.integers(0, 2), min_size=3, max_size=3)), min_size=1, max_size=8
)


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 6), band_monomials)
def test_monomial_width_is_at_most_two_to_the_clique_number(n, picks):
    R = Ring(n, 65521)
    F = []
    for start, exps in picks:
        start %= n - 2
        F.append(R.monomial({start + k: e for k, e in enumerate(exps)}))
    F = [f for f in F if not f.is_ground]
    if not F:
        return
    cs = complete_with_order(support_graph(F, n))
    net = chordal_triangularize(F, cs, TriangulateOptions(mode="monomial"), ring=R)
    assert net.width() <= 2 ** cs.clique_number

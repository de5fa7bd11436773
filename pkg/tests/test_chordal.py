import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordalnet.chordal import (
    ChordalStructure,
    complete_with_order,
    elim_tree,
    is_perfect_elimination,
    relabel_system,
    suggest_order,
    support_graph,
)
from chordalnet.ring import Ring, parse_poly

from conftest import load_problem


def test_coloring_support_graph_is_the_cycle():
    problem = load_problem("coloring9.sys")
    g = support_graph(problem.polys, problem.ring.n)
    expected = {frozenset((i, i + 1)) for i in range(8)} | {frozenset((0, 8))}
    assert {frozenset(e) for e in g.edges} == expected


def test_natural_completion_of_cycle_is_a_path_tree():
    problem = load_problem("coloring9.sys")
    cs = complete_with_order(support_graph(problem.polys, 9))
    assert cs.parent == (1, 2, 3, 4, 5, 6, 7, 8, None)
    assert cs.cliques[0] == frozenset({0, 1, 8})
    assert is_perfect_elimination(cs)


def test_ten_vertex_fill_edges():
    problem = load_problem("coloring10_4.sys")
    cs = complete_with_order(support_graph(problem.polys, 10))
    assert set(cs.fill_edges) == {(6, 7), (4, 9), (3, 5), (5, 7), (5, 9), (7, 9)}
    tree = elim_tree(cs)
    assert tree[0] == 6 and tree[9] is None
    assert cs.clique_number == 4
    assert nx.is_chordal(cs.g)


def test_star_tree_of_small_system():
    cs = complete_with_order(support_graph(load_problem("star4.sys").polys, 4))
    assert cs.parent == (2, 2, 3, None)
    assert sorted(cs.children(2)) == [0, 1]
    assert cs.path_to_root(0) == frozenset({0, 2, 3})


graphs = st.integers(1, 8).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=14))
)


@settings(max_examples=40, deadline=None)
@given(graphs)
def test_clique_without_its_variable_lies_in_the_parent_clique(data):
    n, edges = data
    g = nx.empty_graph(n)
    g.add_edges_from((a, b) for a, b in edges if a != b)
    cs = complete_with_order(g)
    assert nx.is_chordal(cs.g)
    for l in range(cs.n):
        p = cs.parent[l]
        if p is None:
            assert cs.cliques[l] == {l}
        else:
            assert p > l
            assert cs.cliques[l] - {l} <= cs.cliques[p]


def test_order_permutation_is_checked():
    with pytest.raises(ValueError):
        complete_with_order(nx.path_graph(3), [0, 0, 1])


def test_suggest_order_is_permutation_without_fill_on_chordal_input():
    g = nx.Graph([(0, 1), (1, 2), (2, 0), (2, 3)])
    order = suggest_order(g)
    assert sorted(order) == [0, 1, 2, 3]
    assert complete_with_order(g, order).fill_edges == ()


def test_relabel_moves_variables():
    R = Ring(3, 5)
    (f,) = relabel_system([parse_poly("x0*x2 + x1", R)], [2, 0, 1], R)
    assert f == parse_poly("x1*x0 + x2", R)


def test_structure_from_cliques_round_trips():
    cs = complete_with_order(nx.cycle_graph(5))
    again = ChordalStructure.from_cliques(cs.cliques, cs.order)
    assert again.parent == cs.parent
    assert is_perfect_elimination(again)

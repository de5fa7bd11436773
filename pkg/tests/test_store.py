import pytest

from chordalnet.errors import NonPrimeModulus, ParseError
from chordalnet.queries import dim_census, dimension, zero_count
from chordalnet.store import (
    dump_network,
    export_dot,
    format_problem,
    load_network,
    parse_collapse,
    parse_problem_text,
    rank_groups,
    read_network,
    write_network,
)

from conftest import build, load_problem


def test_problem_directives_and_comments():
    problem = parse_problem_text("# a comment\np = 7\norder = 1 0\nx0^2 - x1\n\nx1 - 3\n")
    assert problem.ring.p == 7
    assert problem.ring.n == 2
    assert problem.order == (1, 0)
    assert len(problem.polys) == 2


def test_directives_take_trailing_comments():
    text = "p = 13            # modulus\nn = 3             # variables\norder = 0 1 2     # elimination order\nx0^3 - 1\n"
    problem = parse_problem_text(text)
    assert problem.ring.p == 13
    assert problem.ring.n == 3
    assert problem.order == (0, 1, 2)
    assert len(problem.polys) == 1


def test_prime_argument_overrides_directive():
    assert parse_problem_text("p = 7\nx0 - 1\n", prime=13).ring.p == 13


def test_coloring_fixture_has_vertex_and_edge_equations():
    problem = load_problem("coloring9.sys")
    assert len(problem.polys) == 18
    assert problem.ring.n == 9


def test_problem_round_trip():
    problem = load_problem("star4.sys")
    text = format_problem(problem)
    again = parse_problem_text(text)
    assert format_problem(again) == text


def test_problem_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_problem_text("p = 5\nx0 + \n")
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        parse_problem_text("n = 2\nx3 - 1\n")
    with pytest.raises(NonPrimeModulus):
        parse_problem_text("p = 9\nx0\n")


def test_network_dump_round_trip(tmp_path):
    net = build("star4.sys", mode="zerodim", squarefree=True)
    path = write_network(net, tmp_path / "net.txt")
    again = read_network(path)
    assert dump_network(again) == dump_network(net)
    assert zero_count(again) == zero_count(net)
    assert again.cs.parent == net.cs.parent


def test_binomial_dump_keeps_query_answers():
    net = build("minors2x4.sys", mode="binomial")
    again = load_network(dump_network(net))
    assert dimension(again) == dimension(net)
    assert dim_census(again) == dim_census(net)


def test_bad_dump_is_rejected():
    with pytest.raises(ParseError):
        load_network("not a header\n")


def test_collapse_groups():
    assert parse_collapse("0,1;2,3") == [[0, 1], [2, 3]]
    assert parse_collapse(None) == []
    net = build("minors2x4.sys", mode="binomial")
    groups = rank_groups(net, parse_collapse("0,1;2,3;4,5;6,7"))
    assert ["".join(map(str, g)) for g in groups] == ["01", "23", "45", "67"]


def test_dot_export_is_well_formed():
    pydot = pytest.importorskip("pydot")
    net = build("star4.sys", mode="zerodim")
    (g,) = pydot.graph_from_dot_data(export_dot(net))
    clusters = g.get_subgraphs()
    assert len(clusters) == 4
    assert sum(len(c.get_nodes()) for c in clusters) == net.node_count()
    assert len(g.get_edges()) == len(net.arcs())

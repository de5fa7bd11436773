from .dot import export_dot, parse_collapse, rank_groups, to_pydot
from .network_text import dump_network, load_network, read_network, write_network
from .problem import Problem, format_problem, parse_problem, parse_problem_text

__all__ = [
    "Problem",
    "dump_network",
    "export_dot",
    "format_problem",
    "load_network",
    "parse_collapse",
    "parse_problem",
    "parse_problem_text",
    "rank_groups",
    "read_network",
    "to_pydot",
    "write_network",
]

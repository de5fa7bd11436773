from .count import node_poly, weights, zero_count
from .dimension import (
    census_vectors,
    chain_cardinality,
    chain_dimension,
    dim_census,
    dimension,
    isolate_dim,
    shortest,
    top_component,
)
from .member import MemberOptions, radical_member, split_by_mvar
from .primes import minimal_primes
from .sample import sample
from .subnet import eliminate_below

__all__ = [
    "MemberOptions",
    "census_vectors",
    "chain_cardinality",
    "chain_dimension",
    "dim_census",
    "dimension",
    "eliminate_below",
    "isolate_dim",
    "minimal_primes",
    "node_poly",
    "radical_member",
    "sample",
    "shortest",
    "split_by_mvar",
    "top_component",
    "weights",
    "zero_count",
]

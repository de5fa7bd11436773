from .binomial import tri_binomial
from .hermite import ToralRow, toral_hnf
from .monomial import minimal_var_covers, tri_monomial
from .saturate import is_prime_form, lift, lower, poly_sqrt, sat_generators
from .types import RegularSystem, TriangularSet
from .zerodim import tri_zero_dim

__all__ = [
    "RegularSystem",
    "ToralRow",
    "TriangularSet",
    "is_prime_form",
    "lift",
    "lower",
    "minimal_var_covers",
    "poly_sqrt",
    "sat_generators",
    "toral_hnf",
    "tri_binomial",
    "tri_monomial",
    "tri_zero_dim",
]

from .base import (
    Monomial,
    Poly,
    Ring,
    coeff_in,
    deg_in,
    evaluate,
    format_poly,
    initial,
    is_constant,
    is_monomial,
    mdeg,
    modulus,
    monic,
    mvar,
    mvar_init_mdeg,
    normal_form,
    poly_key,
    prem,
    prem_chain,
    ring_of,
    subst_eval,
    terms,
    variables,
    x_power,
)
from .groebner import GroebnerOptions, buchberger_lex, is_unit_ideal
from .parse import parse_poly, parse_terms
from .system import PolySystem
from .univariate import uni_is_irreducible, uni_rational_roots, uni_squarefree_part

__all__ = [
    "Monomial",
    "Poly",
    "PolySystem",
    "Ring",
    "GroebnerOptions",
    "buchberger_lex",
    "coeff_in",
    "deg_in",
    "evaluate",
    "format_poly",
    "initial",
    "is_constant",
    "is_monomial",
    "is_unit_ideal",
    "mdeg",
    "modulus",
    "monic",
    "mvar",
    "mvar_init_mdeg",
    "normal_form",
    "parse_poly",
    "parse_terms",
    "poly_key",
    "prem",
    "prem_chain",
    "ring_of",
    "subst_eval",
    "terms",
    "uni_is_irreducible",
    "uni_rational_roots",
    "uni_squarefree_part",
    "variables",
    "x_power",
]

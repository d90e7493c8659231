from .domains import (GF, QQ, Domain, ExtElem, ExtField, FpElem, PolyRing, PrimeField, RatFunc,
                      RatFuncField, RationalField, default_modulus, domain_of, parse_domain)
from .factor import factor_univariate, irreducible_factors, is_irreducible_ff
from .homs import (elem_arith, frobenius_conjugates, minimal_polynomial_over_base,
                   product_over_roots, roots_with_multiplicity, specialize)
from .mpoly import MultiPoly, mpoly_gcd
from .upoly import UniPoly, exact_div, poly_gcd, poly_gcdex, poly_lcm, pow_mod

__all__ = [
    "GF", "QQ", "Domain", "ExtElem", "ExtField", "FpElem", "PolyRing", "PrimeField", "RatFunc",
    "RatFuncField", "RationalField", "default_modulus", "domain_of", "parse_domain",
    "factor_univariate", "irreducible_factors", "is_irreducible_ff",
    "elem_arith", "frobenius_conjugates", "minimal_polynomial_over_base", "product_over_roots",
    "roots_with_multiplicity", "specialize",
    "MultiPoly", "mpoly_gcd",
    "UniPoly", "exact_div", "poly_gcd", "poly_gcdex", "poly_lcm", "pow_mod",
]

"""Seeded random instances: polynomials, families, Good and Bad points.

Everything takes an explicit ``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random

from .norms import MonicFamily
from .rings import MultiPoly, PrimeField, RatFuncField, UniPoly


def element(rng: random.Random, domain, lo=-5, hi=5):
    if isinstance(domain, PrimeField):
        return domain.random_element(rng)
    if isinstance(domain, RatFuncField):
        return domain.convert(poly_in_u(rng, domain, 1))
    return domain.convert(rng.randint(lo, hi))


def poly_in_u(rng, K, degree, nonconstant=False):
    """A random polynomial in the function-field variables, as a MultiPoly over k."""
    k = K.base
    while True:
        terms = {}
        for v in range(len(K.vars)):
            for d in range(1, degree + 1):
                e = [0] * len(K.vars)
                e[v] = d
                terms[tuple(e)] = element(rng, k, -3, 3)
        terms[(0,) * len(K.vars)] = element(rng, k, -3, 3)
        p = MultiPoly(k, K.vars, terms)
        if not nonconstant or not p.is_constant():
            return p


def poly(rng, domain, degree, monic=False, nonzero_constant=False):
    while True:
        coeffs = [element(rng, domain) for _ in range(degree + 1)]
        if monic:
            coeffs[-1] = domain.one
        if nonzero_constant and coeffs[0] == domain.zero:
            continue
        p = UniPoly(coeffs, domain)
        if p.degree == degree:
            return p


def family(rng, domain, n):
    return MonicFamily(tuple(element(rng, domain) for _ in range(n)), domain)


def unit_poly(rng, k, degree):
    """Random monic g in k[x] with g(0) != 0."""
    return poly(rng, k, degree, monic=True, nonzero_constant=True)


def good_funcfield_family(rng, K, n):
    """x^a times linear factors x - r(u) with r nonconstant: every root is
    zero or transcendental over k."""
    x = UniPoly.x(K)
    f = UniPoly.one(K)
    for _ in range(n):
        if rng.random() < 0.25:
            f = f * x
        else:
            f = f * (x - K.convert(poly_in_u(rng, K, rng.randint(1, 2), nonconstant=True)))
    return MonicFamily.from_poly(f)


def bad_funcfield_family(rng, K, n):
    """At least one monic k-irreducible factor q != x, the rest u-dependent.
    Returns (family, [the k-factors used])."""
    k = K.base
    x = UniPoly.x(k)
    menu = [x - 1, x + 1, x - 2, x + 3, x ** 2 + 1, x ** 2 - 2, x ** 2 + x + 1]
    used = []
    f = UniPoly.one(K)
    while True:
        q = rng.choice(menu)
        if f.degree + q.degree <= n or not used:
            used.append(q)
            f = f * q.change_domain(K)
        if f.degree >= n or rng.random() < 0.5:
            break
    xK = UniPoly.x(K)
    while f.degree < n:
        f = f * (xK - K.convert(poly_in_u(rng, K, 1, nonconstant=True)))
    return MonicFamily.from_poly(f), used

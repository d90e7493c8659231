"""Ring homomorphisms between domains: specialization of function-field
coefficients, Frobenius conjugation, and products over roots in a finite
extension."""

from __future__ import annotations

import operator

from ..errors import (ArityMismatch, DomainMismatch, DoesNotSplit, InvariantViolation, NotAUnit,
                      PoleAtPoint, UnsupportedDomain)
from .domains import GF, ExtField, PolyRing, PrimeField, RatFuncField, domain_of
from .upoly import UniPoly

_OPS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul, "div": operator.truediv}


def elem_arith(a, b, op: str):
    """Checked binary arithmetic on two elements of the same domain."""
    da, db = domain_of(a), domain_of(b)
    if da != db:
        raise DomainMismatch(f"{da} vs {db}")
    if op == "div" and not da.is_unit(b):
        raise NotAUnit(f"{da.fmt(b)} is not a unit in {da}")
    try:
        return _OPS[op](a, b)
    except ZeroDivisionError as exc:
        raise NotAUnit(str(exc)) from None


def _point_domain(dom, point):
    for a in point:
        if not isinstance(a, int):
            return domain_of(a)
    return dom.base


def specialize(f: UniPoly, point, target=None) -> UniPoly:
    """Evaluate every coefficient of f (over k(u...) or k[u...]) at ``point``.

    ``target`` is the field receiving the values; it defaults to the domain
    of the point's entries (so points in an extension of k are allowed).
    """
    dom = f.domain
    if not isinstance(dom, (RatFuncField, PolyRing)):
        raise UnsupportedDomain(f"specialize needs k(u...) or k[u...], got {dom}")
    point = list(point)
    if len(point) != len(dom.vars):
        raise ArityMismatch(f"expected {len(dom.vars)} values, got {len(point)}")
    target = target or _point_domain(dom, point)
    vals = [target.convert(a) for a in point]
    out = []
    for c in f.coeffs:
        if isinstance(dom, PolyRing):
            out.append(c.evaluate(vals, target))
            continue
        den = c.den.evaluate(vals, target)
        if den == target.zero:
            raise PoleAtPoint(f"denominator {c.den} vanishes at {[target.fmt(v) for v in vals]}")
        out.append(c.num.evaluate(vals, target) / den)
    return UniPoly(out, target)


def frobenius_conjugates(h: UniPoly):
    """Distinct images of h under coefficientwise Frobenius (h over GF(p^r))."""
    dom = h.domain
    conj = [h]
    while True:
        nxt = conj[-1].map_coeffs(dom.frobenius, dom)
        if nxt == conj[0]:
            return conj
        conj.append(nxt)


def minimal_polynomial_over_base(h: UniPoly) -> UniPoly:
    """Minimal polynomial over the prime field of a root of the irreducible
    h.  Over QQ or GF(p) this is h made monic."""
    dom = h.domain
    h = h.monic()
    if not isinstance(dom, ExtField):
        return h
    prod = UniPoly.one(dom)
    for c in frobenius_conjugates(h):
        prod = prod * c
    try:
        return prod.map_coeffs(dom.to_prime_field, dom.prime_field)
    except DomainMismatch:
        raise InvariantViolation(f"conjugate product of {h} is not defined over GF({dom.p})") from None


def roots_with_multiplicity(f: UniPoly, field):
    """All roots of f in ``field`` (a finite field containing the
    coefficients) by exhaustive search, repeated per multiplicity."""
    fe = f.change_domain(field)
    roots = []
    for a in field.elements():
        while fe.degree > 0 and fe(a) == field.zero:
            roots.append(a)
            fe = fe.exact_div(UniPoly([-a, field.one], field))
        if fe.degree <= 0:
            break
    return roots


def product_over_roots(F, G: UniPoly, r: int):
    """Product of G(alpha) over the roots alpha of F in GF(p^r), reported in
    GF(p).  F is a monic family or a monic UniPoly over GF(p)."""
    f = F.to_poly() if hasattr(F, "to_poly") else F
    dom = f.domain
    if not isinstance(dom, PrimeField) or G.domain != dom:
        raise UnsupportedDomain("product_over_roots needs F and G over the same GF(p)")
    ext = GF(dom.p, r)
    roots = roots_with_multiplicity(f, ext)
    if len(roots) < f.degree:
        raise DoesNotSplit(f"{f} has {len(roots)} of {f.degree} roots in {ext}")
    prod = ext.one
    for a in roots:
        prod = prod * ext.convert(G(a))
    try:
        return ext.to_prime_field(prod)
    except DomainMismatch:
        raise InvariantViolation(f"product over roots {prod} is not in GF({dom.p})") from None

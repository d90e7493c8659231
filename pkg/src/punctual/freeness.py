"""When is k[x]_(x) (x) A / (F) free over A?

The answer depends only on where the roots of F live: every root over
every residue field of A must be zero or transcendental over k.  That is
not decidable for an arbitrary A, so the checks here cover three classes of
base ring, each with its own terminating rule:

* A = k or a finite extension of k: Good iff F = x^n.
* A = k(u1, ..., um): Good iff no monic irreducible q != x in k[x] divides F.
  Such factors are found by specializing u at sample points, taking the
  gcd of the specializations, factoring it over k and keeping the factors
  that really divide F over k(u).
* A = k[u1, ..., um]: residue fields at maximal ideals are algebraic over k,
  so Good iff every u_i = 0.

A Bad verdict always carries a witness q in k[x] (monic, q(0) != 0) whose
norm s_{F,n}(q(t)) is not a unit in A.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvariantViolation, PoleAtPoint, UnsupportedDomain
from .norms import MonicFamily, norm_coeffs
from .rings import (GF, ExtField, PolyRing, PrimeField, RationalField, RatFuncField, UniPoly,
                    factor_univariate, minimal_polynomial_over_base, poly_gcd, specialize)

GOOD, BAD = "Good", "Bad"

RULE_FIELD = "field: Good iff F = x^n"
RULE_FUNCTION_FIELD = "function field: Good iff no monic irreducible q != x over k divides F"
RULE_POLY_RING = "polynomial ring: Good iff every u_i = 0"

MAX_SAMPLES = 64
MIN_SAMPLE_FIELD = 64  # finite k is sampled from GF(p^r) with p^r at least this


@dataclass(frozen=True)
class Verdict:
    status: str
    family: MonicFamily
    rule: str
    witness: UniPoly | None = None
    rejected: tuple = ()  # candidates tested against F and found not to divide it

    @property
    def good(self) -> bool:
        return self.status == GOOD

    def verify(self) -> bool:
        """Re-check the verdict from scratch (cheap parts only)."""
        F = self.family
        if self.good:
            if self.rule == RULE_FUNCTION_FIELD:
                return all(not _embed(q, F.domain).divides(F.to_poly()) for q in self.rejected)
            return F.to_poly() == UniPoly.monomial(F.domain.one, F.n, F.domain)
        return witness_ok(F, self.witness)


class StripResult(NamedTuple):
    f_part: UniPoly
    unit_part: UniPoly


class Lemma22(NamedTuple):
    g: UniPoly
    I: UniPoly
    H: UniPoly


def _embed(q: UniPoly, domain):
    return q if q.domain == domain else q.change_domain(domain)


def _x_power(n, domain):
    return UniPoly.monomial(domain.one, n, domain)


def _valuation(f: UniPoly) -> int:
    a = 0
    while f.coeff(a) == f.domain.zero:
        a += 1
    return a


def witness_ok(F: MonicFamily, q) -> bool:
    """q is monic in k[x], q(0) != 0 and s_{F,n}(q(t)) is not a unit.  Over
    k, GF(p)-type fields and k(u) the witness must also divide F."""
    if q is None or q.is_zero() or not q.is_monic() or q.coeff(0) == q.domain.zero:
        return False
    dom = F.domain
    if q.domain != dom.base:
        return False
    qe = _embed(q, dom)
    if isinstance(dom, (RationalField, PrimeField, RatFuncField)) and not qe.divides(F.to_poly()):
        return False
    return not dom.is_unit(norm_coeffs(F, qe).top)


def _supported(dom):
    if not isinstance(dom, (RationalField, PrimeField, ExtField, RatFuncField, PolyRing)):
        raise UnsupportedDomain(f"no freeness rule for {dom}")


# -- sampling -----------------------------------------------------------------


def _sample_field(k):
    """Field the sample coordinates come from, plus its value sequence."""
    if isinstance(k, RationalField):
        return k, lambda i: k.convert((i + 1) // 2 if i % 2 else -(i // 2))
    r = 1
    while k.p ** r < MIN_SAMPLE_FIELD:
        r += 1
    ext = GF(k.p, r) if r > 1 else k
    return ext, ext.element


def _points(m, size=None):
    """Index tuples in shells of growing max-index."""
    level = 0
    while size is None or level < size:
        for idx in itertools.product(range(level + 1), repeat=m):
            if max(idx) == level:
                yield idx
        level += 1


def _sample(f: UniPoly):
    dom = f.domain
    target, value = _sample_field(dom.base)
    size = target.size if isinstance(target, (PrimeField, ExtField)) else None
    for idx in _points(len(dom.vars), size):
        point = [value(i) for i in idx]
        try:
            yield point, specialize(f, point, target)
        except PoleAtPoint:
            continue


def _nonzero_root_part(c: UniPoly) -> UniPoly:
    return c.exact_div(_x_power(_valuation(c), c.domain))


def _candidates_from(c: UniPoly, seed=0):
    """Monic irreducible q != x over k whose roots are among those of c."""
    out = {}
    rest = _nonzero_root_part(c)
    if rest.degree < 1:
        return []
    for h, _ in factor_univariate(rest, seed):
        q = minimal_polynomial_over_base(h)
        out[q] = None
    return sorted(out, key=lambda q: q.key())


def sampled_gcd(f: UniPoly) -> UniPoly:
    """gcd of specializations of f at sample points, stopped once it has
    been unchanged twice in a row."""
    c = None
    stable = 0
    for used, (_, spec) in enumerate(_sample(f), start=1):
        new = spec.monic() if c is None else poly_gcd(c, spec)
        stable = stable + 1 if new == c else 0
        c = new
        if _nonzero_root_part(c).degree < 1 or stable >= 2 or used >= MAX_SAMPLES:
            break
    if c is None:
        raise InvariantViolation(f"every sample point is a pole of {f}")
    return c


def k_factors(f: UniPoly, seed=0):
    """For f over k(u): ([(q, multiplicity)] of monic irreducible q != x in
    k[x] dividing f, [candidates that were rejected])."""
    g = f.monic()
    found, rejected = [], []
    for q in _candidates_from(sampled_gcd(g), seed):
        qe = _embed(q, f.domain)
        m = 0
        while True:
            quo, rem = g.divmod(qe)
            if not rem.is_zero():
                break
            g, m = quo, m + 1
        if m:
            found.append((q, m))
        else:
            rejected.append(q)
    return found, rejected


# -- Freeness checker ---------------------------------------------------------


def check_family(F: MonicFamily, seed: int = 0) -> Verdict:
    dom = F.domain
    _supported(dom)
    f = F.to_poly()
    is_power = f == _x_power(F.n, dom)
    if isinstance(dom, RatFuncField):
        found, rejected = k_factors(f, seed)
        if not found:
            return Verdict(GOOD, F, RULE_FUNCTION_FIELD, rejected=tuple(rejected))
        q = min((q for q, _ in found), key=lambda q: q.key())
        return _bad(F, RULE_FUNCTION_FIELD, q)
    if isinstance(dom, PolyRing):
        if is_power:
            return Verdict(GOOD, F, RULE_POLY_RING)
        for _, spec in _sample(f):
            cands = _candidates_from(spec, seed)
            if cands:
                return _bad(F, RULE_POLY_RING, cands[0])
        raise InvariantViolation(f"no sample point separates {f} from x^{F.n}")
    if is_power:
        return Verdict(GOOD, F, RULE_FIELD)
    return _bad(F, RULE_FIELD, _candidates_from(f, seed)[0])


def _bad(F, rule, q):
    if not witness_ok(F, q):
        raise InvariantViolation(f"witness {q} failed verification for {F}")
    return Verdict(BAD, F, rule, witness=q)


# -- factorization of a single polynomial over a field K ----------------------


def _field_only(G: UniPoly):
    dom = G.domain
    if not isinstance(dom, (RationalField, PrimeField, ExtField, RatFuncField)):
        raise UnsupportedDomain(f"{dom} is not a supported field")
    if G.is_zero():
        raise ValueError("G must be nonzero")


def lemma22_factor(G: UniPoly, seed: int = 0) -> Lemma22:
    """(g, I, H) with I*g == H*G, g monic in k[x] with g(0) != 0, and every
    root of I zero or transcendental over k."""
    _field_only(G)
    K = G.domain
    k = K.base
    one_k = UniPoly.one(k)
    one_K = UniPoly.one(K)
    if isinstance(K, RatFuncField):
        found, _ = k_factors(G, seed)
        g = one_k
        for q, m in found:
            g = g * q ** m
        return Lemma22(g, G.exact_div(_embed(g, K)), one_K)
    a = _valuation(G)
    I = UniPoly.monomial(G.lc, a, K)
    if not isinstance(K, ExtField):
        return Lemma22(G.exact_div(I), I, one_K)
    g, H = one_k, one_K
    rest = G.exact_div(I)
    if rest.degree > 0:
        for Gj, m in factor_univariate(rest, seed):
            gj = minimal_polynomial_over_base(Gj)
            g = g * gj ** m
            H = H * _embed(gj, K).exact_div(Gj) ** m
    return Lemma22(g, I, H)


def strip_units(G: UniPoly, seed: int = 0) -> StripResult:
    """Split monic(G) = f_part * unit_part where unit_part collects the
    factors that become units in K (x) k[x]_(x)."""
    _field_only(G)
    K = G.domain
    g = G.monic()
    if isinstance(K, RatFuncField):
        unit = UniPoly.one(K)
        for q, m in k_factors(g, seed)[0]:
            unit = unit * _embed(q, K) ** m
        return StripResult(g.exact_div(unit), unit)
    f_part = _x_power(_valuation(g), K)
    return StripResult(f_part, g.exact_div(f_part))


def local_quotient_dim(G: UniPoly, seed: int = 0) -> int:
    return strip_units(G, seed).f_part.degree

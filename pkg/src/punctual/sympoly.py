"""Symmetric polynomials in t1..tn, built literally.

This is the slow, transparent route to the symmetrizing operators: expand
``prod_i (G(x) - G(t_i))`` and the elementary symmetric functions of
``G(t_1), ..., G(t_n)`` as honest multivariate polynomials, then rewrite
symmetric polynomials in the elementary basis e_1..e_n (printed as s1..sn).
It is meant for small instances and as an oracle for :mod:`punctual.norms`.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

from .errors import ArityMismatch, IndexOutOfRange, InvariantViolation, InexactDivision, NotSymmetric, ResourceCap
from .rings import QQ, MultiPoly, UniPoly, domain_of

MAX_ARITY = 6
MAX_DEGREE = 24

_T = re.compile(r"^t(\d+)$")


def t_vars(n):
    return tuple(f"t{i}" for i in range(1, n + 1))


def s_vars(n):
    return tuple(f"s{i}" for i in range(1, n + 1))


def _guard(n, degree):
    if n > MAX_ARITY:
        raise ResourceCap(f"arity {n} exceeds {MAX_ARITY}")
    if degree > MAX_DEGREE:
        raise ResourceCap(f"total degree {degree} exceeds {MAX_DEGREE}")


class EBasisPoly(MultiPoly):
    """A polynomial in the elementary symmetric functions e_1..e_n, stored
    as a MultiPoly in the variables s1..sn."""

    __slots__ = ()

    def __init__(self, domain, n, terms=None):
        super().__init__(domain, s_vars(n), terms)

    @property
    def n(self):
        return len(self.vars)

    @classmethod
    def from_multipoly(cls, p: MultiPoly):
        if p.vars != s_vars(len(p.vars)):
            raise ArityMismatch(f"expected variables s1..sn, got {p.vars}")
        return cls(p.domain, len(p.vars), p.terms)


def _sub_univariate(G: UniPoly, var, vars):
    """G(var) as a MultiPoly in ``vars``."""
    j = vars.index(var)
    terms = {}
    for k, c in enumerate(G.coeffs):
        e = [0] * len(vars)
        e[j] = k
        terms[tuple(e)] = c
    return MultiPoly(G.domain, vars, terms)


def elementary_symmetric(n: int, i: int, domain=QQ) -> MultiPoly:
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"index {i} outside 0..{n}")
    vars = t_vars(n)
    terms = {}
    for subset in itertools.combinations(range(n), i):
        terms[tuple(1 if j in subset else 0 for j in range(n))] = domain.one
    return MultiPoly(domain, vars, terms)


def delta_poly(G: UniPoly, n: int) -> MultiPoly:
    """prod_{i=1..n} (G(x) - G(t_i)) in the variables x, t1..tn."""
    if n < 1:
        raise IndexOutOfRange("n must be at least 1")
    _guard(n, n * max(G.degree, 0))
    vars = ("x",) + t_vars(n)
    gx = _sub_univariate(G, "x", vars)
    out = MultiPoly.constant(G.domain.one, G.domain, vars)
    for t in vars[1:]:
        out = out * (gx - _sub_univariate(G, t, vars))
    return out


def delta_cofactor(G: UniPoly, n: int) -> MultiPoly:
    """H(x, t) with delta_poly(G, n) == H * delta_poly(x, n)."""
    x = UniPoly.x(G.domain)
    try:
        return delta_poly(G, n).exact_div(delta_poly(x, n))
    except InexactDivision as exc:
        raise InvariantViolation(f"prod(x - t_i) failed to divide Delta(G, t): {exc}") from None


def symmetric_coeff(G: UniPoly, n: int, i: int) -> MultiPoly:
    """s_i(G(t_1), ..., G(t_n)) in the variables t1..tn."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"index {i} outside 1..{n}")
    _guard(n, i * max(G.degree, 0))
    vars = t_vars(n)
    one = MultiPoly.constant(G.domain.one, G.domain, vars)
    e = [one] + [MultiPoly(G.domain, vars)] * i
    for j, t in enumerate(vars, start=1):
        gt = _sub_univariate(G, t, vars)
        for k in range(min(i, j), 0, -1):
            e[k] = e[k] + e[k - 1] * gt
    return e[i]


def _t_positions(p: MultiPoly):
    pos = sorted((int(m.group(1)), idx) for idx, v in enumerate(p.vars) if (m := _T.match(v)))
    return [idx for _, idx in pos]


def is_symmetric(p: MultiPoly) -> bool:
    """Invariance under every adjacent transposition t_i <-> t_{i+1}."""
    pos = _t_positions(p)
    for a, b in zip(pos, pos[1:]):
        perm = list(range(len(p.vars)))
        perm[a], perm[b] = b, a
        if p.permute(perm) != p:
            return False
    return True


# -- e-basis ------------------------------------------------------------------


def _mul_int(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _e_int(n, i):
    return {tuple(1 if j in s else 0 for j in range(n)): 1 for s in itertools.combinations(range(n), i)}


@lru_cache(maxsize=4096)
def _emono_full(n, b):
    """Integer expansion of prod_i e_i**b_i in t1..tn."""
    for j in range(n - 1, -1, -1):
        if b[j]:
            prev = list(b)
            prev[j] -= 1
            return _mul_int(_emono_full(n, tuple(prev)), _e_int(n, j + 1))
    return {(0,) * n: 1}


def _nonincreasing(e):
    return all(e[i] >= e[i + 1] for i in range(len(e) - 1))


@lru_cache(maxsize=4096)
def _emono_dominant(n, b):
    return tuple((e, c) for e, c in _emono_full(n, b).items() if _nonincreasing(e))


def _check_t_poly(p: MultiPoly):
    n = len(p.vars)
    if p.vars != t_vars(n):
        raise ArityMismatch(f"expected a polynomial in t1..t{n}, got variables {p.vars}")
    return n


def ebasis_reduce(p: MultiPoly) -> EBasisPoly:
    """Write a symmetric polynomial in t1..tn through e_1..e_n.

    Classical leading-term elimination in lex order t1 > ... > tn.  Because
    every intermediate polynomial stays symmetric, only the exponent vectors
    a1 >= a2 >= ... >= an are tracked.
    """
    n = _check_t_poly(p)
    _guard(n, p.total_degree())
    if not is_symmetric(p):
        raise NotSymmetric(f"{p} is not symmetric in t1..t{n}")
    dom = p.domain
    zero = dom.zero
    work = {e: c for e, c in p.terms.items() if _nonincreasing(e)}
    out = {}
    while work:
        lead = max(work)
        c = work[lead]
        b = tuple(lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n))
        out[b] = c
        for e, k in _emono_dominant(n, b):
            v = work.get(e, zero) - c * k
            if v == zero:
                work.pop(e, None)
            else:
                work[e] = v
    return EBasisPoly(dom, n, out)


def ebasis_expand(q: EBasisPoly) -> MultiPoly:
    """Substitute e_i -> s_i(t) and expand in t1..tn."""
    n = q.n
    out = MultiPoly(q.domain, t_vars(n))
    for b, c in q.terms.items():
        out = out + MultiPoly(q.domain, t_vars(n), {e: c * k for e, k in _emono_full(n, b).items()})
    return out


def ebasis_eval(q: EBasisPoly, u, domain=None):
    """The homomorphism e_i -> u_i."""
    u = list(u)
    if len(u) != q.n:
        raise ArityMismatch(f"expected {q.n} values, got {len(u)}")
    if domain is None:
        domain = next((domain_of(a) for a in u if not isinstance(a, int)), q.domain)
    return q.evaluate(u, domain)

"""Sparse multivariate polynomials.

A :class:`MultiPoly` maps exponent tuples (one entry per variable, in the
stored variable order) to nonzero coefficients of its domain.  Leading terms
are taken in lexicographic order of the exponent tuples unless a method says
otherwise.
"""

from __future__ import annotations

from ..errors import DivisionByZero, DomainMismatch, InexactDivision, NotAUnit
from ._format import join_terms, power


class MultiPoly:
    __slots__ = ("domain", "vars", "terms")

    def __init__(self, domain, vars, terms=None):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError(f"duplicate variables in {vars}")
        clean = {}
        zero = domain.zero
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(vars):
                raise ValueError(f"exponent {exp} does not match variables {vars}")
            c = domain.convert(c)
            if c != zero:
                clean[exp] = c
        self.domain = domain
        self.vars = vars
        self.terms = clean

    def _make(self, terms):
        """New polynomial of the same class/domain/vars; ``terms`` must hold
        nonzero coefficients only."""
        obj = object.__new__(type(self))
        obj.domain = self.domain
        obj.vars = self.vars
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c, domain, vars):
        vars = tuple(vars)
        return cls(domain, vars, {(0,) * len(vars): c})

    @classmethod
    def gen(cls, name, domain, vars):
        vars = tuple(vars)
        exp = tuple(1 if v == name else 0 for v in vars)
        if sum(exp) != 1:
            raise ValueError(f"{name!r} is not one of {vars}")
        return cls(domain, vars, {exp: domain.one})

    def gens(self):
        return [MultiPoly.gen(v, self.domain, self.vars) for v in self.vars]

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coeff(self):
        return self.terms.get((0,) * len(self.vars), self.domain.zero)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var) -> int:
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def leading_exp(self, order="lex"):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order == "lex":
            return max(self.terms)
        if order == "grlex":
            return max(self.terms, key=lambda e: (sum(e), e))
        raise ValueError(order)

    def leading_coeff(self, order="lex"):
        return self.terms[self.leading_exp(order)]

    def used_vars(self):
        return [v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.domain != self.domain or other.vars != self.vars:
                raise DomainMismatch(
                    f"{self.domain}[{','.join(self.vars)}] vs {other.domain}[{','.join(other.vars)}]")
            return other
        try:
            c = self.domain.convert(other)
        except (TypeError, ValueError, DomainMismatch):
            return NotImplemented
        if c == self.domain.zero:
            return self._make({})
        return self._make({(0,) * len(self.vars): c})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        zero = self.domain.zero
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v == zero:
                    del out[e]
                else:
                    out[e] = v
        return self._make(out)

    __radd__ = __add__

    def __neg__(self):
        return self._make({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        zero = self.domain.zero
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return self._make({e: c for e, c in out.items() if c != zero})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self._make({(0,) * len(self.vars): self.domain.one})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        c = self.domain.convert(c)
        zero = self.domain.zero
        return self._make({e: v * c for e, v in self.terms.items() if v * c != zero})

    def __truediv__(self, other):
        """Division by a unit constant only."""
        if isinstance(other, MultiPoly):
            if not other.is_constant():
                raise NotAUnit(f"{other} is not a unit")
            other = other.constant_coeff()
        c = self.domain.convert(other)
        if not self.domain.is_unit(c):
            raise NotAUnit(f"{other} is not a unit in {self.domain}")
        return self.scale(self.domain.inv(c))

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient q with self == q*other; raises InexactDivision otherwise."""
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZero("multivariate division by zero")
        dom = self.domain
        eb = other.leading_exp()
        cb = other.terms[eb]
        inv = dom.inv(cb) if dom.is_unit(cb) else None
        rem = dict(self.terms)
        quot = {}
        zero = dom.zero
        while rem:
            ea = max(rem)
            diff = tuple(a - b for a, b in zip(ea, eb))
            if any(d < 0 for d in diff):
                raise InexactDivision(f"{other} does not divide {self}")
            ca = rem[ea]
            c = ca * inv if inv is not None else dom.quo(ca, cb)
            quot[diff] = c
            for e, v in other.terms.items():
                key = tuple(x + y for x, y in zip(e, diff))
                w = rem.get(key, zero) - c * v
                if w == zero:
                    rem.pop(key, None)
                else:
                    rem[key] = w
        return self._make(quot)

    def divides(self, other) -> bool:
        try:
            other.exact_div(self)
        except InexactDivision:
            return False
        return True

    # -- substitution ------------------------------------------------------

    def evaluate(self, point, domain=None):
        """Substitute ``point`` (a mapping var -> value or a sequence aligned
        with ``vars``); coefficients are embedded into ``domain``."""
        if not isinstance(point, dict):
            point = dict(zip(self.vars, point))
        domain = domain or self.domain
        acc = domain.zero
        vals = [point[v] for v in self.vars]
        cache = {}
        for e, c in self.terms.items():
            term = domain.convert(c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = domain.convert(vals[i]) ** k
                    term = term * cache[key]
            acc = acc + term
        return acc

    def with_vars(self, new_vars):
        """Re-embed into a variable list containing every used variable."""
        new_vars = tuple(new_vars)
        idx = []
        for i, v in enumerate(self.vars):
            if v in new_vars:
                idx.append((i, new_vars.index(v)))
            elif any(e[i] for e in self.terms):
                raise DomainMismatch(f"variable {v} missing from {new_vars}")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(new_vars)
            for i, j in idx:
                ne[j] = e[i]
            out[tuple(ne)] = c
        return MultiPoly(self.domain, new_vars, out)

    def permute(self, perm):
        """Apply a permutation of variable positions: exponent at position i
        moves to position perm[i]."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for i, k in enumerate(e):
                ne[perm[i]] = k
            out[tuple(ne)] = c
        return self._make(out)

    def map_coeffs(self, fn, domain):
        return MultiPoly(domain, self.vars, {e: fn(c) for e, c in self.terms.items()})

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.domain == other.domain and self.vars == other.vars and self.terms == other.terms
        try:
            other = self._coerce(other)
        except DomainMismatch:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.domain, self.vars, frozenset(self.terms.items())))

    def monomial_str(self, exp):
        return "*".join(power(v, k) for v, k in zip(self.vars, exp) if k)

    def __str__(self):
        terms = [(self.terms[e], self.monomial_str(e)) for e in sorted(self.terms, reverse=True)]
        return join_terms(terms, self.domain.fmt)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r}, vars={self.vars}, {self.domain})"


# -- gcd over a field ---------------------------------------------------------


def _to_recursive(f: MultiPoly):
    """Split off the first variable: list index k -> coefficient of v0**k as a
    polynomial in the remaining variables."""
    rest = f.vars[1:]
    deg = f.degree_in(f.vars[0]) if f.terms else -1
    parts = [dict() for _ in range(deg + 1)]
    for e, c in f.terms.items():
        parts[e[0]][e[1:]] = c
    return [MultiPoly(f.domain, rest, p) for p in parts]


def _from_recursive(parts, domain, vars):
    out = {}
    for k, p in enumerate(parts):
        for e, c in p.terms.items():
            out[(k,) + e] = c
    return MultiPoly(domain, vars, out)


def _strip(parts):
    while parts and parts[-1].is_zero():
        parts.pop()
    return parts


def _content(parts):
    g = None
    for p in parts:
        if not p.is_zero():
            g = p if g is None else mpoly_gcd(g, p)
            if g.is_constant():
                break
    return g


def _prem(a, b):
    """Pseudo-remainder of a by b in R[v0] (lists of coefficients in R)."""
    r = list(a)
    db = len(b) - 1
    lcb = b[-1]
    while len(r) - 1 >= db and r:
        top = r[-1]
        shift = len(r) - 1 - db
        r = [c * lcb for c in r]
        for i, bc in enumerate(b):
            r[shift + i] = r[shift + i] - top * bc
        r.pop()
        _strip(r)
    return r


def _primitive(parts):
    c = _content(parts)
    return [p.exact_div(c) for p in parts]


def mpoly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """gcd over a coefficient field, normalised to leading coefficient 1 in
    graded-lex order (zero only for gcd(0, 0))."""
    if a.domain != b.domain or a.vars != b.vars:
        raise DomainMismatch("gcd of polynomials in different rings")
    dom, vars = a.domain, a.vars
    if a.is_zero():
        return _normalize(b)
    if b.is_zero():
        return _normalize(a)
    if not vars or a.is_constant() or b.is_constant():
        return MultiPoly.constant(dom.one, dom, vars)
    if len(vars) == 1:
        from .upoly import UniPoly, poly_gcd

        ua = UniPoly([a.terms.get((i,), dom.zero) for i in range(a.total_degree() + 1)], dom)
        ub = UniPoly([b.terms.get((i,), dom.zero) for i in range(b.total_degree() + 1)], dom)
        g = poly_gcd(ua, ub)
        return MultiPoly(dom, vars, {(i,): c for i, c in enumerate(g.coeffs)})
    pa, pb = _to_recursive(a), _to_recursive(b)
    ca, cb = _content(pa), _content(pb)
    cont = mpoly_gcd(ca, cb)
    fa = [p.exact_div(ca) for p in pa]
    fb = [p.exact_div(cb) for p in pb]
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while len(fb) > 1:
        r = _prem(fa, fb)
        fa, fb = fb, (_primitive(r) if r else r)
        if not fb:
            break
    if len(fb) == 1:
        g = [cont]  # coprime in v0
    else:
        g = [p * cont for p in fa]
    return _normalize(_from_recursive(g, dom, vars))


def _normalize(f: MultiPoly) -> MultiPoly:
    if f.is_zero():
        return f
    lc = f.leading_coeff("grlex")
    if lc == f.domain.one:
        return f
    return f.scale(f.domain.inv(lc))

"""Dense univariate polynomials over a coefficient domain.

Coefficients are stored low-to-high (``coeffs[i]`` multiplies ``x**i``) with
trailing zeros trimmed, so the zero polynomial has ``coeffs == ()`` and
degree -1.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import DivisionByZero, DomainMismatch, InexactDivision, UnsupportedDomain
from ._format import join_terms, power


class UniPoly:
    __slots__ = ("domain", "coeffs")

    def __init__(self, coeffs, domain, *, _raw=False):
        if not _raw:
            coeffs = [domain.convert(c) for c in coeffs]
            zero = domain.zero
            while coeffs and coeffs[-1] == zero:
                coeffs.pop()
        self.domain = domain
        self.coeffs = tuple(coeffs)

    @classmethod
    def _make(cls, coeffs, domain):
        zero = domain.zero
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        return cls(coeffs, domain, _raw=True)

    @classmethod
    def x(cls, domain):
        return cls._make([domain.zero, domain.one], domain)

    @classmethod
    def constant(cls, c, domain):
        return cls([c], domain)

    @classmethod
    def monomial(cls, c, k, domain):
        return cls([0] * k + [c], domain)

    @classmethod
    def one(cls, domain):
        return cls._make([domain.one], domain)

    @classmethod
    def zero(cls, domain):
        return cls._make([], domain)

    # -- queries -----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.domain.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.domain.one

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.domain.one

    def key(self):
        """Sort key: degree first, then coefficients compared low-to-high."""
        return (self.degree, tuple(self.domain.key(c) for c in self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.domain != self.domain:
                raise DomainMismatch(f"{self.domain} vs {other.domain}")
            return other
        try:
            c = self.domain.convert(other)
        except (TypeError, ValueError, DomainMismatch):
            return NotImplemented
        return UniPoly._make([c], self.domain)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._make(out, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._make([-c for c in self.coeffs], self.domain)

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
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(self.domain)
        zero = self.domain.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == zero:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return UniPoly._make(out, self.domain)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = UniPoly.one(self.domain)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c):
        c = self.domain.convert(c)
        return UniPoly._make([a * c for a in self.coeffs], self.domain)

    def shift(self, k: int):
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return UniPoly._make([self.domain.zero] * k + list(self.coeffs), self.domain)

    def divmod(self, other):
        """Euclidean division; the divisor's leading coefficient must divide
        every intermediate leading coefficient (always true for units)."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise DomainMismatch("cannot divide by a non-polynomial")
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        dom = self.domain
        lcb = other.lc
        inv = dom.inv(lcb) if dom.is_unit(lcb) else None
        r = list(self.coeffs)
        db = other.degree
        if len(r) - 1 < db:
            return UniPoly.zero(dom), self
        q = [dom.zero] * (len(r) - db)
        zero = dom.zero
        while len(r) - 1 >= db:
            top = r[-1]
            if top != zero:
                c = top * inv if inv is not None else dom.quo(top, lcb)
                shift = len(r) - 1 - db
                q[shift] = c
                for i, b in enumerate(other.coeffs):
                    r[shift + i] = r[shift + i] - c * b
            r.pop()
            while r and r[-1] == zero:
                r.pop()
        return UniPoly._make(q, dom), UniPoly._make(r, dom)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        try:
            q, r = self.divmod(other)
        except InexactDivision:
            raise InexactDivision(f"{other} does not divide {self}") from None
        if not r.is_zero():
            raise InexactDivision(f"{other} does not divide {self} (remainder {r})")
        return q

    def divides(self, other) -> bool:
        try:
            other.exact_div(self)
        except InexactDivision:
            return False
        return True

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.lc
        if lc == self.domain.one:
            return self
        return self.scale(self.domain.inv(lc))

    def __call__(self, a):
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def derivative(self):
        return UniPoly._make([c * i for i, c in enumerate(self.coeffs)][1:], self.domain)

    def compose(self, g):
        """self(g(x))."""
        acc = UniPoly.zero(g.domain)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def change_domain(self, domain):
        return UniPoly([domain.convert(c) for c in self.coeffs], domain)

    def map_coeffs(self, fn, domain):
        return UniPoly([fn(c) for c in self.coeffs], domain)

    def reduce_mod(self, modulus):
        """Remainder modulo a polynomial with unit leading coefficient."""
        return self.divmod(modulus)[1]

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.domain == other.domain and self.coeffs == other.coeffs
        try:
            other = self.domain.convert(other)
        except (TypeError, ValueError, DomainMismatch):
            return NotImplemented
        return self.coeffs == ((other,) if other != self.domain.zero else ())

    def __hash__(self):
        return hash((self.domain, self.coeffs))

    def format(self, var="x"):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c != self.domain.zero:
                terms.append((c, power(var, i) if i else ""))
        return join_terms(terms, self.domain.fmt)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"UniPoly({self.format()!r}, {self.domain})"


def _require_field(*polys):
    for f in polys:
        if not f.domain.is_field:
            raise UnsupportedDomain(f"gcd needs a field, got {f.domain}")


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over a field; gcd(0, 0) = 0."""
    if a.domain != b.domain:
        raise DomainMismatch(f"{a.domain} vs {b.domain}")
    _require_field(a, b)
    from .domains import RationalField

    if isinstance(a.domain, RationalField):
        return _gcd_rational(a, b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _primitive_ints(f: UniPoly):
    den = math.lcm(*(c.denominator for c in f.coeffs))
    ints = [int(c * den) for c in f.coeffs]
    g = math.gcd(*ints)
    return [c // g for c in ints]


def _gcd_rational(a: UniPoly, b: UniPoly) -> UniPoly:
    # primitive pseudo-remainder sequence over Z keeps coefficients small
    if a.is_zero() or b.is_zero():
        nz = b if a.is_zero() else a
        return nz.monic() if not nz.is_zero() else nz
    f, g = _primitive_ints(a), _primitive_ints(b)
    if len(f) < len(g):
        f, g = g, f
    while len(g) > 1:
        r = f[:]
        lg, dg = g[-1], len(g) - 1
        while len(r) - 1 >= dg and any(r):
            lr, shift = r[-1], len(r) - 1 - dg
            r = [c * lg for c in r]
            for i, c in enumerate(g):
                r[i + shift] -= c * lr
            while r and r[-1] == 0:
                r.pop()
        if not r:
            break
        h = math.gcd(*r)
        f, g = g, [c // h for c in r]
    else:
        return UniPoly.one(a.domain)
    return UniPoly([Fraction(c) for c in g], a.domain).monic()


def poly_gcdex(a: UniPoly, b: UniPoly):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and g the monic gcd."""
    if a.domain != b.domain:
        raise DomainMismatch(f"{a.domain} vs {b.domain}")
    _require_field(a, b)
    dom = a.domain
    r0, r1 = a, b
    s0, s1 = UniPoly.one(dom), UniPoly.zero(dom)
    t0, t1 = UniPoly.zero(dom), UniPoly.one(dom)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = dom.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.is_zero() or b.is_zero():
        return UniPoly.zero(a.domain)
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def exact_div(a: UniPoly, b: UniPoly) -> UniPoly:
    return a.exact_div(b)


def pow_mod(f: UniPoly, e: int, m: UniPoly) -> UniPoly:
    result = UniPoly.one(f.domain)
    base = f % m
    while e:
        if e & 1:
            result = (result * base) % m
        e >>= 1
        if e:
            base = (base * base) % m
    return result


__all__ = ["UniPoly", "poly_gcd", "poly_gcdex", "poly_lcm", "exact_div", "pow_mod"]

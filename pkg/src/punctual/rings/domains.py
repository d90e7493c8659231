"""Coefficient domains.

The taxonomy is fixed: the rationals ``QQ``, prime fields ``GF(p)``, finite
extensions ``GF(p^r)`` of a prime field, rational function fields
``k(u1,...,um)`` and polynomial rings ``k[u1,...,um]`` with ``k`` either QQ
or a prime field.  Every domain exposes the same small protocol (``zero``,
``one``, ``convert``, ``is_unit``, ``inv``, ``quo``, ``fmt``, ``key``) and
its elements support the arithmetic operators directly.

Element representations:

* QQ: :class:`fractions.Fraction`
* GF(p): :class:`FpElem`
* GF(p^r): :class:`ExtElem` (coefficients of a polynomial in the generator y)
* k(u...): :class:`RatFunc` (reduced numerator/denominator ``MultiPoly``)
* k[u...]: :class:`~punctual.rings.mpoly.MultiPoly` over k
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property

from ..errors import DomainMismatch, DomainParseError, InexactDivision, NotAUnit
from . import _gfp
from ._format import join_terms, power
from .mpoly import MultiPoly, mpoly_gcd


class Domain:
    is_field = True
    is_finite = False
    characteristic = 0

    @property
    def base(self) -> "Domain":
        """The ground field k that every domain is an algebra over."""
        return self

    def is_unit(self, a) -> bool:
        return a != self.zero

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{self.fmt(a)} is not invertible in {self}")
        return self.one / a

    def quo(self, a, b):
        return a * self.inv(b)

    def fmt(self, a) -> str:
        return str(a)

    def key(self, a):
        return str(a)

    def __str__(self):
        return self.descriptor()


# -- QQ -----------------------------------------------------------------------


@dataclass(frozen=True)
class RationalField(Domain):
    def descriptor(self):
        return "QQ"

    @cached_property
    def zero(self):
        return Fraction(0)

    @cached_property
    def one(self):
        return Fraction(1)

    def convert(self, a):
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int):
            return Fraction(a)
        raise DomainMismatch(f"cannot convert {a!r} into QQ")

    def inv(self, a):
        if a == 0:
            raise NotAUnit(f"0 is not invertible in {self}")
        return 1 / a

    def key(self, a):
        # ordered by size, then sign: 0, 1, -1, 2, -2, ...
        return (abs(a), a < 0)


QQ = RationalField()


# -- GF(p) --------------------------------------------------------------------


class FpElem:
    __slots__ = ("value", "domain")

    def __init__(self, value, domain):
        self.value = value % domain.p
        self.domain = domain

    def _other(self, other):
        if isinstance(other, FpElem):
            if other.domain.p != self.domain.p:
                raise DomainMismatch(f"{self.domain} vs {other.domain}")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._other(other)
        return NotImplemented if v is None else FpElem(self.value + v, self.domain)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        return NotImplemented if v is None else FpElem(self.value - v, self.domain)

    def __rsub__(self, other):
        v = self._other(other)
        return NotImplemented if v is None else FpElem(v - self.value, self.domain)

    def __mul__(self, other):
        v = self._other(other)
        return NotImplemented if v is None else FpElem(self.value * v, self.domain)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.value, self.domain)

    def __truediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        if v % self.domain.p == 0:
            raise NotAUnit(f"division by zero in {self.domain}")
        return FpElem(self.value * pow(v, -1, self.domain.p), self.domain)

    def __rtruediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return FpElem(v, self.domain) / self

    def __pow__(self, e):
        if e < 0:
            return (self.domain.one / self) ** (-e)
        return FpElem(pow(self.value, e, self.domain.p), self.domain)

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.value == other.value and self.domain.p == other.domain.p
        if isinstance(other, int):
            return self.value == other % self.domain.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.domain.p))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value} (mod {self.domain.p})"


@dataclass(frozen=True)
class PrimeField(Domain):
    p: int
    is_finite = True

    def __post_init__(self):
        if not _gfp.is_prime(self.p):
            raise DomainParseError(f"{self.p} is not prime")

    def descriptor(self):
        return f"GF({self.p})"

    @property
    def characteristic(self):
        return self.p

    @property
    def size(self):
        return self.p

    @property
    def degree(self):
        return 1

    @cached_property
    def zero(self):
        return FpElem(0, self)

    @cached_property
    def one(self):
        return FpElem(1, self)

    def convert(self, a):
        if isinstance(a, FpElem):
            if a.domain.p != self.p:
                raise DomainMismatch(f"{a.domain} vs {self}")
            return a
        if isinstance(a, int):
            return FpElem(a, self)
        raise DomainMismatch(f"cannot convert {a!r} into {self}")

    def key(self, a):
        v = a.value if 2 * a.value <= self.p else a.value - self.p
        return (abs(v), v < 0)

    def element(self, index):
        return FpElem(index, self)

    def elements(self):
        return (FpElem(i, self) for i in range(self.p))

    def random_element(self, rng):
        return FpElem(rng.randrange(self.p), self)

    def frobenius(self, a):
        return a

    def pth_root(self, a):
        return a

    def to_prime_field(self, a):
        return a


# -- GF(p^r) ------------------------------------------------------------------


class ExtElem:
    """Element of GF(p^r): a polynomial in the generator y of degree < r."""

    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs, domain):
        self.coeffs = tuple(coeffs)
        self.domain = domain

    def _other(self, other):
        if isinstance(other, ExtElem):
            if other.domain != self.domain:
                raise DomainMismatch(f"{self.domain} vs {other.domain}")
            return list(other.coeffs)
        if isinstance(other, FpElem):
            if other.domain.p != self.domain.p:
                raise DomainMismatch(f"{self.domain} vs {other.domain}")
            return [other.value] if other.value else []
        if isinstance(other, int):
            v = other % self.domain.p
            return [v] if v else []
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExtElem(_gfp.add(list(self.coeffs), o, self.domain.p), self.domain)

    __radd__ = __add__

    def __neg__(self):
        p = self.domain.p
        return ExtElem([(-c) % p for c in self.coeffs], self.domain)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExtElem(_gfp.sub(list(self.coeffs), o, self.domain.p), self.domain)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExtElem(_gfp.sub(o, list(self.coeffs), self.domain.p), self.domain)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = self.domain
        return ExtElem(_gfp.mulmod(list(self.coeffs), o, list(d.modulus), d.p), d)

    __rmul__ = __mul__

    def __pow__(self, e):
        d = self.domain
        if e < 0:
            return (d.one / self) ** (-e)
        return ExtElem(_gfp.powmod(list(self.coeffs), e, list(d.modulus), d.p), d)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o:
            raise NotAUnit(f"division by zero in {self.domain}")
        return self * ExtElem(o, self.domain) ** (self.domain.size - 2)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExtElem(o, self.domain) / self

    def __eq__(self, other):
        if isinstance(other, ExtElem):
            return self.domain == other.domain and self.coeffs == other.coeffs
        try:
            o = self._other(other)
        except DomainMismatch:
            return False
        if o is None:
            return NotImplemented
        return list(self.coeffs) == o

    def __hash__(self):
        return hash((self.coeffs, self.domain.p, self.domain.modulus))

    def __str__(self):
        return self.domain.fmt(self)

    def __repr__(self):
        return f"ExtElem({self}, {self.domain})"


@dataclass(frozen=True)
class ExtField(Domain):
    p: int
    modulus: tuple  # monic, low-to-high, over GF(p)
    is_finite = True

    def __post_init__(self):
        if not _gfp.is_prime(self.p):
            raise DomainParseError(f"{self.p} is not prime")
        mod = list(self.modulus)
        if len(mod) < 3 or mod[-1] != 1:
            raise DomainParseError("extension modulus must be monic of degree >= 2")
        if not _gfp.is_irreducible(mod, self.p):
            raise DomainParseError(f"modulus {mod} is reducible over GF({self.p})")

    def descriptor(self):
        return f"GF({self.p}^{self.degree})"

    @property
    def degree(self):
        return len(self.modulus) - 1

    @property
    def characteristic(self):
        return self.p

    @property
    def size(self):
        return self.p ** self.degree

    @property
    def base(self):
        return PrimeField(self.p)

    @property
    def prime_field(self):
        return PrimeField(self.p)

    @cached_property
    def zero(self):
        return ExtElem((), self)

    @cached_property
    def one(self):
        return ExtElem((1,), self)

    @cached_property
    def gen(self):
        return ExtElem((0, 1), self)

    def convert(self, a):
        if isinstance(a, ExtElem):
            if a.domain != self:
                raise DomainMismatch(f"{a.domain} vs {self}")
            return a
        if isinstance(a, FpElem):
            if a.domain.p != self.p:
                raise DomainMismatch(f"{a.domain} vs {self}")
            return ExtElem([a.value] if a.value else [], self)
        if isinstance(a, int):
            v = a % self.p
            return ExtElem([v] if v else [], self)
        raise DomainMismatch(f"cannot convert {a!r} into {self}")

    def fmt(self, a):
        terms = [(a.coeffs[i], power("y", i) if i else "")
                 for i in range(len(a.coeffs) - 1, -1, -1) if a.coeffs[i]]
        return join_terms(terms, str)

    def key(self, a):
        base = self.prime_field
        return tuple(base.key(base.element(c)) for c in a.coeffs) + ((0, False),) * (self.degree - len(a.coeffs))

    def element(self, index):
        coeffs = []
        for _ in range(self.degree):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return ExtElem(_gfp.trim(coeffs), self)

    def elements(self):
        return (self.element(i) for i in range(self.size))

    def random_element(self, rng):
        return self.element(rng.randrange(self.size))

    def frobenius(self, a):
        return a ** self.p

    def pth_root(self, a):
        return a ** (self.size // self.p)

    def to_prime_field(self, a):
        """Return ``a`` as an element of GF(p); it must be a constant."""
        if len(a.coeffs) > 1:
            raise DomainMismatch(f"{a} does not lie in GF({self.p})")
        return FpElem(a.coeffs[0] if a.coeffs else 0, PrimeField(self.p))


@cache
def default_modulus(p: int, r: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree r over GF(p),
    coefficients compared low-to-high."""
    for low in itertools.product(range(p), repeat=r):
        f = list(low) + [1]
        if f[0] != 0 and _gfp.is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # impossible


@cache
def GF(p: int, r: int = 1):
    """Finite field with p**r elements; extensions use the default modulus."""
    if r == 1:
        return PrimeField(p)
    if r < 1:
        raise DomainParseError("extension degree must be >= 1")
    if not _gfp.is_prime(p):
        raise DomainParseError(f"{p} is not prime")
    return ExtField(p, default_modulus(p, r))


# -- k(u...) and k[u...] ------------------------------------------------------

_RESERVED = re.compile(r"^(x|y|t\d+|s\d+)$")
_IDENT = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


def _check_vars(vars):
    if not vars:
        raise DomainParseError("variable list must be nonempty")
    if len(set(vars)) != len(vars):
        raise DomainParseError(f"duplicate variables in {list(vars)}")
    for v in vars:
        if not _IDENT.match(v) or _RESERVED.match(v) or v in ("QQ", "GF"):
            raise DomainParseError(f"invalid or reserved variable name {v!r}")


class RatFunc:
    """Reduced fraction num/den of polynomials over k; den has leading
    coefficient 1 in graded-lex order."""

    __slots__ = ("num", "den", "domain")

    def __init__(self, num, den, domain, *, _canonical=False):
        if not _canonical:
            num, den = _reduce_fraction(num, den)
        self.num = num
        self.den = den
        self.domain = domain

    def _other(self, other):
        if isinstance(other, RatFunc):
            if other.domain != self.domain:
                raise DomainMismatch(f"{self.domain} vs {other.domain}")
            return other
        try:
            return self.domain.convert(other)
        except DomainMismatch:
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den, self.domain)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.domain, _canonical=True)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den, self.domain)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise NotAUnit(f"division by zero in {self.domain}")
        return RatFunc(self.num * o.den, self.den * o.num, self.domain)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if e < 0:
            return (self.domain.one / self) ** (-e)
        return RatFunc(self.num ** e, self.den ** e, self.domain, _canonical=True)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = self.domain.convert(other)
            except DomainMismatch:
                return False
        return self.domain == other.domain and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_polynomial(self):
        return self.den.is_constant()

    def __str__(self):
        return self.domain.fmt(self)

    def __repr__(self):
        return f"RatFunc({self}, {self.domain})"


def _reduce_fraction(num, den):
    if den.is_zero():
        raise NotAUnit("zero denominator")
    if num.is_zero():
        return num, MultiPoly.constant(den.domain.one, den.domain, den.vars)
    if not den.is_constant():
        g = mpoly_gcd(num, den)
        if not g.is_constant():
            num, den = num.exact_div(g), den.exact_div(g)
    lc = den.leading_coeff("grlex")
    if lc != den.domain.one:
        inv = den.domain.inv(lc)
        num, den = num.scale(inv), den.scale(inv)
    return num, den


@dataclass(frozen=True)
class RatFuncField(Domain):
    field: Domain
    vars: tuple

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        _check_vars(self.vars)
        if not isinstance(self.field, (RationalField, PrimeField)):
            raise DomainParseError("rational function fields are built over QQ or GF(p)")

    def descriptor(self):
        return f"{self.field.descriptor()}({','.join(self.vars)})"

    @property
    def base(self):
        return self.field

    @property
    def characteristic(self):
        return self.field.characteristic

    @cached_property
    def zero(self):
        return RatFunc(self._poly(self.field.zero), self._poly(self.field.one), self, _canonical=True)

    @cached_property
    def one(self):
        return RatFunc(self._poly(self.field.one), self._poly(self.field.one), self, _canonical=True)

    def _poly(self, c):
        return MultiPoly.constant(c, self.field, self.vars)

    def gen(self, name):
        return RatFunc(MultiPoly.gen(name, self.field, self.vars), self._poly(self.field.one), self,
                       _canonical=True)

    def gens(self):
        return [self.gen(v) for v in self.vars]

    def from_fraction(self, num, den):
        return RatFunc(num, den, self)

    def convert(self, a):
        if isinstance(a, RatFunc):
            if a.domain != self:
                raise DomainMismatch(f"{a.domain} vs {self}")
            return a
        if isinstance(a, MultiPoly):
            if a.domain != self.field or a.vars != self.vars:
                raise DomainMismatch(f"cannot convert polynomial over {a.domain}[{a.vars}] into {self}")
            return RatFunc(a, self._poly(self.field.one), self, _canonical=True)
        return RatFunc(self._poly(self.field.convert(a)), self._poly(self.field.one), self,
                       _canonical=True)

    def inv(self, a):
        if a.num.is_zero():
            raise NotAUnit(f"0 is not invertible in {self}")
        return RatFunc(a.den, a.num, self)

    def fmt(self, a):
        num = str(a.num)
        if a.den.is_constant():
            return num
        den = str(a.den)
        if " " in num:
            num = f"({num})"
        if any(ch in den for ch in " */"):
            den = f"({den})"
        return f"{num}/{den}"

    def key(self, a):
        return (str(a.den), str(a.num))


@dataclass(frozen=True)
class PolyRing(Domain):
    field: Domain
    vars: tuple
    is_field = False

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        _check_vars(self.vars)
        if not isinstance(self.field, (RationalField, PrimeField)):
            raise DomainParseError("polynomial rings are built over QQ or GF(p)")

    def descriptor(self):
        return f"{self.field.descriptor()}[{','.join(self.vars)}]"

    @property
    def base(self):
        return self.field

    @property
    def characteristic(self):
        return self.field.characteristic

    @cached_property
    def zero(self):
        return MultiPoly(self.field, self.vars)

    @cached_property
    def one(self):
        return MultiPoly.constant(self.field.one, self.field, self.vars)

    def gen(self, name):
        return MultiPoly.gen(name, self.field, self.vars)

    def gens(self):
        return [self.gen(v) for v in self.vars]

    def convert(self, a):
        if isinstance(a, MultiPoly):
            if a.domain != self.field or a.vars != self.vars:
                raise DomainMismatch(f"cannot convert polynomial over {a.domain}[{a.vars}] into {self}")
            return a
        return MultiPoly.constant(self.field.convert(a), self.field, self.vars)

    def is_unit(self, a):
        return a.is_constant() and not a.is_zero()

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{a} is not a unit in {self}")
        return MultiPoly.constant(self.field.inv(a.constant_coeff()), self.field, self.vars)

    def quo(self, a, b):
        try:
            return a.exact_div(b)
        except InexactDivision:
            raise InexactDivision(f"{b} does not divide {a} in {self}") from None


# -- descriptors --------------------------------------------------------------

_DESCRIPTOR = re.compile(
    r"^(?P<base>QQ|GF\((?P<p>\d+)(?:\^(?P<r>\d+))?\))"
    r"(?:(?P<open>[(\[])(?P<vars>[^()\[\]]*)(?P<close>[)\]]))?$"
)


def parse_domain(text: str) -> Domain:
    """Parse ``QQ``, ``GF(p)``, ``GF(p^r)``, ``QQ(u,...)``, ``GF(p)(u,...)``,
    ``QQ[u,...]`` or ``GF(p)[u,...]``."""
    s = re.sub(r"\s+", "", text or "")
    m = _DESCRIPTOR.match(s)
    if not m:
        raise DomainParseError(f"unrecognised domain descriptor {text!r}")
    if m["p"] is None:
        base = QQ
    else:
        p, r = int(m["p"]), int(m["r"] or 1)
        if not _gfp.is_prime(p):
            raise DomainParseError(f"{p} is not prime")
        base = GF(p, r)
    if m["open"] is None:
        return base
    if (m["open"], m["close"]) not in (("(", ")"), ("[", "]")):
        raise DomainParseError(f"mismatched brackets in {text!r}")
    if isinstance(base, ExtField):
        raise DomainParseError("function fields and polynomial rings must be built over QQ or GF(p)")
    vars = tuple(v for v in m["vars"].split(","))
    if m["open"] == "(":
        return RatFuncField(base, vars)
    return PolyRing(base, vars)


def domain_of(a) -> Domain:
    if isinstance(a, Fraction):
        return QQ
    if isinstance(a, (FpElem, ExtElem, RatFunc)):
        return a.domain
    if isinstance(a, MultiPoly):
        return PolyRing(a.domain, a.vars)
    raise DomainMismatch(f"{a!r} is not an element of a supported domain")

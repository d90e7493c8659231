"""The ring H_n = U^{-1} k[s_1(t), ..., s_n(t)] and its points.

U is the multiplicative set of norms s_n(g(t)) with g in k[x], g(0) != 0.
An element of H_n is kept as a polynomial in s1..sn over a formal product
of such norms; denominators are never cancelled, so membership in U stays
visible.  A k-algebra map H_n -> A is the same thing as a monic F over A
that passes the freeness check, and the functions below move between the
two descriptions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .errors import ArityMismatch, InvariantViolation, NotAUnit, NotInHilb, UnsupportedDomain, ZeroIdeal
from .freeness import Verdict, check_family, strip_units
from .norms import MonicFamily, norm_coeffs
from .rings import QQ, PolyRing, UniPoly, poly_gcd
from .sympoly import EBasisPoly, ebasis_eval


@lru_cache(maxsize=None)
def _generic_ring(k, n):
    # e1..en stand in for s1..sn, which are reserved as domain variables
    return PolyRing(k, tuple(f"e{i}" for i in range(1, n + 1)))


@lru_cache(maxsize=1024)
def norm_ebasis(g: UniPoly, n: int) -> EBasisPoly:
    """s_n(g(t)) written in s1..sn, read off the generic family
    x^n - e1 x^(n-1) + ... over k[e1..en]."""
    R = _generic_ring(g.domain, n)
    F = MonicFamily(tuple(R.gens()), R)
    top = norm_coeffs(F, g.change_domain(R)).top
    return EBasisPoly(g.domain, n, top.terms)


def _ebasis_one(k, n):
    return EBasisPoly(k, n, {(0,) * n: k.one})


class HnElement:
    """numerator / prod(s_n(g) for g in denominator)."""

    __slots__ = ("num", "den")

    def __init__(self, num: EBasisPoly, den=()):
        k = num.domain
        scale = k.one
        monic = []
        for g in den:
            if g.domain != k:
                raise ArityMismatch(f"denominator {g} is over {g.domain}, expected {k}")
            if g.is_zero() or g.coeff(0) == k.zero:
                raise NotAUnit(f"{g} is not in U: g(0) must be nonzero")
            # s_n(c*g) = c^n s_n(g)
            scale = scale * g.lc ** num.n
            monic.append(g.monic())
        if scale != k.one:
            num = EBasisPoly(k, num.n, num.scale(k.inv(scale)).terms)
        self.num = num
        self.den = tuple(sorted(monic, key=lambda g: g.key()))

    @property
    def n(self):
        return self.num.n

    @property
    def domain(self):
        return self.num.domain

    @classmethod
    def s(cls, i, n, k=QQ):
        e = [0] * n
        e[i - 1] = 1
        return cls(EBasisPoly(k, n, {tuple(e): k.one}))

    @classmethod
    def constant(cls, c, n, k=QQ):
        return cls(EBasisPoly(k, n, {(0,) * n: k.convert(c)}))

    @classmethod
    def inverse_norm(cls, g, n):
        return cls(_ebasis_one(g.domain, n), (g,))

    def _coerce(self, other):
        if isinstance(other, HnElement):
            if other.n != self.n or other.domain != self.domain:
                raise ArityMismatch(f"H_{self.n} over {self.domain} vs H_{other.n} over {other.domain}")
            return other
        return HnElement.constant(other, self.n, self.domain)

    def _den_product(self, dens):
        out = _ebasis_one(self.domain, self.n)
        for g in dens:
            out = out * norm_ebasis(g, self.n)
        return out

    def __add__(self, other):
        other = self._coerce(other)
        a, b = Counter(self.den), Counter(other.den)
        lcm = a | b
        num = (self.num * self._den_product((lcm - a).elements())
               + other.num * self._den_product((lcm - b).elements()))
        return HnElement(EBasisPoly(self.domain, self.n, num.terms), tuple(lcm.elements()))

    __radd__ = __add__

    def __neg__(self):
        return HnElement(EBasisPoly(self.domain, self.n, (-self.num).terms), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        num = self.num * other.num
        return HnElement(EBasisPoly(self.domain, self.n, num.terms), self.den + other.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HnElement):
            try:
                other = self._coerce(other)
            except Exception:
                return NotImplemented
        if other.n != self.n:
            return False
        return self.num * self._den_product(other.den) == other.num * self._den_product(self.den)

    __hash__ = None

    def is_zero(self):
        return self.num.is_zero()

    def __str__(self):
        num = str(self.num)
        if not self.den:
            return num
        parts = [f"s{self.n}({g})" for g in self.den]
        if " " in num:
            num = f"({num})"
        return f"{num}/({'*'.join(parts)})" if len(parts) > 1 else f"{num}/{parts[0]}"

    def __repr__(self):
        return f"HnElement({str(self)!r})"


@dataclass(frozen=True)
class HnRing:
    """H_n over k, enough of the domain protocol to carry the universal family."""

    k: object
    n: int
    is_field = False

    @property
    def zero(self):
        return HnElement.constant(0, self.n, self.k)

    @property
    def one(self):
        return HnElement.constant(1, self.n, self.k)

    @property
    def base(self):
        return self.k

    def convert(self, a):
        if isinstance(a, HnElement):
            return a
        return HnElement.constant(a, self.n, self.k)

    def is_unit(self, a):
        return not a.num.is_zero() and a.num.is_constant()

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{a} is not invertible in {self}")
        c = a.num.constant_coeff()
        num = self._ebasis(self.k.inv(c))
        prod = _ebasis_one(self.k, self.n)
        for g in a.den:
            prod = prod * norm_ebasis(g, self.n)
        return HnElement(EBasisPoly(self.k, self.n, (prod * num).terms))

    def quo(self, a, b):
        return a * self.inv(b)

    def _ebasis(self, c):
        return EBasisPoly(self.k, self.n, {(0,) * self.n: c})

    def fmt(self, a):
        return str(a)

    def key(self, a):
        return str(a)

    def descriptor(self):
        return f"H_{self.n}({self.k.descriptor()})"

    def __str__(self):
        return self.descriptor()


def hn_arith(a: HnElement, b: HnElement, op: str) -> HnElement:
    if a.n != b.n:
        raise ArityMismatch(f"H_{a.n} vs H_{b.n}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def universal_family(n: int, k=QQ) -> MonicFamily:
    """F_n(x) = x^n - s1 x^(n-1) + ... + (-1)^n sn over H_n."""
    if n < 1:
        raise ArityMismatch("n must be at least 1")
    return MonicFamily(tuple(HnElement.s(i, n, k) for i in range(1, n + 1)), HnRing(k, n))


@dataclass(frozen=True)
class HilbPoint:
    domain: object
    u: tuple
    verdict: Verdict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.domain.convert(a) for a in self.u))
        verdict = self.verdict
        if verdict is None or verdict.family != self.family:
            verdict = check_family(self.family)
            object.__setattr__(self, "verdict", verdict)
        if not verdict.good:
            raise NotInHilb(f"{self.family} does not define a point of H_{len(self.u)}",
                            witness=verdict.witness)

    @property
    def n(self):
        return len(self.u)

    @property
    def family(self) -> MonicFamily:
        return MonicFamily(self.u, self.domain)


def hn_eval(a: HnElement, at: HilbPoint):
    """Image of a under the map H_n -> A sending s_i to u_i."""
    if a.n != at.n:
        raise ArityMismatch(f"H_{a.n} element at a point with n = {at.n}")
    A = at.domain
    if A.base != a.domain:
        raise ArityMismatch(f"H_n over {a.domain} evaluated in {A}")
    value = ebasis_eval(a.num, at.u, A)
    F = at.family
    den = A.one
    for g in a.den:
        den = den * norm_coeffs(F, g.change_domain(A)).top
    if not A.is_unit(den):
        raise InvariantViolation(f"denominator of {a} maps to the non-unit {A.fmt(den)} at a Good point")
    return value * A.inv(den)


def classify_family(F: MonicFamily, seed: int = 0) -> HilbPoint:
    verdict = check_family(F, seed)
    if not verdict.good:
        raise NotInHilb(f"{F} does not define a point of H_{F.n}", witness=verdict.witness)
    return HilbPoint(F.domain, F.u, verdict)


def family_from_point(u, domain) -> MonicFamily:
    u = tuple(u)
    if not u:
        raise ArityMismatch("u must be nonempty")
    return MonicFamily(u, domain)


class PointTest(NamedTuple):
    ok: bool
    witness: UniPoly | None


def is_point_of_hn(u, domain, seed: int = 0) -> PointTest:
    if not domain.is_field:
        raise UnsupportedDomain(f"{domain} is not a field")
    try:
        classify_family(family_from_point(u, domain), seed)
    except NotInHilb as exc:
        return PointTest(False, exc.witness)
    return PointTest(True, None)


@dataclass(frozen=True)
class IdealPresentation:
    domain: object
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ZeroIdeal("an ideal needs at least one generator")
        for g in gens:
            if g.domain != self.domain:
                raise ArityMismatch(f"generator {g} is over {g.domain}, expected {self.domain}")
        object.__setattr__(self, "generators", gens)


def ideal_monic_generator(I: IdealPresentation, seed: int = 0):
    """(F, rank): the monic generator of I in K (x) k[x]_(x) and deg F."""
    if not I.domain.is_field or isinstance(I.domain, HnRing):
        raise UnsupportedDomain(f"{I.domain} is not a supported field")
    d = UniPoly.zero(I.domain)
    for g in I.generators:
        d = poly_gcd(d, g)
    if d.is_zero():
        raise ZeroIdeal("every generator is zero")
    f = strip_units(d, seed).f_part
    return MonicFamily.from_poly(f), f.degree

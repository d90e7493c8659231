"""Univariate factorization over QQ, GF(p) and GF(p^r).

Finite fields: squarefree decomposition, distinct-degree splitting, then
Cantor-Zassenhaus equal-degree splitting driven by a seeded RNG.

QQ: squarefree decomposition (Yun), rational-root extraction, then
Kronecker's method on what is left.  Inputs whose root-free part exceeds
degree 8 raise :class:`DegreeCapExceeded`.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from ..errors import DegreeCapExceeded, UnsupportedDomain
from .domains import ExtField, PrimeField, RationalField
from .upoly import UniPoly, poly_gcd, pow_mod

KRONECKER_DEGREE_CAP = 8


def factor_univariate(f: UniPoly, seed: int = 0):
    """Return ``[(monic irreducible, multiplicity), ...]`` sorted by
    (degree, coefficients).  ``f == lc(f) * prod(q**m)``."""
    dom = f.domain
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    if isinstance(dom, RationalField):
        pieces = _factor_qq(f)
    elif isinstance(dom, (PrimeField, ExtField)):
        pieces = _factor_ff(f, random.Random(seed))
    else:
        raise UnsupportedDomain(f"factorization is not available over {dom}")
    merged = {}
    for q, m in pieces:
        merged[q] = merged.get(q, 0) + m
    return sorted(merged.items(), key=lambda qm: qm[0].key())


def irreducible_factors(f: UniPoly, seed: int = 0):
    return [q for q, _ in factor_univariate(f, seed)]


# -- finite fields ------------------------------------------------------------


def sqf_list_ff(f: UniPoly):
    """Squarefree decomposition of a monic polynomial over a finite field."""
    dom = f.domain
    p = dom.characteristic
    out = []
    c = poly_gcd(f, f.derivative())
    w = f.exact_div(c)
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        fac = w.exact_div(y)
        if fac.degree > 0:
            out.append((fac, i))
        w = y
        c = c.exact_div(y)
        i += 1
    if c.degree > 0:
        # c = h(x^p): take p-th roots of the coefficients
        root = UniPoly([dom.pth_root(c.coeff(j * p)) for j in range(c.degree // p + 1)], dom)
        out.extend((g, m * p) for g, m in sqf_list_ff(root))
    return out


def ddf(f: UniPoly):
    """Distinct-degree factorization of a monic squarefree polynomial:
    ``[(product of all irreducible factors of degree d, d), ...]``."""
    dom = f.domain
    q = dom.size
    x = UniPoly.x(dom)
    out = []
    g = f
    h = x % g if g.degree > 0 else x
    d = 1
    while g.degree >= 2 * d:
        h = pow_mod(h, q, g)
        block = poly_gcd(g, h - x)
        if block.degree > 0:
            out.append((block, d))
            g = g.exact_div(block)
            h = h % g
        d += 1
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _random_poly(dom, n, rng):
    return UniPoly([dom.random_element(rng) for _ in range(n)], dom)


def edf(f: UniPoly, d: int, rng: random.Random):
    """Split a monic product of distinct irreducibles of degree d."""
    if f.degree == d:
        return [f]
    dom = f.domain
    q = dom.size
    while True:
        a = _random_poly(dom, f.degree, rng)
        if a.degree < 1:
            continue
        if q % 2:
            b = pow_mod(a, (q ** d - 1) // 2, f) - 1
        else:
            # absolute trace to GF(2)
            t = a % f
            b = t
            for _ in range(dom.degree * d - 1):
                t = (t * t) % f
                b = b + t
        g = poly_gcd(f, b)
        if 0 < g.degree < f.degree:
            return edf(g, d, rng) + edf(f.exact_div(g), d, rng)


def _factor_ff(f, rng):
    out = []
    for s, m in sqf_list_ff(f.monic()):
        for block, d in ddf(s):
            out.extend((g, m) for g in edf(block, d, rng))
    return out


def is_irreducible_ff(f: UniPoly) -> bool:
    """Distinct-degree certificate: a single block of full degree."""
    if f.degree < 1:
        return False
    g = f.monic()
    if poly_gcd(g, g.derivative()).degree > 0:
        return False
    blocks = ddf(g)
    return len(blocks) == 1 and blocks[0][1] == g.degree


# -- QQ -----------------------------------------------------------------------


def _sqf_list_qq(f: UniPoly):
    """Yun's squarefree decomposition of a monic polynomial over QQ."""
    out = []
    df = f.derivative()
    b = poly_gcd(f, df)
    c = f.exact_div(b)
    d = df.exact_div(b) - c.derivative()
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        i += 1
    return out


def _integer_primitive(f: UniPoly):
    """Integer coefficient list of a primitive multiple of f, positive lc."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    if ints[-1] < 0:
        ints = [-v for v in ints]
    return ints


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _eval_int(P, a):
    acc = 0
    for c in reversed(P):
        acc = acc * a + c
    return acc


def _rational_roots(P):
    """Rational roots of an integer polynomial with P(0) != 0."""
    roots = []
    for num in _divisors(P[0]):
        for den in _divisors(P[-1]):
            if math.gcd(num, den) != 1:
                continue
            for r in (Fraction(num, den), Fraction(-num, den)):
                if _eval_frac(P, r) == 0:
                    roots.append(r)
    return roots


def _eval_frac(P, r):
    # scaled by den**deg to stay in integers
    n, d = r.numerator, r.denominator
    deg = len(P) - 1
    return sum(c * n ** i * d ** (deg - i) for i, c in enumerate(P))


def _int_divmod(P, H):
    """Exact integer division P / H, or None."""
    P = list(P)
    dh = len(H) - 1
    q = [0] * (len(P) - dh)
    for k in range(len(P) - 1, dh - 1, -1):
        c, r = divmod(P[k], H[-1])
        if r:
            return None
        q[k - dh] = c
        for i, h in enumerate(H):
            P[k - dh + i] -= c * h
    if any(P):
        return None
    return q


def _interpolate(xs, ys):
    """Lagrange interpolation over QQ; coefficient list low-to-high."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = 1
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i], denom)
        for k in range(n):
            coeffs[k] += scale * basis[k]
    return coeffs


def _kronecker_factor(P):
    """A nontrivial integer factor of P (no rational roots), or None."""
    n = len(P) - 1
    candidates = []
    a = 0
    while len(candidates) < 4 * n + 8:
        for b in ((a,) if a == 0 else (a, -a)):
            v = _eval_int(P, b)
            if v:
                candidates.append((len(_divisors(v)), abs(b), b, v))
        a += 1
    candidates.sort()
    for d in range(2, n // 2 + 1):
        pts = candidates[: d + 1]
        xs = [c[2] for c in pts]
        choices = []
        for k, c in enumerate(pts):
            divs = _divisors(c[3])
            choices.append(divs if k == 0 else divs + [-v for v in divs])
        for ys in itertools.product(*choices):
            coeffs = _interpolate(xs, ys)
            if any(c.denominator != 1 for c in coeffs):
                continue
            H = [int(c) for c in coeffs]
            while H and H[-1] == 0:
                H.pop()
            if len(H) - 1 != d:
                continue
            if P[-1] % H[-1]:
                continue
            if _int_divmod(P, H) is not None:
                return H
    return None


def _split_integer(P):
    if len(P) - 1 <= 3:
        return [P]
    if len(P) - 1 > KRONECKER_DEGREE_CAP:
        raise DegreeCapExceeded(
            f"degree {len(P) - 1} exceeds the Kronecker cap of {KRONECKER_DEGREE_CAP}")
    H = _kronecker_factor(P)
    if H is None:
        return [P]
    return _split_integer(H) + _split_integer(_int_divmod(P, H))


def _factor_qq(f: UniPoly):
    dom = f.domain
    out = []
    for s, m in _sqf_list_qq(f.monic()):
        if s.coeff(0) == 0:
            out.append((UniPoly.x(dom), m))
            s = s.exact_div(UniPoly.x(dom))
            if s.degree < 1:
                continue
        P = _integer_primitive(s)
        for r in _rational_roots(P):
            lin = UniPoly([-r, 1], dom)
            out.append((lin, m))
            s = s.exact_div(lin)
        if s.degree < 1:
            continue
        for H in _split_integer(_integer_primitive(s)):
            out.append((UniPoly([Fraction(c) for c in H], dom).monic(), m))
    return out

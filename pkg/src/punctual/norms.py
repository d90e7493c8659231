"""Symmetrizing operators s_{F,i}(G(t)) through the multiplication operator.

For a monic F of degree n over a ring A, A[x]/(F) is free with basis
1, x, ..., x^(n-1).  Multiplication by G is an n x n matrix M over A, and
s_{F,i}(G(t)) is the i-th signed coefficient of its characteristic
polynomial::

    det(lambda - M) = lambda^n - s_1 lambda^(n-1) + ... + (-1)^n s_n

The characteristic polynomial is computed with Berkowitz's division-free
algorithm, so everything works over any commutative domain in the taxonomy
(including GF(p) with p <= n and polynomial rings).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainMismatch, InvariantViolation, NotAUnit, NotMonic
from .rings import UniPoly


@dataclass(frozen=True)
class MonicFamily:
    """F(x) = x^n - u_1 x^(n-1) + u_2 x^(n-2) - ... + (-1)^n u_n."""

    u: tuple
    domain: object

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.domain.convert(a) for a in self.u))

    @property
    def n(self) -> int:
        return len(self.u)

    def to_poly(self) -> UniPoly:
        n = self.n
        coeffs = [self.domain.zero] * (n + 1)
        coeffs[n] = self.domain.one
        for i, ui in enumerate(self.u, start=1):
            coeffs[n - i] = ui if i % 2 == 0 else -ui
        return UniPoly(coeffs, self.domain)

    @classmethod
    def from_poly(cls, f: UniPoly) -> "MonicFamily":
        if f.is_zero() or not f.is_monic():
            raise NotMonic(f"{f} is not monic")
        n = f.degree
        u = [f.coeff(n - i) if i % 2 == 0 else -f.coeff(n - i) for i in range(1, n + 1)]
        return cls(tuple(u), f.domain)

    def __str__(self):
        return str(self.to_poly())


@dataclass(frozen=True)
class NormCoeffs:
    n: int
    s: tuple  # s[0] is s_{F,1}, s[-1] is s_{F,n}

    def __getitem__(self, i):
        """1-based access: ``coeffs[i]`` is s_{F,i}; ``coeffs[0]`` is 1."""
        if i == 0:
            return 1
        return self.s[i - 1]

    @property
    def top(self):
        return self.s[-1]


def _check(F: MonicFamily, G: UniPoly):
    if G.domain != F.domain:
        raise DomainMismatch(f"F over {F.domain}, G over {G.domain}")


def mul_matrix(F: MonicFamily, G: UniPoly):
    """Rows of the matrix of multiplication by G on A[x]/(F); column j holds
    the coordinates of G * x^j."""
    _check(F, G)
    n, dom = F.n, F.domain
    f = F.to_poly()
    col = G % f
    cols = []
    for _ in range(n):
        cols.append([col.coeff(i) for i in range(n)])
        col = col.shift(1) % f
    return [[cols[j][i] for j in range(n)] for i in range(n)] if n else []


def charpoly(M, domain):
    """Berkowitz: coefficients [1, c_1, ..., c_n] of det(lambda*I - M),
    highest degree first.  Uses only ring operations."""
    n = len(M)
    vec = [domain.one]
    for r in range(n):
        a = M[r][r]
        row = M[r][:r]
        col = [M[i][r] for i in range(r)]
        toeplitz = [domain.one, -a]
        v = col
        for _ in range(r):
            dot = domain.zero
            for x, y in zip(row, v):
                dot = dot + x * y
            toeplitz.append(-dot)
            v = [sum((M[i][j] * v[j] for j in range(r)), domain.zero) for i in range(r)]
        new = []
        for i in range(r + 2):
            acc = domain.zero
            for j in range(min(i, r) + 1):
                acc = acc + toeplitz[i - j] * vec[j]
            new.append(acc)
        vec = new
    return vec


def norm_coeffs(F: MonicFamily, G: UniPoly) -> NormCoeffs:
    """s_{F,1}(G(t)), ..., s_{F,n}(G(t))."""
    M = mul_matrix(F, G)
    c = charpoly(M, F.domain)
    s = tuple(c[i] if i % 2 == 0 else -c[i] for i in range(1, F.n + 1))
    return NormCoeffs(F.n, s)


def _alternating(G: UniPoly, s, upto):
    """sum_{i=0..upto} (-1)^i s_i G^(upto - i) with s_0 = 1, by Horner."""
    acc = UniPoly.one(G.domain)
    for i in range(1, upto + 1):
        acc = acc * G + (s[i - 1] if i % 2 == 0 else -s[i - 1])
    return acc


def cofactor(F: MonicFamily, G: UniPoly) -> UniPoly:
    """H^u(x) with G^n - s_1 G^(n-1) + ... + (-1)^n s_n == H^u * F."""
    s = norm_coeffs(F, G).s
    total = _alternating(G, s, F.n)
    q, r = total.divmod(F.to_poly())
    if not r.is_zero():
        raise InvariantViolation(f"F does not divide the alternating sum for G = {G}; remainder {r}")
    return q


def inverse_mod(F: MonicFamily, G: UniPoly) -> UniPoly:
    """R with deg R < n and G*R = 1 in A[x]/(F), built from the norm."""
    _check(F, G)
    dom = F.domain
    n = F.n
    f = F.to_poly()
    s = norm_coeffs(F, G).s
    top = s[-1] if n else dom.one
    if not dom.is_unit(top):
        raise NotAUnit(f"s_(F,n)(G(t)) = {dom.fmt(top)} is not a unit in {dom}")
    g = G % f
    bracket = _alternating(g, s, n - 1) % f
    scalar = dom.inv(top)
    if n % 2 == 0:
        scalar = -scalar
    R = bracket.scale(scalar)
    if (G * R) % f != UniPoly.one(dom) % f:
        raise InvariantViolation(f"inverse check failed for G = {G} modulo {f}")
    return R

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from punctual.errors import DomainMismatch, NotAUnit, NotMonic
from punctual.norms import MonicFamily, charpoly, cofactor, inverse_mod, mul_matrix, norm_coeffs
from punctual.rings import GF, QQ, UniPoly, parse_domain

X = UniPoly.x(QQ)
Fr = Fraction


def esym(values, i):
    out = 0
    for combo in itertools.combinations(values, i):
        prod = 1
        for v in combo:
            prod = prod * v
        out = out + prod
    return out


def test_family_sign_convention():
    F = MonicFamily((3, 2), QQ)
    assert F.to_poly() == X ** 2 - 3 * X + 2
    assert MonicFamily.from_poly(X ** 3 - 2 * X + 5).u == (0, -2, -5)
    f = X ** 4 + 3 * X ** 3 - X + 7
    assert MonicFamily.from_poly(f).to_poly() == f
    with pytest.raises(NotMonic):
        MonicFamily.from_poly(2 * X)


def test_mul_matrix_examples():
    assert mul_matrix(MonicFamily.from_poly(X ** 2), X) == [[0, 0], [1, 0]]
    assert mul_matrix(MonicFamily((3, 2), QQ), X) == [[0, -2], [1, 3]]
    F = MonicFamily((1, 5, -2), QQ)
    assert mul_matrix(F, UniPoly.one(QQ)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    with pytest.raises(DomainMismatch):
        mul_matrix(F, UniPoly.x(GF(7)))


def test_norm_coeffs_examples():
    assert norm_coeffs(MonicFamily((3, 2), QQ), X + 1).s == (5, 6)
    assert norm_coeffs(MonicFamily((0, 0), QQ), X + 1).s == (2, 1)
    K = parse_domain("QQ(u)")
    u = K.gen("u")
    assert norm_coeffs(MonicFamily((u,), K), UniPoly.x(K) + 1).s == (u + 1,)


def test_cofactor_examples():
    assert cofactor(MonicFamily.from_poly(X ** 2), X) == UniPoly.one(QQ)
    assert cofactor(MonicFamily((3, 2), QQ), X + 1) == UniPoly.one(QQ)
    K = parse_domain("QQ(u)")
    u = K.gen("u")
    Xk = UniPoly.x(K)
    assert cofactor(MonicFamily((u,), K), Xk ** 2) == Xk + u


def test_inverse_examples():
    F = MonicFamily((3, 2), QQ)
    R = inverse_mod(F, X + 1)
    assert R == (4 - X).scale(Fr(1, 6))
    assert (X + 1) * (4 - X) == 6 - F.to_poly()
    for n in range(1, 5):
        assert inverse_mod(MonicFamily((0,) * n, QQ), UniPoly.one(QQ)) == UniPoly.one(QQ)
    with pytest.raises(NotAUnit):
        inverse_mod(F, X - 1)


def test_charpoly_matches_permutation_expansion():
    # det(lambda - M) through the Leibniz formula at several lambda values
    rng = random.Random(2)

    def det(M):
        n = len(M)
        total = Fr(0)
        for perm in itertools.permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            prod = Fr(sign)
            for i in range(n):
                prod *= M[i][perm[i]]
            total += prod
        return total

    for _ in range(15):
        n = rng.randint(1, 4)
        M = [[Fr(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
        c = charpoly(M, QQ)
        for lam in range(-2, 3):
            shifted = [[(lam if i == j else 0) - M[i][j] for j in range(n)] for i in range(n)]
            assert sum(ci * lam ** (n - i) for i, ci in enumerate(c)) == det(shifted)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4),
       st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_norms_against_explicit_roots(roots, gcoeffs):
    F = UniPoly.one(QQ)
    for r in roots:
        F = F * (X - r)
    G = UniPoly([Fr(c) for c in gcoeffs], QQ)
    values = [G(Fr(r)) for r in roots]
    s = norm_coeffs(MonicFamily.from_poly(F), G).s
    assert list(s) == [esym(values, i) for i in range(1, len(roots) + 1)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 7]), st.lists(st.integers(0, 6), min_size=1, max_size=4),
       st.lists(st.integers(0, 6), min_size=1, max_size=4), st.lists(st.integers(0, 6), min_size=1, max_size=4))
def test_top_norm_is_multiplicative(p, u, g1, g2):
    dom = GF(p)
    F = MonicFamily(tuple(u), dom)
    G1, G2 = UniPoly(g1, dom), UniPoly(g2, dom)
    assert norm_coeffs(F, G1 * G2).top == norm_coeffs(F, G1).top * norm_coeffs(F, G2).top


@pytest.mark.parametrize("dom", [QQ, GF(2), GF(3), GF(7)], ids=str)
def test_cayley_hamilton_and_inverse(dom):
    # small characteristic included: Berkowitz needs no division by n
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 4)
        F = MonicFamily(tuple(dom.convert(rng.randint(-3, 3)) for _ in range(n)), dom)
        G = UniPoly([dom.convert(rng.randint(-3, 3)) for _ in range(rng.randint(1, 5))], dom)
        H = cofactor(F, G)
        s = norm_coeffs(F, G).s
        total = UniPoly.one(dom)
        for i in range(1, n + 1):
            total = total * G + (s[i - 1] if i % 2 == 0 else -s[i - 1])
        assert total == H * F.to_poly()
        f = F.to_poly()
        if s[-1] != dom.zero:
            R = inverse_mod(F, G)
            assert R.degree < n
            assert (G * R) % f == UniPoly.one(dom) % f
        else:
            with pytest.raises(NotAUnit):
                inverse_mod(F, G)


def test_norms_over_polynomial_ring():
    R = parse_domain("QQ[a,b]")
    a, b = R.gens()
    F = MonicFamily((a, b), R)
    Xr = UniPoly.x(R)
    s = norm_coeffs(F, Xr + 1).s
    # roots r1, r2 with r1 + r2 = a, r1 r2 = b: (r1+1)(r2+1) = b + a + 1
    assert s == (a + 2, a + b + 1)
    with pytest.raises(NotAUnit):
        inverse_mod(F, Xr + 1)
    assert inverse_mod(MonicFamily((R.zero, R.zero), R), Xr + 1) == 1 - Xr

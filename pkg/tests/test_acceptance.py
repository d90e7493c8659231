"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line
with its wall time against the allowed budget."""

import itertools
import pathlib
import random
import time
from contextlib import contextmanager

import pytest

from cli_fixtures import ALL
from punctual.cli import render, run
from punctual.errors import NotAUnit
from punctual.freeness import check_family, lemma22_factor, strip_units
from punctual.hilbert import (HilbPoint, HnElement, IdealPresentation, classify_family, family_from_point,
                              hn_eval, ideal_monic_generator, is_point_of_hn)
from punctual.norms import MonicFamily, cofactor, inverse_mod, norm_coeffs
from punctual.rings import GF, QQ, UniPoly, minimal_polynomial_over_base, parse_domain, product_over_roots
from punctual.samples import bad_funcfield_family, family, good_funcfield_family, poly, unit_poly
from punctual.sympoly import ebasis_eval, ebasis_reduce, symmetric_coeff

K = parse_domain("QQ(u)")
U = K.gen("u")
GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def timed(label, budget):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            ok = ok and elapsed < budget
            with capsys.disabled():
                print(f"\n{'PASS' if ok else 'FAIL'} {label} ({elapsed:.2f}s / {budget}s)")
        assert elapsed < budget, f"{label} took {elapsed:.2f}s"
    return timed


def _random_case(rng, dom):
    F = family(rng, dom, rng.randint(1, 4))
    G = poly(rng, dom, rng.randint(0, 4))
    return F, G


def test_c01_alternating_sum_identity(criterion):
    with criterion("C1 alternating-sum identity and cofactor, 500 cases x {QQ, GF(7)}", 30):
        for dom in (QQ, GF(7)):
            rng = random.Random(f"c1:{dom}")
            for _ in range(500):
                F, G = _random_case(rng, dom)
                f, s = F.to_poly(), norm_coeffs(F, G).s
                total = UniPoly.zero(dom)
                for i in range(F.n + 1):
                    si = dom.one if i == 0 else s[i - 1]
                    term = (G ** (F.n - i)).scale(si)
                    total = total + (term if i % 2 == 0 else -term)
                assert total % f == UniPoly.zero(dom)
                assert cofactor(F, G) * f == total


def test_c02_two_route_norms(criterion):
    with criterion("C2 matrix route equals e-basis route, 200 cases x {QQ, GF(7)}", 60):
        for dom in (QQ, GF(7)):
            rng = random.Random(f"c2:{dom}")
            for _ in range(200):
                F, G = _random_case(rng, dom)
                s = norm_coeffs(F, G).s
                for i in range(1, F.n + 1):
                    q = ebasis_reduce(symmetric_coeff(G, F.n, i))
                    assert ebasis_eval(q, F.u, dom) == s[i - 1]


def test_c03_inverse_mod(criterion):
    with criterion("C3 inverse modulo F or NotAUnit, 200 cases", 10):
        rng = random.Random("c3")
        seen = {True: 0, False: 0}
        for j in range(200):
            dom = (QQ, GF(7))[j % 2]
            F, G = _random_case(rng, dom)
            f = F.to_poly()
            if norm_coeffs(F, G).top != dom.zero:
                R = inverse_mod(F, G)
                assert (G * R) % f == UniPoly.one(dom) % f
                seen[True] += 1
            else:
                with pytest.raises(NotAUnit):
                    inverse_mod(F, G)
                seen[False] += 1
        assert seen[True] and seen[False]


def test_c04_product_over_roots(criterion):
    with criterion("C4 product over roots equals top norm, 100 cases", 30):
        rng = random.Random("c4")
        for j in range(100):
            p = (5, 7, 11)[j % 3]
            r = rng.randint(1, 4)
            k, E = GF(p), GF(p, r)
            f = UniPoly.one(k)
            for _ in range(rng.randint(1, 2)):
                a = E.random_element(rng)
                f = f * minimal_polynomial_over_base(UniPoly([-a, E.one], E))
            g = poly(rng, k, rng.randint(0, 4))
            F = MonicFamily.from_poly(f)
            assert product_over_roots(F, g, r) == norm_coeffs(F, g).top


def test_c05_freeness_checker(criterion):
    with criterion("C5 freeness checker: counterexamples, witness soundness, Good consequences", 60):
        X = UniPoly.x(QQ)
        R = parse_domain("QQ[u]")
        v = check_family(MonicFamily.from_poly(X - 1))
        assert not v.good and v.verify() and v.witness == X - 1
        v = check_family(MonicFamily.from_poly(UniPoly.x(R) - R.gen("u")))
        assert not v.good and v.verify()
        for dom in (QQ, GF(7), R):
            for n in range(1, 6):
                assert check_family(MonicFamily((dom.zero,) * n, dom)).good
        XK = UniPoly.x(K)
        assert check_family(MonicFamily.from_poly(XK - U)).good
        assert check_family(MonicFamily.from_poly(XK ** 2 - U)).good

        rng = random.Random("c5b")
        for _ in range(100):
            F, _ = bad_funcfield_family(rng, K, rng.randint(1, 4))
            v = check_family(F)
            assert not v.good
            w = v.witness.change_domain(K)
            assert w.divides(F.to_poly())
            assert norm_coeffs(F, w).top == K.zero

        rng = random.Random("c5c")
        goods = [MonicFamily((QQ.zero,) * 4, QQ), MonicFamily((GF(7).zero,) * 3, GF(7)),
                 MonicFamily((GF(2, 3).zero,) * 2, GF(2, 3)), good_funcfield_family(rng, K, 3)]
        for F in goods:
            dom = F.domain
            assert check_family(F).good
            f = F.to_poly()
            for _ in range(200):
                g = unit_poly(rng, dom.base, rng.randint(1, 6)).change_domain(dom)
                assert norm_coeffs(F, g).top != dom.zero
                Rinv = inverse_mod(F, g)
                assert (g * Rinv) % f == UniPoly.one(dom) % f


def _lemma22_ok(G, expect_drop):
    g, I, H = lemma22_factor(G)
    dom = G.domain
    assert I * g.change_domain(dom) == H * G
    assert g.coeff(0) != g.domain.zero
    if expect_drop:
        assert I.degree < G.degree
    assert strip_units(I).unit_part == UniPoly.one(dom)


def test_c06_lemma22(criterion):
    with criterion("C6 unit-factor splitting, 100 over QQ(u) and 50 over GF(4)/GF(8)", 60):
        rng = random.Random("c6")
        XK = UniPoly.x(K)
        for j in range(100):
            if j % 2:
                F, _ = bad_funcfield_family(rng, K, rng.randint(1, 4))
                drop = True
            else:
                F = good_funcfield_family(rng, K, rng.randint(1, 4))
                drop = False
            G = F.to_poly() * XK ** rng.randint(0, 2) * K.convert(1 + U)
            _lemma22_ok(G, drop)
        for j in range(50):
            E = GF(2, 2 + j % 2)
            G = poly(rng, E, rng.randint(1, 5))
            # over a finite field every root is algebraic; a nonzero one exists unless G = c*x^a
            drop = any(c != E.zero for c in G.coeffs[:G.degree])
            _lemma22_ok(G, drop)


def _rand_hn(rng, n):
    a = HnElement.constant(rng.randint(-3, 3), n)
    for i in range(1, n + 1):
        a = a + HnElement.s(i, n) * rng.randint(-2, 2)
    if rng.random() < 0.5:
        a = a * HnElement.s(rng.randint(1, n), n)
    for _ in range(rng.randint(0, 2)):
        a = a * HnElement.inverse_norm(unit_poly(rng, QQ, rng.randint(1, 2)), n)
    return a


def test_c07_classifying_round_trip(criterion):
    with criterion("C7 classify/family round trip and evaluation homomorphism", 30):
        rng = random.Random("c7")
        for _ in range(200):
            F = good_funcfield_family(rng, K, rng.randint(1, 5))
            assert classify_family(family_from_point(F.u, K)).u == F.u
        for dom in (QQ, GF(7)):
            for n in range(1, 6):
                origin = (dom.zero,) * n
                assert classify_family(family_from_point(origin, dom)).u == origin
        for _ in range(100):
            n = rng.randint(1, 3)
            at = HilbPoint(K, good_funcfield_family(rng, K, n).u)
            a, b = _rand_hn(rng, n), _rand_hn(rng, n)
            assert hn_eval(a * b, at) == hn_eval(a, at) * hn_eval(b, at)
            assert hn_eval(a + b, at) == hn_eval(a, at) + hn_eval(b, at)


def test_c08_rational_points_scan(criterion):
    with criterion("C8 integer points |u_i| <= 3, n in {2, 3}: only the origin", 60):
        for n in (2, 3):
            for pt in itertools.product(range(-3, 4), repeat=n):
                ok, w = is_point_of_hn(pt, QQ)
                assert ok == all(c == 0 for c in pt)
                if not ok:
                    assert norm_coeffs(family_from_point(pt, QQ), w).top == 0


def _order_at_zero(f):
    return next(i for i, c in enumerate(f.coeffs) if c != 0)


def test_c09_ideal_generator_uniqueness(criterion):
    with criterion("C9 ideal generator invariance and rank, 100 generator lists", 30):
        rng = random.Random("c9")
        X = UniPoly.x(QQ)
        for _ in range(100):
            gens = []
            for _ in range(rng.randint(1, 4)):
                seed = poly(rng, QQ, rng.randint(0, 3), monic=True)
                if seed.coeffs[0] == 0 and seed.degree == 0:
                    seed = UniPoly.one(QQ)
                unit = unit_poly(rng, QQ, rng.randint(0, 2)).scale(QQ.convert(rng.choice([1, -2, 3])))
                gens.append(unit * X ** rng.randint(0, 4) * seed)
            F, rank = ideal_monic_generator(IdealPresentation(QQ, tuple(gens)))
            expected = min(_order_at_zero(h) for h in gens)
            assert rank == expected == F.n
            assert F.to_poly() == X ** rank
            shuffled = gens[:]
            rng.shuffle(shuffled)
            variants = [shuffled, gens + [gens[0]],
                        [h * unit_poly(rng, QQ, rng.randint(0, 2)).scale(QQ.convert(-5)) for h in gens]]
            for v in variants:
                assert ideal_monic_generator(IdealPresentation(QQ, tuple(v))) == (F, rank)


def test_c10_cli_goldens(criterion):
    with criterion(f"C10 CLI goldens byte-identical across runs ({len(ALL)} fixtures)", 10):
        for name, argv in ALL.items():
            outs = set()
            for _ in range(2):
                report, _, pretty = run(argv)
                outs.add(render(report, pretty) + "\n")
            assert outs == {(GOLDEN / f"{name}.json").read_text(encoding="utf-8")}

"""A small seeded sweep of the library's invariants, for ``punctual verify``."""

from __future__ import annotations

import random

from .errors import NotAUnit
from .freeness import check_family, witness_ok
from .hilbert import HilbPoint, HnElement, classify_family, family_from_point, hn_eval
from .norms import cofactor, inverse_mod, norm_coeffs
from .rings import GF, QQ, UniPoly, parse_domain
from .samples import bad_funcfield_family, family, good_funcfield_family, poly, unit_poly
from .sympoly import ebasis_eval, ebasis_reduce, symmetric_coeff


def _identity(rng):
    dom = rng.choice([QQ, GF(7)])
    F = family(rng, dom, rng.randint(1, 4))
    G = poly(rng, dom, rng.randint(0, 4))
    H = cofactor(F, G)
    s = norm_coeffs(F, G).s
    total = UniPoly.one(dom)
    for i in range(1, F.n + 1):
        total = total * G + (s[i - 1] if i % 2 == 0 else -s[i - 1])
    return total == H * F.to_poly()


def _two_routes(rng):
    dom = rng.choice([QQ, GF(7)])
    F = family(rng, dom, rng.randint(1, 3))
    G = poly(rng, dom, rng.randint(0, 3))
    s = norm_coeffs(F, G).s
    return all(ebasis_eval(ebasis_reduce(symmetric_coeff(G, F.n, i)), F.u, dom) == s[i - 1]
               for i in range(1, F.n + 1))


def _inverse(rng):
    dom = rng.choice([QQ, GF(7)])
    F = family(rng, dom, rng.randint(1, 4))
    G = poly(rng, dom, rng.randint(0, 4))
    f = F.to_poly()
    try:
        R = inverse_mod(F, G)
    except NotAUnit:
        return norm_coeffs(F, G).top == dom.zero
    return (G * R) % f == UniPoly.one(dom) % f


def _witness(rng):
    K = parse_domain("QQ(u)")
    F, _ = bad_funcfield_family(rng, K, rng.randint(1, 4))
    v = check_family(F)
    return not v.good and witness_ok(F, v.witness)


def _round_trip(rng):
    K = parse_domain("QQ(u)")
    F = good_funcfield_family(rng, K, rng.randint(1, 4))
    return classify_family(family_from_point(F.u, K)).u == F.u


def _homomorphism(rng):
    K = parse_domain("QQ(u)")
    n = rng.randint(1, 3)
    at = HilbPoint(K, good_funcfield_family(rng, K, n).u)

    def rand_elem():
        a = HnElement.constant(rng.randint(-3, 3), n)
        for i in range(1, n + 1):
            a = a + HnElement.s(i, n) * rng.randint(-2, 2)
        if rng.random() < 0.7:
            a = a * HnElement.inverse_norm(unit_poly(rng, QQ, rng.randint(1, 2)), n)
        return a

    a, b = rand_elem(), rand_elem()
    return (hn_eval(a * b, at) == hn_eval(a, at) * hn_eval(b, at)
            and hn_eval(a + b, at) == hn_eval(a, at) + hn_eval(b, at))


CHECKS = {
    "alternating_sum_identity": (_identity, 20),
    "two_route_norms": (_two_routes, 10),
    "inverse_mod": (_inverse, 20),
    "witness_soundness": (_witness, 10),
    "classify_round_trip": (_round_trip, 10),
    "hn_eval_homomorphism": (_homomorphism, 5),
}


def run_invariants(seed: int = 0):
    """{check name: (passed, total)} for a seeded sweep."""
    out = {}
    for name, (fn, count) in CHECKS.items():
        rng = random.Random(f"{seed}:{name}")
        out[name] = (sum(1 for _ in range(count) if fn(rng)), count)
    return out

"""``punctual <subcommand> [flags]``: one JSON report on stdout.

Exit status: 0 on success, 1 when the library rejects the input (no
inverse, not a point of H_n, ...), 2 for usage, syntax and domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .. import __version__
from ..errors import DomainParseError, NotMonic, PolySyntaxError, PunctualError, UnknownVariable
from ..freeness import check_family, lemma22_factor, local_quotient_dim, strip_units
from ..hilbert import (HilbPoint, HnElement, IdealPresentation, classify_family, hn_eval,
                       ideal_monic_generator, is_point_of_hn)
from ..norms import MonicFamily, cofactor, inverse_mod, norm_coeffs
from ..rings import MultiPoly, UniPoly, parse_domain
from ..sympoly import EBasisPoly, delta_cofactor, delta_poly, ebasis_reduce, s_vars, t_vars
from ..verify import run_invariants
from .parser import parse_element, parse_poly, split_top_level

USAGE_ERRORS = (PolySyntaxError, UnknownVariable, DomainParseError, NotMonic)
MAX_SEED = 2 ** 64


class UsageError(Exception):
    kind = "UsageError"


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class _Context:
    """Parses flags lazily and records their canonical forms."""

    def __init__(self, args):
        self.args = args
        self.inputs = {}
        self._domain = None

    @property
    def domain(self):
        if self._domain is None:
            self._domain = parse_domain(self.args.domain)
            self.inputs["domain"] = self._domain.descriptor()
        return self._domain

    def need(self, flag):
        value = getattr(self.args, flag)
        if value is None:
            raise UsageError(f"--{flag.replace('_', '-')} is required for {self.args.subcommand}")
        return value

    def univariate(self, flag, domain=None):
        text = self.need(flag)
        p = parse_poly(text, domain or self.domain)
        if not isinstance(p, UniPoly):
            raise UnknownVariable(f"--{flag} must be a polynomial in x only", name=flag)
        self.inputs[flag] = str(p)
        return p

    def family(self):
        f = self.univariate("family")
        return MonicFamily.from_poly(f)

    def gens(self, domain=None):
        out = []
        for text in split_top_level(self.need("gens")):
            p = parse_poly(text, domain or self.domain)
            if not isinstance(p, UniPoly):
                raise UnknownVariable("--gens entries must be polynomials in x only", name="gens")
            out.append(p)
        self.inputs["gens"] = [str(p) for p in out]
        return out

    def point(self):
        dom = self.domain
        u = [parse_element(text, dom) for text in split_top_level(self.need("point"))]
        self.inputs["point"] = [dom.fmt(a) for a in u]
        return u

    def n(self, default=None):
        n = self.args.n if self.args.n is not None else default
        if n is None:
            raise UsageError(f"--n is required for {self.args.subcommand}")
        if n < 1:
            raise UsageError("--n must be at least 1")
        self.inputs["n"] = n
        return n


def _elems(dom, xs):
    return [dom.fmt(a) for a in xs]


# -- subcommands --------------------------------------------------------------


def cmd_norms(ctx):
    F, G = ctx.family(), ctx.univariate("g")
    return {"s": _elems(F.domain, norm_coeffs(F, G).s), "cofactor": str(cofactor(F, G))}


def cmd_invert(ctx):
    F, G = ctx.family(), ctx.univariate("g")
    return {"inverse": str(inverse_mod(F, G))}


def _verdict_payload(v):
    if v.good:
        cert = {"rule": v.rule}
        if v.rejected:
            cert["rejected"] = [str(q) for q in v.rejected]
        return {"status": v.status, "certificate": cert}
    return {"status": v.status, "witness": str(v.witness)}


def cmd_check(ctx):
    return _verdict_payload(check_family(ctx.family(), ctx.args.seed))


def cmd_classify(ctx):
    p = classify_family(ctx.family(), ctx.args.seed)
    return {"status": "Good", "u": _elems(p.domain, p.u)}


def cmd_point_test(ctx):
    u = ctx.point()
    ok, witness = is_point_of_hn(u, ctx.domain, ctx.args.seed)
    out = {"in_hn": ok}
    if not ok:
        out["witness"] = str(witness)
    return out


def cmd_ideal_gen(ctx):
    dom = ctx.domain
    F, rank = ideal_monic_generator(IdealPresentation(dom, tuple(ctx.gens())), ctx.args.seed)
    return {"generator": str(F.to_poly()), "rank": rank}


def cmd_lemma22(ctx):
    g, I, H = lemma22_factor(ctx.univariate("g"), ctx.args.seed)
    return {"g": str(g), "I": str(I), "H": str(H)}


def cmd_strip(ctx):
    G = ctx.univariate("g")
    r = strip_units(G, ctx.args.seed)
    return {"f_part": str(r.f_part), "unit_part": str(r.unit_part), "dim": local_quotient_dim(G, ctx.args.seed)}


def cmd_ebasis(ctx):
    text = ctx.need("g")
    dom = ctx.domain
    p = parse_poly(text, dom)
    if isinstance(p, UniPoly):
        if p.degree > 0:
            raise UnknownVariable("--g must be a polynomial in t1..tn", name="g")
        p = MultiPoly(dom, (), {(): p.coeff(0)} if not p.is_zero() else {})
    used = [int(v[1:]) for v in p.vars if v.startswith("t")]
    if len(used) != len(p.vars):
        raise UnknownVariable("--g must be a polynomial in t1..tn", name="g")
    n = ctx.n(max(used, default=1))
    if used and max(used) > n:
        raise UsageError(f"t{max(used)} exceeds --n {n}")
    p = parse_poly(text, dom, vars=t_vars(n))
    ctx.inputs["g"] = str(p)
    return {"ebasis": str(ebasis_reduce(p))}


def cmd_delta(ctx):
    G = ctx.univariate("g")
    n = ctx.n()
    return {"delta": str(delta_poly(G, n)), "cofactor": str(delta_cofactor(G, n))}


def cmd_hn_eval(ctx):
    dom = ctx.domain
    n = ctx.n()
    num = parse_poly(ctx.need("g"), dom.base, vars=s_vars(n))
    ctx.inputs["g"] = str(num)
    dens = ctx.gens(dom.base) if ctx.args.gens is not None else []
    a = HnElement(EBasisPoly(dom.base, n, num.terms), tuple(dens))
    if ctx.args.family is not None:
        F = ctx.family()
        u = F.u
    else:
        u = ctx.point()
    if len(u) != n:
        raise UsageError(f"the point has {len(u)} coordinates, expected {n}")
    return {"element": str(a), "value": dom.fmt(hn_eval(a, HilbPoint(dom, tuple(u))))}


def cmd_verify(ctx):
    results = run_invariants(ctx.args.seed)
    checks = {name: {"passed": p, "total": t} for name, (p, t) in results.items()}
    return {"checks": checks, "all_passed": all(p == t for p, t in results.values())}


COMMANDS = {
    "norms": (cmd_norms, "s_{F,i}(G(t)) and the cofactor H^u(x)"),
    "invert": (cmd_invert, "inverse of G modulo F from the norm"),
    "check": (cmd_check, "freeness verdict with witness or certificate"),
    "classify": (cmd_classify, "the point of H_n defined by F"),
    "point-test": (cmd_point_test, "is (u1..un) a point of H_n?"),
    "ideal-gen": (cmd_ideal_gen, "monic generator of an ideal in the localization"),
    "lemma22": (cmd_lemma22, "factor G as I*g = H*G"),
    "strip": (cmd_strip, "split off unit factors"),
    "ebasis": (cmd_ebasis, "symmetric polynomial in t1..tn through s1..sn"),
    "delta": (cmd_delta, "prod (G(x) - G(t_i)) and its quotient by prod (x - t_i)"),
    "hn-eval": (cmd_hn_eval, "evaluate an element of H_n at a point"),
    "verify": (cmd_verify, "seeded sweep of the library invariants"),
}


def _seed(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= v < MAX_SEED:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser():
    common = _ArgParser(add_help=False)
    common.add_argument("--domain", default="QQ", help="QQ, GF(p), GF(p^r), QQ(u,...), GF(p)(u,...), QQ[u,...]")
    common.add_argument("--family", help="monic F(x)")
    common.add_argument("--g", help="polynomial G")
    common.add_argument("--gens", help="comma-separated polynomials")
    common.add_argument("--n", type=int)
    common.add_argument("--point", help="comma-separated elements u1,...,un")
    common.add_argument("--seed", type=_seed, default=0)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    common.set_defaults(pretty=False)
    parser = _ArgParser(prog="punctual", description="Punctual Hilbert scheme toolkit.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_ArgParser)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def _error_payload(exc):
    err = {"kind": getattr(exc, "kind", type(exc).__name__), "message": getattr(exc, "message", None) or str(exc)}
    for key, value in getattr(exc, "details", {}).items():
        err[key] = value if isinstance(value, (int, list, str)) or value is None else str(value)
    witness = getattr(exc, "witness", None)
    if witness is not None:
        err["witness"] = str(witness)
    return err


def run(argv=None):
    """Return (report dict, exit code, pretty flag)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        report = {"subcommand": None, "inputs": {"argv": argv}, "error": _error_payload(exc),
                  "seed": None, "version": __version__}
        return report, 2, "--pretty" in argv
    ctx = _Context(args)
    handler = COMMANDS[args.subcommand][0]
    try:
        ctx.domain  # domain errors come first
        result, key, code = handler(ctx), "result", 0
    except (UsageError, *USAGE_ERRORS) as exc:
        result, key, code = _error_payload(exc), "error", 2
    except PunctualError as exc:
        result, key, code = _error_payload(exc), "error", 1
    report = {"subcommand": args.subcommand, "inputs": ctx.inputs, key: result,
              "seed": args.seed, "version": __version__}
    return report, code, args.pretty


def render(report, pretty=False) -> str:
    if pretty:
        return json.dumps(report, indent=2, ensure_ascii=False)
    return json.dumps(report, separators=(",", ":"), ensure_ascii=False)


def main(argv=None) -> int:
    report, code, pretty = run(argv)
    sys.stdout.write(render(report, pretty) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

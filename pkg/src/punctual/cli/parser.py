"""Polynomial expressions over a coefficient domain.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ['^' int]
    base   := int | var | '(' expr ')'

Rationals are written ``a/b``; in general the right operand of ``/`` must
be a unit constant of the domain (so ``x/u`` is fine over QQ(u)).  The
variables are ``x``, ``y`` (the generator of GF(p^r)), ``t1..tN``,
``s1..sN`` and the variables declared by the domain.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import NotAUnit, PolySyntaxError, UnknownVariable
from ..rings import ExtField, MultiPoly, PolyRing, RatFuncField, UniPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_INDEXED = re.compile(r"^[ts](\d+)$")


@dataclass(frozen=True)
class Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str):
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(Tok("int", m.group(1), start))
        elif m.group(2):
            toks.append(Tok("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", position=start,
                                      expected=["term"])
            toks.append(Tok("op", ch, start))
        pos = m.end()
    toks.append(Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def take(self, *ops):
        if self.tok.kind == "op" and self.tok.text in ops:
            self.i += 1
            return self.toks[self.i - 1].text
        return None

    def fail(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise PolySyntaxError(f"expected {' or '.join(expected)}, found {found}",
                              position=t.pos, expected=list(expected))

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            self.fail(["operator", "end of input"])
        return node

    def expr(self):
        node = ("neg", self.term()) if self.take("-") else self.term()
        while op := self.take("+", "-"):
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while op := self.take("*", "/"):
            node = (op, node, self.factor())
        return node

    def factor(self):
        node = self.base()
        if self.take("^"):
            if self.tok.kind != "int":
                self.fail(["nonnegative integer exponent"])
            node = ("^", node, int(self.tok.text))
            self.i += 1
        return node

    def base(self):
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return ("int", int(t.text))
        if t.kind == "name":
            self.i += 1
            return ("var", t.text, t.pos)
        if self.take("("):
            node = self.expr()
            if not self.take(")"):
                self.fail(["')'"])
            return node
        self.fail(["integer", "variable", "'('"])


def parse_tree(text: str):
    return _Parser(text).parse()


def _names(node, out):
    if node[0] == "var":
        out.setdefault(node[1], node[2])
    elif node[0] in ("neg",):
        _names(node[1], out)
    elif node[0] in ("+", "-", "*", "/"):
        _names(node[1], out)
        _names(node[2], out)
    elif node[0] == "^":
        _names(node[1], out)
    return out


def _constants(domain):
    """Names that denote elements of the coefficient domain itself."""
    if isinstance(domain, ExtField):
        return {"y": domain.gen}
    if isinstance(domain, (RatFuncField, PolyRing)):
        return {v: domain.gen(v) for v in domain.vars}
    return {}


def _poly_var_order(name):
    if name == "x":
        return (0, 0)
    m = _INDEXED.match(name)
    return (1 if name[0] == "t" else 2, int(m.group(1)))


def parse_poly(text: str, domain, vars=None):
    """Parse ``text`` over ``domain``.

    Returns a UniPoly when the only polynomial variable is x (or there is
    none), otherwise a MultiPoly in the polynomial variables that occur,
    ordered x, t1, t2, ..., s1, s2, ...  ``vars`` forces a MultiPoly in the
    given variables.
    """
    tree = parse_tree(text)
    consts = _constants(domain)
    poly_vars = []
    for name, pos in _names(tree, {}).items():
        if name in consts:
            continue
        if name == "x" or _INDEXED.match(name):
            poly_vars.append(name)
            continue
        raise UnknownVariable(f"unknown variable {name!r} for domain {domain}", position=pos, name=name)
    if vars is not None:
        extra = [v for v in poly_vars if v not in vars]
        if extra:
            raise UnknownVariable(f"variable {extra[0]!r} not allowed here", name=extra[0])
        return _eval(tree, domain, tuple(vars), consts)
    poly_vars = tuple(sorted(poly_vars, key=_poly_var_order))
    if poly_vars in ((), ("x",)):
        value = _eval(tree, domain, ("x",), consts)
        coeffs = [domain.zero] * (value.total_degree() + 1 if not value.is_zero() else 1)
        for (e,), c in value.terms.items():
            coeffs[e] = c
        return UniPoly(coeffs, domain)
    return _eval(tree, domain, poly_vars, consts)


def parse_element(text: str, domain):
    """A single element of ``domain`` (no polynomial variables)."""
    p = parse_poly(text, domain, vars=())
    return p.constant_coeff()


def _eval(node, domain, vars, consts):
    kind = node[0]
    if kind == "int":
        return MultiPoly.constant(domain.convert(node[1]), domain, vars)
    if kind == "var":
        if node[1] in consts:
            return MultiPoly.constant(consts[node[1]], domain, vars)
        return MultiPoly.gen(node[1], domain, vars)
    if kind == "neg":
        return -_eval(node[1], domain, vars, consts)
    if kind == "^":
        return _eval(node[1], domain, vars, consts) ** node[2]
    a = _eval(node[1], domain, vars, consts)
    b = _eval(node[2], domain, vars, consts)
    if kind == "+":
        return a + b
    if kind == "-":
        return a - b
    if kind == "*":
        return a * b
    if not b.is_constant() or not domain.is_unit(b.constant_coeff()):
        raise NotAUnit(f"cannot divide by {b}: not a unit constant of {domain}")
    return a.scale(domain.inv(b.constant_coeff()))


def split_top_level(text: str, sep=","):
    """Split on ``sep`` outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]

"""Polynomial text grammar, pretty-printing and JSON serialization.

Grammar accepted by :func:`parse`:

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' NONNEG_INT)?
    atom   := NUMBER | NUMBER 'i' | 'i' | 'x' | 'y' | '(' expr ')'
    NUMBER := INT | INT '/' INT | DECIMAL

Integer and p/q literals produce exact Gaussian rationals; any decimal
literal (with '.' or an exponent) switches the whole polynomial to float
mode.  "2i" and "3/2i" are single imaginary literals.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .bipoly import BiPoly
from .errors import ParseError
from .scalars import GR_I, GaussRat, is_exact
from .unipoly import UniPoly

# -- tokenizer ----------------------------------------------------------------

_OPS = set("+-*^()")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    toks: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "−":  # unicode minus
            toks.append(("op", "-", i))
            i += 1
            continue
        if ch in _OPS:
            toks.append(("op", ch, i))
            i += 1
            continue
        if ch.isdigit() or ch == ".":
            start = i
            while i < n and (text[i].isdigit() or text[i] == "."):
                i += 1
            if i < n and text[i] in "eE":
                j = i + 1
                if j < n and text[j] in "+-":
                    j += 1
                if j < n and text[j].isdigit():
                    i = j
                    while i < n and text[i].isdigit():
                        i += 1
            lit = text[start:i]
            if "." in lit or "e" in lit or "E" in lit:
                value: object = float(lit)  # any decimal literal -> float mode
            elif i < n and text[i] == "/" and i + 1 < n and text[i + 1].isdigit():
                i += 1
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                value = Fraction(int(lit), int(text[dstart:i]))
            else:
                value = Fraction(int(lit))
            if i < n and text[i] == "i":
                i += 1
                toks.append(("imag", value, start))
            else:
                toks.append(("num", value, start))
            continue
        if ch.isalpha():
            start = i
            while i < n and text[i].isalnum():
                i += 1
            toks.append(("name", text[start:i], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect_op(self, op: str):
        kind, val, at = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", at)

    def parse(self) -> BiPoly:
        p = self.expr()
        kind, _, at = self.peek()
        if kind != "end":
            raise ParseError("unexpected trailing input", at)
        return p

    def expr(self) -> BiPoly:
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> BiPoly:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> BiPoly:
        kind, val, at = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.factor()
        p = self.atom()
        kind, val, at = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, exp, at = self.take()
            if kind != "num" or not isinstance(exp, Fraction) or exp.denominator != 1 or exp < 0:
                raise ParseError("exponent must be a nonnegative integer", at)
            p = p.power(int(exp))
        return p

    def atom(self) -> BiPoly:
        kind, val, at = self.take()
        if kind == "num":
            if isinstance(val, Fraction):
                return BiPoly.make({(0, 0): GaussRat(val)})
            return BiPoly.make({(0, 0): complex(val)})
        if kind == "imag":
            if isinstance(val, Fraction):
                return BiPoly.make({(0, 0): GaussRat(Fraction(0), val)})
            return BiPoly.make({(0, 0): complex(0.0, val)})
        if kind == "name":
            if val == "i":
                return BiPoly.make({(0, 0): GR_I})
            if val in ("x", "y"):
                return BiPoly.variable(val)
            raise ParseError(f"unsupported variable name {val!r}", at)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError("expected a number, variable or parenthesis", at)


def parse(text: str) -> BiPoly:
    """Parse polynomial text into a BiPoly (exact when all literals are)."""
    return _Parser(text).parse()


def parse_scalar(text: str):
    """Parse a constant expression (used for seeds and CLI coefficients)."""
    p = parse(text)
    if p.deg_x > 0 or p.deg_y > 0:
        raise ParseError("expected a constant expression", 0)
    if p.is_zero:
        return GaussRat()
    return p.coeff(0, 0)


# -- formatting -----------------------------------------------------------------


def _fmt_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _fmt_float(v: float) -> str:
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def format_scalar(s) -> str:
    """Round-trippable scalar text: '3/2', '2i', '1+2i', '0.5-1.5i'."""
    if is_exact(s):
        re, im = s.re, s.im
        if im == 0:
            return _fmt_fraction(re)
        imtxt = "i" if im == 1 else ("-i" if im == -1 else _fmt_fraction(im) + "i")
        if re == 0:
            return imtxt
        sign = "+" if im > 0 else ""
        return _fmt_fraction(re) + sign + imtxt
    z = complex(s)
    re, im = z.real, z.imag
    if im == 0:
        return _fmt_float(re)
    imtxt = "i" if im == 1 else ("-i" if im == -1 else _fmt_float(im) + "i")
    if re == 0:
        return imtxt
    sign = "+" if im > 0 and not imtxt.startswith("-") else ""
    return _fmt_float(re) + sign + imtxt


def _fmt_term(coeff, monomial: str) -> str:
    txt = format_scalar(coeff)
    if not monomial:
        return txt
    if txt == "1":
        return monomial
    if txt == "-1":
        return "-" + monomial
    if "+" in txt[1:] or "-" in txt[1:]:
        txt = "(" + txt + ")"
    return txt + "*" + monomial


def _monomial(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def format_unipoly(p: UniPoly) -> str:
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if (is_exact(c) and not c) or (not is_exact(c) and c == 0):
            continue
        mono = _monomial(p.var, k)
        terms.append(_fmt_term(c, mono))
    return _join_terms(terms)


def format_bipoly(p: BiPoly) -> str:
    keys = sorted(p.coeffs, key=lambda ij: (ij[0] + ij[1], ij[0]), reverse=True)
    terms = []
    for i, j in keys:
        mono_parts = [m for m in (_monomial("x", i), _monomial("y", j)) if m]
        terms.append(_fmt_term(p.coeffs[(i, j)], "*".join(mono_parts)))
    return _join_terms(terms)


# -- JSON ---------------------------------------------------------------------


def bipoly_to_json(p: BiPoly) -> dict:
    """{"mode": ..., "coeffs": [[i, j, re, im], ...]} with exact parts as 'p/q'."""
    entries = []
    for (i, j) in sorted(p.coeffs):
        c = p.coeffs[(i, j)]
        if is_exact(c):
            entries.append([i, j, _fmt_fraction(c.re), _fmt_fraction(c.im)])
        else:
            entries.append([i, j, c.real, c.imag])
    return {"mode": p.mode, "coeffs": entries}


def bipoly_from_json(obj: dict) -> BiPoly:
    mode = obj.get("mode")
    out = {}
    for i, j, re, im in obj["coeffs"]:
        if mode == "exact":
            out[(int(i), int(j))] = GaussRat(Fraction(str(re)), Fraction(str(im)))
        else:
            out[(int(i), int(j))] = complex(float(re), float(im))
    return BiPoly.make(out)


def bipoly_dumps(p: BiPoly) -> str:
    return json.dumps(bipoly_to_json(p), sort_keys=True)


def bipoly_loads(text: str) -> BiPoly:
    return bipoly_from_json(json.loads(text))


def unipoly_to_text(p: UniPoly) -> str:
    return format_unipoly(p)


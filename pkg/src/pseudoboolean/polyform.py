"""Multilinear polynomial form of pseudo-Boolean functions.

Every f on {0,1}^n is uniquely ``sum_S a_S prod_{i in S} x_i``.  The
coefficients are kept densely, indexed by the bit mask of S, exactly like a
value table.
"""
import re
from fractions import Fraction

import numpy as np

from . import _kernels as K
from .core import (ArityError, ExactVector, FunctionTable, MAX_ARITY, check_index,
                   members)


class MultilinearPolynomial(ExactVector):
    """Dense coefficient table ``a_S`` indexed by subset masks."""

    __slots__ = ()

    @classmethod
    def from_terms(cls, terms, arity=None):
        """Build from ``{frozenset_of_indices: coefficient}``."""
        top = max((max(S) for S in terms if S), default=0)
        n = top if arity is None else arity
        if top > n:
            raise ArityError(f"term uses x{top} but arity is {n}")
        coef = [Fraction(0)] * (1 << n)
        for S, c in terms.items():
            m = 0
            for i in S:
                m |= 1 << (i - 1)
            coef[m] += Fraction(c)
        return cls(coef, arity=n)

    def coefficient(self, S):
        m = 0
        for i in S:
            check_index(i, self.arity)
            m |= 1 << (i - 1)
        return self[m]

    def terms(self):
        """Non-zero terms as ``{frozenset: Fraction}``, ordered by degree then indices."""
        out = {}
        for m in sorted(np.flatnonzero(self.numerators != 0).tolist(),
                        key=lambda m: (bin(m).count("1"), members(m))):
            out[frozenset(members(m))] = self[m]
        return out

    def __str__(self):
        return pretty_print(self)


def poly_from_table(f):
    """Coefficients a_S = sum over T of S of (-1)^{|S-T|} f(1_T)."""
    nums = K.mobius(f.numerators, f.arity)
    return MultilinearPolynomial._from_scaled(f.arity, nums, f.denominator)


def to_table(p):
    """Evaluate the polynomial at every point of the cube."""
    nums = K.zeta(p.numerators, p.arity)
    return FunctionTable._from_scaled(p.arity, nums, p.denominator)


def formal_derivative(p, k):
    """Coefficients b_T = a_{T+k} for k not in T, and 0 otherwise."""
    n = p.arity
    check_index(k, n)
    _, hi = K.halves(p.numerators, n, k)
    c = np.stack([hi, np.zeros_like(hi)], axis=hi.ndim + 1 - k)
    return MultilinearPolynomial._from_scaled(n, K.flat(c, n), p.denominator)


def degree(p):
    nz = np.flatnonzero(p.numerators != 0)
    if nz.size == 0:
        return 0
    return int(K.popcounts(len(p))[nz].max())


def _format_coefficient(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def pretty_print(p):
    """Canonical text form, e.g. ``x1 - x1*x2 + x2*x3``; parses back to ``p``."""
    parts = []
    for S, c in p.terms().items():
        mono = "*".join(f"x{i}" for i in sorted(S))
        mag = abs(c)
        if not mono:
            body = _format_coefficient(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coefficient(mag)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


class ExpressionSyntaxError(ValueError):
    """Malformed polynomial expression; ``position`` is a 0-based offset."""

    def __init__(self, message, position, text=""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+|/\d+)?)
  | (?P<var>x\d+)
  | (?P<op>[-+*()])
""", re.VERBOSE)


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


# Polynomials during parsing are dicts {mask: Fraction}.

def _add(a, b, sign=1):
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) + sign * c
    return {m: c for m, c in out.items() if c != 0}


def _mul(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = m1 | m2  # x_i * x_i = x_i on {0,1}
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c != 0}


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.top = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg):
        raise ExpressionSyntaxError(msg, self.peek()[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        poly = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return poly

    def expr(self):
        poly = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            sign = 1 if self.take()[1] == "+" else -1
            poly = _add(poly, self.term(), sign)
        return poly

    def term(self):
        sign = 1
        while self.peek()[0] == "op" and self.peek()[1] in ("-", "+"):
            if self.take()[1] == "-":
                sign = -sign
        poly = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            poly = _mul(poly, self.factor())
        return {m: sign * c for m, c in poly.items()}

    def factor(self):
        kind, text, pos = self.peek()
        if kind == "num":
            self.take()
            value = Fraction(text)
            return {0: value} if value else {}
        if kind == "var":
            self.take()
            idx = int(text[1:])
            if not 1 <= idx <= MAX_ARITY:
                raise ExpressionSyntaxError(
                    f"variable index {idx} outside 1..{MAX_ARITY}", pos, self.text)
            self.top = max(self.top, idx)
            return {1 << (idx - 1): Fraction(1)}
        if kind == "op" and text == "(":
            self.take()
            poly = self.expr()
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return poly
        self.fail("expected a number, variable or '('" if kind != "end"
                  else "unexpected end of expression")


def parse_expression(text, arity=None):
    """Parse ``text`` such as ``"x1 - x1*x2 + x2*x3"`` into a polynomial.

    Literals may be integers, decimals (``0.25``) or fractions (``3/4``);
    products and parentheses are expanded and like terms combined.  The arity
    defaults to the largest variable index used.
    """
    parser = _Parser(text)
    poly = parser.parse()
    n = parser.top if arity is None else arity
    if parser.top > n:
        raise ArityError(f"expression uses x{parser.top} but arity is {n}")
    coef = [Fraction(0)] * (1 << n)
    for m, c in poly.items():
        coef[m] = c
    return MultilinearPolynomial(coef, arity=n)


def table_from_expression(text, arity=None):
    return to_table(parse_expression(text, arity))

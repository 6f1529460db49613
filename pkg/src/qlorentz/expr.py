"""Operator expression trees, the text grammar, and the canonical printer.

Grammar (whitespace between tokens is ignored)::

    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := ("-")? base ("^" signed_int)?
    base     := "(" expr ")" | atom | rational
    atom     := "x" | "t" | "p" | "H" | "hbar" | "c" | "m" | "i"
    rational := int ("/" posint)?

There is no division operator; fractions exist only as rational literals
and as negative powers of the invertible atoms (p, H, hbar, c, m, i).
Negative exponents on x or t are rejected: those generators have no
inverse in the algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ExprError, ParseError

ATOM_NAMES = ("x", "t", "p", "H", "hbar", "c", "m", "i")

# x and t have no inverse; everything else may carry a negative exponent.
_NO_INVERSE = frozenset({"x", "t"})


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if self.name not in ATOM_NAMES:
            raise ExprError(f"unknown atom {self.name!r}")


@dataclass(frozen=True)
class Rational:
    """Literal num/den, stored gcd-reduced with den > 0."""

    num: int
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ExprError("rational literal with zero denominator")
        num, den = self.num, self.den
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)


@dataclass(frozen=True)
class Sum:
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if len(self.terms) < 2:
            raise ExprError("Sum needs at least two terms")


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if len(self.factors) < 2:
            raise ExprError("Product needs at least two factors")


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int

    def __post_init__(self):
        if not isinstance(self.exponent, int):
            raise ExprError("Power exponent must be an int")
        if self.exponent < 0 and not (
            isinstance(self.base, Atom) and self.base.name not in _NO_INVERSE
        ):
            raise ExprError("negative exponent requires an invertible atom")


_NODE_TYPES = (Atom, Rational, Sum, Product, Power)


def negate(e):
    """-e, folding the sign into a leading rational when possible."""
    if isinstance(e, Rational):
        return Rational(-e.num, e.den)
    if isinstance(e, Product):
        head = e.factors[0]
        if isinstance(head, Rational):
            return Product((Rational(-head.num, head.den),) + e.factors[1:])
        return Product((Rational(-1),) + e.factors)
    return Product((Rational(-1), e))


# ---------------------------------------------------------------------------
# lexer

_PUNCT = {"+": "+", "-": "-", "*": "*", "^": "^", "/": "/", "(": "(", ")": ")"}


def _tokenize(text):
    """Yield (kind, value, offset) triples; kind 'int' | 'name' | punctuation."""
    toks = []
    n = len(text)
    pos = 0
    while pos < n:
        ch = text[pos]
        if ch in " \t\r\n":
            pos += 1
            continue
        if ch in _PUNCT:
            toks.append((_PUNCT[ch], ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            toks.append(("int", int(text[start:pos]), start))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            toks.append(("name", text[start:pos], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", pos, expected=("token",))
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.idx = 0

    def peek(self):
        return self.toks[self.idx]

    def advance(self):
        tok = self.toks[self.idx]
        self.idx += 1
        return tok

    def expect(self, kind, expected):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"unexpected {self._describe(tok)}", tok[2], expected=expected)
        return self.advance()

    @staticmethod
    def _describe(tok):
        if tok[0] == "end":
            return "end of input"
        return f"token {str(tok[1])!r}"

    def parse(self):
        e = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(
                f"unexpected {self._describe(tok)}",
                tok[2],
                expected=("+", "-", "*", "end of input"),
            )
        return e

    def expr(self):
        terms = [self.term()]
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            t = self.term()
            terms.append(negate(t) if op == "-" else t)
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.peek()[0] == "*":
            self.advance()
            factors.append(self.factor())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors))

    def factor(self):
        negated = False
        if self.peek()[0] == "-":
            self.advance()
            negated = True
        base = self.base()
        if self.peek()[0] == "^":
            self.advance()
            exponent, exp_pos = self.signed_int()
            if exponent < 0:
                if not isinstance(base, Atom):
                    raise ParseError(
                        "negative exponent requires an invertible atom", exp_pos, expected=()
                    )
                if base.name in _NO_INVERSE:
                    raise ParseError(
                        f"negative exponent not allowed on {base.name}", exp_pos, expected=()
                    )
            base = Power(base, exponent)
        return negate(base) if negated else base

    def signed_int(self):
        sign = 1
        tok = self.peek()
        pos = tok[2]
        if tok[0] == "-":
            self.advance()
            sign = -1
        tok = self.expect("int", expected=("integer",))
        return sign * tok[1], pos

    def base(self):
        tok = self.peek()
        if tok[0] == "(":
            self.advance()
            e = self.expr()
            self.expect(")", expected=(")",))
            return e
        if tok[0] == "name":
            if tok[1] not in ATOM_NAMES:
                raise ParseError(
                    f"unknown atom {tok[1]!r}", tok[2], expected=ATOM_NAMES
                )
            self.advance()
            return Atom(tok[1])
        if tok[0] == "int":
            self.advance()
            num = tok[1]
            if self.peek()[0] == "/":
                self.advance()
                dtok = self.expect("int", expected=("positive integer",))
                if dtok[1] == 0:
                    raise ParseError("zero denominator", dtok[2], expected=("positive integer",))
                return Rational(num, dtok[1])
            return Rational(num)
        raise ParseError(
            f"unexpected {self._describe(tok)}",
            tok[2],
            expected=("(", "atom", "integer", "-"),
        )


def parse(text):
    """Parse expression text into a tree; raises ParseError on bad input."""
    if not isinstance(text, str):
        raise ParseError("input must be a string", 0, expected=("expression",))
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# printer

def _neg_headed(e):
    if isinstance(e, Rational):
        return e.num < 0
    if isinstance(e, Product):
        head = e.factors[0]
        return isinstance(head, Rational) and head.num < 0
    return False


def _strip_neg(e):
    """Positive-headed counterpart of a neg-headed node (inverse of negate)."""
    if isinstance(e, Rational):
        return Rational(-e.num, e.den)
    head = e.factors[0]
    if head == Rational(-1) and len(e.factors) == 2:
        return e.factors[1]
    if head == Rational(-1):
        return Product(e.factors[1:])
    return Product((Rational(-head.num, head.den),) + e.factors[1:])


def _print_rational(r):
    if r.den == 1:
        return str(r.num)
    return f"{r.num}/{r.den}"


def _print_factor(e):
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Rational):
        if e.num < 0:
            return "(" + _print_rational(e) + ")"
        return _print_rational(e)
    if isinstance(e, Power):
        base = e.base
        if isinstance(base, Atom):
            base_text = base.name
        elif isinstance(base, Rational) and base.den == 1 and base.num >= 0:
            base_text = str(base.num)
        else:
            base_text = "(" + _print_tree(base) + ")"
        return f"{base_text}^{e.exponent}"
    # grouped subexpression
    return "(" + _print_tree(e) + ")"


def _print_term(e):
    if isinstance(e, Product):
        return "*".join(_print_factor(f) for f in e.factors)
    if isinstance(e, Sum):
        return "(" + _print_tree(e) + ")"
    if isinstance(e, Rational):
        return _print_rational(e) if e.num >= 0 else "(" + _print_rational(e) + ")"
    return _print_factor(e)


def _signed_term(e, first):
    if _neg_headed(e):
        body = _print_term(_strip_neg(e))
        return "-" + body if first else " - " + body
    body = _print_term(e)
    return body if first else " + " + body


def _print_tree(e):
    if isinstance(e, Sum):
        return "".join(_signed_term(t, i == 0) for i, t in enumerate(e.terms))
    if _neg_headed(e):
        return "-" + _print_term(_strip_neg(e))
    return _print_term(e)


def print_expr(e):
    """Canonical text for a tree or for any object exposing ``to_text()``.

    For trees the output round-trips: ``parse(print_expr(e)) == e``.
    """
    if isinstance(e, _NODE_TYPES):
        return _print_tree(e)
    to_text = getattr(e, "to_text", None)
    if to_text is not None:
        return to_text()
    raise TypeError(f"cannot print {type(e).__name__}")

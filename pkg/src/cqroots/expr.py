"""Text syntax for complex quaternions and 3-D multivectors.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary | atom)*      # juxtaposition multiplies
    unary  := ('+' | '-') unary | atom
    atom   := NUMBER | 'I' | 'i' | 'j' | 'k' | BLADE | 'sqrt' '(' expr ')' | '(' expr ')'

``BLADE`` is one of e1 e2 e3 e12 e13 e23 e123.  A number written as ``2e1``
is 2 times e1; scientific notation needs a signed exponent (``2e-5``) or a
capital ``E``.  Division and sqrt accept scalar operands only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .mv import BLADES, Multivector3, Signature
from .quaternion import ComplexQuaternion, QuaternionFamily

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:e[+-]\d+|E[+-]?\d+)?)
  | (?P<sqrt>sqrt)
  | (?P<blade>e(?:123|12|13|23|1|2|3))
  | (?P<imag>I)
  | (?P<qunit>[ijk])
  | (?P<op>[-+*/()])
    """,
    re.VERBOSE,
)


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[_Tok]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append(_Tok(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


def _is_scalar(x) -> bool:
    return isinstance(x, complex)


class _Parser:
    def __init__(self, text: str, algebra):
        self.toks = tokenize(text)
        self.i = 0
        self.algebra = algebra
        self.quaternionic = isinstance(algebra, QuaternionFamily)

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str):
        if self.tok.text != text:
            raise ParseError(f"expected {text!r}", self.tok.pos)
        self.advance()

    def parse(self):
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        value = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return self.promote(value)

    def promote(self, x):
        if not _is_scalar(x):
            return x
        if self.quaternionic:
            return ComplexQuaternion(self.algebra, x)
        return Multivector3.scalar(x.real, self.algebra)

    def expr(self):
        value = self.term()
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            rhs = self.term()
            value = self.add(value, rhs if op == "+" else self.neg(rhs))
        return value

    def _starts_atom(self) -> bool:
        return self.tok.kind in ("num", "sqrt", "blade", "imag", "qunit") or self.tok.text == "("

    def term(self):
        value = self.unary()
        while True:
            if self.tok.text == "*":
                self.advance()
                value = self.mul(value, self.unary())
            elif self.tok.text == "/":
                pos = self.advance().pos
                value = self.div(value, self.unary(), pos)
            elif self._starts_atom():
                value = self.mul(value, self.atom())
            else:
                return value

    def unary(self):
        if self.tok.text == "-":
            self.advance()
            return self.neg(self.unary())
        if self.tok.text == "+":
            self.advance()
            return self.unary()
        return self.atom()

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return complex(float(t.text))
        if t.kind == "sqrt":
            self.advance()
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            if not _is_scalar(arg) or arg.imag != 0 or arg.real < 0:
                raise ParseError("sqrt takes a non-negative real scalar", t.pos)
            return complex(arg.real**0.5)
        if t.text == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if t.kind in ("imag", "qunit"):
            if not self.quaternionic:
                raise ParseError(f"quaternion token {t.text!r} in a Clifford expression", t.pos)
            self.advance()
            if t.kind == "imag":
                return 1j
            return ComplexQuaternion.unit(self.algebra, t.text)
        if t.kind == "blade":
            if self.quaternionic:
                raise ParseError(f"blade {t.text!r} in a quaternion expression", t.pos)
            self.advance()
            return Multivector3.blade(t.text, self.algebra)
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)

    def add(self, a, b):
        if _is_scalar(a) and _is_scalar(b):
            return a + b
        return self.promote(a) + self.promote(b)

    def neg(self, a):
        return -a

    def mul(self, a, b):
        if _is_scalar(a) and _is_scalar(b):
            return a * b
        if _is_scalar(a):
            return b * self._coeff(a)
        if _is_scalar(b):
            return a * self._coeff(b)
        return a * b

    def _coeff(self, z: complex):
        # I only exists on the quaternion side, so Clifford scalars stay real
        return z if self.quaternionic else z.real

    def div(self, a, b, pos):
        if not _is_scalar(b):
            raise ParseError("division is only defined by scalars", pos)
        if b == 0:
            raise ParseError("division by zero", pos)
        if _is_scalar(a):
            return a / b
        return a * (1 / self._coeff(b))


def parse(text: str, algebra: QuaternionFamily | Signature):
    """Parse ``text`` into a ComplexQuaternion (family given) or Multivector3 (signature given)."""
    return _Parser(text, algebra).parse()


def format_number(x: float, digits: int | None = None) -> str:
    """Shortest round-trip repr by default, else ``digits`` significant digits."""
    x = float(x)
    if digits is None:
        s = repr(x)
        return s[:-2] if s.endswith(".0") else s
    return format(x, f".{digits}g")


def _join(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def _unit_term(c: float, unit: str, digits, sep: str = "") -> str:
    s = format_number(c, digits)
    if not unit:
        return s
    if s == "1":
        return unit
    if s == "-1":
        return "-" + unit
    return s + sep + unit


def format_mv(A: Multivector3, digits: int | None = None) -> str:
    terms = []
    for name, c in zip(BLADES, A.coeffs):
        if c != 0:
            terms.append(_unit_term(c, "" if name == "1" else name, digits, "*"))
    return _join(terms)


def format_cq(Q: ComplexQuaternion, digits: int | None = None) -> str:
    terms = []
    for unit, q in zip(("", "i", "j", "k"), Q.coeffs):
        a, b = float(q.real), float(q.imag)
        if a != 0 and b != 0:
            mag = format_number(abs(b), digits)
            imag = "I" if mag == "1" else mag + "I"
            terms.append(f"({format_number(a, digits)}{'-' if b < 0 else '+'}{imag}){unit}")
        elif a != 0:
            terms.append(_unit_term(a, unit, digits))
        elif b != 0:
            terms.append(_unit_term(b, "I" + unit, digits))
    return _join(terms)


def format_element(x, digits: int | None = None) -> str:
    return format_cq(x, digits) if isinstance(x, ComplexQuaternion) else format_mv(x, digits)

"""Expression language for the algebra: parser, canonical printer, evaluator.

Grammar (recursive descent, one token of lookahead):

    expr    := term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := scalar | basis | bracket | ad | '(' expr ')' | '-' factor
    basis   := 'L' '[' half ',' half ';' half ']'
    bracket := '[' expr ',' expr ',' expr ']'
    ad      := 'ad' '(' expr ',' expr ')' '(' expr ')'
    half    := ['-'] int ['/' '2']
    scalar  := int ['/' int] | 'i' | 's2'

Evaluation yields either a Scalar or an Element; the bracket and ad forms
require element operands, products accept any scalar/element mix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import BasisIndex, Element, HalfInt, ad as core_ad, bracket as core_bracket
from .scalars import I, SQRT2, Scalar

Value = Union[Scalar, Element]


class ParseError(SyntaxError):
    def __init__(self, message: str, line: int, col: int, expected: tuple[str, ...] = ()) -> None:
        detail = f"{message} at {line}:{col}"
        if expected:
            detail += f" (expected {', '.join(expected)})"
        super().__init__(detail)
        self.line = line
        self.col = col
        self.expected = expected


class EvalError(TypeError):
    pass


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScalarLit:
    value: Scalar


@dataclass(frozen=True)
class Basis:
    index: BasisIndex


@dataclass(frozen=True)
class Neg:
    child: "Node"


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Bracket:
    first: "Node"
    second: "Node"
    third: "Node"


@dataclass(frozen=True)
class AdApply:
    first: "Node"
    second: "Node"
    arg: "Node"


Node = Union[ScalarLit, Basis, Neg, Add, Sub, Mul, Bracket, AdApply]


# ---------------------------------------------------------------------------
# tokenizer
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'name', a punctuation char, or 'end'
    text: str
    line: int
    col: int


_PUNCT = set("+-*/()[],;")


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(src):
        ch = src[pos]
        if ch == "\n":
            line += 1
            col = 1
            pos += 1
            continue
        if ch.isspace():
            col += 1
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < len(src) and src[pos].isdigit():
                pos += 1
            tokens.append(Token("int", src[start:pos], line, col))
            col += pos - start
            continue
        if ch.isalpha():
            start = pos
            while pos < len(src) and (src[pos].isalnum() or src[pos] == "_"):
                pos += 1
            tokens.append(Token("name", src[start:pos], line, col))
            col += pos - start
            continue
        if ch in _PUNCT:
            tokens.append(Token(ch, ch, line, col))
            pos += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.current
        if tok.kind != kind:
            raise ParseError(
                f"unexpected {tok.kind or 'end of input'} {tok.text!r}",
                tok.line,
                tok.col,
                expected=(kind,),
            )
        return self.advance()

    def parse_expr(self) -> Node:
        node = self.parse_term()
        while self.current.kind in ("+", "-"):
            op = self.advance()
            right = self.parse_term()
            node = Add(node, right) if op.kind == "+" else Sub(node, right)
        return node

    def parse_term(self) -> Node:
        node = self.parse_factor()
        while self.current.kind == "*":
            self.advance()
            node = Mul(node, self.parse_factor())
        return node

    def parse_factor(self) -> Node:
        tok = self.current
        if tok.kind == "-":
            self.advance()
            return Neg(self.parse_factor())
        if tok.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        if tok.kind == "[":
            self.advance()
            first = self.parse_expr()
            self.expect(",")
            second = self.parse_expr()
            self.expect(",")
            third = self.parse_expr()
            self.expect("]")
            return Bracket(first, second, third)
        if tok.kind == "int":
            return ScalarLit(Scalar.rational(self.parse_rational()))
        if tok.kind == "name":
            if tok.text == "i":
                self.advance()
                return ScalarLit(I)
            if tok.text == "s2":
                self.advance()
                return ScalarLit(SQRT2)
            if tok.text == "L":
                return self.parse_basis()
            if tok.text == "ad":
                return self.parse_ad()
            raise ParseError(
                f"unknown name {tok.text!r}", tok.line, tok.col, expected=("i", "s2", "L", "ad")
            )
        raise ParseError(
            f"unexpected {tok.kind or 'end of input'} {tok.text!r}",
            tok.line,
            tok.col,
            expected=("scalar", "L[...]", "[...]", "ad(...)", "(", "-"),
        )

    def parse_rational(self) -> Fraction:
        num = int(self.expect("int").text)
        if self.current.kind == "/":
            self.advance()
            den = int(self.expect("int").text)
            if den == 0:
                tok = self.current
                raise ParseError("zero denominator", tok.line, tok.col)
            return Fraction(num, den)
        return Fraction(num)

    def parse_half(self) -> HalfInt:
        negative = False
        if self.current.kind == "-":
            self.advance()
            negative = True
        tok = self.expect("int")
        value = int(tok.text)
        if self.current.kind == "/":
            self.advance()
            den = self.expect("int")
            if den.text != "2":
                raise ParseError(
                    "half-integer denominator must be 2", den.line, den.col, expected=("2",)
                )
            half = HalfInt.from_twice(value)
        else:
            half = HalfInt(value)
        return -half if negative else half

    def parse_basis(self) -> Node:
        self.expect("name")  # 'L'
        self.expect("[")
        l = self.parse_half()
        self.expect(",")
        m = self.parse_half()
        self.expect(";")
        r = self.parse_half()
        self.expect("]")
        return Basis(BasisIndex(l, m, r))

    def parse_ad(self) -> Node:
        self.expect("name")  # 'ad'
        self.expect("(")
        first = self.parse_expr()
        self.expect(",")
        second = self.parse_expr()
        self.expect(")")
        self.expect("(")
        arg = self.parse_expr()
        self.expect(")")
        return AdApply(first, second, arg)


def parse(src: str) -> Node:
    parser = _Parser(tokenize(src))
    node = parser.parse_expr()
    tok = parser.current
    if tok.kind != "end":
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col, expected=("end",))
    return node


# ---------------------------------------------------------------------------
# canonical printer
# ---------------------------------------------------------------------------

_LEVEL_EXPR = 0
_LEVEL_TERM = 1
_LEVEL_FACTOR = 2


def print_expr(node: Node) -> str:
    return _print(node, _LEVEL_EXPR)


def _print(node: Node, level: int) -> str:
    if isinstance(node, ScalarLit):
        text = _scalar_literal(node.value)
        if " + " in text or " - " in text or text.startswith("-"):
            own = _LEVEL_EXPR
        elif "*" in text:
            own = _LEVEL_TERM
        else:
            own = _LEVEL_FACTOR
        return _wrap(text, own, level)
    if isinstance(node, Basis):
        return str(node.index)
    if isinstance(node, Neg):
        return _wrap(f"-{_print(node.child, _LEVEL_FACTOR)}", _LEVEL_FACTOR, level)
    if isinstance(node, Add):
        return _wrap(
            f"{_print(node.left, _LEVEL_EXPR)} + {_print(node.right, _LEVEL_TERM)}",
            _LEVEL_EXPR,
            level,
        )
    if isinstance(node, Sub):
        return _wrap(
            f"{_print(node.left, _LEVEL_EXPR)} - {_print(node.right, _LEVEL_TERM)}",
            _LEVEL_EXPR,
            level,
        )
    if isinstance(node, Mul):
        return _wrap(
            f"{_print(node.left, _LEVEL_TERM)}*{_print(node.right, _LEVEL_FACTOR)}",
            _LEVEL_TERM,
            level,
        )
    if isinstance(node, Bracket):
        inner = ", ".join(_print(child, _LEVEL_EXPR) for child in (node.first, node.second, node.third))
        return f"[{inner}]"
    if isinstance(node, AdApply):
        return (
            f"ad({_print(node.first, _LEVEL_EXPR)}, {_print(node.second, _LEVEL_EXPR)})"
            f"({_print(node.arg, _LEVEL_EXPR)})"
        )
    raise TypeError(f"not an expression node: {node!r}")


def _wrap(text: str, own_level: int, context: int) -> str:
    return text if own_level >= context else f"({text})"


def _scalar_literal(value: Scalar) -> str:
    """Scalar literals print in the textual sum form; composite ones reparse
    through the expression grammar (e.g. '1/2 + i' needs expression context)."""
    return str(value)


def element_to_text(x: Element) -> str:
    """Canonical printable form of an element; reparses to the same value."""
    return str(x)


# ---------------------------------------------------------------------------
# evaluator
# ---------------------------------------------------------------------------


def evaluate(node: Node) -> Value:
    if isinstance(node, ScalarLit):
        return node.value
    if isinstance(node, Basis):
        return Element.basis(node.index)
    if isinstance(node, Neg):
        return -evaluate(node.child)
    if isinstance(node, (Add, Sub)):
        left = evaluate(node.left)
        right = evaluate(node.right)
        if isinstance(node, Sub):
            right = -right
        if isinstance(left, Scalar) and isinstance(right, Scalar):
            return left + right
        if isinstance(left, Element) and isinstance(right, Element):
            return left + right
        raise EvalError("cannot add a scalar and an element")
    if isinstance(node, Mul):
        left = evaluate(node.left)
        right = evaluate(node.right)
        if isinstance(left, Scalar) and isinstance(right, Scalar):
            return left * right
        if isinstance(left, Scalar):
            return right.scale(left)
        if isinstance(right, Scalar):
            return left.scale(right)
        return left * right
    if isinstance(node, Bracket):
        args = [evaluate(child) for child in (node.first, node.second, node.third)]
        if not all(isinstance(arg, Element) for arg in args):
            raise EvalError("bracket requires three element operands")
        return core_bracket(*args)
    if isinstance(node, AdApply):
        first = evaluate(node.first)
        second = evaluate(node.second)
        arg = evaluate(node.arg)
        if not all(isinstance(v, Element) for v in (first, second, arg)):
            raise EvalError("ad requires element operands")
        return core_ad(first, second)(arg)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_text(src: str) -> Value:
    return evaluate(parse(src))

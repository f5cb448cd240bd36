"""Small expression language over the operator vocabulary.

Grammar (precedence low to high):

    sum      = ["-"] product (("+" | "-") product)*
    product  = power (power | "*" power | "/" INT)*      juxtaposition multiplies
    power    = atom ["^" INT]
    atom     = INT | "i" | "alpha" | "E"
             | "x<digits>" | "p<digits>" | "g<digits>" | "rinv2"
             | NAME [ "(" INT ("," INT)* ")" ]
             | "(" sum ")" | "[" sum "," sum "]" | "{" sum "," sum "}"

Brackets are the commutator, braces the anticommutator.  Division is only by
integer literals (operators have no general inverses here).  Identifiers are
case-sensitive: g1 is a Clifford generator, G(1) the ladder operator built
from it.  Every diagnostic carries line:col and what was expected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from . import ops, weyl
from .coeff import GaussianRational, P_ALPHA, P_E, P_I, ParamPoly
from .weyl import OperatorExpr


class ExprError(ValueError):
    """Parse or evaluation diagnostic with position information."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.message = message


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Param:
    name: str  # "alpha" or "E"


@dataclass(frozen=True)
class Gen:
    kind: str  # "x", "p", "g"
    index: int


@dataclass(frozen=True)
class RInv2:
    pass


@dataclass(frozen=True)
class Builder:
    name: str
    indices: Tuple[int, ...]


@dataclass(frozen=True)
class Neg:
    arg: "Ast"


@dataclass(frozen=True)
class Add:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Sub:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Mul:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Div:
    left: "Ast"
    divisor: int


@dataclass(frozen=True)
class Pow:
    base: "Ast"
    exponent: int


@dataclass(frozen=True)
class Comm:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class AntiComm:
    left: "Ast"
    right: "Ast"


Ast = Union[Lit, Imag, Param, Gen, RInv2, Builder, Neg, Add, Sub, Mul, Div, Pow, Comm, AntiComm]


# ---------------------------------------------------------------------------
# tokenizer
# ---------------------------------------------------------------------------

_PUNCT = set("+-*/^()[]{},")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", punctuation, "eof"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> List[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(Token(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ExprError(line, start_col, f"expected a token, found {ch!r}")
    tokens.append(Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

_ATOM_STARTS = {"int", "ident", "(", "[", "{"}


class _Parser:
    def __init__(self, text: str, d: int):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.d = d

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ExprError(tok.line, tok.col, f"expected {kind!r}, found {tok.text or 'end of input'!r}")
        return self.advance()

    def parse(self) -> Ast:
        node = self.sum_()
        tok = self.peek()
        if tok.kind != "eof":
            raise ExprError(tok.line, tok.col, f"expected end of input, found {tok.text!r}")
        return node

    def sum_(self) -> Ast:
        node = self.signed_product()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            right = self.signed_product()
            node = Add(node, right) if op.kind == "+" else Sub(node, right)
        return node

    def signed_product(self) -> Ast:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.signed_product())
        return self.product()

    def product(self) -> Ast:
        node = self.power()
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.advance()
                node = Mul(node, self.power())
            elif tok.kind == "/":
                self.advance()
                divisor_tok = self.expect("int")
                divisor = int(divisor_tok.text)
                if self.peek().kind == "^":
                    self.advance()
                    divisor **= int(self.expect("int").text)
                node = Div(node, divisor)
            elif tok.kind in _ATOM_STARTS:
                node = Mul(node, self.power())
            else:
                return node

    def power(self) -> Ast:
        node = self.atom()
        if self.peek().kind == "^":
            self.advance()
            exponent = self.expect("int")
            node = Pow(node, int(exponent.text))
        return node

    def atom(self) -> Ast:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return Lit(Fraction(int(tok.text)))
        if tok.kind == "(":
            self.advance()
            node = self.sum_()
            self.expect(")")
            return node
        if tok.kind == "[":
            self.advance()
            left = self.sum_()
            self.expect(",")
            right = self.sum_()
            self.expect("]")
            return Comm(left, right)
        if tok.kind == "{":
            self.advance()
            left = self.sum_()
            self.expect(",")
            right = self.sum_()
            self.expect("}")
            return AntiComm(left, right)
        if tok.kind == "ident":
            self.advance()
            return self.ident_atom(tok)
        raise ExprError(tok.line, tok.col, f"expected a term, found {tok.text or 'end of input'!r}")

    def ident_atom(self, tok: Token) -> Ast:
        name = tok.text
        if name == "i":
            return Imag()
        if name in ("alpha", "E"):
            return Param(name)
        if name == "rinv2":
            return RInv2()
        if name[0] in "xpg" and name[1:].isdigit():
            index = int(name[1:])
            if not 1 <= index <= self.d:
                raise ExprError(tok.line, tok.col, f"generator index {index} outside 1..{self.d}")
            return Gen(name[0], index)
        if name in ops.BUILDER_ARITY:
            arity = ops.BUILDER_ARITY[name]
            indices: Tuple[int, ...] = ()
            if self.peek().kind == "(":
                self.advance()
                idx = [int(self.expect("int").text)]
                while self.peek().kind == ",":
                    self.advance()
                    idx.append(int(self.expect("int").text))
                self.expect(")")
                indices = tuple(idx)
            if len(indices) != arity:
                raise ExprError(tok.line, tok.col, f"{name} takes {arity} index(es), got {len(indices)}")
            for index in indices:
                if not 1 <= index <= self.d:
                    raise ExprError(tok.line, tok.col, f"index {index} outside 1..{self.d}")
            return Builder(name, indices)
        raise ExprError(tok.line, tok.col, f"unknown identifier {name!r}")


def parse(text: str, d: int) -> Ast:
    """Parse an expression; raises ExprError with line:col on any problem."""
    return _Parser(text, d).parse()


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def evaluate_ast(ast: Ast, d: int) -> OperatorExpr:
    if isinstance(ast, Lit):
        return weyl.scalar(d, ast.value)
    if isinstance(ast, Imag):
        return weyl.scalar(d, P_I)
    if isinstance(ast, Param):
        return weyl.scalar(d, P_ALPHA if ast.name == "alpha" else P_E)
    if isinstance(ast, Gen):
        if ast.kind == "x":
            return weyl.x(d, ast.index)
        if ast.kind == "p":
            return weyl.p(d, ast.index)
        return weyl.gamma(d, ast.index)
    if isinstance(ast, RInv2):
        return weyl.rinv2(d)
    if isinstance(ast, Builder):
        return ops.build(d, ast.name, *ast.indices)
    if isinstance(ast, Neg):
        return -evaluate_ast(ast.arg, d)
    if isinstance(ast, Add):
        return evaluate_ast(ast.left, d) + evaluate_ast(ast.right, d)
    if isinstance(ast, Sub):
        return evaluate_ast(ast.left, d) - evaluate_ast(ast.right, d)
    if isinstance(ast, Mul):
        return weyl.multiply(evaluate_ast(ast.left, d), evaluate_ast(ast.right, d))
    if isinstance(ast, Div):
        if ast.divisor == 0:
            raise ZeroDivisionError("division by zero literal")
        return evaluate_ast(ast.left, d) / Fraction(ast.divisor)
    if isinstance(ast, Pow):
        return evaluate_ast(ast.base, d) ** ast.exponent
    if isinstance(ast, Comm):
        return weyl.commutator(evaluate_ast(ast.left, d), evaluate_ast(ast.right, d))
    if isinstance(ast, AntiComm):
        return weyl.anticommutator(evaluate_ast(ast.left, d), evaluate_ast(ast.right, d))
    raise TypeError(f"unknown AST node {ast!r}")


def evaluate(text: str, d: int) -> OperatorExpr:
    """Parse and evaluate in one step."""
    return evaluate_ast(parse(text, d), d)


def format_expr(a: OperatorExpr) -> str:
    """Canonical rendering; evaluate(format_expr(a), a.d) == a."""
    return weyl.render(a)

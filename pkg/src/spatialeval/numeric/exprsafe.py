"""Whitelisted arithmetic expressions for the curve-fitting grader.

Candidate text is never executed: after the ``def f(x, y): return``
scaffold is stripped, any character outside {x, y, digits, + - * / ( ),
whitespace} rejects, and the remainder is parsed by a small recursive
descent parser and evaluated in exact rational arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

ALLOWED_CHARS = set("xy0123456789+-*/() \t\n\r")

_FENCE_RE = re.compile(r"```[a-zA-Z]*\n?|```")
_HEADER_RE = re.compile(r"^\s*def\s+f\s*\(\s*x\s*,\s*y\s*\)\s*:\s*(return\b)?", re.S)
_RETURN_RE = re.compile(r"\breturn\b")


class ExprError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (position {position})")
        self.position = position


def _strip_scaffold(text: str) -> str:
    text = _FENCE_RE.sub("", text)
    m = _HEADER_RE.match(text)
    if m:
        return text[m.end():]
    m = _RETURN_RE.search(text)
    if m:
        return text[m.end():]
    return text


_TOKEN_RE = re.compile(r"\s*(\*\*|[0-9]+|[xy+\-*/()])")


def _tokenize(src: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m:
            if src[pos].isspace():
                pos += 1
                continue
            raise ExprError(f"forbidden character {src[pos]!r}", pos)
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


# AST nodes are plain tuples: ('num', Fraction) ('var', 'x'|'y')
# ('neg', e) ('add'|'sub'|'mul'|'div', l, r) ('pow', base, exponent_int).


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        if self.peek() is not None:
            raise ExprError(f"unexpected token {self.peek()!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            node = ("mul" if op == "*" else "div", node, rhs)
        return node

    def unary(self):
        signs = 0
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                signs += 1
        node = self.power()
        return ("neg", node) if signs % 2 else node

    def power(self):
        base = self.atom()
        if self.peek() == "**":
            self.take()
            exponent = self.unary()  # right-associative
            value = _fold_constant(exponent)
            if value is None:
                raise ExprError("exponent must be a constant integer expression")
            if value.denominator != 1 or value < 0:
                raise ExprError("exponent must be a non-negative integer")
            return ("pow", base, int(value))
        return base

    def atom(self):
        tok = self.take()
        if tok is None:
            raise ExprError("unexpected end of expression")
        if tok == "(":
            node = self.expr()
            if self.take() != ")":
                raise ExprError("unbalanced parenthesis")
            return node
        if tok in ("x", "y"):
            return ("var", tok)
        if tok.isdigit():
            return ("num", Fraction(int(tok)))
        raise ExprError(f"unexpected token {tok!r}")


def _fold_constant(node) -> Fraction | None:
    kind = node[0]
    if kind == "num":
        return node[1]
    if kind == "var":
        return None
    if kind == "neg":
        v = _fold_constant(node[1])
        return None if v is None else -v
    if kind == "pow":
        v = _fold_constant(node[1])
        return None if v is None else v ** node[2]
    l = _fold_constant(node[1])
    r = _fold_constant(node[2])
    if l is None or r is None:
        return None
    if kind == "add":
        return l + r
    if kind == "sub":
        return l - r
    if kind == "mul":
        return l * r
    if r == 0:
        raise ExprError("constant division by zero")
    return l / r


def evaluate(node, x: Fraction, y: Fraction) -> Fraction:
    kind = node[0]
    if kind == "num":
        return node[1]
    if kind == "var":
        return x if node[1] == "x" else y
    if kind == "neg":
        return -evaluate(node[1], x, y)
    if kind == "pow":
        return evaluate(node[1], x, y) ** node[2]
    l = evaluate(node[1], x, y)
    r = evaluate(node[2], x, y)
    if kind == "add":
        return l + r
    if kind == "sub":
        return l - r
    if kind == "mul":
        return l * r
    return l / r  # ZeroDivisionError intentionally propagates


@dataclass(frozen=True)
class CompiledExpr:
    ast: tuple
    source: str

    def __call__(self, x, y) -> Fraction:
        return evaluate(self.ast, Fraction(x), Fraction(y))


def compile_expr(text: str) -> CompiledExpr:
    """Parse candidate function text into a safe rational evaluator."""
    body = _strip_scaffold(text)
    for pos, ch in enumerate(body):
        if ch not in ALLOWED_CHARS:
            raise ExprError(f"forbidden character {ch!r}", pos)
    tokens = _tokenize(body)
    if not tokens:
        raise ExprError("empty expression")
    ast = _Parser(tokens).parse()
    return CompiledExpr(ast, body.strip())


def classify_partition_score(expr: CompiledExpr, grid: list[str]) -> Fraction:
    """Fraction of grid cells whose sign classification matches.

    Grid rows use '#' (f > 0) and '.' (f <= 0); (0, 0) is the top-left,
    x runs along columns. A cell where evaluation fails (division by
    zero) counts as a mismatch.
    """
    cells = 0
    matches = 0
    for yy, row in enumerate(grid):
        for xx, ch in enumerate(row):
            if ch not in "#.":
                raise ExprError(f"grid cell {ch!r} is not '#' or '.'")
            cells += 1
            try:
                value = expr(xx, yy)
            except ZeroDivisionError:
                continue
            predicted = "#" if value > 0 else "."
            if predicted == ch:
                matches += 1
    if cells == 0:
        raise ExprError("empty grid")
    return Fraction(matches, cells)

"""Formula and theory-file parsing.

Grammar (precedence low to high, ``->`` and ``<->`` right-associative)::

    iff     := implies ('<->' iff)?
    implies := disj ('->' implies)?
    disj    := conj ('|' conj)*
    conj    := unary ('&' unary)*
    unary   := '!' unary | atom | 'true' | 'false' | '(' iff ')'

Atoms match ``[a-z][A-Za-z0-9_]*``; ``#`` starts a line comment.  Theory
files hold one formula per line with blank lines ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FormulaSyntaxError
from .formulas import (
    FALSE,
    TRUE,
    And,
    Atom,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
)

_OPERATORS = ("<->", "->", "!", "&", "|", "(", ")")


@dataclass(frozen=True)
class Token:
    kind: str  # 'atom', 'true', 'false', one of _OPERATORS, or 'end'
    text: str
    line: int
    column: int


def tokenize(text: str, first_line: int = 1) -> list[Token]:
    tokens: list[Token] = []
    for offset, raw in enumerate(text.splitlines() or [""]):
        line_no = first_line + offset
        pos = 0
        while pos < len(raw):
            ch = raw[pos]
            if ch in " \t\r":
                pos += 1
                continue
            if ch == "#":
                break
            col = pos + 1
            if raw.startswith("<->", pos):
                tokens.append(Token("<->", "<->", line_no, col))
                pos += 3
                continue
            if raw.startswith("->", pos):
                tokens.append(Token("->", "->", line_no, col))
                pos += 2
                continue
            if ch in "!&|()":
                tokens.append(Token(ch, ch, line_no, col))
                pos += 1
                continue
            if ch.islower():
                end = pos + 1
                while end < len(raw) and (raw[end].isalnum() or raw[end] == "_"):
                    end += 1
                word = raw[pos:end]
                if word == "true":
                    tokens.append(Token("true", word, line_no, col))
                elif word == "false":
                    tokens.append(Token("false", word, line_no, col))
                else:
                    tokens.append(Token("atom", word, line_no, col))
                pos = end
                continue
            raise FormulaSyntaxError(f"unknown token {ch!r}", line_no, col)
    last_line = first_line + max(0, len(text.splitlines()) - 1)
    tokens.append(Token("end", "", last_line, len(text.splitlines()[-1]) + 1 if text.splitlines() else 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token.kind != kind:
            raise FormulaSyntaxError(
                f"expected {kind!r}, found {token.text or 'end of input'!r}",
                token.line,
                token.column,
            )
        return self.advance()

    def parse_iff(self) -> Formula:
        left = self.parse_implies()
        if self.peek().kind == "<->":
            self.advance()
            return Iff(left, self.parse_iff())
        return left

    def parse_implies(self) -> Formula:
        left = self.parse_disj()
        if self.peek().kind == "->":
            self.advance()
            return Implies(left, self.parse_implies())
        return left

    def parse_disj(self) -> Formula:
        node = self.parse_conj()
        while self.peek().kind == "|":
            self.advance()
            node = Or(node, self.parse_conj())
        return node

    def parse_conj(self) -> Formula:
        node = self.parse_unary()
        while self.peek().kind == "&":
            self.advance()
            node = And(node, self.parse_unary())
        return node

    def parse_unary(self) -> Formula:
        token = self.peek()
        if token.kind == "!":
            self.advance()
            return Not(self.parse_unary())
        if token.kind == "atom":
            self.advance()
            return Atom(token.text)
        if token.kind == "true":
            self.advance()
            return TRUE
        if token.kind == "false":
            self.advance()
            return FALSE
        if token.kind == "(":
            self.advance()
            inner = self.parse_iff()
            self.expect(")")
            return inner
        raise FormulaSyntaxError(
            f"unexpected {token.text or 'end of input'!r}", token.line, token.column
        )


def parse_formula(text: str, first_line: int = 1) -> Formula:
    """Parse a single formula; trailing tokens are an error."""
    parser = _Parser(tokenize(text, first_line))
    formula = parser.parse_iff()
    tail = parser.peek()
    if tail.kind != "end":
        raise FormulaSyntaxError(
            f"unexpected trailing {tail.text!r}", tail.line, tail.column
        )
    return formula


def parse_theory_lines(text: str) -> list[Formula]:
    """One formula per non-blank, non-comment line."""
    formulas: list[Formula] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        code = raw.split("#", 1)[0]
        if not code.strip():
            continue
        formulas.append(parse_formula(code, first_line=line_no))
    return formulas

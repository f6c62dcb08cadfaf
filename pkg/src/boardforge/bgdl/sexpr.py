"""Tokenizer, reader and printer for board descriptions.

Lists use ``( )``, point/number lists use ``{ }``. Atoms are symbols,
integers and decimals; ``key:value`` pairs bind a key to the following
atom or bracketed list. ``//`` starts a comment running to end of line.
Every token and node carries a 1-based ``(line, column)`` span.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Union

from ..errors import LexError, UnbalancedParens, UnexpectedToken


class Token(NamedTuple):
    kind: str  # LPAREN RPAREN LBRACE RBRACE SYMBOL INT REAL KEYVAL KEY EOF
    value: object
    span: tuple
    text: str


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>//[^\n]*)
  | (?P<keyval>[A-Za-z_][A-Za-z0-9_]*:(?:[A-Za-z_][A-Za-z0-9_]*|[+-]?\d+(?:\.\d+)?))
  | (?P<key>[A-Za-z_][A-Za-z0-9_]*:)
  | (?P<real>[+-]?\d+\.\d+)
  | (?P<int>[+-]?\d+)
  | (?P<symbol>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<bracket>[(){}])
""", re.VERBOSE)

_BRACKETS = {"(": "LPAREN", ")": "RPAREN", "{": "LBRACE", "}": "RBRACE"}


def _atom_value(text: str):
    if re.fullmatch(r"[+-]?\d+", text):
        return "INT", int(text)
    if re.fullmatch(r"[+-]?\d+\.\d+", text):
        return "REAL", float(text)
    return "SYMBOL", text


def tokenize(text: str) -> list:
    tokens = []
    pos, line, line_start = 0, 1, 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None or m.end() == pos:
            raise LexError(f"illegal character {text[pos]!r}", span=(line, col))
        kind = m.lastgroup
        raw = m.group()
        end = m.end()
        # a number glued to letters (e.g. "8x") is not a valid token
        if kind in ("int", "real") and end < n and (text[end].isalpha() or text[end] == "_"):
            raise LexError(f"malformed number {raw + text[end]!r}", span=(line, col))
        if kind == "bracket":
            tokens.append(Token(_BRACKETS[raw], raw, (line, col), raw))
        elif kind == "keyval":
            key, _, val = raw.partition(":")
            tokens.append(Token("KEYVAL", (key, val), (line, col), raw))
        elif kind == "key":
            tokens.append(Token("KEY", raw[:-1], (line, col), raw))
        elif kind in ("int", "real", "symbol"):
            k, v = _atom_value(raw)
            tokens.append(Token(k, v, (line, col), raw))
        newlines = raw.count("\n")
        if newlines:
            line += newlines
            line_start = pos + raw.rindex("\n") + 1
        pos = end
    tokens.append(Token("EOF", None, (line, pos - line_start + 1), ""))
    return tokens


# ---------------------------------------------------------------------------
# tree


@dataclass(frozen=True)
class Atom:
    kind: str  # SYMBOL INT REAL
    value: object
    text: str
    span: tuple


@dataclass(frozen=True)
class KeyVal:
    key: str
    value: "SExpr"
    span: tuple


@dataclass(frozen=True)
class SList:
    items: tuple
    brace: bool  # True for {...}
    span: tuple
    end: tuple = None  # span of the closing bracket

    @property
    def head(self):
        if self.items and isinstance(self.items[0], Atom) and self.items[0].kind == "SYMBOL":
            return self.items[0].value
        return None


SExpr = Union[Atom, KeyVal, SList]


class _Reader:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def node(self) -> SExpr:
        tok = self.take()
        if tok.kind in ("LPAREN", "LBRACE"):
            close = "RPAREN" if tok.kind == "LPAREN" else "RBRACE"
            items = []
            while True:
                nxt = self.peek()
                if nxt.kind == "EOF":
                    raise UnbalancedParens(
                        f"missing {')' if close == 'RPAREN' else '}'} for {tok.text!r} opened at "
                        f"{tok.span[0]}:{tok.span[1]}", span=nxt.span)
                if nxt.kind in ("RPAREN", "RBRACE"):
                    self.take()
                    if nxt.kind != close:
                        raise UnbalancedParens(
                            f"{nxt.text!r} does not close {tok.text!r} opened at {tok.span[0]}:{tok.span[1]}",
                            span=nxt.span)
                    return SList(tuple(items), tok.kind == "LBRACE", tok.span, nxt.span)
                items.append(self.node())
        if tok.kind in ("RPAREN", "RBRACE"):
            raise UnbalancedParens(f"unexpected {tok.text!r} with no matching opener", span=tok.span)
        if tok.kind == "KEYVAL":
            key, raw = tok.value
            k, v = _atom_value(raw)
            col = tok.span[1] + len(key) + 1
            return KeyVal(key, Atom(k, v, raw, (tok.span[0], col)), tok.span)
        if tok.kind == "KEY":
            nxt = self.peek()
            if nxt.kind not in ("LPAREN", "LBRACE"):
                raise UnexpectedToken(f"'{tok.value}:' must be followed by a value", span=nxt.span)
            return KeyVal(tok.value, self.node(), tok.span)
        if tok.kind == "EOF":
            raise UnexpectedToken("empty description", span=tok.span)
        return Atom(tok.kind, tok.value, tok.text, tok.span)


def parse(source) -> SExpr:
    """Read exactly one expression from text or a token list."""
    tokens = tokenize(source) if isinstance(source, str) else list(source)
    reader = _Reader(tokens)
    root = reader.node()
    extra = reader.peek()
    if extra.kind != "EOF":
        if extra.kind in ("RPAREN", "RBRACE"):
            raise UnbalancedParens(f"unexpected {extra.text!r} after the description", span=extra.span)
        raise UnexpectedToken(f"unexpected {extra.text!r} after the description", span=extra.span)
    return root


def to_text(node: SExpr) -> str:
    if isinstance(node, Atom):
        return node.text
    if isinstance(node, KeyVal):
        return f"{node.key}:{to_text(node.value)}"
    inner = " ".join(to_text(x) for x in node.items)
    return "{" + inner + "}" if node.brace else "(" + inner + ")"


def strip(node: SExpr):
    """Span-free structural form, for comparing trees."""
    if isinstance(node, Atom):
        return (node.kind, node.value)
    if isinstance(node, KeyVal):
        return ("key", node.key, strip(node.value))
    return ("brace" if node.brace else "list", tuple(strip(x) for x in node.items))

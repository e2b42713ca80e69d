"""Minimal S-expression reader and writer shared by the file formats."""

from __future__ import annotations

import re
from typing import Union

SExpr = Union[str, list]

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


class SExprError(ValueError):
    pass


def tokenize(text: str) -> list[str]:
    return _TOKEN.findall(text)


def read(text: str) -> SExpr:
    """Read exactly one S-expression from ``text``."""
    tokens = tokenize(text)
    if not tokens:
        raise SExprError("empty input")
    expr, pos = _read(tokens, 0)
    if pos != len(tokens):
        raise SExprError(f"trailing input after position {pos}")
    return expr


def read_all(text: str) -> list[SExpr]:
    tokens = tokenize(text)
    out = []
    pos = 0
    while pos < len(tokens):
        expr, pos = _read(tokens, pos)
        out.append(expr)
    return out


def _read(tokens: list[str], pos: int) -> tuple[SExpr, int]:
    if pos >= len(tokens):
        raise SExprError("unexpected end of input")
    tok = tokens[pos]
    if tok == ")":
        raise SExprError("unexpected ')'")
    if tok != "(":
        return tok, pos + 1
    items = []
    pos += 1
    while True:
        if pos >= len(tokens):
            raise SExprError("unbalanced '('")
        if tokens[pos] == ")":
            return items, pos + 1
        item, pos = _read(tokens, pos)
        items.append(item)


def write(expr: SExpr) -> str:
    """Canonical form: single spaces, no trailing newline."""
    if isinstance(expr, str):
        return expr
    return "(" + " ".join(write(e) for e in expr) + ")"

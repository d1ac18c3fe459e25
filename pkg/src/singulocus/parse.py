"""Text syntax for polynomials: rational coefficients, `^` powers, optional `*`."""

from __future__ import annotations

import re

from .ring import Poly, RingSpec


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()^*+/-]))")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            break
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num), m.start(1)))
        elif name is not None:
            tokens.append(("name", name, m.start(2)))
        else:
            tokens.append(("op", op, m.start(3)))
        i = m.end()
    rest = text[i:].strip()
    if rest:
        raise ParseError(f"unexpected character {rest[0]!r}", i)
    return tokens


class _PolyParser:
    def __init__(self, ring: RingSpec, text: str):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", None, -1)

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> Poly:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return p

    def expr(self) -> Poly:
        kind, val, _ = self.peek()
        neg = False
        if kind == "op" and val in "+-":
            self.next()
            neg = val == "-"
        p = self.term()
        if neg:
            p = -p
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                q = self.term()
                p = p - q if val == "-" else p + q
            else:
                return p

    def term(self) -> Poly:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                p = p * self.factor()
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                # implicit multiplication: `3x`, `x y`, `2(x+y)`
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Poly:
        p = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, e, pos = self.next()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer", pos)
            p = p**e
        return p

    def atom(self) -> Poly:
        kind, val, pos = self.next()
        if kind == "num":
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.next()
                k3, den, p3 = self.next()
                if k3 != "num" or den == 0:
                    raise ParseError("malformed rational coefficient", p3)
                return self.ring.const(self.ring.field(val, den))
            return self.ring.const(val)
        if kind == "name":
            if val not in self.ring.vars:
                raise ParseError(f"undeclared variable {val!r}", pos)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            kind, val, pos = self.next()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'", pos)
            return p
        if kind == "op" and val == "-":
            return -self.factor()
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_poly(ring: RingSpec, text: str) -> Poly:
    return _PolyParser(ring, text).parse()

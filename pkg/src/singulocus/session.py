"""Session files: named rings, ideals and matrices declared in a small text format.

    ring R = QQ[x,y,z] global degrevlex;
    ring S = QQ[x,y,z] local / (x*y);
    ideal J in R = x*z, x*y;
    matrix A in S = [x, y; 0, z];
    # comment to end of line
"""

from __future__ import annotations

import hashlib
import re

from .ideals import Ideal
from .matrices import RMat
from .orders import NEGDEGREVLEX, ORDERS
from .parse import ParseError
from .ring import RingSpec


class SessionError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


class Session:
    def __init__(self, declarations, source: str):
        self.declarations = declarations  # ordered name -> RingSpec | Ideal | RMat
        self.source = source
        self.content_hash = hashlib.sha256(source.encode()).hexdigest()

    def get(self, name: str):
        if name not in self.declarations:
            raise KeyError(f"undeclared name {name!r}")
        return self.declarations[name]

    def render(self) -> str:
        """Canonical text that re-parses to the same declarations."""
        lines = []
        ring_names = {}
        for name, obj in self.declarations.items():
            if isinstance(obj, RingSpec):
                ring_names[obj] = name
                order = "local" if obj.local else f"global {obj.order!r}"
                head = f"ring {name} = QQ[{','.join(obj.vars)}] {order}"
                if obj.quotient:
                    head += " / (" + ", ".join(str(q) for q in obj.quotient) + ")"
                lines.append(head + ";")
            elif isinstance(obj, Ideal):
                rname = ring_names[obj.ring]
                lines.append(f"ideal {name} in {rname} = " + ", ".join(str(g) for g in obj.gens) + ";")
            else:
                rname = ring_names[obj.ring]
                body = "; ".join(", ".join(str(e) for e in row) for row in obj.rows)
                lines.append(f"matrix {name} in {rname} = [{body}];")
        return "\n".join(lines) + "\n"


def _strip_comments(text: str) -> str:
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group(0)), text)


def parse_session(text: str) -> Session:
    clean = _strip_comments(text)
    decls: dict = {}
    # walk characters collecting bracket-aware statements with start positions
    line, col = 1, 1
    start = None
    depth = 0
    buf = []
    pieces = []
    for ch in clean:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == ";" and depth == 0:
            pieces.append(("".join(buf), start or (line, col)))
            buf = []
            start = None
        else:
            if start is None and not ch.isspace():
                start = (line, col)
            buf.append(ch)
        if ch == "\n":
            line, col = line + 1, 1
        else:
            col += 1
    if "".join(buf).strip():
        l, c = start
        raise SessionError("missing ';' at end of declaration", l, c)

    for stmt, (sl, sc) in pieces:
        stmt = stmt.strip()
        if not stmt:
            continue
        try:
            _parse_statement(stmt, decls)
        except SessionError:
            raise
        except (ParseError, ValueError, KeyError) as exc:
            raise SessionError(str(exc), sl, sc) from exc
    return Session(decls, text)


_RING_RE = re.compile(
    r"^ring\s+(\w+)\s*=\s*QQ\s*\[\s*([\w\s,]+?)\s*\]\s*"
    r"(?:global\s+(\w+)|local)\s*(?:/\s*\((.*)\)\s*)?$",
    re.S,
)
_IDEAL_RE = re.compile(r"^ideal\s+(\w+)\s+in\s+(\w+)\s*=\s*(.*)$", re.S)
_MATRIX_RE = re.compile(r"^matrix\s+(\w+)\s+in\s+(\w+)\s*=\s*\[(.*)\]\s*$", re.S)


def _declare(decls, name):
    if name in decls:
        raise ValueError(f"duplicate declaration of {name!r}")


def _parse_statement(stmt: str, decls: dict):
    m = _RING_RE.match(stmt)
    if m:
        name, varlist, order_name, quotient = m.groups()
        _declare(decls, name)
        varnames = tuple(v.strip() for v in varlist.split(",") if v.strip())
        if order_name is None:
            order = NEGDEGREVLEX
        else:
            if order_name not in ORDERS or not ORDERS[order_name].is_global:
                raise ValueError(f"unknown global order {order_name!r}")
            order = ORDERS[order_name]
        ring = RingSpec(varnames, order)
        if quotient and quotient.strip():
            qs = [ring.poly(part) for part in quotient.split(",")]
            ring = RingSpec(varnames, order, quotient=qs)
        decls[name] = ring
        return
    m = _IDEAL_RE.match(stmt)
    if m:
        name, rname, body = m.groups()
        _declare(decls, name)
        ring = decls.get(rname)
        if not isinstance(ring, RingSpec):
            raise ValueError(f"undeclared ring {rname!r}")
        gens = [ring.poly(part) for part in body.split(",") if part.strip()]
        decls[name] = Ideal(ring, gens)
        return
    m = _MATRIX_RE.match(stmt)
    if m:
        name, rname, body = m.groups()
        _declare(decls, name)
        ring = decls.get(rname)
        if not isinstance(ring, RingSpec):
            raise ValueError(f"undeclared ring {rname!r}")
        rows = []
        for rowtext in body.split(";"):
            rows.append([ring.poly(part) for part in rowtext.split(",")])
        decls[name] = RMat(ring, rows)
        return
    token = stmt.split()[0] if stmt.split() else stmt
    raise ValueError(f"cannot parse declaration starting with {token!r}")

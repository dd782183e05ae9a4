"""Plain-text front-end syntax: functors, values, and spec documents.

Functor expressions::

    X               identity
    R               the pair-or-point functor
    P(E)            finite powerset of E
    E ^ Name        functions from the named alphabet into E
    E * E, E + E    products and sums (usual precedence, parens allowed)
    3               a fresh 3-element constant {u0, u1, u2}
    Name            a named carrier as a constant

Values are written against the functor shape: carrier elements and
constant atoms by name, ``in0 v`` for sums, ``(v, w)`` for products,
``{v, w}`` for finite sets, ``[a: v, b: w]`` for exponents, and ``d`` or
``(x, y)`` for R.

A document holds one functor, named carriers, and named pointwise tables::

    functor = P(X)
    carrier A = a b c d
    coalgebra G : A
      a -> {b}
      b -> {}
      c -> {d}
      d -> {c}
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .errors import WfcoalgError
from .finset import Carrier
from .functor import (Const, ConstVal, Exp, FValue, FuncVal, FunctorExpr, Id,
                      IdVal, InjVal, PowFin, Prod, RFunctor, RPair, RPoint,
                      SetVal, Sum, TupleVal, eval_obj)
from .coalgebra import Algebra, Coalgebra


class ParseError(WfcoalgError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass
class Token:
    kind: str  # 'name', 'int', 'punct'
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9']*|\d+|->|[()\[\]{}^*+,:@=]|\S")


def _tokenize(text: str, line_offset: int = 1) -> List[Token]:
    tokens = []
    for lineno, line in enumerate(text.splitlines() or [""], start=line_offset):
        body = line.split("#", 1)[0]
        for m in _TOKEN_RE.finditer(body):
            t = m.group()
            if t.isdigit():
                kind = "int"
            elif re.fullmatch(r"[A-Za-z_][A-Za-z_0-9']*", t):
                kind = "name"
            else:
                kind = "punct"
            tokens.append(Token(kind, t, lineno, m.start() + 1))
    return tokens


class _Cursor:
    def __init__(self, tokens: List[Token], line: int = 1):
        self.tokens = tokens
        self.pos = 0
        self.last_line = line

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.last_line, 1)
        self.pos += 1
        self.last_line = tok.line
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}",
                             tok.line, tok.col)
        return tok

    def done(self) -> bool:
        return self.pos >= len(self.tokens)


# --- functor expressions ------------------------------------------------------

def parse_functor(text: str, carriers: Dict[str, Carrier],
                  line: int = 1) -> FunctorExpr:
    cur = _Cursor(_tokenize(text, line), line)
    expr = _parse_sum(cur, carriers)
    if not cur.done():
        tok = cur.peek()
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
    return expr


def _parse_sum(cur, carriers) -> FunctorExpr:
    parts = [_parse_prod(cur, carriers)]
    while cur.peek() and cur.peek().text == "+":
        cur.next()
        parts.append(_parse_prod(cur, carriers))
    return parts[0] if len(parts) == 1 else Sum(tuple(parts))


def _parse_prod(cur, carriers) -> FunctorExpr:
    parts = [_parse_exp(cur, carriers)]
    while cur.peek() and cur.peek().text == "*":
        cur.next()
        parts.append(_parse_exp(cur, carriers))
    return parts[0] if len(parts) == 1 else Prod(tuple(parts))


def _parse_exp(cur, carriers) -> FunctorExpr:
    base = _parse_atom(cur, carriers)
    while cur.peek() and cur.peek().text == "^":
        cur.next()
        tok = cur.next()
        if tok.kind != "name" or tok.text not in carriers:
            raise ParseError(f"unknown alphabet {tok.text!r}", tok.line, tok.col)
        base = Exp(carriers[tok.text], base)
    return base


def _parse_atom(cur, carriers) -> FunctorExpr:
    tok = cur.next()
    if tok.text == "X":
        return Id()
    if tok.text == "R":
        return RFunctor()
    if tok.text == "P":
        cur.expect("(")
        inner = _parse_sum(cur, carriers)
        cur.expect(")")
        return PowFin(inner)
    if tok.kind == "int":
        n = int(tok.text)
        return Const(Carrier(tuple(f"u{i}" for i in range(n))))
    if tok.kind == "name":
        if tok.text not in carriers:
            raise ParseError(f"unknown carrier {tok.text!r}", tok.line, tok.col)
        return Const(carriers[tok.text])
    if tok.text == "(":
        inner = _parse_sum(cur, carriers)
        cur.expect(")")
        return inner
    raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.col)


def render_functor(expr: FunctorExpr, carrier_names: Dict[Carrier, str]) -> str:
    def go(e: FunctorExpr, level: int) -> str:
        if isinstance(e, Id):
            return "X"
        if isinstance(e, RFunctor):
            return "R"
        if isinstance(e, PowFin):
            return f"P({go(e.arg, 0)})"
        if isinstance(e, Const):
            name = carrier_names.get(e.values)
            if name is not None:
                return name
            return str(len(e.values))
        if isinstance(e, Exp):
            name = carrier_names.get(e.alphabet)
            if name is None:
                raise ValueError("exponent alphabet has no document name")
            body = f"{go(e.arg, 3)}^{name}"
            return body
        if isinstance(e, Prod):
            body = " * ".join(go(p, 2) for p in e.parts)
            return f"({body})" if level >= 2 else body
        if isinstance(e, Sum):
            body = " + ".join(go(p, 1) for p in e.parts)
            return f"({body})" if level >= 1 else body
        raise TypeError(f"unknown functor node {e!r}")

    return go(expr, 0)


# --- values ---------------------------------------------------------------------

def parse_value(expr: FunctorExpr, carrier: Carrier, text: str,
                line: int = 1) -> FValue:
    cur = _Cursor(_tokenize(text, line), line)
    v = _parse_val(cur, expr, carrier)
    if not cur.done():
        tok = cur.peek()
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
    return v


def _parse_val(cur: _Cursor, expr: FunctorExpr, carrier: Carrier) -> FValue:
    if isinstance(expr, Const):
        tok = cur.next()
        if tok.text not in expr.values:
            raise ParseError(f"{tok.text!r} is not a constant atom here",
                             tok.line, tok.col)
        return ConstVal(tok.text)
    if isinstance(expr, Id):
        tok = cur.next()
        if tok.text not in carrier:
            raise ParseError(f"{tok.text!r} is not a carrier element",
                             tok.line, tok.col)
        return IdVal(tok.text)
    if isinstance(expr, Sum):
        tok = cur.next()
        m = re.fullmatch(r"in(\d+)", tok.text)
        if not m or not int(m.group(1)) < len(expr.parts):
            raise ParseError(f"expected an injection tag, found {tok.text!r}",
                             tok.line, tok.col)
        i = int(m.group(1))
        return InjVal(i, _parse_val(cur, expr.parts[i], carrier))
    if isinstance(expr, Prod):
        cur.expect("(")
        items = []
        for i, part in enumerate(expr.parts):
            if i:
                cur.expect(",")
            items.append(_parse_val(cur, part, carrier))
        cur.expect(")")
        return TupleVal(tuple(items))
    if isinstance(expr, Exp):
        cur.expect("[")
        entries: Dict[Any, FValue] = {}
        first = True
        while True:
            tok = cur.peek()
            if tok is not None and tok.text == "]":
                cur.next()
                break
            if not first:
                cur.expect(",")
            first = False
            letter = cur.next()
            if letter.text not in expr.alphabet:
                raise ParseError(f"{letter.text!r} is not in the alphabet",
                                 letter.line, letter.col)
            cur.expect(":")
            entries[letter.text] = _parse_val(cur, expr.arg, carrier)
        missing = [s for s in expr.alphabet if s not in entries]
        if missing:
            raise ParseError(f"missing alphabet entry {missing[0]!r}",
                             cur.last_line, 1)
        return FuncVal(tuple((s, entries[s]) for s in expr.alphabet))
    if isinstance(expr, PowFin):
        cur.expect("{")
        items = []
        first = True
        while True:
            tok = cur.peek()
            if tok is not None and tok.text == "}":
                cur.next()
                break
            if not first:
                cur.expect(",")
            first = False
            items.append(_parse_val(cur, expr.arg, carrier))
        return SetVal.of(items)
    if isinstance(expr, RFunctor):
        tok = cur.next()
        if tok.text == "d":
            return RPoint()
        if tok.text == "(":
            x = cur.next()
            cur.expect(",")
            y = cur.next()
            cur.expect(")")
            for t in (x, y):
                if t.text not in carrier:
                    raise ParseError(f"{t.text!r} is not a carrier element",
                                     t.line, t.col)
            if x.text == y.text:
                raise ParseError("R pair components must be distinct",
                                 x.line, x.col)
            return RPair(x.text, y.text)
        raise ParseError(f"expected 'd' or a pair, found {tok.text!r}",
                         tok.line, tok.col)
    raise TypeError(f"unknown functor node {expr!r}")


def render_value(expr: FunctorExpr, v: FValue) -> str:
    if isinstance(expr, (Const, Id)):
        return str(v.atom if isinstance(v, ConstVal) else v.element)
    if isinstance(expr, Sum):
        return f"in{v.index} {render_value(expr.parts[v.index], v.value)}"
    if isinstance(expr, Prod):
        return "(" + ", ".join(render_value(p, c)
                               for p, c in zip(expr.parts, v.items)) + ")"
    if isinstance(expr, Exp):
        return "[" + ", ".join(f"{s}: {render_value(expr.arg, c)}"
                               for s, c in v.entries) + "]"
    if isinstance(expr, PowFin):
        return "{" + ", ".join(render_value(expr.arg, c) for c in v.items) + "}"
    if isinstance(expr, RFunctor):
        return "d" if isinstance(v, RPoint) else f"({v.fst}, {v.snd})"
    raise TypeError(f"unknown functor node {expr!r}")


# --- documents -------------------------------------------------------------------

@dataclass
class ParAlgebra:
    """A pointwise table for parametric recursion: (F-value, state) -> result."""

    target: Carrier
    source: Carrier
    table: Dict[Tuple[FValue, Any], Any]

    def __call__(self, v: FValue, a: Any) -> Any:
        return self.table[(v, a)]


@dataclass
class SpecDocument:
    functor_text: str
    functor: FunctorExpr
    carriers: Dict[str, Carrier] = field(default_factory=dict)
    coalgebras: Dict[str, Coalgebra] = field(default_factory=dict)
    algebras: Dict[str, Algebra] = field(default_factory=dict)
    paralgebras: Dict[str, ParAlgebra] = field(default_factory=dict)
    description: str = ""

    def the_coalgebra(self, name: Optional[str]) -> Coalgebra:
        return _pick(self.coalgebras, name, "coalgebra")

    def the_algebra(self, name: Optional[str]) -> Algebra:
        return _pick(self.algebras, name, "algebra")

    def the_paralgebra(self, name: Optional[str]):
        return _pick(self.paralgebras, name, "paralgebra")


def _pick(table: dict, name: Optional[str], what: str):
    if name is not None:
        if name not in table:
            raise WfcoalgError(f"no {what} named {name!r}")
        return table[name]
    if len(table) != 1:
        raise WfcoalgError(f"document has {len(table)} {what}s; name one")
    return next(iter(table.values()))


_HEADER_RE = re.compile(
    r"^(functor|carrier|coalgebra|algebra|paralgebra|description)\b")


def parse_spec(text: str) -> SpecDocument:
    """Parse a document; raises ParseError with a location on bad input."""
    lines = text.splitlines()
    sections: List[Tuple[str, int, str, List[Tuple[int, str]]]] = []
    for i, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].rstrip()
        if not stripped.strip():
            continue
        if raw[:1].isspace():
            if not sections:
                raise ParseError("indented line outside a section", i, 1)
            sections[-1][3].append((i, stripped))
        else:
            m = _HEADER_RE.match(stripped)
            if not m:
                raise ParseError(f"unknown section {stripped.split()[0]!r}", i, 1)
            sections.append((m.group(1), i, stripped, []))

    functor_text = None
    functor_line = 0
    carriers: Dict[str, Carrier] = {}
    doc_description = []
    deferred = []  # non-carrier sections, handled after carriers are known

    for kind, lineno, header, body in sections:
        if kind == "carrier":
            m = re.fullmatch(r"carrier\s+(\w+)\s*=\s*(.*)", header)
            if not m:
                raise ParseError("expected 'carrier NAME = elements'", lineno, 1)
            name, elems = m.group(1), m.group(2).split()
            if name in carriers:
                raise ParseError(f"duplicate carrier {name!r}", lineno, 1)
            if len(set(elems)) != len(elems):
                raise ParseError(f"carrier {name!r} has duplicate elements",
                                 lineno, 1)
            carriers[name] = Carrier(tuple(elems))
        elif kind == "functor":
            m = re.fullmatch(r"functor\s*=\s*(.*)", header)
            if not m or not m.group(1).strip():
                raise ParseError("expected 'functor = expression'", lineno, 1)
            if functor_text is not None:
                raise ParseError("duplicate functor section", lineno, 1)
            functor_text = m.group(1).strip()
            functor_line = lineno
        elif kind == "description":
            doc_description.append(header.partition("description")[2].strip())
        else:
            deferred.append((kind, lineno, header, body))

    if functor_text is None:
        raise ParseError("document has no functor section", len(lines) or 1, 1)
    functor = parse_functor(functor_text, carriers, functor_line)

    doc = SpecDocument(functor_text, functor, carriers,
                       description=" ".join(doc_description))

    for kind, lineno, header, body in deferred:
        if kind == "coalgebra":
            name, carrier = _named_over(header, lineno, carriers, "coalgebra")
            table = {}
            for bl, btext in body:
                lhs, rhs = _split_arrow(btext, bl)
                elem = lhs.strip()
                if elem not in carrier:
                    raise ParseError(f"{elem!r} is not in the carrier", bl, 1)
                table[elem] = parse_value(functor, carrier, rhs, bl)
            missing = [a for a in carrier if a not in table]
            if missing:
                raise ParseError(
                    f"coalgebra {name!r} table misses {missing[0]!r}", lineno, 1)
            doc.coalgebras[name] = Coalgebra.from_dict(functor, carrier, table)
        elif kind == "algebra":
            name, carrier = _named_over(header, lineno, carriers, "algebra")
            table = {}
            for bl, btext in body:
                lhs, rhs = _split_arrow(btext, bl)
                value = parse_value(functor, carrier, lhs, bl)
                elem = rhs.strip()
                if elem not in carrier:
                    raise ParseError(f"{elem!r} is not in the carrier", bl, 1)
                table[value] = elem
            try:
                doc.algebras[name] = Algebra.from_table(functor, carrier, table)
            except ValueError as exc:
                raise ParseError(f"algebra {name!r}: {exc}", lineno, 1) from exc
        elif kind == "paralgebra":
            m = re.fullmatch(r"paralgebra\s+(\w+)\s*:\s*(\w+)\s*@\s*(\w+)", header)
            if not m:
                raise ParseError(
                    "expected 'paralgebra NAME : TARGET @ SOURCE'", lineno, 1)
            name, target_name, source_name = m.groups()
            for n in (target_name, source_name):
                if n not in carriers:
                    raise ParseError(f"unknown carrier {n!r}", lineno, 1)
            target, source = carriers[target_name], carriers[source_name]
            table: Dict[Tuple[FValue, Any], Any] = {}
            for bl, btext in body:
                lhs, rhs = _split_arrow(btext, bl)
                if "@" not in lhs:
                    raise ParseError("expected 'value @ element -> result'", bl, 1)
                vtext, _, atext = lhs.rpartition("@")
                value = parse_value(functor, target, vtext, bl)
                a = atext.strip()
                if a not in source:
                    raise ParseError(f"{a!r} is not in the source carrier", bl, 1)
                x = rhs.strip()
                if x not in target:
                    raise ParseError(f"{x!r} is not in the target carrier", bl, 1)
                table[(value, a)] = x
            for w in eval_obj(functor, target):
                for a in source:
                    if (w, a) not in table:
                        raise ParseError(
                            f"paralgebra {name!r} table is not total", lineno, 1)
            doc.paralgebras[name] = ParAlgebra(target, source, table)

    return doc


def _named_over(header: str, lineno: int, carriers: Dict[str, Carrier],
                what: str) -> Tuple[str, Carrier]:
    m = re.fullmatch(rf"{what}\s+(\w+)\s*:\s*(\w+)", header)
    if not m:
        raise ParseError(f"expected '{what} NAME : CARRIER'", lineno, 1)
    name, carrier_name = m.groups()
    if carrier_name not in carriers:
        raise ParseError(f"unknown carrier {carrier_name!r}", lineno, 1)
    return name, carriers[carrier_name]


def _split_arrow(text: str, lineno: int) -> Tuple[str, str]:
    if "->" not in text:
        raise ParseError("expected 'lhs -> rhs'", lineno, 1)
    lhs, _, rhs = text.partition("->")
    return lhs, rhs


def render_spec(doc: SpecDocument) -> str:
    """Render a document so that it reparses to an equal document."""
    names = {c: n for n, c in doc.carriers.items()}
    out = []
    if doc.description:
        out.append(f"description {doc.description}")
    for name, carrier in doc.carriers.items():
        out.append(f"carrier {name} = " + " ".join(str(x) for x in carrier))
    out.append(f"functor = {doc.functor_text}")
    for name, coalg in doc.coalgebras.items():
        out.append(f"coalgebra {name} : {names[coalg.carrier]}")
        for a in coalg.carrier:
            out.append(f"  {a} -> {render_value(doc.functor, coalg.alpha(a))}")
    for name, alg in doc.algebras.items():
        out.append(f"algebra {name} : {names[alg.carrier]}")
        for v in sorted(alg.table, key=lambda v: v.key()):
            out.append(f"  {render_value(doc.functor, v)} -> {alg.table[v]}")
    for name, par in doc.paralgebras.items():
        out.append(f"paralgebra {name} : {names[par.target]} @ {names[par.source]}")
        for (v, a), x in sorted(par.table.items(),
                                key=lambda kv: (kv[0][0].key(), str(kv[0][1]))):
            out.append(f"  {render_value(doc.functor, v)} @ {a} -> {x}")
    return "\n".join(out) + "\n"

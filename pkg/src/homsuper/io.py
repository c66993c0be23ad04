"""Text format for algebra definitions, expression parsing, report text.

Definition files (`.salg`) are sectioned key-value text:

    # comment
    [algebra]
    name = m3-3-1
    field = Q              # or GF(3)
    params = a, b, c
    even = e1, e2, e3
    odd = e4
    twist = alpha1         # optional; identity when absent
    nonzero = a            # repeatable parameter constraints
    zero = r^2 - a^2       # repeatable; must vanish identically/at binding
    suggest = a=2, b=1     # suggested numeric bindings for fast runs

    [product]
    e1*e3 = -e1            # absent pairs multiply to zero; both orders are
    e3*e1 = e1             # stated explicitly, nothing is inferred

    [map alpha1]
    e3 = b*e1 + c*e2 + e3  # image of e3; absent basis elements map to zero

    [claims]
    key = variant ; check ; hom-malcev ; holds ; note: ...

The expression grammar (scalars):

    expr   := term (('+' | '-') term)* ;
    term   := factor (('*' | '/') factor)* ;
    factor := atom ('^' uint)? ;
    atom   := uint | uint '/' uint | identifier | '(' expr ')' | '-' atom ;

Values in [product], [map ...] and value claims extend the same grammar with
basis identifiers, which denote basis vectors; scalars may multiply or divide
vectors, vectors may be added, and nothing else mixes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .coeff import CoeffError, Field, FieldSpec, FractionField, Scalar, field_for
from .report import IdentityReport
from .superalg import AlgebraError, Basis, EvenLinearMap, SuperAlgebra


class ParseError(Exception):
    def __init__(self, msg: str, line: int, col: int):
        self.msg = msg
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {msg}")


# ---------------------------------------------------------------------------
# Expression tokenizer / parser
# ---------------------------------------------------------------------------

_SYMBOLS = "+-*/^()"


@dataclass
class _Tok:
    kind: str  # "int" | "ident" | one of _SYMBOLS | "end"
    text: str
    line: int
    col: int


def _tokenize(text: str, line: int = 1, col0: int = 1) -> List[_Tok]:
    toks: List[_Tok] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        col = col0 + i
        if ch in " \t":
            i += 1
            continue
        if ch in _SYMBOLS:
            toks.append(_Tok(ch, ch, line, col))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", text[i:j], line, col))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("ident", text[i:j], line, col))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(_Tok("end", "", line, col0 + n))
    return toks


class _Value:
    """Tagged scalar-or-vector during expression evaluation."""

    __slots__ = ("vec", "v")

    def __init__(self, v, vec: bool):
        self.v = v
        self.vec = vec


class _ExprParser:
    def __init__(self, toks: List[_Tok], field: Field, basis: Optional[Basis]):
        self.toks = toks
        self.pos = 0
        self.field = field
        self.basis = basis

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def take(self) -> _Tok:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, msg: str, tok: Optional[_Tok] = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.line, tok.col)

    # scalar helpers
    def _sc(self, v) -> _Value:
        return _Value(v, False)

    def _param(self, name: str):
        f = self.field
        if isinstance(f, FractionField) and name in f.spec.params:
            return f.monomial(name)
        return None

    def parse(self) -> _Value:
        v = self.expr()
        if self.peek().kind != "end":
            self.fail(f"unexpected token {self.peek().text!r}")
        return v

    def expr(self) -> _Value:
        v = self.term()
        while self.peek().kind in "+-":
            op = self.take()
            w = self.term()
            if v.vec != w.vec:
                self.fail("cannot add a scalar and a vector", op)
            if v.vec:
                fn = self.field.add if op.kind == "+" else self.field.sub
                v = _Value([fn(a, b) for a, b in zip(v.v, w.v)], True)
            else:
                fn = self.field.add if op.kind == "+" else self.field.sub
                v = self._sc(fn(v.v, w.v))
        return v

    def term(self) -> _Value:
        v = self.factor()
        while self.peek().kind in "*/":
            op = self.take()
            w = self.factor()
            if op.kind == "*":
                if v.vec and w.vec:
                    self.fail("cannot multiply two vectors", op)
                if v.vec or w.vec:
                    vec, sc = (v, w) if v.vec else (w, v)
                    v = _Value([self.field.mul(sc.v, a) for a in vec.v], True)
                else:
                    v = self._sc(self.field.mul(v.v, w.v))
            else:
                if w.vec:
                    self.fail("cannot divide by a vector", op)
                if self.field.is_zero(w.v):
                    self.fail("division by zero", op)
                if v.vec:
                    inv = self.field.inv(w.v)
                    v = _Value([self.field.mul(inv, a) for a in v.v], True)
                else:
                    v = self._sc(self.field.div(v.v, w.v))
        return v

    def factor(self) -> _Value:
        v = self.atom()
        if self.peek().kind == "^":
            caret = self.take()
            e = self.peek()
            if e.kind != "int":
                self.fail("exponent must be an unsigned integer", caret)
            self.take()
            if v.vec:
                self.fail("cannot raise a vector to a power", caret)
            v = self._sc(self.field.pow(v.v, int(e.text)))
        return v

    def atom(self) -> _Value:
        t = self.peek()
        if t.kind == "int":
            self.take()
            return self._sc(self.field.from_int(int(t.text)))
        if t.kind == "ident":
            self.take()
            p = self._param(t.text)
            if p is not None:
                return self._sc(p)
            if self.basis is not None:
                try:
                    i = self.basis.names.index(t.text)
                except ValueError:
                    self.fail(f"undeclared identifier {t.text!r}", t)
                vec = [self.field.zero] * len(self.basis)
                vec[i] = self.field.one
                return _Value(vec, True)
            self.fail(f"undeclared parameter {t.text!r}", t)
        if t.kind == "(":
            self.take()
            v = self.expr()
            if self.peek().kind != ")":
                self.fail("expected ')'")
            self.take()
            return v
        if t.kind == "-":
            self.take()
            v = self.atom()
            if v.vec:
                return _Value([self.field.neg(a) for a in v.v], True)
            return self._sc(self.field.neg(v.v))
        self.fail(f"expected a value, found {t.text or 'end of input'!r}", t)


def parse_expression(text: str, field: Field, *, line: int = 1, col0: int = 1) -> Scalar:
    """Parse a scalar expression over the field's parameters."""
    p = _ExprParser(_tokenize(text, line, col0), field, None)
    v = p.parse()
    return Scalar(field, v.v)


def parse_vector_expr(
    text: str, field: Field, basis: Basis, *, line: int = 1, col0: int = 1
) -> Tuple[object, ...]:
    """Parse a linear-combination expression; returns a payload vector."""
    p = _ExprParser(_tokenize(text, line, col0), field, basis)
    v = p.parse()
    if not v.vec:
        if field.is_zero(v.v):
            return tuple(field.zero for _ in range(len(basis)))
        raise ParseError("expected a vector-valued expression", line, col0)
    return tuple(v.v)


# ---------------------------------------------------------------------------
# Rendering (canonical; parses back to the same values)
# ---------------------------------------------------------------------------


def render_scalar(field: Field, v) -> str:
    return field.render(v)


def _coeff_atom(field: Field, v) -> Tuple[str, bool]:
    """Render a coefficient and say whether it is negated-at-top-level."""
    s = field.render(v)
    return s, s.startswith("-")


def render_vector(field: Field, basis: Basis, vec: Sequence[object]) -> str:
    parts: List[str] = []
    for name, v in zip(basis.names, vec):
        if field.is_zero(v):
            continue
        s = field.render(v)
        if " + " in s or " - " in s:
            # composite coefficient: keep it intact inside parentheses
            parts.append(
                f"({s})*{name}" if not parts else f" + ({s})*{name}"
            )
            continue
        neg = s.startswith("-")
        if neg:
            mag = field.render(field.neg(v))
            if mag.startswith("-") or " + " in mag or " - " in mag:
                # give up on sign splitting for odd renderings
                parts.append(
                    f"({s})*{name}" if not parts else f" + ({s})*{name}"
                )
                continue
        else:
            mag = s
        body = name if mag == "1" else f"{mag}*{name}"
        if not parts:
            if not neg:
                parts.append(body)
            elif "^" in body.split("*", 1)[0]:
                # "-x^2*..." would bind the minus to the first atom before
                # the power; an explicit -1* keeps the value intact
                parts.append(f"-1*{body}")
            else:
                parts.append(f"-{body}")
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Algebra documents
# ---------------------------------------------------------------------------


@dataclass
class ClaimSpec:
    key: str
    variant: str
    kind: str  # "check" | "value" | "nonzero"
    target: str  # checker name, pseudo-check, or value form
    where: Tuple[str, ...]  # basis tuple for value/nonzero claims
    expected: str  # "holds"/"fails" or a canonical vector expression
    bindings: Dict[str, Fraction]
    fragile: bool
    note: str

    def __eq__(self, other):
        if not isinstance(other, ClaimSpec):
            return NotImplemented
        return (
            self.key, self.variant, self.kind, self.target, self.where,
            self.expected, self.bindings, self.fragile, self.note,
        ) == (
            other.key, other.variant, other.kind, other.target, other.where,
            other.expected, other.bindings, other.fragile, other.note,
        )


@dataclass
class AlgebraDocument:
    name: str
    field: Field
    even: Tuple[str, ...]
    odd: Tuple[str, ...]
    products: Dict[Tuple[str, str], Tuple[object, ...]]
    maps: Dict[str, EvenLinearMap]
    twist: Optional[str]
    claims: Tuple[ClaimSpec, ...]
    nonzero: Tuple[str, ...] = ()
    zero: Tuple[str, ...] = ()
    suggest: Dict[str, Fraction] = dc_field(default_factory=dict)

    @property
    def basis(self) -> Basis:
        names = self.even + self.odd
        parities = (0,) * len(self.even) + (1,) * len(self.odd)
        return Basis(names, parities)

    def algebra(self) -> SuperAlgebra:
        basis = self.basis
        n = len(basis)
        zero = tuple(self.field.zero for _ in range(n))
        table = [[zero] * n for _ in range(n)]
        for (a, b), vec in self.products.items():
            table[basis.index(a)][basis.index(b)] = vec
        return SuperAlgebra(basis, self.field, table)

    def __eq__(self, other):
        if not isinstance(other, AlgebraDocument):
            return NotImplemented
        if (
            self.name != other.name
            or self.field.spec != other.field.spec
            or self.even != other.even
            or self.odd != other.odd
            or self.twist != other.twist
            or self.claims != other.claims
            or self.nonzero != other.nonzero
            or self.zero != other.zero
            or self.suggest != other.suggest
            or set(self.maps) != set(other.maps)
        ):
            return False
        F = self.field
        keys = set(self.products) | set(other.products)
        n = len(self.even) + len(self.odd)
        zero = tuple(F.zero for _ in range(n))
        for key in keys:
            a = self.products.get(key, zero)
            b = other.products.get(key, zero)
            if any(not F.eq(x, y) for x, y in zip(a, b)):
                return False
        for name in self.maps:
            ma, mb = self.maps[name], other.maps[name]
            for ca, cb in zip(ma.cols, mb.cols):
                if any(not F.eq(x, y) for x, y in zip(ca, cb)):
                    return False
        return True


def _split_list(s: str) -> List[str]:
    items = [x.strip() for x in s.split(",")]
    return [x for x in items if x]


def _parse_bindings(s: str, line: int) -> Dict[str, Fraction]:
    out: Dict[str, Fraction] = {}
    for item in _split_list(s):
        if "=" not in item:
            raise ParseError(f"binding {item!r} must look like name=value", line, 1)
        name, _, val = item.partition("=")
        name = name.strip()
        try:
            out[name] = Fraction(val.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad numeric value {val.strip()!r}", line, 1) from None
    return out


def _parse_claim(key: str, body: str, line: int, field: Field, basis: Basis) -> ClaimSpec:
    # everything from "note:" onward is one free-text locator segment
    note = ""
    if "note:" in body:
        body, _, tail = body.partition("note:")
        note = tail.strip()
        body = body.rstrip().rstrip(";")
    segs = [s.strip() for s in body.split(";")]
    if len(segs) < 2:
        raise ParseError("claim needs at least 'variant ; kind ; ...'", line, 1)
    variant, kind = segs[0], segs[1]
    rest = segs[2:]
    bindings: Dict[str, Fraction] = {}
    fragile = False
    core: List[str] = []
    for seg in rest:
        if seg.startswith("set "):
            bindings = _parse_bindings(seg[4:], line)
        elif seg == "fragile":
            fragile = True
        else:
            core.append(seg)
    if kind == "check":
        if len(core) != 2 or core[1] not in ("holds", "fails"):
            raise ParseError(
                "check claim needs 'checker ; holds|fails'", line, 1
            )
        target, expected = core
        where: Tuple[str, ...] = ()
    elif kind in ("value", "nonzero"):
        if len(core) != 3:
            raise ParseError(
                "value claim needs 'form ; tuple ; expression'", line, 1
            )
        target = core[0]
        where = tuple(_split_list(core[1]))
        for nm in where:
            if nm not in basis.names:
                raise ParseError(f"unknown basis element {nm!r} in claim", line, 1)
        vec = parse_vector_expr(core[2], field, basis, line=line)
        expected = render_vector(field, basis, vec)
    else:
        raise ParseError(f"unknown claim kind {kind!r}", line, 1)
    return ClaimSpec(key, variant, kind, target, where, expected, bindings, fragile, note)


def parse_algebra_file(text: str) -> AlgebraDocument:
    """Parse and validate a .salg document."""
    section = None
    map_name = None
    algebra_kv: Dict[str, Tuple[str, int]] = {}
    nonzero: List[str] = []
    zero: List[str] = []
    product_lines: List[Tuple[str, str, int]] = []
    map_lines: Dict[str, List[Tuple[str, str, int]]] = {}
    claim_lines: List[Tuple[str, str, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ParseError("unterminated section header", lineno, len(line))
            header = stripped[1:-1].strip()
            if header == "algebra" or header == "product" or header == "claims":
                section, map_name = header, None
            elif header.startswith("map "):
                map_name = header[4:].strip()
                if not map_name.isidentifier():
                    raise ParseError(f"bad map name {map_name!r}", lineno, 1)
                if map_name in map_lines:
                    raise ParseError(f"duplicate map {map_name!r}", lineno, 1)
                map_lines[map_name] = []
                section = "map"
            else:
                raise ParseError(f"unknown section {header!r}", lineno, 1)
            continue
        if section is None:
            raise ParseError("content before any section header", lineno, 1)
        if "=" not in line:
            raise ParseError("expected 'key = value'", lineno, 1)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if section == "algebra":
            if key == "nonzero":
                nonzero.append(value)
            elif key == "zero":
                zero.append(value)
            else:
                if key in algebra_kv:
                    raise ParseError(f"duplicate key {key!r}", lineno, 1)
                algebra_kv[key] = (value, lineno)
        elif section == "product":
            product_lines.append((key, value, lineno))
        elif section == "map":
            map_lines[map_name].append((key, value, lineno))
        else:
            claim_lines.append((key, value, lineno))

    def need(key: str) -> Tuple[str, int]:
        if key not in algebra_kv:
            raise ParseError(f"[algebra] section is missing {key!r}", 1, 1)
        return algebra_kv[key]

    name = need("name")[0]
    field_str, field_line = need("field")
    params = tuple(_split_list(algebra_kv.get("params", ("", 0))[0]))
    try:
        if field_str == "Q":
            spec = FieldSpec("Q", None, params)
        elif field_str.startswith("GF(") and field_str.endswith(")"):
            try:
                p = int(field_str[3:-1])
            except ValueError:
                raise ParseError(f"bad field {field_str!r}", field_line, 1) from None
            spec = FieldSpec("GF", p, params)
        else:
            raise ParseError(f"bad field {field_str!r}", field_line, 1)
    except CoeffError as exc:
        raise ParseError(str(exc), field_line, 1) from None
    field = field_for(spec)

    even = tuple(_split_list(algebra_kv.get("even", ("", 0))[0]))
    odd = tuple(_split_list(algebra_kv.get("odd", ("", 0))[0]))
    if not even and not odd:
        raise ParseError("empty basis", 1, 1)
    overlap = set(even) & set(odd)
    if overlap:
        raise ParseError(f"basis element in both parities: {sorted(overlap)}", 1, 1)
    clash = (set(even) | set(odd)) & set(params)
    if clash:
        raise ParseError(f"name used as both parameter and basis: {sorted(clash)}", 1, 1)
    try:
        basis = Basis(even + odd, (0,) * len(even) + (1,) * len(odd))
    except AlgebraError as exc:
        raise ParseError(str(exc), 1, 1) from None

    products: Dict[Tuple[str, str], Tuple[object, ...]] = {}
    for key, value, lineno in product_lines:
        toks = _tokenize(key, lineno, 1)
        if (
            len(toks) != 4
            or toks[0].kind != "ident"
            or toks[1].kind != "*"
            or toks[2].kind != "ident"
        ):
            raise ParseError("product key must be 'ei*ej'", lineno, 1)
        a, b = toks[0].text, toks[2].text
        for nm in (a, b):
            if nm not in basis.names:
                raise ParseError(f"undeclared basis name {nm!r}", lineno, toks[0].col)
        if (a, b) in products:
            raise ParseError(f"duplicate product {a}*{b}", lineno, 1)
        vec = parse_vector_expr(value, field, basis, line=lineno)
        products[(a, b)] = vec

    # grading of every stated product
    parities = dict(zip(basis.names, basis.parities))
    line_of = {key.replace(" ", ""): lineno for key, _, lineno in product_lines}
    for (a, b), vec in products.items():
        want = (parities[a] + parities[b]) % 2
        for nm, component in zip(basis.names, vec):
            if parities[nm] != want and not field.is_zero(component):
                raise ParseError(
                    f"parity-inconsistent product {a}*{b}: component {nm} "
                    f"has parity {parities[nm]}, expected {want}",
                    line_of.get(f"{a}*{b}", 1),
                    1,
                )

    maps: Dict[str, EvenLinearMap] = {}
    for mname, lines in map_lines.items():
        cols = {name: tuple(field.zero for _ in basis.names) for name in basis.names}
        for key, value, lineno in lines:
            if key not in basis.names:
                raise ParseError(f"undeclared basis name {key!r}", lineno, 1)
            cols[key] = parse_vector_expr(value, field, basis, line=lineno)
        maps[mname] = EvenLinearMap(field, [cols[n] for n in basis.names])

    twist = algebra_kv.get("twist", (None, 0))[0]
    if twist is not None and twist not in maps:
        raise ParseError(f"twist map {twist!r} is not defined", algebra_kv["twist"][1], 1)

    suggest = (
        _parse_bindings(*algebra_kv["suggest"]) if "suggest" in algebra_kv else {}
    )

    claims = tuple(
        _parse_claim(key, value, lineno, field, basis)
        for key, value, lineno in claim_lines
    )
    seen = set()
    for c in claims:
        if c.key in seen:
            raise ParseError(f"duplicate claim key {c.key!r}", 1, 1)
        seen.add(c.key)

    # constraint expressions must parse
    for expr in list(nonzero) + list(zero):
        parse_expression(expr, field)

    return AlgebraDocument(
        name, field, even, odd, products, maps, twist, claims,
        tuple(nonzero), tuple(zero), suggest,
    )


def serialize_algebra_document(doc: AlgebraDocument) -> str:
    out: List[str] = ["[algebra]"]
    out.append(f"name = {doc.name}")
    out.append(f"field = {doc.field.spec.base_label()}")
    if doc.field.spec.params:
        out.append(f"params = {', '.join(doc.field.spec.params)}")
    if doc.even:
        out.append(f"even = {', '.join(doc.even)}")
    if doc.odd:
        out.append(f"odd = {', '.join(doc.odd)}")
    if doc.twist:
        out.append(f"twist = {doc.twist}")
    for expr in doc.nonzero:
        out.append(f"nonzero = {expr}")
    for expr in doc.zero:
        out.append(f"zero = {expr}")
    if doc.suggest:
        pairs = ", ".join(f"{k}={v}" for k, v in doc.suggest.items())
        out.append(f"suggest = {pairs}")
    basis = doc.basis
    out.append("")
    out.append("[product]")
    for a in basis.names:
        for b in basis.names:
            vec = doc.products.get((a, b))
            if vec is None or all(doc.field.is_zero(x) for x in vec):
                continue
            out.append(f"{a}*{b} = {render_vector(doc.field, basis, vec)}")
    for mname in doc.maps:
        out.append("")
        out.append(f"[map {mname}]")
        for name, col in zip(basis.names, doc.maps[mname].cols):
            out.append(f"{name} = {render_vector(doc.field, basis, col)}")
    if doc.claims:
        out.append("")
        out.append("[claims]")
        for c in doc.claims:
            segs = [c.variant, c.kind]
            if c.kind == "check":
                segs += [c.target, c.expected]
            else:
                segs += [c.target, ", ".join(c.where), c.expected]
            if c.bindings:
                segs.append(
                    "set " + ", ".join(f"{k}={v}" for k, v in c.bindings.items())
                )
            if c.fragile:
                segs.append("fragile")
            if c.note:
                segs.append(f"note: {c.note}")
            out.append(f"{c.key} = {' ; '.join(segs)}")
    out.append("")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# Report text
# ---------------------------------------------------------------------------


def serialize_report(r: IdentityReport, field: Field, basis: Basis) -> str:
    """Deterministic JSON-shaped single-line report."""
    payload = {
        "identity": r.identity,
        "holds": r.holds,
        "tuples_checked": r.tuples_checked,
        "counterexamples": [
            {
                "tuple": list(names),
                "residual": render_vector(field, basis, [s.v for s in res]),
            }
            for names, res in r.counterexamples
        ],
    }
    return json.dumps(payload, separators=(",", ":"))


def parse_report(text: str, field: Field, basis: Basis) -> IdentityReport:
    data = json.loads(text)
    ces = []
    for entry in data["counterexamples"]:
        vec = parse_vector_expr(entry["residual"], field, basis)
        ces.append((tuple(entry["tuple"]), tuple(Scalar(field, v) for v in vec)))
    return IdentityReport(
        data["identity"], data["holds"], tuple(ces), data["tuples_checked"]
    )

"""Problem-file grammar: parsing and canonical serialization.

A problem file names a standard graded ring, two ideals and options:

    # comments run to the end of the line
    ring Q[x,y,z] / (x^3 + y^3 + z^3);
    I = (x + y + z, y*z);
    J = (x + y, z);
    option assert_domain = true;

Fields are `Q` or `GF <prime>`.  Multiplication needs an explicit `*`,
powers use `^`, coefficients are integers or integer fractions.  Every
generator and relation must be homogeneous; all variables have degree 1.
Errors carry line:column positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import hashlib

from idealdep.errors import ParseError
from idealdep.fields import QQ, FieldSpec, GF
from idealdep.poly import Polynomial, PolyRing
from idealdep.rings import GradedIdeal, GradedRing

_PUNCT = set(";,=()+-*^/[]")
_RESERVED = {"ring", "option", "I", "J", "Q", "GF"}


@dataclass(frozen=True)
class Token:
    kind: str  # "name" | "int" | "punct" | "end"
    text: str
    line: int
    col: int


def _tokenize(text: str):
    tokens = []
    line = 1
    col = 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(Token("int", text[start:i], line, col))
            col += i - start
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("name", text[start:i], line, col))
            col += i - start
            continue
        if ch in _PUNCT:
            tokens.append(Token("punct", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, col))
    return tokens


class _Stream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            raise ParseError(f"expected {want!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.col)
        return self.next()

    def accept(self, kind: str, text: str | None = None):
        tok = self.peek()
        if tok.kind == kind and (text is None or tok.text == text):
            return self.next()
        return None


# ---------------------------------------------------------------------------
# polynomial expressions
# ---------------------------------------------------------------------------


def _parse_poly(stream: _Stream, ring: PolyRing) -> Polynomial:
    result = _parse_term(stream, ring)
    if result is None:
        tok = stream.peek()
        raise ParseError("expected a polynomial", tok.line, tok.col)
    while True:
        if stream.accept("punct", "+"):
            result = result + _parse_term_required(stream, ring)
        elif stream.accept("punct", "-"):
            result = result - _parse_term_required(stream, ring)
        else:
            return result


def _parse_term_required(stream, ring):
    t = _parse_term(stream, ring)
    if t is None:
        tok = stream.peek()
        raise ParseError("expected a term", tok.line, tok.col)
    return t


def _parse_term(stream: _Stream, ring: PolyRing):
    sign = 1
    while True:
        if stream.accept("punct", "-"):
            sign = -sign
        elif stream.accept("punct", "+"):
            pass
        else:
            break
    f = _parse_factor(stream, ring)
    if f is None:
        return None
    while stream.accept("punct", "*"):
        g = _parse_factor(stream, ring)
        if g is None:
            tok = stream.peek()
            raise ParseError("expected a factor after '*'", tok.line, tok.col)
        f = f * g
    return f * sign if sign < 0 else f


def _parse_factor(stream: _Stream, ring: PolyRing):
    base = _parse_atom(stream, ring)
    if base is None:
        return None
    if stream.accept("punct", "^"):
        tok = stream.expect("int")
        base = base ** int(tok.text)
    return base


def _parse_atom(stream: _Stream, ring: PolyRing):
    tok = stream.peek()
    if tok.kind == "int":
        stream.next()
        num = int(tok.text)
        if stream.accept("punct", "/"):
            den_tok = stream.expect("int")
            den = int(den_tok.text)
            if den == 0:
                raise ParseError("zero denominator", den_tok.line, den_tok.col)
            return ring.constant(Fraction(num, den))
        return ring.constant(num)
    if tok.kind == "name":
        stream.next()
        try:
            idx = ring.names.index(tok.text)
        except ValueError:
            raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col) from None
        return ring.variable(idx)
    if tok.kind == "punct" and tok.text == "(":
        stream.next()
        inner = _parse_poly(stream, ring)
        stream.expect("punct", ")")
        return inner
    return None


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse a bare polynomial expression in the given ring."""
    stream = _Stream(_tokenize(text))
    poly = _parse_poly(stream, ring)
    tok = stream.peek()
    if tok.kind != "end":
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
    return poly


# ---------------------------------------------------------------------------
# problem files
# ---------------------------------------------------------------------------


@dataclass
class ProblemOptions:
    c: int | None = None
    assert_domain: bool = False
    oracle: bool = False

    def as_dict(self) -> dict:
        return {"c": self.c, "assert_domain": self.assert_domain, "oracle": self.oracle}


@dataclass
class ProblemSpec:
    ring: GradedRing
    inner: GradedIdeal | None  # I
    outer: GradedIdeal | None  # J
    options: ProblemOptions = field(default_factory=ProblemOptions)

    def ideal(self, label: str) -> GradedIdeal:
        got = {"I": self.inner, "J": self.outer}.get(label)
        if got is None:
            raise ParseError(f"the problem does not define ideal {label}")
        return got

    def serialize(self) -> str:
        lines = []
        ring = self.ring
        head = f"ring {ring.field.label()}[{','.join(ring.names)}]"
        if ring.relations:
            head += " / (" + ", ".join(str(r) for r in ring.relations) + ")"
        lines.append(head + ";")
        for label, ideal in (("I", self.inner), ("J", self.outer)):
            if ideal is not None:
                lines.append(f"{label} = (" + ", ".join(str(g) for g in ideal.gens) + ");")
        opts = self.options
        if opts.assert_domain:
            lines.append("option assert_domain = true;")
        if opts.c is not None:
            lines.append(f"option c = {opts.c};")
        if opts.oracle:
            lines.append("option oracle = true;")
        return "\n".join(lines) + "\n"

    def sha256(self) -> str:
        return hashlib.sha256(self.serialize().encode("utf-8")).hexdigest()


def _parse_field(stream: _Stream) -> FieldSpec:
    tok = stream.peek()
    if tok.kind == "name" and tok.text == "Q":
        stream.next()
        return QQ
    if tok.kind == "name" and tok.text == "GF":
        stream.next()
        ptok = stream.expect("int")
        try:
            return GF(int(ptok.text))
        except ValueError as exc:
            raise ParseError(str(exc), ptok.line, ptok.col) from None
    raise ParseError("expected a field tag: Q or GF <prime>", tok.line, tok.col)


def _check_homogeneous(poly: Polynomial, what: str, tok: Token):
    if poly.is_zero():
        raise ParseError(f"zero {what} is not allowed", tok.line, tok.col)
    if poly.homogeneous_degree() is None:
        raise ParseError(f"non-homogeneous {what}: {poly}", tok.line, tok.col)


def _parse_poly_list(stream: _Stream, ring: PolyRing, what: str):
    polys = []
    stream.expect("punct", "(")
    if stream.accept("punct", ")"):
        return polys
    while True:
        tok = stream.peek()
        poly = _parse_poly(stream, ring)
        _check_homogeneous(poly, what, tok)
        polys.append(poly)
        if stream.accept("punct", ","):
            continue
        stream.expect("punct", ")")
        return polys


def parse_problem(text: str) -> ProblemSpec:
    stream = _Stream(_tokenize(text))
    ring: GradedRing | None = None
    ambient: PolyRing | None = None
    inner = None
    outer = None
    options = ProblemOptions()
    seen = set()
    while True:
        tok = stream.peek()
        if tok.kind == "end":
            break
        if tok.kind == "name" and tok.text == "ring":
            if ring is not None:
                raise ParseError("duplicate ring statement", tok.line, tok.col)
            stream.next()
            fieldspec = _parse_field(stream)
            stream.expect("punct", "[")
            names = []
            while True:
                name_tok = stream.expect("name")
                if name_tok.text in _RESERVED:
                    raise ParseError(
                        f"{name_tok.text!r} is reserved and cannot name a variable",
                        name_tok.line, name_tok.col,
                    )
                names.append(name_tok.text)
                if stream.accept("punct", ","):
                    continue
                break
            stream.expect("punct", "]")
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable name", tok.line, tok.col)
            ambient = PolyRing(fieldspec, names)
            relations = []
            if stream.accept("punct", "/"):
                relations = _parse_poly_list(stream, ambient, "relation")
            stream.expect("punct", ";")
            ring = GradedRing(ambient, relations)
            continue
        if tok.kind == "name" and tok.text in ("I", "J"):
            if ring is None:
                raise ParseError("the ring must be declared before the ideals",
                                 tok.line, tok.col)
            if tok.text in seen:
                raise ParseError(f"duplicate ideal {tok.text}", tok.line, tok.col)
            seen.add(tok.text)
            stream.next()
            stream.expect("punct", "=")
            gens = _parse_poly_list(stream, ambient, "generator")
            stream.expect("punct", ";")
            try:
                ideal = GradedIdeal(ring, gens)
            except ValueError as exc:
                raise ParseError(str(exc), tok.line, tok.col) from None
            if tok.text == "I":
                inner = ideal
            else:
                outer = ideal
            continue
        if tok.kind == "name" and tok.text == "option":
            stream.next()
            key_tok = stream.expect("name")
            stream.expect("punct", "=")
            val_tok = stream.next()
            stream.expect("punct", ";")
            key = key_tok.text
            if key == "c":
                if val_tok.kind != "int":
                    raise ParseError("option c needs an integer", val_tok.line, val_tok.col)
                options.c = int(val_tok.text)
            elif key in ("assert_domain", "oracle"):
                if val_tok.text not in ("true", "false"):
                    raise ParseError(f"option {key} needs true or false",
                                     val_tok.line, val_tok.col)
                setattr(options, key, val_tok.text == "true")
            else:
                raise ParseError(f"unknown option {key!r}", key_tok.line, key_tok.col)
            continue
        raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.col)
    if ring is None:
        raise ParseError("missing ring statement")
    if inner is None:
        raise ParseError("missing ideal I")
    return ProblemSpec(ring=ring, inner=inner, outer=outer, options=options)

"""A small declarative language for verification scenarios.

Grammar (statements in any order and number; comments run from '#' to end of
line; integers are signed decimal):

    document   := { scenario }
    scenario   := "scenario" STRING "{" { statement } "}"
    statement  := profile | center | grass | assert
    profile    := "profile" IDENT "h4" INT "index" INT
                  ("c2h2" INT | "ambient" IDENT "codim" INT) "chi" INT "euler" INT
    center     := "center" ("curve" "genus" INT "hc" INT
                  | "surface" "hhc" INT "hkc" INT "kc2" INT "euler" INT "c2xc" INT)
    grass      := "grassmannian" INT INT
    assert     := "assert" expr ("==" | "!=") expr "cite" STRING ["label" STRING]
    expr       := arithmetic over INT, "H", "E", + - * ^, parentheses,
                  sigma[INT{,INT}], and calls quartic(e,e,e,e), chi(e),
                  euler(), genus(e,e), solve(e,e,e), degree(e),
                  chern(e,e,e,e), dim(e,e)

The left side of an assertion is the computed value, the right side the
expected one.  ``ambient IDENT codim INT`` derives the profile from the
Chern engine (ambients: p4, w22, gr24, gr25, gr26) and cross-checks the h4,
index, chi and euler literals against the derived values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import blowup, profiles
from .blowup import BlowupModel, CurveCenter, Divisor, SurfaceCenter
from .schubert import Grassmannian, SchubertCycle, grass_dim, sigma
from .scenarios import Assertion, Scenario

_MAX_DEPTH = 64

_AMBIENTS = {
    "p4": (),
    "w22": (2, 2),
    "gr24": (2, 4),
    "gr25": (2, 5),
    "gr26": (2, 6),
}

_CI_AMBIENTS = ("p4", "w22")


class ParseError(ValueError):
    """A positioned syntax or document error; line and column are 1-based."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


# ---------------------------------------------------------------------------
# lexer

_SYMBOLS = ("==", "!=", "{", "}", "(", ")", "[", "]", ",", "+", "-", "*", "^")


@dataclass(frozen=True)
class _Token:
    kind: str  # IDENT, INT, STRING, SYM, EOF
    value: str
    line: int
    column: int


def _lex(source: str) -> list:
    tokens = []
    line, col, i, n = 1, 1, 0, len(source)

    def advance(ch: str):
        nonlocal line, col
        if ch == "\n":
            line += 1
            col = 1
        else:
            col += 1

    while i < n:
        ch = source[i]
        if ch in " \t\r\n":
            advance(ch)
            i += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                advance(source[i])
                i += 1
            continue
        start_line, start_col = line, col
        if ch == '"':
            i += 1
            advance(ch)
            buf = []
            while True:
                if i >= n or source[i] == "\n":
                    raise ParseError(start_line, start_col, "unterminated string literal")
                c = source[i]
                if c == '"':
                    advance(c)
                    i += 1
                    break
                if c == "\\":
                    if i + 1 >= n or source[i + 1] not in ('"', "\\"):
                        raise ParseError(line, col, "unsupported escape in string literal")
                    buf.append(source[i + 1])
                    advance(c)
                    advance(source[i + 1])
                    i += 2
                    continue
                buf.append(c)
                advance(c)
                i += 1
            tokens.append(_Token("STRING", "".join(buf), start_line, start_col))
            continue
        if ch.isdecimal():
            j = i
            while j < n and source[j].isdecimal():
                j += 1
            tokens.append(_Token("INT", source[i:j], start_line, start_col))
            for c in source[i:j]:
                advance(c)
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(_Token("IDENT", source[i:j], start_line, start_col))
            for c in source[i:j]:
                advance(c)
            i = j
            continue
        two = source[i : i + 2]
        if two in ("==", "!="):
            tokens.append(_Token("SYM", two, start_line, start_col))
            advance(two[0])
            advance(two[1])
            i += 2
            continue
        if ch in "{}()[],+-*^":
            tokens.append(_Token("SYM", ch, start_line, start_col))
            advance(ch)
            i += 1
            continue
        raise ParseError(start_line, start_col, f"unexpected character {ch!r}")
    tokens.append(_Token("EOF", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# syntax tree

@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class DivisorAtom:
    name: str  # "H" or "E"


@dataclass(frozen=True)
class SigmaAtom:
    parts: tuple


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    line: int
    column: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class ProfileStmt:
    ident: str
    h4: int
    index: int
    c2h2: Optional[int]
    ambient: Optional[str]
    codim: Optional[int]
    chi: int
    euler: int
    line: int
    column: int


@dataclass(frozen=True)
class CenterStmt:
    kind: str  # "curve" or "surface"
    fields: tuple  # ordered (name, value) pairs
    line: int
    column: int


@dataclass(frozen=True)
class GrassStmt:
    k: int
    n: int
    line: int
    column: int


@dataclass(frozen=True)
class AssertStmt:
    left: object
    op: str
    right: object
    cite: str
    label: Optional[str]
    line: int
    column: int


@dataclass
class ScenarioNode:
    name: str
    statements: list
    line: int
    column: int


@dataclass
class Document:
    scenarios: list = field(default_factory=list)

    def pretty(self) -> str:
        return "\n".join(_print_scenario(s) for s in self.scenarios)

    def build(self) -> list:
        return [_build_scenario(node) for node in self.scenarios]


# ---------------------------------------------------------------------------
# parser

class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0
        self.depth = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def fail(self, tok: _Token, message: str):
        raise ParseError(tok.line, tok.column, message)

    def expect_sym(self, sym: str) -> _Token:
        tok = self.next()
        if tok.kind != "SYM" or tok.value != sym:
            self.fail(tok, f"expected {sym!r}, found {self._describe(tok)}")
        return tok

    def expect_keyword(self, word: str) -> _Token:
        tok = self.next()
        if tok.kind != "IDENT" or tok.value != word:
            self.fail(tok, f"expected {word!r}, found {self._describe(tok)}")
        return tok

    def expect_ident(self) -> _Token:
        tok = self.next()
        if tok.kind != "IDENT":
            self.fail(tok, f"expected a name, found {self._describe(tok)}")
        return tok

    def expect_string(self) -> _Token:
        tok = self.next()
        if tok.kind != "STRING":
            self.fail(tok, f"expected a string, found {self._describe(tok)}")
        return tok

    def expect_int(self) -> int:
        tok = self.peek()
        sign = 1
        if tok.kind == "SYM" and tok.value == "-":
            self.next()
            sign = -1
            tok = self.peek()
        tok = self.next()
        if tok.kind != "INT":
            self.fail(tok, f"expected an integer, found {self._describe(tok)}")
        return sign * int(tok.value)

    @staticmethod
    def _describe(tok: _Token) -> str:
        if tok.kind == "EOF":
            return "end of input"
        if tok.kind == "STRING":
            return "a string"
        return repr(tok.value)

    # document / scenario / statements

    def parse_document(self) -> Document:
        doc = Document()
        seen = set()
        while True:
            tok = self.peek()
            if tok.kind == "EOF":
                return doc
            if tok.kind == "IDENT" and tok.value == "scenario":
                node = self.parse_scenario()
                if node.name in seen:
                    raise ParseError(node.line, node.column, f"duplicate scenario name {node.name!r}")
                seen.add(node.name)
                doc.scenarios.append(node)
            else:
                self.fail(tok, f"expected 'scenario', found {self._describe(tok)}")

    def parse_scenario(self) -> ScenarioNode:
        kw = self.expect_keyword("scenario")
        name = self.expect_string().value
        self.expect_sym("{")
        statements = []
        while True:
            tok = self.peek()
            if tok.kind == "SYM" and tok.value == "}":
                self.next()
                return ScenarioNode(name, statements, kw.line, kw.column)
            if tok.kind == "IDENT" and tok.value == "profile":
                statements.append(self.parse_profile())
            elif tok.kind == "IDENT" and tok.value == "center":
                statements.append(self.parse_center())
            elif tok.kind == "IDENT" and tok.value == "grassmannian":
                statements.append(self.parse_grass())
            elif tok.kind == "IDENT" and tok.value == "assert":
                statements.append(self.parse_assert())
            else:
                self.fail(tok, f"expected a statement or '}}', found {self._describe(tok)}")

    def parse_profile(self) -> ProfileStmt:
        kw = self.expect_keyword("profile")
        ident = self.expect_ident().value
        self.expect_keyword("h4")
        h4 = self.expect_int()
        self.expect_keyword("index")
        index = self.expect_int()
        tok = self.peek()
        c2h2 = ambient = codim = None
        if tok.kind == "IDENT" and tok.value == "c2h2":
            self.next()
            c2h2 = self.expect_int()
        elif tok.kind == "IDENT" and tok.value == "ambient":
            self.next()
            ambient = self.expect_ident().value
            self.expect_keyword("codim")
            codim = self.expect_int()
        else:
            self.fail(tok, f"expected 'c2h2' or 'ambient', found {self._describe(tok)}")
        self.expect_keyword("chi")
        chi = self.expect_int()
        self.expect_keyword("euler")
        euler = self.expect_int()
        return ProfileStmt(ident, h4, index, c2h2, ambient, codim, chi, euler, kw.line, kw.column)

    def parse_center(self) -> CenterStmt:
        kw = self.expect_keyword("center")
        tok = self.expect_ident()
        if tok.value == "curve":
            names = ("genus", "hc")
        elif tok.value == "surface":
            names = ("hhc", "hkc", "kc2", "euler", "c2xc")
        else:
            self.fail(tok, f"expected 'curve' or 'surface', found {self._describe(tok)}")
        fields = []
        for name in names:
            self.expect_keyword(name)
            fields.append((name, self.expect_int()))
        return CenterStmt(tok.value, tuple(fields), kw.line, kw.column)

    def parse_grass(self) -> GrassStmt:
        kw = self.expect_keyword("grassmannian")
        k = self.expect_int()
        n = self.expect_int()
        return GrassStmt(k, n, kw.line, kw.column)

    def parse_assert(self) -> AssertStmt:
        kw = self.expect_keyword("assert")
        left = self.parse_expr()
        tok = self.next()
        if tok.kind != "SYM" or tok.value not in ("==", "!="):
            self.fail(tok, f"expected '==' or '!=', found {self._describe(tok)}")
        right = self.parse_expr()
        self.expect_keyword("cite")
        cite = self.expect_string().value
        label = None
        nxt = self.peek()
        if nxt.kind == "IDENT" and nxt.value == "label":
            self.next()
            label = self.expect_string().value
        return AssertStmt(left, tok.value, right, cite, label, kw.line, kw.column)

    # expressions

    def parse_expr(self):
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            tok = self.peek()
            raise ParseError(tok.line, tok.column, "expression nesting too deep")
        try:
            node = self.parse_term()
            while True:
                tok = self.peek()
                if tok.kind == "SYM" and tok.value in ("+", "-"):
                    self.next()
                    node = BinOp(tok.value, node, self.parse_term())
                else:
                    return node
        finally:
            self.depth -= 1

    def parse_term(self):
        node = self.parse_unary()
        while True:
            tok = self.peek()
            if tok.kind == "SYM" and tok.value == "*":
                self.next()
                node = BinOp("*", node, self.parse_unary())
            else:
                return node

    def parse_unary(self):
        tok = self.peek()
        if tok.kind == "SYM" and tok.value == "-":
            self.depth += 1
            if self.depth > _MAX_DEPTH:
                raise ParseError(tok.line, tok.column, "expression nesting too deep")
            try:
                self.next()
                return Neg(self.parse_unary())
            finally:
                self.depth -= 1
        return self.parse_power()

    def parse_power(self):
        node = self.parse_atom()
        tok = self.peek()
        if tok.kind == "SYM" and tok.value == "^":
            self.depth += 1
            if self.depth > _MAX_DEPTH:
                raise ParseError(tok.line, tok.column, "expression nesting too deep")
            try:
                self.next()
                return BinOp("^", node, self.parse_unary())
            finally:
                self.depth -= 1
        return node

    def parse_atom(self):
        tok = self.next()
        if tok.kind == "INT":
            return IntLit(int(tok.value))
        if tok.kind == "SYM" and tok.value == "(":
            node = self.parse_expr()
            self.expect_sym(")")
            return node
        if tok.kind == "IDENT":
            nxt = self.peek()
            if tok.value == "sigma" and nxt.kind == "SYM" and nxt.value == "[":
                self.next()
                parts = [self.expect_int()]
                while True:
                    t = self.next()
                    if t.kind == "SYM" and t.value == "]":
                        return SigmaAtom(tuple(parts))
                    if t.kind == "SYM" and t.value == ",":
                        parts.append(self.expect_int())
                    else:
                        self.fail(t, f"expected ',' or ']', found {self._describe(t)}")
            if nxt.kind == "SYM" and nxt.value == "(":
                self.next()
                args = []
                if not (self.peek().kind == "SYM" and self.peek().value == ")"):
                    args.append(self.parse_expr())
                    while self.peek().kind == "SYM" and self.peek().value == ",":
                        self.next()
                        args.append(self.parse_expr())
                self.expect_sym(")")
                return Call(tok.value, tuple(args), tok.line, tok.column)
            if tok.value in ("H", "E"):
                return DivisorAtom(tok.value)
            self.fail(tok, f"unknown name {tok.value!r}")
        self.fail(tok, f"expected an expression, found {self._describe(tok)}")


def parse(source: str) -> Document:
    """Parse a document; raise :class:`ParseError` with 1-based position."""
    return _Parser(_lex(source)).parse_document()


# ---------------------------------------------------------------------------
# canonical printing

_PREC = {"+": 1, "-": 1, "*": 2, "neg": 3, "^": 4}


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _print_expr(node, min_prec: int = 0) -> str:
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, DivisorAtom):
        return node.name
    if isinstance(node, SigmaAtom):
        return "sigma[" + ", ".join(str(p) for p in node.parts) + "]"
    if isinstance(node, Call):
        return node.name + "(" + ", ".join(_print_expr(a) for a in node.args) + ")"
    if isinstance(node, Neg):
        text = "-" + _print_expr(node.operand, _PREC["neg"])
        return f"({text})" if _PREC["neg"] < min_prec else text
    if isinstance(node, BinOp):
        prec = _PREC[node.op]
        if node.op == "^":
            text = _print_expr(node.left, prec + 1) + "^" + _print_expr(node.right, prec)
        else:
            text = (
                _print_expr(node.left, prec)
                + f" {node.op} "
                + _print_expr(node.right, prec + 1)
            )
        return f"({text})" if prec < min_prec else text
    raise TypeError(f"cannot print {node!r}")


def _print_statement(stmt) -> str:
    if isinstance(stmt, ProfileStmt):
        if stmt.ambient is None:
            middle = f"c2h2 {stmt.c2h2}"
        else:
            middle = f"ambient {stmt.ambient} codim {stmt.codim}"
        return (
            f"profile {stmt.ident} h4 {stmt.h4} index {stmt.index} {middle}"
            f" chi {stmt.chi} euler {stmt.euler}"
        )
    if isinstance(stmt, CenterStmt):
        body = " ".join(f"{name} {value}" for name, value in stmt.fields)
        return f"center {stmt.kind} {body}"
    if isinstance(stmt, GrassStmt):
        return f"grassmannian {stmt.k} {stmt.n}"
    if isinstance(stmt, AssertStmt):
        text = (
            f"assert {_print_expr(stmt.left)} {stmt.op} {_print_expr(stmt.right)}"
            f" cite {_quote(stmt.cite)}"
        )
        if stmt.label is not None:
            text += f" label {_quote(stmt.label)}"
        return text
    raise TypeError(f"cannot print {stmt!r}")


def _print_scenario(node: ScenarioNode) -> str:
    lines = [f"scenario {_quote(node.name)} {{"]
    lines.extend("  " + _print_statement(s) for s in node.statements)
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# evaluation

class _Setup:
    """Deferred, validated scenario state shared by all assertion thunks."""

    def __init__(self):
        self.profile_stmt: Optional[ProfileStmt] = None
        self.center_stmt: Optional[CenterStmt] = None
        self.grass_stmt: Optional[GrassStmt] = None

    def add(self, stmt):
        if isinstance(stmt, ProfileStmt):
            if self.profile_stmt is not None:
                raise ParseError(stmt.line, stmt.column, "duplicate profile statement")
            self.profile_stmt = stmt
        elif isinstance(stmt, CenterStmt):
            if self.center_stmt is not None:
                raise ParseError(stmt.line, stmt.column, "duplicate center statement")
            self.center_stmt = stmt
        elif isinstance(stmt, GrassStmt):
            if self.grass_stmt is not None:
                raise ParseError(stmt.line, stmt.column, "duplicate grassmannian statement")
            self.grass_stmt = stmt

    def profile(self):
        stmt = self.profile_stmt
        if stmt is None:
            raise ValueError("no profile statement in this scenario")
        if stmt.ambient is None:
            return blowup.FourfoldProfile(
                name=stmt.ident,
                h4=stmt.h4,
                index=stmt.index,
                c2h2=stmt.c2h2,
                c1c2h=stmt.index * stmt.c2h2,
                chi=stmt.chi,
                euler=stmt.euler,
            )
        if stmt.ambient not in _AMBIENTS:
            raise ValueError(f"unknown ambient {stmt.ambient!r}")
        if stmt.ambient in _CI_AMBIENTS:
            if stmt.codim != 0:
                raise ValueError(f"ambient {stmt.ambient!r} requires codim 0")
            derived = profiles.ci_profile(stmt.ident, _AMBIENTS[stmt.ambient])
        else:
            k, n = _AMBIENTS[stmt.ambient]
            derived = profiles.section_profile(stmt.ident, k, n, stmt.codim)
        stated = (stmt.h4, stmt.index, stmt.chi, stmt.euler)
        found = (derived.h4, derived.index, derived.chi, derived.euler)
        if stated != found:
            raise ValueError(
                f"profile literals (h4, index, chi, euler) = {stated}"
                f" disagree with the derived values {found}"
            )
        return derived

    def center(self):
        stmt = self.center_stmt
        if stmt is None:
            raise ValueError("no center statement in this scenario")
        values = dict(stmt.fields)
        if stmt.kind == "curve":
            return CurveCenter(genus=values["genus"], hc=values["hc"])
        return SurfaceCenter(
            hhc=values["hhc"],
            hkc=values["hkc"],
            kc2=values["kc2"],
            euler=values["euler"],
            c2xc=values["c2xc"],
        )

    def model(self) -> BlowupModel:
        return BlowupModel(self.profile(), self.center())

    def grassmannian(self) -> Grassmannian:
        if self.grass_stmt is None:
            raise ValueError("no grassmannian statement in this scenario")
        return Grassmannian(self.grass_stmt.k, self.grass_stmt.n)


def _as_int(value, what: str) -> int:
    if isinstance(value, bool):
        raise TypeError(f"{what} must be an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    raise TypeError(f"{what} must be an integer, got {value!r}")


def _as_divisor(value, what: str) -> Divisor:
    if not isinstance(value, Divisor):
        raise TypeError(f"{what} must be a divisor expression in H and E")
    return value


def _eval_call(call: Call, setup: _Setup):
    args = [_eval(a, setup) for a in call.args]
    name = call.name

    def arity(k: int):
        if len(args) != k:
            raise TypeError(f"{name}() takes {k} arguments, got {len(args)}")

    if name == "quartic":
        arity(4)
        divs = [_as_divisor(a, "a quartic() argument") for a in args]
        return blowup.quartic_number(setup.model(), *divs)
    if name == "chi":
        arity(1)
        return blowup.chi_riemann_roch(setup.model(), _as_divisor(args[0], "the chi() argument"))
    if name == "euler":
        arity(0)
        return blowup.euler_blowup(setup.model())
    if name == "genus":
        arity(2)
        return blowup.adjunction_genus(
            _as_int(args[0], "the first genus() argument"),
            _as_int(args[1], "the second genus() argument"),
        )
    if name == "solve":
        arity(3)
        a, b, rhs = (_as_int(v, "a solve() argument") for v in args)
        return blowup.solve_linear(a, b, rhs)
    if name == "degree":
        arity(1)
        if not isinstance(args[0], SchubertCycle):
            raise TypeError("degree() takes a Schubert cycle")
        return args[0].integral()
    if name == "chern":
        arity(4)
        k, n, codim, i = (_as_int(v, "a chern() argument") for v in args)
        model = profiles.section_model(k, n, codim)
        return model.chern.component(i)
    if name == "dim":
        arity(2)
        return grass_dim(_as_int(args[0], "a dim() argument"), _as_int(args[1], "a dim() argument"))
    raise ValueError(f"unknown function {name!r}")


def _eval(node, setup: _Setup):
    if isinstance(node, IntLit):
        return node.value
    if isinstance(node, DivisorAtom):
        return blowup.H if node.name == "H" else blowup.E
    if isinstance(node, SigmaAtom):
        return sigma(setup.grassmannian(), *node.parts)
    if isinstance(node, Neg):
        return -_eval(node.operand, setup)
    if isinstance(node, Call):
        return _eval_call(node, setup)
    if isinstance(node, BinOp):
        left = _eval(node.left, setup)
        right = _eval(node.right, setup)
        return _apply(node.op, left, right)
    raise TypeError(f"cannot evaluate {node!r}")


def _apply(op: str, left, right):
    number = (int, Fraction)
    if op == "^":
        exponent = _as_int(right, "an exponent")
        if exponent < 0:
            raise ValueError("negative exponents are not supported")
        if isinstance(left, number):
            return left ** exponent
        if isinstance(left, SchubertCycle):
            return left ** exponent
        raise TypeError(f"cannot raise {type(left).__name__} to a power")
    if isinstance(left, number) and isinstance(right, number):
        return {"+": left + right, "-": left - right, "*": left * right}[op]
    if isinstance(left, Divisor) and isinstance(right, Divisor) and op in ("+", "-"):
        return left + right if op == "+" else left - right
    if op == "*":
        if isinstance(left, int) and isinstance(right, (Divisor, SchubertCycle)):
            return right * left
        if isinstance(left, (Divisor, SchubertCycle)) and isinstance(right, int):
            return left * right
        if isinstance(left, SchubertCycle) and isinstance(right, SchubertCycle):
            return left * right
    if isinstance(left, SchubertCycle) and isinstance(right, SchubertCycle) and op in ("+", "-"):
        return left + right if op == "+" else left - right
    raise TypeError(
        f"cannot apply {op!r} to {type(left).__name__} and {type(right).__name__}"
    )


def _build_scenario(node: ScenarioNode) -> Scenario:
    setup = _Setup()
    for stmt in node.statements:
        setup.add(stmt)
    assertions = []
    labels = set()
    counter = 0
    for stmt in node.statements:
        if not isinstance(stmt, AssertStmt):
            continue
        counter += 1
        label = stmt.label if stmt.label is not None else f"a{counter:02d}"
        if label in labels:
            raise ParseError(stmt.line, stmt.column, f"duplicate assertion label {label!r}")
        labels.add(label)

        def make_thunk(expr_node):
            return lambda: _eval(expr_node, setup)

        assertions.append(
            Assertion(
                label=label,
                cite=stmt.cite,
                op=stmt.op,
                expected=make_thunk(stmt.right),
                actual=make_thunk(stmt.left),
            )
        )
    return Scenario(name=node.name, assertions=assertions)

"""
Expression language for elements, group words and scalars.

    element := ['-'] term (('+'|'-') term)*
    term    := scalar? factor+ | scalar
    factor  := atom "'"*
    atom    := s<i> | t<j> | p | q | 1 | S | T | R | p<i> | q<j> | r[i,j] | '(' element ')'
    scalar  := piece ('*'? piece)*      piece := int ('/' int)? | sqrt(int) | int '/' sqrt(int)

Juxtaposition is multiplication and tokenization is longest-match, so
`p1` is the projection s1 s1' and `s1t1'` is s1 t1'.
"""
import re
from dataclasses import dataclass
from typing import List, Optional

from onm_model.models.context import Context, IndexOutOfRangeError, OnmError
from onm_model.models.elements import Element
from onm_model.models.freegroup import GroupWord
from onm_model.models.scalars import Scalar

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<sqrt>sqrt)
  | (?P<gen>[stab]\d+)
  | (?P<proj>[pq]\d*)
  | (?P<name>[STRre])
  | (?P<int>\d+)
  | (?P<op>\^-1|[-+*/'′(),\[\]])
""", re.VERBOSE)


class ParseError(OnmError):
    def __init__(self, message: str, text: str = "", offset: int = 0):
        self.line = text.count("\n", 0, offset) + 1
        self.column = offset - (text.rfind("\n", 0, offset) + 1) + 1
        self.message = message
        super().__init__(f"{message} at line {self.line}, column {self.column}")


class ParseIndexError(ParseError, IndexOutOfRangeError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = match.lastgroup
        if kind != "ws":
            value = match.group()
            tokens.append(Token(kind, "'" if value == "′" else value, pos))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: Context):
        self.text = text
        self.ctx = ctx
        self.tokens = tokenize(text)
        self.pos = 0
        self._objects = None

    # ------------------------------------------------------------ plumbing
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        token = self.peek()
        return token.kind == kind and (text is None or token.text == text)

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        if not self.at(kind, text):
            self.fail(f"expected {text or kind}")
        return self.take()

    def fail(self, message: str, token: Optional[Token] = None):
        token = token or self.peek()
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ParseError(f"{message}, found {found}", self.text, token.offset)

    def finish(self) -> None:
        if not self.at("end"):
            self.fail("unexpected token")

    def index_error(self, exc: IndexOutOfRangeError, token: Token):
        raise ParseIndexError(str(exc), self.text, token.offset) from exc

    # ------------------------------------------------------------- scalars
    def starts_scalar(self) -> bool:
        return self.at("int") or self.at("sqrt")

    def root(self) -> int:
        self.expect("sqrt")
        self.expect("op", "(")
        k = int(self.expect("int").text)
        self.expect("op", ")")
        return k

    def piece(self) -> Scalar:
        if self.at("sqrt"):
            return Scalar.sqrt(self.ctx, self.root())
        num = int(self.expect("int").text)
        if not self.at("op", "/"):
            return Scalar.rational(self.ctx, num)
        slash = self.take()
        if self.at("sqrt"):
            return num * Scalar.inv_sqrt(self.ctx, self.root())
        den = int(self.expect("int").text)
        if den == 0:
            self.fail("zero denominator", slash)
        return Scalar.rational(self.ctx, num, den)

    def scalar(self) -> Scalar:
        value = self.piece()
        while True:
            if self.at("op", "*"):
                self.take()
                value = value * self.piece()
            elif self.at("sqrt"):
                value = value * self.piece()
            else:
                return value

    def scalar_sum(self) -> Scalar:
        negative = self.sign()
        total = self.scalar()
        total = -total if negative else total
        while self.at("op", "+") or self.at("op", "-"):
            op = self.take().text
            term = self.scalar()
            total = total + term if op == "+" else total - term
        return total

    def sign(self) -> bool:
        if self.at("op", "-"):
            self.take()
            return True
        if self.at("op", "+"):
            self.take()
        return False

    # ------------------------------------------------------------ elements
    def objects(self):
        if self._objects is None:
            from onm_model.controller.covariant import CovariantObjects

            self._objects = CovariantObjects.build(self.ctx)
        return self._objects

    def starts_atom(self) -> bool:
        token = self.peek()
        return (token.kind in ("proj", "name") and token.text != "e") \
            or (token.kind == "gen" and token.text[0] in "st") \
            or (token.kind == "int" and token.text == "1") \
            or (token.kind == "op" and token.text == "(")

    def atom(self) -> Element:
        token = self.peek()
        ctx = self.ctx
        if not self.starts_atom():
            self.fail("expected a generator, macro or '('")
        self.take()
        try:
            if token.kind == "gen":
                index = int(token.text[1:])
                return Element.s(ctx, index) if token.text[0] == "s" else Element.t(ctx, index)
            if token.kind == "proj":
                if len(token.text) == 1:
                    return Element.p(ctx) if token.text == "p" else Element.q(ctx)
                index = int(token.text[1:])
                if token.text[0] == "p":
                    return Element.s(ctx, index) * Element.s_star(ctx, index)
                return Element.t(ctx, index) * Element.t_star(ctx, index)
            if token.kind == "int":
                return Element.unit(ctx)
            if token.text == "(":
                inner = self.element()
                self.expect("op", ")")
                return inner
            if token.text == "r":
                return self.r_macro(token)
            return getattr(self.objects(), token.text)
        except IndexOutOfRangeError as exc:
            if isinstance(exc, ParseError):
                raise
            self.index_error(exc, token)

    def r_macro(self, token: Token) -> Element:
        self.expect("op", "[")
        i = int(self.expect("int").text)
        self.expect("op", ",")
        j = int(self.expect("int").text)
        self.expect("op", "]")
        self.ctx.check_s(i)
        self.ctx.check_t(j)
        return self.objects().r[(i, j)]

    def factor(self) -> Element:
        value = self.atom()
        while self.at("op", "'"):
            self.take()
            value = value.adjoint()
        return value

    def term(self) -> Element:
        coef = self.scalar() if self.starts_scalar() else None
        value = None
        while self.starts_atom():
            f = self.factor()
            value = f if value is None else value * f
        if value is None:
            if coef is None:
                self.fail("expected a term")
            value = Element.unit(self.ctx)
        return value if coef is None else coef * value

    def element(self) -> Element:
        negative = self.sign()
        total = self.term()
        if negative:
            total = -total
        while self.at("op", "+") or self.at("op", "-"):
            op = self.take().text
            term = self.term()
            total = total + term if op == "+" else total - term
        return total

    # --------------------------------------------------------- group words
    def groupword(self) -> GroupWord:
        word = GroupWord.identity(self.ctx)
        if self.at("end"):
            self.fail("expected a group word")
        while not self.at("end"):
            token = self.take()
            if token.kind == "name" and token.text == "e":
                continue
            if token.kind != "gen" or token.text[0] not in "ab":
                self.fail("expected a<i>, b<j> or e", token)
            exp = 1
            if self.at("op", "^-1"):
                self.take()
                exp = -1
            index = int(token.text[1:])
            try:
                letter = GroupWord.a(self.ctx, index, exp) if token.text[0] == "a" else GroupWord.b(self.ctx, index, exp)
            except IndexOutOfRangeError as exc:
                self.index_error(exc, token)
            word = word * letter
        return word


def parse_element(text: str, ctx: Context) -> Element:
    parser = _Parser(text, ctx)
    value = parser.element()
    parser.finish()
    return value


def parse_groupword(text: str, ctx: Context) -> GroupWord:
    return _Parser(text, ctx).groupword()


def parse_scalar(text: str, ctx: Context) -> Scalar:
    """Accepts both the element coefficient form `1/2 sqrt(2)` and Scalar rendering `1/2*sqrt(2) + 3`."""
    parser = _Parser(text, ctx)
    value = parser.scalar_sum()
    parser.finish()
    return value

"""
Boolean formulas over tiered variables x_{i,j}.

The concrete grammar (no whitespace inside candidate names):

    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '~' factor | '(' expr ')' | 'x_{' INT ',' INT '}'

Subscripts are positive integers. Constants are not part of the grammar.
"""
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, Mapping, Tuple, Union

VarKey = Tuple[int, int]

_TOKEN_RE = re.compile(r"\s*(?:(x_\{(\d+),(\d+)\})|([&|~()]))")


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


@dataclass(frozen=True)
class Var:
    i: int
    j: int


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    operands: Tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    operands: Tuple["Formula", ...]


Formula = Union[Var, Not, And, Or]


def _tokenize(text: str) -> List[Tuple[str, object, int]]:
    tokens: List[Tuple[str, object, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise FormulaSyntaxError(f"Unexpected character {text[pos]!r}", pos)
        if match.group(1):
            i, j = int(match.group(2)), int(match.group(3))
            if i < 1 or j < 1:
                raise FormulaSyntaxError("Variable subscripts must be positive", match.start(1))
            tokens.append(("var", (i, j), match.start(1)))
        else:
            tokens.append((match.group(4), None, match.start(4)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def _peek(self) -> str:
        return self.tokens[self.index][0] if self.index < len(self.tokens) else "end"

    def _position(self) -> int:
        return self.tokens[self.index][2] if self.index < len(self.tokens) else len(self.text)

    def parse(self) -> Formula:
        if not self.tokens:
            raise FormulaSyntaxError("Empty formula", 0)
        result = self._expr()
        if self.index != len(self.tokens):
            raise FormulaSyntaxError(f"Unexpected token {self._peek()!r}", self._position())
        return result

    def _expr(self) -> Formula:
        operands = [self._term()]
        while self._peek() == "|":
            self.index += 1
            operands.append(self._term())
        return operands[0] if len(operands) == 1 else Or(tuple(operands))

    def _term(self) -> Formula:
        operands = [self._factor()]
        while self._peek() == "&":
            self.index += 1
            operands.append(self._factor())
        return operands[0] if len(operands) == 1 else And(tuple(operands))

    def _factor(self) -> Formula:
        kind = self._peek()
        if kind == "~":
            self.index += 1
            return Not(self._factor())
        if kind == "(":
            self.index += 1
            inner = self._expr()
            if self._peek() != ")":
                raise FormulaSyntaxError("Missing ')'", self._position())
            self.index += 1
            return inner
        if kind == "var":
            i, j = self.tokens[self.index][1]  # type: ignore[misc]
            self.index += 1
            return Var(i, j)
        raise FormulaSyntaxError(f"Expected a variable, '~' or '(' but found {kind!r}", self._position())


@lru_cache(maxsize=4096)
def parse_formula(text: str) -> Formula:
    return _Parser(text).parse()


def render(formula: Formula) -> str:
    """Canonical, whitespace-free rendering that parse_formula reads back."""
    if isinstance(formula, Var):
        return f"x_{{{formula.i},{formula.j}}}"
    if isinstance(formula, Not):
        inner = render(formula.operand)
        return f"~{inner}" if isinstance(formula.operand, (Var, Not)) else f"~({inner})"
    if isinstance(formula, And):
        return "&".join(
            render(op) if not isinstance(op, Or) else f"({render(op)})" for op in formula.operands
        )
    return "|".join(render(op) for op in formula.operands)


def variables(formula: Formula) -> FrozenSet[VarKey]:
    if isinstance(formula, Var):
        return frozenset(((formula.i, formula.j),))
    if isinstance(formula, Not):
        return variables(formula.operand)
    found: FrozenSet[VarKey] = frozenset()
    for op in formula.operands:
        found |= variables(op)
    return found


def evaluate(formula: Formula, assignment: Mapping[VarKey, bool]) -> bool:
    if isinstance(formula, Var):
        return bool(assignment[(formula.i, formula.j)])
    if isinstance(formula, Not):
        return not evaluate(formula.operand, assignment)
    if isinstance(formula, And):
        return all(evaluate(op, assignment) for op in formula.operands)
    return any(evaluate(op, assignment) for op in formula.operands)

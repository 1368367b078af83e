"""AtomScript abstract syntax tree.

Spans are carried for diagnostics but excluded from equality so that a
pretty-printed program compares structurally equal to its source AST.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from atomxr.diagnostics import Span

# Constant kinds
INT = "int"
FLOAT = "float"
STRING = "string"
BOOL = "bool"
NULL = "null"


@dataclass(frozen=True)
class Constant:
    kind: str  # int | float | string | bool | null
    value: object  # int | float | str | bool | None
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Identifier:
    name: str
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class ArrayLiteral:
    items: tuple
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class FunctionCall:
    name: str
    args: tuple
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Paren:
    inner: object
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Not:
    operand: object
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Binary:
    op: str  # * / + - == != < > <= >= && ||
    lhs: object
    rhs: object
    span: Span | None = field(default=None, compare=False, repr=False)


Expression = Constant | Identifier | ArrayLiteral | FunctionCall | Paren | Not | Binary


@dataclass(frozen=True)
class Assignment:
    name: str
    value: Expression
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class IfBlock:
    condition: Expression
    body: tuple  # of Line
    # None, a tuple of Line (plain else), or a nested IfBlock (else-if chain)
    else_branch: object = None
    span: Span | None = field(default=None, compare=False, repr=False)


ON_START = "onStart"
FOREVER = "forever"
ON_COLLISION = "onCollision"
ON_BUTTON_PRESS = "onButtonPress"


@dataclass(frozen=True)
class ListenerBlock:
    kind: str  # onStart | forever | onCollision | onButtonPress
    type_args: tuple  # of Constant; 2 for onCollision, 1 for onButtonPress
    body: tuple  # of Line
    span: Span | None = field(default=None, compare=False, repr=False)


# A statement line is an Assignment or a FunctionCall; block lines add
# IfBlock and ListenerBlock.
Line = Assignment | FunctionCall | IfBlock | ListenerBlock


@dataclass(frozen=True)
class Program:
    lines: tuple  # of Line


MULT_OPS = ("*", "/")
ADD_OPS = ("+", "-")
COMPARE_OPS = ("==", "!=", "<", ">", "<=", ">=")
BOOL_OPS = ("&&", "||")

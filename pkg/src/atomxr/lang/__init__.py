"""AtomScript front end: tokenizer, parser, printer, validator."""

from atomxr.lang import nodes
from atomxr.lang.parser import (
    AtomScriptSyntaxError,
    ParseResult,
    parse,
    parse_program,
)
from atomxr.lang.printer import pretty_print
from atomxr.lang.tokens import Token, TokenKind, tokenize
from atomxr.lang.validator import collect_assigned_names, validate

__all__ = [
    "AtomScriptSyntaxError",
    "ParseResult",
    "Token",
    "TokenKind",
    "collect_assigned_names",
    "nodes",
    "parse",
    "parse_program",
    "pretty_print",
    "tokenize",
    "validate",
]

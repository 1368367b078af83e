"""Canonical AtomScript formatting.

One fixed output form: 4-space indent, one statement per line, a newline
after every '{', spaces around binary operators, and double-quoted strings
(single quotes only when the content itself contains a double quote, since
the language has no escape sequences).  parse(pretty_print(p)) is
structurally equal to p.
"""

from __future__ import annotations

import decimal

from atomxr.lang import nodes

INDENT = "    "


def format_constant(const: nodes.Constant) -> str:
    if const.kind == nodes.INT:
        return str(const.value)
    if const.kind == nodes.FLOAT:
        return _float_literal(const.value)
    if const.kind == nodes.STRING:
        return _string_literal(const.value)
    if const.kind == nodes.BOOL:
        return "true" if const.value else "false"
    if const.kind == nodes.NULL:
        return "null"
    raise ValueError(f"unknown constant kind {const.kind!r}")


def _string_literal(content: str) -> str:
    if '"' not in content:
        return f'"{content}"'
    if "'" not in content:
        return f"'{content}'"
    raise ValueError("string contains both quote characters and cannot be written")


def _float_literal(value: float) -> str:
    # repr() round-trips, but wanders into exponent notation for extreme
    # magnitudes, which the grammar's FLOAT rule cannot express.  Fall back
    # to the exact decimal expansion in that case.
    text = repr(float(value))
    if "e" not in text and "E" not in text:
        return text
    dec = decimal.Decimal(value)
    text = format(dec, "f")
    if "." not in text:
        text += ".0"
    return text


def format_expression(expr) -> str:
    if isinstance(expr, nodes.Constant):
        return format_constant(expr)
    if isinstance(expr, nodes.Identifier):
        return expr.name
    if isinstance(expr, nodes.ArrayLiteral):
        return "[" + ", ".join(format_expression(e) for e in expr.items) + "]"
    if isinstance(expr, nodes.FunctionCall):
        return expr.name + "(" + ", ".join(format_expression(a) for a in expr.args) + ")"
    if isinstance(expr, nodes.Paren):
        return "(" + format_expression(expr.inner) + ")"
    if isinstance(expr, nodes.Not):
        return "!" + format_expression(expr.operand)
    if isinstance(expr, nodes.Binary):
        return f"{format_expression(expr.lhs)} {expr.op} {format_expression(expr.rhs)}"
    raise ValueError(f"unknown expression node {type(expr).__name__}")


def _emit_line(line, depth: int, out: list[str]) -> None:
    pad = INDENT * depth
    if isinstance(line, nodes.Assignment):
        out.append(f"{pad}{line.name} = {format_expression(line.value)};\n")
    elif isinstance(line, nodes.FunctionCall):
        out.append(f"{pad}{format_expression(line)};\n")
    elif isinstance(line, nodes.IfBlock):
        _emit_if(line, depth, out, pad)
    elif isinstance(line, nodes.ListenerBlock):
        header = line.kind
        if line.type_args:
            header += "<" + ", ".join(format_constant(c) for c in line.type_args) + ">"
        out.append(f"{pad}{header} {{\n")
        for inner in line.body:
            _emit_line(inner, depth + 1, out)
        out.append(f"{pad}}}\n")
    else:
        raise ValueError(f"unknown line node {type(line).__name__}")


def _emit_if(block: nodes.IfBlock, depth: int, out: list[str], pad: str) -> None:
    out.append(f"{pad}if {format_expression(block.condition)} {{\n")
    for inner in block.body:
        _emit_line(inner, depth + 1, out)
    branch = block.else_branch
    while branch is not None:
        if isinstance(branch, nodes.IfBlock):
            out.append(f"{pad}}} else if {format_expression(branch.condition)} {{\n")
            for inner in branch.body:
                _emit_line(inner, depth + 1, out)
            branch = branch.else_branch
        else:
            out.append(f"{pad}}} else {{\n")
            for inner in branch:
                _emit_line(inner, depth + 1, out)
            branch = None
    out.append(f"{pad}}}\n")


def pretty_print(program: nodes.Program) -> str:
    out: list[str] = []
    for line in program.lines:
        _emit_line(line, 0, out)
    return "".join(out)

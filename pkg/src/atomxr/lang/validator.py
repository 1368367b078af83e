"""Static checks over a parsed AtomScript program.

Errors: calls to unknown functions, wrong arity, listener blocks nested
inside any block.  Warnings: assignments shadowing a built-in name, reads
of variables never assigned anywhere in the program (variables are global
across script blocks, so callers validating one block of a larger scene
pass the other blocks' assignments via known_names).
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING

from atomxr.diagnostics import ERROR, WARNING, Diagnostic
from atomxr.lang import nodes

if TYPE_CHECKING:  # pragma: no cover - avoids a lang <-> runtime import cycle
    from atomxr.runtime.registry import BuiltinRegistry


def collect_assigned_names(program: nodes.Program) -> set[str]:
    names: set[str] = set()

    def walk(lines) -> None:
        for line in lines:
            if isinstance(line, nodes.Assignment):
                names.add(line.name)
            elif isinstance(line, nodes.IfBlock):
                walk(line.body)
                branch = line.else_branch
                if isinstance(branch, nodes.IfBlock):
                    walk((branch,))
                elif branch is not None:
                    walk(branch)
            elif isinstance(line, nodes.ListenerBlock):
                walk(line.body)

    walk(program.lines)
    return names


def validate(program: nodes.Program, registry: "BuiltinRegistry",
             known_names: Iterable[str] = ()) -> list[Diagnostic]:
    diagnostics: list[Diagnostic] = []
    assigned = collect_assigned_names(program) | set(known_names)

    def check_expression(expr) -> None:
        if isinstance(expr, nodes.Identifier):
            if expr.name not in assigned and expr.name not in registry:
                diagnostics.append(Diagnostic(
                    WARNING, "undeclared-variable",
                    f"variable {expr.name!r} is never assigned", expr.span))
        elif isinstance(expr, nodes.ArrayLiteral):
            for item in expr.items:
                check_expression(item)
        elif isinstance(expr, nodes.FunctionCall):
            check_call(expr)
        elif isinstance(expr, nodes.Paren):
            check_expression(expr.inner)
        elif isinstance(expr, nodes.Not):
            check_expression(expr.operand)
        elif isinstance(expr, nodes.Binary):
            check_expression(expr.lhs)
            check_expression(expr.rhs)

    def check_call(call: nodes.FunctionCall) -> None:
        sig = registry.lookup(call.name)
        if sig is None:
            diagnostics.append(Diagnostic(
                ERROR, "unknown-function",
                f"there is no {call.name!r} function", call.span))
        elif len(call.args) != sig.arity:
            diagnostics.append(Diagnostic(
                ERROR, "arity-mismatch",
                f"{call.name} takes {sig.arity} argument{'s' if sig.arity != 1 else ''}, "
                f"got {len(call.args)}", call.span))
        for arg in call.args:
            check_expression(arg)

    def check_lines(lines, depth: int) -> None:
        for line in lines:
            if isinstance(line, nodes.Assignment):
                if line.name in registry:
                    diagnostics.append(Diagnostic(
                        WARNING, "shadows-builtin",
                        f"assignment to {line.name!r} shadows a built-in function",
                        line.span))
                check_expression(line.value)
            elif isinstance(line, nodes.FunctionCall):
                check_call(line)
            elif isinstance(line, nodes.IfBlock):
                check_expression(line.condition)
                check_lines(line.body, depth + 1)
                branch = line.else_branch
                while isinstance(branch, nodes.IfBlock):
                    check_expression(branch.condition)
                    check_lines(branch.body, depth + 1)
                    branch = branch.else_branch
                if branch is not None:
                    check_lines(branch, depth + 1)
            elif isinstance(line, nodes.ListenerBlock):
                if depth > 0:
                    diagnostics.append(Diagnostic(
                        ERROR, "nested-listener",
                        f"{line.kind} blocks cannot be nested inside another block",
                        line.span))
                check_lines(line.body, depth + 1)

    check_lines(program.lines, 0)
    return diagnostics

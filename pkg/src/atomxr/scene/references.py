"""Dangling-reference check: script mentions of objects that do not exist.

Only literal string arguments in object-id parameter positions (plus
onCollision/onButtonPress header constants) can be checked statically;
"Player" is implicit and never flagged.
"""

from __future__ import annotations

from atomxr.diagnostics import WARNING, Diagnostic
from atomxr.lang import nodes
from atomxr.runtime.registry import DEFAULT_REGISTRY, OBJECT_ID, BuiltinRegistry
from atomxr.runtime.state import PLAYER_ID
from atomxr.scene.model import SceneSpec


def check_references(spec: SceneSpec,
                     registry: BuiltinRegistry = DEFAULT_REGISTRY) -> list[Diagnostic]:
    known = set(spec.object_ids())
    known.add(PLAYER_ID)
    diagnostics: list[Diagnostic] = []

    def flag(name: str, block_id: str, span) -> None:
        diagnostics.append(Diagnostic(
            WARNING, "dangling-reference",
            f"script {block_id} references object {name!r} which does not exist",
            span))

    def check_expr(expr, block_id: str) -> None:
        if isinstance(expr, nodes.FunctionCall):
            sig = registry.lookup(expr.name)
            if sig is not None:
                for kind, arg in zip(sig.param_kinds, expr.args):
                    if (kind == OBJECT_ID and isinstance(arg, nodes.Constant)
                            and arg.kind == nodes.STRING and arg.value not in known):
                        flag(arg.value, block_id, arg.span)
            for arg in expr.args:
                check_expr(arg, block_id)
        elif isinstance(expr, nodes.ArrayLiteral):
            for item in expr.items:
                check_expr(item, block_id)
        elif isinstance(expr, nodes.Paren):
            check_expr(expr.inner, block_id)
        elif isinstance(expr, nodes.Not):
            check_expr(expr.operand, block_id)
        elif isinstance(expr, nodes.Binary):
            check_expr(expr.lhs, block_id)
            check_expr(expr.rhs, block_id)

    def check_lines(lines, block_id: str) -> None:
        for line in lines:
            if isinstance(line, nodes.Assignment):
                check_expr(line.value, block_id)
            elif isinstance(line, nodes.FunctionCall):
                check_expr(line, block_id)
            elif isinstance(line, nodes.IfBlock):
                check_expr(line.condition, block_id)
                check_lines(line.body, block_id)
                branch = line.else_branch
                while isinstance(branch, nodes.IfBlock):
                    check_expr(branch.condition, block_id)
                    check_lines(branch.body, block_id)
                    branch = branch.else_branch
                if branch is not None:
                    check_lines(branch, block_id)
            elif isinstance(line, nodes.ListenerBlock):
                for const in line.type_args:
                    if const.kind == nodes.STRING and const.value not in known:
                        flag(const.value, block_id, const.span)
                check_lines(line.body, block_id)

    for block in spec.scripts:
        check_lines(block.ast.lines, block.block_id)
    return diagnostics

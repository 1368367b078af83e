"""Parsing model completions into AtomCommands.

The first JSON object found in the completion is decoded and checked
against the command schema.  Embedded AtomScript must parse; validation
findings (an unknown function, say) do not reject the command — they ride
along as diagnostics for the debugger panel, mirroring how generated
scripts that call nonexistent functions still show up in the editor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from atomxr.diagnostics import ERROR, Diagnostic
from atomxr.lang import parse, validate
from atomxr.runtime.registry import DEFAULT_REGISTRY, BuiltinRegistry
from atomxr.scene.commands import AtomCommand, CreateCommand, command_from_json
from atomxr.scene.model import SceneError


@dataclass
class CompletionResult:
    command: AtomCommand | None
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.command is not None


def _extract_json(text: str) -> dict | None:
    decoder = json.JSONDecoder()
    start = text.find("{")
    while start != -1:
        try:
            value, _ = decoder.raw_decode(text, start)
        except json.JSONDecodeError:
            start = text.find("{", start + 1)
            continue
        if isinstance(value, dict):
            return value
        start = text.find("{", start + 1)
    return None


def parse_completion(text: str,
                     registry: BuiltinRegistry = DEFAULT_REGISTRY) -> CompletionResult:
    data = _extract_json(text)
    if data is None:
        return CompletionResult(None, [Diagnostic(
            ERROR, "malformed-json", "completion contains no JSON object")])
    try:
        command = command_from_json(data)
    except SceneError as exc:
        return CompletionResult(None, [Diagnostic(ERROR, exc.code, str(exc))])

    diagnostics: list[Diagnostic] = []
    if isinstance(command, CreateCommand):
        result = parse(command.new_command)
        if result.program is None:
            diagnostics.append(Diagnostic(
                ERROR, "script-parse-error", "generated AtomScript does not parse"))
            diagnostics.extend(result.diagnostics)
            return CompletionResult(None, diagnostics)
        diagnostics.extend(validate(result.program, registry))
    return CompletionResult(command, diagnostics)

"""Few-shot prompt assembly.

Rendered layout, reproduced byte-exactly by the golden test:

    SPEECH:<example speech>
    ATOMCOMMAND:<example command JSON>
    ###
    ...
    SPEECH:<user turn>
    ATOMCOMMAND:
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

SEPARATOR = "###"


@dataclass(frozen=True)
class PromptExample:
    speech: str
    command: str  # raw AtomCommand JSON, kept as text to control bytes


@dataclass(frozen=True)
class PromptBundle:
    examples: tuple[PromptExample, ...]
    header: str = ""
    separator: str = SEPARATOR

    def __post_init__(self) -> None:
        if not self.examples:
            raise ValueError("a prompt bundle needs at least one example")


def assemble_prompt(user_turn: str, bundle: PromptBundle) -> str:
    parts: list[str] = []
    if bundle.header:
        parts.append(bundle.header + "\n")
    for example in bundle.examples:
        parts.append(f"SPEECH:{example.speech}\n")
        parts.append(f"ATOMCOMMAND:{example.command}\n")
        parts.append(bundle.separator + "\n")
    parts.append(f"SPEECH:{user_turn}\n")
    parts.append("ATOMCOMMAND:")
    return "".join(parts)


def bundle_from_json(data: list[dict]) -> PromptBundle:
    return PromptBundle(tuple(
        PromptExample(item["speech"], item["command"]) for item in data))


def load_bundle(path: str | Path | None = None) -> PromptBundle:
    if path is not None:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    else:
        text = resources.files("atomxr.intent") \
            .joinpath("data/prompt_examples.json").read_text("utf-8")
        data = json.loads(text)
    return bundle_from_json(data)


DEFAULT_BUNDLE = load_bundle()

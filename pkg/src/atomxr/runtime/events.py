"""Event trace records: the headless stand-in for audio and visuals.

Traces serialize to JSON Lines with stable field order so identical runs
produce byte-identical files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

SOUND_PLAYED = "soundPlayed"
OBJECT_APPEARED = "objectAppeared"
OBJECT_DISAPPEARED = "objectDisappeared"
COLOR_CHANGED = "colorChanged"
OBJECT_CREATED = "objectCreated"
OBJECT_DELETED = "objectDeleted"
COLLISION_BEGAN = "collisionBegan"
BUTTON_PRESSED = "buttonPressed"
VAR_CHANGED = "varChanged"
RUNTIME_ERROR = "runtimeError"


def sanitize(value):
    """Make a runtime value JSON-safe (non-finite floats become strings)."""
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if isinstance(value, list):
        return [sanitize(v) for v in value]
    return value


@dataclass(frozen=True)
class EventRecord:
    tick: int
    kind: str
    payload: dict

    def to_json_line(self) -> str:
        return json.dumps(
            {"tick": self.tick, "kind": self.kind, "payload": sanitize_payload(self.payload)},
            separators=(",", ":"),
            ensure_ascii=False,
        )


def sanitize_payload(payload: dict) -> dict:
    return {k: sanitize(v) for k, v in payload.items()}


def trace_to_jsonl(trace: list[EventRecord]) -> str:
    return "".join(record.to_json_line() + "\n" for record in trace)

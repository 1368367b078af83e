"""The nested scene specification document.

Canonical JSON form (stable key order, compact separators):

    {"schemaVersion": 1,
     "objects": [{"id", "assetType", "position", "orientation", "size",
                  "color", "source", "visible", "isButton"}, ...],
     "scripts": [{"blockId", "sourceText"}, ...],
     "meta": {"name", "savedAt", "nextIdCounters", "nextBlockId"}}

Vectors are 3-element arrays of finite doubles.  serialize(deserialize(s))
reproduces s byte-for-byte, which is what the undo journal and golden
tests lean on.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from atomxr.lang import nodes, parse_program

SCHEMA_VERSION = 1

DEFAULT_SPAWN_POSITION = (0.0, 0.0, 2.0)
DEFAULT_SIZE = (1.0, 1.0, 1.0)
DEFAULT_ORIENTATION = (0.0, 0.0, 0.0)

SOURCE_BUILTIN = "builtin"
SOURCE_EXTERNAL = "external"

RESERVED_IDS = {"Player", "this", "that"}


class SceneError(Exception):
    """A scene mutation or load was rejected; `code` is a machine tag."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _vector(value, what: str) -> list[float]:
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise SceneError("invalid-argument", f"{what} must be a 3-element array")
    out = []
    for item in value:
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise SceneError("invalid-argument", f"{what} components must be numbers")
        number = float(item)
        if not math.isfinite(number):
            raise SceneError("invalid-argument", f"{what} components must be finite")
        out.append(number)
    return out


@dataclass
class SceneObject:
    id: str
    asset_type: str
    position: list[float] = field(default_factory=lambda: list(DEFAULT_SPAWN_POSITION))
    orientation: list[float] = field(default_factory=lambda: list(DEFAULT_ORIENTATION))
    size: list[float] = field(default_factory=lambda: list(DEFAULT_SIZE))
    color: list[float] | None = None
    source: str = SOURCE_BUILTIN
    visible: bool = True
    is_button: bool = False

    def check(self) -> None:
        if not self.id:
            raise SceneError("invalid-argument", "object id must be non-empty")
        if any(component <= 0 for component in self.size):
            raise SceneError("invalid-argument", "size components must be positive")
        if self.color is not None and any(not 0.0 <= c <= 1.0 for c in self.color):
            raise SceneError("invalid-argument", "color components must be in [0, 1]")

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "assetType": self.asset_type,
            "position": list(self.position),
            "orientation": list(self.orientation),
            "size": list(self.size),
            "color": list(self.color) if self.color is not None else None,
            "source": self.source,
            "visible": self.visible,
            "isButton": self.is_button,
        }

    @staticmethod
    def from_json(data: dict) -> "SceneObject":
        obj = SceneObject(
            id=data["id"],
            asset_type=data["assetType"],
            position=_vector(data["position"], "position"),
            orientation=_vector(data["orientation"], "orientation"),
            size=_vector(data["size"], "size"),
            color=_vector(data["color"], "color") if data.get("color") is not None else None,
            source=data.get("source", SOURCE_BUILTIN),
            visible=bool(data.get("visible", True)),
            is_button=bool(data.get("isButton", False)),
        )
        obj.check()
        return obj


@dataclass
class ScriptBlock:
    block_id: str
    source_text: str
    ast: nodes.Program = field(repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        if self.ast is None:
            self.ast = parse_program(self.source_text)

    def to_json(self) -> dict:
        return {"blockId": self.block_id, "sourceText": self.source_text}

    @staticmethod
    def from_json(data: dict) -> "ScriptBlock":
        return ScriptBlock(block_id=data["blockId"], source_text=data["sourceText"])


@dataclass
class SceneSpec:
    objects: list[SceneObject] = field(default_factory=list)
    scripts: list[ScriptBlock] = field(default_factory=list)
    next_id_counters: dict[str, int] = field(default_factory=dict)
    next_block_id: int = 1
    name: str = ""
    saved_at: str | None = None

    # -- lookups -----------------------------------------------------------

    def object_ids(self) -> list[str]:
        return [obj.id for obj in self.objects]

    def find_object(self, object_id: str) -> SceneObject | None:
        for obj in self.objects:
            if obj.id == object_id:
                return obj
        return None

    def find_script(self, block_id: str) -> ScriptBlock | None:
        for block in self.scripts:
            if block.block_id == block_id:
                return block
        return None

    def allocate_object_id(self, asset_type: str) -> str:
        counter = self.next_id_counters.get(asset_type, 1)
        while self.find_object(f"{asset_type}{counter}") is not None:
            counter += 1
        self.next_id_counters[asset_type] = counter + 1
        return f"{asset_type}{counter}"

    def allocate_block_id(self) -> str:
        block_id = f"block{self.next_block_id}"
        self.next_block_id += 1
        return block_id

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "schemaVersion": SCHEMA_VERSION,
            "objects": [obj.to_json() for obj in self.objects],
            "scripts": [block.to_json() for block in self.scripts],
            "meta": {
                "name": self.name,
                "savedAt": self.saved_at,
                "nextIdCounters": dict(self.next_id_counters),
                "nextBlockId": self.next_block_id,
            },
        }

    def clone(self) -> "SceneSpec":
        return deserialize_spec(serialize_spec(self))


def serialize_spec(spec: SceneSpec) -> str:
    return json.dumps(spec.to_json(), separators=(",", ":"), ensure_ascii=False)


def deserialize_spec(text: str | bytes) -> SceneSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError("malformed-json", f"scene document is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise SceneError("malformed-json", "scene document must be a JSON object")
    version = data.get("schemaVersion")
    if version != SCHEMA_VERSION:
        raise SceneError("version-mismatch",
                         f"unsupported schemaVersion {version!r} (expected {SCHEMA_VERSION})")
    meta = data.get("meta") or {}
    try:
        spec = SceneSpec(
            objects=[SceneObject.from_json(o) for o in data.get("objects", [])],
            scripts=[ScriptBlock.from_json(s) for s in data.get("scripts", [])],
            next_id_counters={str(k): int(v)
                              for k, v in (meta.get("nextIdCounters") or {}).items()},
            next_block_id=int(meta.get("nextBlockId", 1)),
            name=str(meta.get("name", "")),
            saved_at=meta.get("savedAt"),
        )
    except SceneError:
        raise
    except Exception as exc:  # missing keys, bad script text, wrong types
        raise SceneError("malformed-document", f"scene document is malformed: {exc}")
    seen: set[str] = set()
    for obj in spec.objects:
        if obj.id in seen:
            raise SceneError("duplicate-id", f"duplicate object id {obj.id!r}")
        seen.add(obj.id)
    return spec


def empty_spec() -> SceneSpec:
    return SceneSpec()

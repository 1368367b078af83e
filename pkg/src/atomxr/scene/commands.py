"""AtomCommands: single JSON-serializable mutations of the scene spec.

Wire format — exactly one variant key per command:

    {"createObject": {"assetType": str, "requestedName"?: str,
                      "position"?: [x,y,z], "size"?: [x,y,z],
                      "color"?: [r,g,b]}}
    {"updateObject": {"id": str, "position"?, "orientation"?, "size"?,
                      "color"?, "visible"?}}
    {"deleteObject": {"id": str}}
    {"createCommand": {"newCommand": "<AtomScript source>"}}
    {"deleteCommand": {"blockId": str}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from atomxr.lang import nodes, parse
from atomxr.scene.journal import Journal
from atomxr.scene.model import (
    RESERVED_IDS,
    SceneError,
    SceneObject,
    SceneSpec,
    ScriptBlock,
    _vector,
    serialize_spec,
)


@dataclass(frozen=True)
class CreateObject:
    asset_type: str
    requested_name: str | None = None
    position: tuple | None = None
    size: tuple | None = None
    color: tuple | None = None
    source: str = "builtin"

    def to_json(self) -> dict:
        payload: dict = {"assetType": self.asset_type}
        if self.requested_name is not None:
            payload["requestedName"] = self.requested_name
        if self.position is not None:
            payload["position"] = list(self.position)
        if self.size is not None:
            payload["size"] = list(self.size)
        if self.color is not None:
            payload["color"] = list(self.color)
        return {"createObject": payload}


@dataclass(frozen=True)
class UpdateObject:
    id: str
    position: tuple | None = None
    orientation: tuple | None = None
    size: tuple | None = None
    color: tuple | None = None
    visible: bool | None = None

    def to_json(self) -> dict:
        payload: dict = {"id": self.id}
        if self.position is not None:
            payload["position"] = list(self.position)
        if self.orientation is not None:
            payload["orientation"] = list(self.orientation)
        if self.size is not None:
            payload["size"] = list(self.size)
        if self.color is not None:
            payload["color"] = list(self.color)
        if self.visible is not None:
            payload["visible"] = self.visible
        return {"updateObject": payload}


@dataclass(frozen=True)
class DeleteObject:
    id: str

    def to_json(self) -> dict:
        return {"deleteObject": {"id": self.id}}


@dataclass(frozen=True)
class CreateCommand:
    new_command: str

    def to_json(self) -> dict:
        return {"createCommand": {"newCommand": self.new_command}}


@dataclass(frozen=True)
class DeleteCommand:
    block_id: str

    def to_json(self) -> dict:
        return {"deleteCommand": {"blockId": self.block_id}}


AtomCommand = CreateObject | UpdateObject | DeleteObject | CreateCommand | DeleteCommand

_VARIANTS = {"createObject", "updateObject", "deleteObject", "createCommand", "deleteCommand"}


def command_to_json(command: AtomCommand) -> str:
    return json.dumps(command.to_json(), separators=(",", ":"), ensure_ascii=False)


def command_from_json(data: dict) -> AtomCommand:
    """Decode a wire-format command; raises SceneError on schema violations."""
    if not isinstance(data, dict) or len(data) != 1:
        raise SceneError("schema-mismatch",
                         "an AtomCommand must be an object with exactly one variant key")
    key, payload = next(iter(data.items()))
    if key not in _VARIANTS:
        raise SceneError("schema-mismatch", f"unknown AtomCommand variant {key!r}")
    if not isinstance(payload, dict):
        raise SceneError("schema-mismatch", f"{key} payload must be an object")

    def opt_vec(name: str):
        return tuple(_vector(payload[name], name)) if payload.get(name) is not None else None

    if key == "createObject":
        asset_type = payload.get("assetType")
        if not isinstance(asset_type, str) or not asset_type:
            raise SceneError("schema-mismatch", "createObject.assetType must be non-empty text")
        requested = payload.get("requestedName")
        if requested is not None and not isinstance(requested, str):
            raise SceneError("schema-mismatch", "createObject.requestedName must be text")
        return CreateObject(asset_type, requested,
                            opt_vec("position"), opt_vec("size"), opt_vec("color"),
                            source=payload.get("source", "builtin"))
    if key == "updateObject":
        object_id = payload.get("id")
        if not isinstance(object_id, str) or not object_id:
            raise SceneError("schema-mismatch", "updateObject.id must be non-empty text")
        visible = payload.get("visible")
        if visible is not None and not isinstance(visible, bool):
            raise SceneError("schema-mismatch", "updateObject.visible must be a bool")
        return UpdateObject(object_id, opt_vec("position"), opt_vec("orientation"),
                            opt_vec("size"), opt_vec("color"), visible)
    if key == "deleteObject":
        object_id = payload.get("id")
        if not isinstance(object_id, str) or not object_id:
            raise SceneError("schema-mismatch", "deleteObject.id must be non-empty text")
        return DeleteObject(object_id)
    if key == "createCommand":
        source = payload.get("newCommand")
        if not isinstance(source, str):
            raise SceneError("schema-mismatch", "createCommand.newCommand must be text")
        return CreateCommand(source)
    block_id = payload.get("blockId")
    if not isinstance(block_id, str) or not block_id:
        raise SceneError("schema-mismatch", "deleteCommand.blockId must be non-empty text")
    return DeleteCommand(block_id)


def apply_command(spec: SceneSpec, command: AtomCommand, journal: Journal) -> SceneSpec:
    """Apply one command, returning the new spec.  The previous state is
    journaled for undo; a rejected command leaves spec and journal untouched."""
    before = serialize_spec(spec)
    new_spec = spec.clone()
    _apply(new_spec, command)
    journal.record(before)
    return new_spec


def _apply(spec: SceneSpec, command: AtomCommand) -> None:
    if isinstance(command, CreateObject):
        if command.requested_name is not None:
            if command.requested_name in RESERVED_IDS:
                raise SceneError("invalid-argument",
                                 f"{command.requested_name!r} is a reserved name")
            if spec.find_object(command.requested_name) is not None:
                raise SceneError("duplicate-id",
                                 f"an object named {command.requested_name!r} already exists")
            object_id = command.requested_name
        else:
            object_id = spec.allocate_object_id(command.asset_type)
        obj = SceneObject(
            id=object_id,
            asset_type=command.asset_type,
            source=command.source,
            is_button=command.asset_type == "button",
        )
        if command.position is not None:
            obj.position = _vector(command.position, "position")
        if command.size is not None:
            obj.size = _vector(command.size, "size")
        if command.color is not None:
            obj.color = _vector(command.color, "color")
        obj.check()
        spec.objects.append(obj)
        return

    if isinstance(command, UpdateObject):
        obj = spec.find_object(command.id)
        if obj is None:
            raise SceneError("unknown-id", f"no object named {command.id!r}")
        updated = SceneObject(**{**obj.__dict__})
        if command.position is not None:
            updated.position = _vector(command.position, "position")
        if command.orientation is not None:
            updated.orientation = _vector(command.orientation, "orientation")
        if command.size is not None:
            updated.size = _vector(command.size, "size")
        if command.color is not None:
            updated.color = _vector(command.color, "color")
        if command.visible is not None:
            updated.visible = command.visible
        updated.check()
        spec.objects[spec.objects.index(obj)] = updated
        return

    if isinstance(command, DeleteObject):
        obj = spec.find_object(command.id)
        if obj is None:
            raise SceneError("unknown-id", f"no object named {command.id!r}")
        spec.objects.remove(obj)
        return

    if isinstance(command, CreateCommand):
        result = parse(command.new_command)
        if result.program is None:
            messages = "; ".join(str(d) for d in result.diagnostics)
            raise SceneError("parse-error", f"new command does not parse: {messages}")
        block = ScriptBlock(spec.allocate_block_id(), command.new_command, result.program)
        spec.scripts.append(block)
        return

    if isinstance(command, DeleteCommand):
        block = spec.find_script(command.block_id)
        if block is None:
            raise SceneError("unknown-id", f"no script block named {command.block_id!r}")
        spec.scripts.remove(block)
        return

    raise SceneError("schema-mismatch", f"unsupported command {type(command).__name__}")

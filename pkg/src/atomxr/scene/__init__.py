"""Scene document, mutation commands, undo journal, persistence."""

from atomxr.scene.commands import (
    AtomCommand,
    CreateCommand,
    CreateObject,
    DeleteCommand,
    DeleteObject,
    UpdateObject,
    apply_command,
    command_from_json,
    command_to_json,
)
from atomxr.scene.journal import EmptyJournalError, Journal, redo, reset, undo
from atomxr.scene.model import (
    SceneError,
    SceneObject,
    SceneSpec,
    ScriptBlock,
    deserialize_spec,
    empty_spec,
    serialize_spec,
)
from atomxr.scene.references import check_references
from atomxr.scene.store import FileStore, SpecStore, load_spec_file, save_spec_file

__all__ = [
    "AtomCommand",
    "CreateCommand",
    "CreateObject",
    "DeleteCommand",
    "DeleteObject",
    "EmptyJournalError",
    "FileStore",
    "Journal",
    "SceneError",
    "SceneObject",
    "SceneSpec",
    "ScriptBlock",
    "SpecStore",
    "UpdateObject",
    "apply_command",
    "check_references",
    "command_from_json",
    "command_to_json",
    "deserialize_spec",
    "empty_spec",
    "load_spec_file",
    "redo",
    "reset",
    "save_spec_file",
    "serialize_spec",
    "undo",
]

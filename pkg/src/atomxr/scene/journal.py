"""Undo/redo journal over canonical scene snapshots.

Entries are full serialized states rather than field-level patches: the
guarantee we need is byte-exact restoration under arbitrary command
sequences, and snapshots give that for free at these document sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class EmptyJournalError(Exception):
    """Undo/redo with nothing to do; a no-op signal, not a failure."""


@dataclass
class Journal:
    past: list[str] = field(default_factory=list)
    future: list[str] = field(default_factory=list)

    def record(self, before: str) -> None:
        """Journal the pre-mutation state; any redo history is discarded."""
        self.past.append(before)
        self.future.clear()

    @property
    def can_undo(self) -> bool:
        return bool(self.past)

    @property
    def can_redo(self) -> bool:
        return bool(self.future)


def undo(spec, journal: Journal):
    from atomxr.scene.model import deserialize_spec, serialize_spec

    if not journal.past:
        raise EmptyJournalError("nothing to undo")
    journal.future.append(serialize_spec(spec))
    return deserialize_spec(journal.past.pop())


def redo(spec, journal: Journal):
    from atomxr.scene.model import deserialize_spec, serialize_spec

    if not journal.future:
        raise EmptyJournalError("nothing to redo")
    journal.past.append(serialize_spec(spec))
    return deserialize_spec(journal.future.pop())


def reset(spec, journal: Journal):
    """Erase the scene.  Reset is journaled, so it can itself be undone."""
    from atomxr.scene.model import SceneSpec, serialize_spec

    journal.record(serialize_spec(spec))
    return SceneSpec()

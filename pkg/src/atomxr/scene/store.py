"""Scene persistence.

SpecStore is the interface the authoring service saves through; the
shipped implementation writes canonical JSON files to a directory.  A
remote (HTTP) store can implement the same two methods; none ships here.
"""

from __future__ import annotations

import datetime
import os
import re
from pathlib import Path
from typing import Callable, Protocol

from atomxr.scene.model import SceneError, SceneSpec, deserialize_spec, serialize_spec


def _utc_now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


class SpecStore(Protocol):
    def save(self, spec: SceneSpec, saved_id: str | None = None) -> str: ...

    def load(self, saved_id: str) -> SceneSpec: ...


_ID_PATTERN = re.compile(r"^[A-Za-z0-9._-]+$")


class FileStore:
    """One canonical-JSON file per saved scene, named <id>.json."""

    def __init__(self, directory: str | Path, now_fn: Callable[[], str] = _utc_now):
        self.directory = Path(directory)
        self.now_fn = now_fn

    def _path(self, saved_id: str) -> Path:
        if not _ID_PATTERN.match(saved_id):
            raise SceneError("invalid-argument", f"bad saved id {saved_id!r}")
        return self.directory / f"{saved_id}.json"

    def _next_free_id(self) -> str:
        n = 1
        while (self.directory / f"scene-{n}.json").exists():
            n += 1
        return f"scene-{n}"

    def save(self, spec: SceneSpec, saved_id: str | None = None) -> str:
        saved_id = saved_id or (spec.name if spec.name else self._next_free_id())
        path = self._path(saved_id)
        spec.saved_at = self.now_fn()
        try:
            os.makedirs(self.directory, exist_ok=True)
            tmp = path.with_suffix(".json.tmp")
            tmp.write_text(serialize_spec(spec), encoding="utf-8")
            os.replace(tmp, path)
        except OSError as exc:
            raise SceneError("io-error", f"cannot save scene: {exc}")
        return saved_id

    def load(self, saved_id: str) -> SceneSpec:
        path = self._path(saved_id)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise SceneError("io-error", f"cannot load scene: {exc}")
        return deserialize_spec(text)


def save_spec_file(spec: SceneSpec, path: str | Path,
                   now_fn: Callable[[], str] = _utc_now) -> None:
    """Write one spec to an explicit path (CLI :save)."""
    spec.saved_at = now_fn()
    try:
        Path(path).write_text(serialize_spec(spec), encoding="utf-8")
    except OSError as exc:
        raise SceneError("io-error", f"cannot save scene: {exc}")


def load_spec_file(path: str | Path) -> SceneSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SceneError("io-error", f"cannot load scene: {exc}")
    return deserialize_spec(text)

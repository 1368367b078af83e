"""Authoring sessions: one scene spec + journal + optional play runtime.

All mutations of a session go through its lock, so a session only ever
observes a single total order of operations.  The same Session object
backs both the HTTP service and the terminal REPL.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from atomxr.diagnostics import Diagnostic
from atomxr.intent.pipeline import IntentRequest, TranslationResult, Translator
from atomxr.runtime.config import RuntimeConfig
from atomxr.runtime.events import EventRecord
from atomxr.runtime.interpreter import press_button, start_play, tick
from atomxr.runtime.state import PlayerInput, RuntimeState
from atomxr.scene.commands import DeleteCommand, apply_command
from atomxr.scene.journal import EmptyJournalError, Journal, redo, reset, undo
from atomxr.scene.model import SceneSpec
from atomxr.scene.references import check_references
from atomxr.scene.store import SpecStore

EDIT = "edit"
PLAY = "play"


class UnknownSessionError(KeyError):
    pass


class WrongModeError(Exception):
    def __init__(self, needed: str, actual: str):
        super().__init__(f"operation requires {needed} mode (session is in {actual})")
        self.needed = needed
        self.actual = actual


class BadGazeError(Exception):
    def __init__(self, unknown: list[str]):
        super().__init__(f"gaze targets not in the scene: {', '.join(unknown)}")
        self.unknown = unknown


@dataclass
class Session:
    session_id: str
    translator: Translator
    runtime_config: RuntimeConfig = field(default_factory=RuntimeConfig)
    spec: SceneSpec = field(default_factory=SceneSpec)
    journal: Journal = field(default_factory=Journal)
    mode: str = EDIT
    runtime: RuntimeState | None = None
    lock: threading.RLock = field(default_factory=threading.RLock)

    # -- authoring ----------------------------------------------------------

    def command(self, utterance: str,
                gaze_targets: tuple[str, ...] = ()) -> tuple[TranslationResult, list[Diagnostic]]:
        with self.lock:
            if self.mode != EDIT:
                raise WrongModeError(EDIT, self.mode)
            known = set(self.spec.object_ids())
            unknown = [g for g in gaze_targets if g not in known]
            if unknown:
                raise BadGazeError(unknown)
            request = IntentRequest(utterance, tuple(gaze_targets), self.session_id)
            result = self.translator.translate(request, self.spec)
            self.spec = apply_command(self.spec, result.command, self.journal)
            debug = list(result.diagnostics)
            debug.extend(check_references(self.spec, self.translator.registry))
            return result, debug

    def delete_block(self, block_id: str) -> None:
        with self.lock:
            if self.mode != EDIT:
                raise WrongModeError(EDIT, self.mode)
            self.spec = apply_command(self.spec, DeleteCommand(block_id), self.journal)

    def undo(self) -> bool:
        """True if a step was undone, False when the journal was empty."""
        with self.lock:
            if self.mode != EDIT:
                raise WrongModeError(EDIT, self.mode)
            try:
                self.spec = undo(self.spec, self.journal)
            except EmptyJournalError:
                return False
            return True

    def redo(self) -> bool:
        with self.lock:
            if self.mode != EDIT:
                raise WrongModeError(EDIT, self.mode)
            try:
                self.spec = redo(self.spec, self.journal)
            except EmptyJournalError:
                return False
            return True

    def reset(self) -> None:
        with self.lock:
            if self.mode != EDIT:
                raise WrongModeError(EDIT, self.mode)
            self.spec = reset(self.spec, self.journal)

    def save(self, store: SpecStore, saved_id: str | None = None) -> str:
        with self.lock:
            return store.save(self.spec, saved_id)

    # -- mode & play --------------------------------------------------------

    def set_mode(self, mode: str) -> None:
        with self.lock:
            if mode not in (EDIT, PLAY):
                raise ValueError(f"unknown mode {mode!r}")
            if mode == self.mode:
                return
            if mode == PLAY:
                self.runtime = start_play(self.spec, self.runtime_config,
                                          self.translator.registry)
            else:
                self.runtime = None
            self.mode = mode

    def play_tick(self, player_input: PlayerInput) -> dict:
        """Advance one tick and return the state frame for clients."""
        with self.lock:
            if self.mode != PLAY or self.runtime is None:
                raise WrongModeError(PLAY, self.mode)
            state = self.runtime
            before = len(state.trace)
            if player_input.press is not None:
                press_button(state, player_input.press)
            tick(state, PlayerInput(player_input.dx, player_input.dy, player_input.dz))
            return frame_of(state, state.trace[before:])


def frame_of(state: RuntimeState, new_events: list[EventRecord]) -> dict:
    return {
        "tick": state.clock,
        "playerPosition": list(state.player_position),
        "objectPoses": {
            object_id: {
                "assetType": pose.asset_type,
                "position": list(pose.position),
                "orientation": list(pose.orientation),
                "size": list(pose.size),
                "color": list(pose.color) if pose.color is not None else None,
                "visible": pose.visible,
                "isButton": pose.is_button,
            }
            for object_id, pose in state.poses.items()
        },
        "newEvents": [
            {"tick": e.tick, "kind": e.kind, "payload": e.payload} for e in new_events
        ],
    }


@dataclass
class SessionManager:
    translator_factory: object  # Callable[[], Translator]
    runtime_config: RuntimeConfig = field(default_factory=RuntimeConfig)
    sessions: dict[str, Session] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def create(self) -> Session:
        with self.lock:
            session_id = f"s-{uuid.uuid4().hex[:12]}"
            session = Session(session_id, self.translator_factory(),
                              runtime_config=self.runtime_config)
            self.sessions[session_id] = session
            return session

    def get(self, session_id: str) -> Session:
        with self.lock:
            session = self.sessions.get(session_id)
        if session is None:
            raise UnknownSessionError(session_id)
        return session

"""HTTP + WebSocket authoring service.

Endpoints:
    POST   /sessions                          -> {"sessionId"}
    GET    /sessions/{id}                     -> {"sessionId", "mode", "spec"}
    GET    /sessions/{id}/spec                -> canonical scene JSON
    GET    /sessions/{id}/trace               -> play trace as JSON Lines
    POST   /sessions/{id}/command             -> {"result", "spec", "debug"}
    POST   /sessions/{id}/mode                -> {"mode"}
    POST   /sessions/{id}/undo | /redo        -> {"ok", "noop"}
    POST   /sessions/{id}/reset               -> {"ok"}
    POST   /sessions/{id}/save                -> {"savedId"}
    DELETE /sessions/{id}/scripts/{blockId}   -> {"ok"}
    WS     /sessions/{id}/play                   lockstep by default: one
           tick per input message {"dx","dy","dz","press"}, one frame back

Commands are accepted in edit mode only (409 otherwise); untranslatable
utterances are 422 with the debugger diagnostics in the body.
"""

from __future__ import annotations

import asyncio
import json
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Response, WebSocket, WebSocketDisconnect
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from atomxr.intent.pipeline import Translator, UntranslatableError
from atomxr.intent.providers import FixtureProvider, HttpProvider
from atomxr.runtime.config import RuntimeConfig
from atomxr.runtime.events import trace_to_jsonl
from atomxr.runtime.interpreter import UnknownObjectError, ValidationFailure
from atomxr.runtime.state import PlayerInput
from atomxr.scene.commands import command_to_json
from atomxr.scene.model import SceneError, serialize_spec
from atomxr.scene.store import FileStore
from atomxr.server.sessions import (
    EDIT,
    PLAY,
    BadGazeError,
    SessionManager,
    UnknownSessionError,
    WrongModeError,
    frame_of,
)

LOCKSTEP = "lockstep"
WALLCLOCK = "wallclock"


@dataclass
class ServiceConfig:
    store_dir: str = "./scenes"
    provider: str | None = None  # None | "fixtures:<path>" | "live:<url>"
    catalog_path: str | None = None
    tick_driver: str = LOCKSTEP
    runtime_config: RuntimeConfig = field(default_factory=RuntimeConfig)
    external_enabled: bool = False
    static_dir: str | None = None  # serves the browser playground if set


def build_translator(config: ServiceConfig) -> Translator:
    provider = None
    if config.provider:
        kind, _, arg = config.provider.partition(":")
        if kind == "fixtures":
            provider = FixtureProvider.from_file(arg)
        elif kind == "live":
            provider = HttpProvider(arg)
        else:
            raise ValueError(f"unknown provider {config.provider!r}")
    kwargs = {}
    if config.catalog_path:
        from atomxr.assets.catalog import load_catalog

        kwargs["catalog"] = load_catalog(config.catalog_path)
    return Translator(provider=provider, **kwargs)


class CommandBody(BaseModel):
    utterance: str
    gazeTargets: list[str] = []


class ModeBody(BaseModel):
    mode: str


class SaveBody(BaseModel):
    savedId: str | None = None


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    manager = SessionManager(lambda: build_translator(config),
                             runtime_config=config.runtime_config)
    store = FileStore(config.store_dir)
    app = FastAPI(title="atomxr")
    app.state.manager = manager
    app.state.config = config

    def error(status: int, code: str, message: str, debug: list | None = None):
        body = {"error": code, "message": message}
        if debug is not None:
            body["debug"] = debug
        return JSONResponse(body, status_code=status)

    @app.exception_handler(UnknownSessionError)
    async def _unknown_session(_, exc):
        return error(404, "unknown-session", f"no session {exc.args[0]!r}")

    @app.exception_handler(WrongModeError)
    async def _wrong_mode(_, exc):
        return error(409, "wrong-mode", str(exc))

    @app.post("/sessions")
    def create_session():
        session = manager.create()
        return {"sessionId": session.session_id}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = manager.get(session_id)
        return {"sessionId": session.session_id, "mode": session.mode,
                "spec": session.spec.to_json()}

    @app.get("/sessions/{session_id}/spec")
    def get_spec(session_id: str):
        session = manager.get(session_id)
        return Response(serialize_spec(session.spec), media_type="application/json")

    @app.get("/sessions/{session_id}/trace")
    def get_trace(session_id: str):
        session = manager.get(session_id)
        if session.runtime is None:
            return Response("", media_type="application/jsonl")
        return Response(trace_to_jsonl(session.runtime.trace),
                        media_type="application/jsonl")

    @app.post("/sessions/{session_id}/command")
    def post_command(session_id: str, body: CommandBody):
        session = manager.get(session_id)
        try:
            result, debug = session.command(body.utterance, tuple(body.gazeTargets))
        except UntranslatableError as exc:
            return error(422, "untranslatable", str(exc),
                         [d.to_json() for d in exc.diagnostics])
        except BadGazeError as exc:
            return error(422, "bad-gaze", str(exc))
        except SceneError as exc:
            return error(422, exc.code, str(exc))
        return {
            "result": {
                "command": json.loads(command_to_json(result.command)),
                "provenance": result.provenance,
                "resolvedUtterance": result.resolved_utterance,
            },
            "spec": session.spec.to_json(),
            "debug": [d.to_json() for d in debug],
        }

    @app.post("/sessions/{session_id}/mode")
    def post_mode(session_id: str, body: ModeBody):
        session = manager.get(session_id)
        if body.mode not in (EDIT, PLAY):
            return error(422, "bad-mode", f"mode must be {EDIT!r} or {PLAY!r}")
        try:
            session.set_mode(body.mode)
        except ValidationFailure as exc:
            return error(422, "validation-failure",
                         "scripts do not validate; play mode refused",
                         [d.to_json() for d in exc.diagnostics])
        return {"mode": session.mode}

    @app.post("/sessions/{session_id}/undo")
    def post_undo(session_id: str):
        did = manager.get(session_id).undo()
        return {"ok": True, "noop": not did}

    @app.post("/sessions/{session_id}/redo")
    def post_redo(session_id: str):
        did = manager.get(session_id).redo()
        return {"ok": True, "noop": not did}

    @app.post("/sessions/{session_id}/reset")
    def post_reset(session_id: str):
        manager.get(session_id).reset()
        return {"ok": True}

    @app.post("/sessions/{session_id}/save")
    def post_save(session_id: str, body: SaveBody | None = None):
        session = manager.get(session_id)
        try:
            saved_id = session.save(store, body.savedId if body else None)
        except SceneError as exc:
            return error(500, exc.code, str(exc))
        return {"savedId": saved_id}

    @app.delete("/sessions/{session_id}/scripts/{block_id}")
    def delete_script(session_id: str, block_id: str):
        session = manager.get(session_id)
        try:
            session.delete_block(block_id)
        except SceneError as exc:
            return error(404, exc.code, str(exc))
        return {"ok": True}

    @app.websocket("/sessions/{session_id}/play")
    async def play_socket(websocket: WebSocket, session_id: str):
        await websocket.accept()
        try:
            session = manager.get(session_id)
        except UnknownSessionError:
            await websocket.send_json({"error": "unknown-session"})
            await websocket.close()
            return
        if config.tick_driver == WALLCLOCK:
            await _wallclock_loop(websocket, session, config.runtime_config.dt)
        else:
            await _lockstep_loop(websocket, session)

    async def _lockstep_loop(websocket: WebSocket, session) -> None:
        while True:
            try:
                message = await websocket.receive_json()
            except WebSocketDisconnect:
                return
            except Exception:
                await websocket.send_json({"error": "malformed-input"})
                continue
            frame, fault = _run_tick(session, message)
            await websocket.send_json(frame if fault is None else fault)

    async def _wallclock_loop(websocket: WebSocket, session, dt: float) -> None:
        pending: dict = {}

        async def receiver():
            nonlocal pending
            while True:
                pending = await websocket.receive_json()

        task = asyncio.create_task(receiver())
        try:
            while True:
                await asyncio.sleep(dt)
                message, pending = pending, {}
                frame, fault = _run_tick(session, message)
                await websocket.send_json(frame if fault is None else fault)
        except (WebSocketDisconnect, RuntimeError):
            return
        finally:
            task.cancel()

    def _run_tick(session, message: dict):
        try:
            player_input = PlayerInput(
                dx=float(message.get("dx", 0.0)),
                dy=float(message.get("dy", 0.0)),
                dz=float(message.get("dz", 0.0)),
                press=message.get("press"),
            )
        except (TypeError, ValueError):
            return None, {"error": "malformed-input"}
        try:
            return session.play_tick(player_input), None
        except WrongModeError:
            return None, {"error": "wrong-mode"}
        except UnknownObjectError as exc:
            return None, {"error": "unknown-id", "id": str(exc.args[0])}

    if config.static_dir and Path(config.static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.static_dir, html=True),
                  name="playground")

    return app

"""Session-scoped authoring service."""

from atomxr.server.app import ServiceConfig, build_translator, create_app
from atomxr.server.sessions import (
    EDIT,
    PLAY,
    BadGazeError,
    Session,
    SessionManager,
    UnknownSessionError,
    WrongModeError,
    frame_of,
)

__all__ = [
    "EDIT",
    "PLAY",
    "BadGazeError",
    "ServiceConfig",
    "Session",
    "SessionManager",
    "UnknownSessionError",
    "WrongModeError",
    "build_translator",
    "create_app",
    "frame_of",
]

"""Deterministic play-mode runtime."""

from atomxr.runtime.config import RuntimeConfig
from atomxr.runtime.interpreter import (
    UnknownObjectError,
    ValidationFailure,
    eval_expression,
    press_button,
    run_scenario,
    start_play,
    tick,
    validate_spec_scripts,
)
from atomxr.runtime.registry import DEFAULT_REGISTRY, BuiltinRegistry, default_registry
from atomxr.runtime.state import PLAYER_ID, ObjectPose, PlayerInput, RuntimeState, TimedInput

__all__ = [
    "DEFAULT_REGISTRY",
    "PLAYER_ID",
    "BuiltinRegistry",
    "ObjectPose",
    "PlayerInput",
    "RuntimeConfig",
    "RuntimeState",
    "TimedInput",
    "UnknownObjectError",
    "ValidationFailure",
    "default_registry",
    "eval_expression",
    "press_button",
    "run_scenario",
    "start_play",
    "tick",
    "validate_spec_scripts",
]

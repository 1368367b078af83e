"""Play-mode session state."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from atomxr.lang import nodes
from atomxr.runtime.config import RuntimeConfig
from atomxr.runtime.events import EventRecord

PLAYER_ID = "Player"


@dataclass
class ObjectPose:
    asset_type: str
    position: list[float]
    orientation: list[float]
    size: list[float]
    color: list[float] | None
    visible: bool = True
    is_button: bool = False

    def copy(self) -> "ObjectPose":
        return ObjectPose(
            asset_type=self.asset_type,
            position=list(self.position),
            orientation=list(self.orientation),
            size=list(self.size),
            color=list(self.color) if self.color is not None else None,
            visible=self.visible,
            is_button=self.is_button,
        )


@dataclass
class CollisionListener:
    first: object  # constant value from the listener header
    second: object
    body: tuple

    def matches(self, a: str, b: str) -> bool:
        return (self.first == a and self.second == b) or (self.first == b and self.second == a)


@dataclass
class ButtonListener:
    target: object
    body: tuple


@dataclass
class RuntimeState:
    config: RuntimeConfig
    clock: int = 0
    variables: dict[str, object] = field(default_factory=dict)
    poses: dict[str, ObjectPose] = field(default_factory=dict)
    player_position: list[float] = field(default_factory=lambda: [0.0, 0.0, 0.0])
    forever_listeners: list[tuple] = field(default_factory=list)
    collision_listeners: list[CollisionListener] = field(default_factory=list)
    button_listeners: list[ButtonListener] = field(default_factory=list)
    contacts: set[tuple[str, str]] = field(default_factory=set)
    pending_presses: list[str] = field(default_factory=list)
    trace: list[EventRecord] = field(default_factory=list)
    rng: random.Random = field(default_factory=lambda: random.Random(0))

    def emit(self, kind: str, payload: dict) -> None:
        self.trace.append(EventRecord(self.clock, kind, payload))

    def time_since_start(self) -> float:
        return float(self.clock) * self.config.dt

    def radius_of(self, object_id: str) -> float:
        if object_id == PLAYER_ID:
            return self.config.player_radius
        pose = self.poses[object_id]
        return 0.5 * max(pose.size) * self.config.unit_radius(pose.asset_type)


@dataclass(frozen=True)
class PlayerInput:
    """One tick of player movement and/or a button press."""

    dx: float = 0.0
    dy: float = 0.0
    dz: float = 0.0
    press: str | None = None


@dataclass(frozen=True)
class TimedInput:
    """A PlayerInput scheduled for a specific tick of a scenario run."""

    tick: int
    input: PlayerInput


def listener_constant_value(const: nodes.Constant):
    return const.value

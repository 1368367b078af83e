"""Runtime configuration: tick length, speed words, collision geometry."""

from __future__ import annotations

from dataclasses import dataclass, field

DEFAULT_DT = 1.0 / 60.0
DEFAULT_SPEED_MAP = {"slow": 0.5, "fast": 2.0}
PLAYER_RADIUS = 0.25
DEFAULT_SPAWN_BOX = ((-4.0, 0.0, -4.0), (4.0, 2.0, 4.0))


@dataclass
class RuntimeConfig:
    dt: float = DEFAULT_DT
    speed_map: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_SPEED_MAP))
    collision_mode: str = "sphere"
    max_ticks: int = 200_000
    # Runtime CreateObject places objects uniformly inside spawn_box using a
    # generator seeded here, keeping "random" placement reproducible.
    seed: int = 0
    spawn_box: tuple[tuple[float, float, float], tuple[float, float, float]] = DEFAULT_SPAWN_BOX
    player_radius: float = PLAYER_RADIUS
    player_start: tuple[float, float, float] = (0.0, 0.0, 0.0)
    # Per-asset collision scale; radius = 0.5 * max(size) * unit_radius.
    asset_unit_radius: dict[str, float] = field(default_factory=dict)
    default_unit_radius: float = 1.0

    def __post_init__(self) -> None:
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        for name, value in self.speed_map.items():
            if value <= 0:
                raise ValueError(f"speed {name!r} must be positive")

    def unit_radius(self, asset_type: str) -> float:
        return self.asset_unit_radius.get(asset_type, self.default_unit_radius)

    def resolve_speed(self, word: str) -> float | None:
        """Map a speed word to units/second; numeric strings pass through."""
        if word in self.speed_map:
            return self.speed_map[word]
        try:
            return float(word)
        except ValueError:
            return None

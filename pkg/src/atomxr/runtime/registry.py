"""The closed set of callable AtomScript built-ins.

Calls outside this registry are validation errors; the registry also
records parameter kinds so scene-level checks can spot references to
objects that do not exist.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Parameter kinds
OBJECT_ID = "objectId"
SPEED = "speed"
VECTOR = "vector"
SOUND_ID = "soundId"
ASSET_TYPE = "assetType"


@dataclass(frozen=True)
class BuiltinSignature:
    name: str
    param_kinds: tuple[str, ...]
    returns: str | None = None  # "vector" | "number" | "objectId" | None
    aliases: tuple[str, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.param_kinds)


@dataclass
class BuiltinRegistry:
    entries: dict[str, BuiltinSignature] = field(default_factory=dict)
    _by_alias: dict[str, BuiltinSignature] = field(default_factory=dict)

    def register(self, sig: BuiltinSignature) -> None:
        for name in (sig.name, *sig.aliases):
            if name in self._by_alias:
                raise ValueError(f"duplicate builtin name {name!r}")
            self._by_alias[name] = sig
        self.entries[sig.name] = sig

    def lookup(self, name: str) -> BuiltinSignature | None:
        return self._by_alias.get(name)

    def __contains__(self, name: str) -> bool:
        return name in self._by_alias

    def names(self) -> list[str]:
        return sorted(self._by_alias)


def default_registry() -> BuiltinRegistry:
    reg = BuiltinRegistry()
    reg.register(BuiltinSignature("Move", (OBJECT_ID, SPEED, VECTOR)))
    reg.register(BuiltinSignature("Rotate", (OBJECT_ID, VECTOR)))
    reg.register(BuiltinSignature("ChangeColor", (OBJECT_ID, VECTOR)))
    reg.register(BuiltinSignature("GetPosition", (OBJECT_ID,), returns="vector"))
    reg.register(BuiltinSignature("PlaySound", (SOUND_ID,), aliases=("Play",)))
    reg.register(BuiltinSignature("Disappear", (OBJECT_ID,)))
    reg.register(BuiltinSignature("Appear", (OBJECT_ID,)))
    # "timeSinceStart" appears lowercased in otherwise-valid scripts in the
    # wild; accept it as an alias rather than fold case globally.
    reg.register(BuiltinSignature("TimeSinceStart", (), returns="number",
                                  aliases=("timeSinceStart",)))
    reg.register(BuiltinSignature("CreateObject", (ASSET_TYPE,), returns="objectId"))
    reg.register(BuiltinSignature("DeleteObject", (OBJECT_ID,)))
    return reg


DEFAULT_REGISTRY = default_registry()

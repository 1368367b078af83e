"""The built-in 3D asset catalog."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    asset_type: str
    tags: tuple[str, ...] = ()
    unit_radius: float = 1.0


@dataclass
class AssetCatalog:
    entries: dict[str, CatalogEntry] = field(default_factory=dict)

    def add(self, entry: CatalogEntry) -> None:
        key = entry.name.lower()
        if key in self.entries:
            raise ValueError(f"duplicate catalog name {entry.name!r}")
        self.entries[key] = entry

    def get(self, name: str) -> CatalogEntry | None:
        return self.entries.get(name.lower())

    def names(self) -> list[str]:
        return list(self.entries)

    def unit_radius_map(self) -> dict[str, float]:
        return {entry.asset_type: entry.unit_radius for entry in self.entries.values()}


def catalog_from_json(data: list[dict]) -> AssetCatalog:
    catalog = AssetCatalog()
    for item in data:
        catalog.add(CatalogEntry(
            name=item["name"].lower(),
            asset_type=item["assetType"],
            tags=tuple(item.get("tags", ())),
            unit_radius=float(item.get("unitRadius", 1.0)),
        ))
    return catalog


def load_catalog(path: str | Path | None = None) -> AssetCatalog:
    if path is not None:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    else:
        text = resources.files("atomxr.assets").joinpath("data/catalog.json").read_text("utf-8")
        data = json.loads(text)
    return catalog_from_json(data)


DEFAULT_CATALOG = load_catalog()

"""Shared word tables: colors, size factors, asset synonyms, sound names.

A reviewed data file, editable without touching code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path


@dataclass(frozen=True)
class Lexicon:
    colors: dict[str, tuple[float, float, float]]
    sizes: dict[str, float]
    asset_synonyms: dict[str, str]
    sounds: dict[str, str]

    def find_sound(self, text: str) -> str | None:
        """Longest sound keyword contained in the text, if any."""
        lowered = text.lower()
        for key in sorted(self.sounds, key=len, reverse=True):
            if key in lowered:
                return self.sounds[key]
        return None

    def canonical_asset_word(self, word: str) -> str:
        return self.asset_synonyms.get(word.lower(), word.lower())


def lexicon_from_json(data: dict) -> Lexicon:
    return Lexicon(
        colors={k.lower(): tuple(float(c) for c in v) for k, v in data["colors"].items()},
        sizes={k.lower(): float(v) for k, v in data["sizes"].items()},
        asset_synonyms={k.lower(): v.lower() for k, v in data["assetSynonyms"].items()},
        sounds={k.lower(): v for k, v in data["sounds"].items()},
    )


def load_lexicon(path: str | Path | None = None) -> Lexicon:
    if path is not None:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    else:
        text = resources.files("atomxr.intent").joinpath("data/lexicon.json").read_text("utf-8")
        data = json.loads(text)
    return lexicon_from_json(data)


DEFAULT_LEXICON = load_lexicon()

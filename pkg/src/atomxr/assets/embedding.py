"""Embedding providers for asset-name matching.

The deterministic TrigramEmbedding exists so threshold behavior is
testable offline; its similarity values are implementation-defined.  A
sentence-encoder client can be plugged in through the same one-method
interface for live use.

Names are lowercased and leading articles dropped before hashing.  Each
word contributes its padded character trigrams; the final word of a name
is weighted double, since English noun phrases put the head noun last
("fresh apple" should match "apple" far better than "fresh").
"""

from __future__ import annotations

import hashlib
import math
import re
from typing import Protocol

DIMENSION = 64
ARTICLES = {"a", "an", "the"}
_WORD = re.compile(r"[a-z0-9]+")
_HEAD_WEIGHT = 2.0


class EmbeddingProvider(Protocol):
    def embed(self, text: str) -> list[float]: ...


def normalize_name(text: str) -> str:
    words = _WORD.findall(text.lower())
    while words and words[0] in ARTICLES:
        words = words[1:]
    return " ".join(words)


def _bucket(trigram: str) -> int:
    digest = hashlib.sha256(trigram.encode("utf-8")).digest()
    return int.from_bytes(digest[:4], "big") % DIMENSION


class TrigramEmbedding:
    """Hashed character-trigram bag, fixed dimension, unit L2 norm."""

    dimension = DIMENSION

    def embed(self, text: str) -> list[float]:
        name = normalize_name(text)
        vector = [0.0] * DIMENSION
        words = name.split()
        for index, word in enumerate(words):
            weight = _HEAD_WEIGHT if index == len(words) - 1 else 1.0
            padded = f"#{word}#"
            for i in range(len(padded) - 2):
                vector[_bucket(padded[i:i + 3])] += weight
        norm = math.sqrt(sum(v * v for v in vector))
        if norm == 0.0:
            # Degenerate input (no word characters): a fixed unit vector.
            vector[0] = 1.0
            return vector
        return [v / norm for v in vector]

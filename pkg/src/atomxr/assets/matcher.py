"""Fuzzy asset-name resolution by embedding cosine similarity.

The best catalog entry wins if its similarity clears the threshold;
otherwise the external catalog is queried when enabled, and failing that
the nearest builtin is used with a below-threshold diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from atomxr.diagnostics import WARNING, Diagnostic
from atomxr.assets.catalog import AssetCatalog
from atomxr.assets.embedding import EmbeddingProvider
from atomxr.assets.external import ExternalCatalogClient, ExternalUnavailable

DEFAULT_THRESHOLD = 0.75


@dataclass
class MatcherConfig:
    threshold: float = DEFAULT_THRESHOLD
    external_enabled: bool = False

    def __post_init__(self) -> None:
        if not 0.0 < self.threshold <= 1.0:
            raise ValueError("threshold must be in (0, 1]")


@dataclass(frozen=True)
class Resolution:
    asset_type: str
    source: str  # "builtin" | "external"
    similarity: float
    matched_name: str | None = None
    mesh_ref: str | None = None
    diagnostics: tuple[Diagnostic, ...] = ()


def cosine(a: list[float], b: list[float]) -> float:
    if len(a) != len(b):
        raise ValueError(f"vector lengths differ: {len(a)} vs {len(b)}")
    norm_a = math.sqrt(sum(x * x for x in a))
    norm_b = math.sqrt(sum(x * x for x in b))
    if norm_a == 0.0 or norm_b == 0.0:
        raise ValueError("cosine similarity is undefined for zero vectors")
    return sum(x * y for x, y in zip(a, b)) / (norm_a * norm_b)


@dataclass
class AssetMatcher:
    catalog: AssetCatalog
    provider: EmbeddingProvider
    config: MatcherConfig = field(default_factory=MatcherConfig)
    external: ExternalCatalogClient | None = None

    def __post_init__(self) -> None:
        self._entry_vectors = {
            name: self.provider.embed(name) for name in self.catalog.names()}

    def best_builtin(self, requested: str) -> tuple[str, float]:
        query = self.provider.embed(requested)
        best_name = ""
        best_similarity = -2.0
        for name, vector in self._entry_vectors.items():
            similarity = cosine(query, vector)
            if similarity > best_similarity:
                best_name, best_similarity = name, similarity
        return best_name, best_similarity

    def resolve(self, requested: str) -> Resolution:
        if not requested:
            raise ValueError("requested name must be non-empty")
        best_name, similarity = self.best_builtin(requested)
        entry = self.catalog.get(best_name)
        if entry is not None and similarity >= self.config.threshold:
            return Resolution(entry.asset_type, "builtin", similarity, matched_name=best_name)

        below = Diagnostic(
            WARNING, "below-threshold",
            f"best builtin match {best_name!r} scored {similarity:.3f} "
            f"(threshold {self.config.threshold})")

        if self.config.external_enabled and self.external is not None:
            try:
                found = self.external.search(requested)
                return Resolution(found["assetType"], "external", similarity,
                                  mesh_ref=found.get("meshRef"),
                                  diagnostics=(below,))
            except ExternalUnavailable as exc:
                unavailable = Diagnostic(WARNING, "external-unavailable", str(exc))
                return Resolution(entry.asset_type if entry else requested,
                                  "builtin", similarity, matched_name=best_name,
                                  diagnostics=(below, unavailable))

        return Resolution(entry.asset_type if entry else requested,
                          "builtin", similarity, matched_name=best_name,
                          diagnostics=(below,))


def resolve_asset(requested: str, catalog: AssetCatalog, provider: EmbeddingProvider,
                  config: MatcherConfig | None = None,
                  external: ExternalCatalogClient | None = None) -> Resolution:
    matcher = AssetMatcher(catalog, provider, config or MatcherConfig(), external)
    return matcher.resolve(requested)

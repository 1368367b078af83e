"""Asset catalog and embedding-based name resolution."""

from atomxr.assets.catalog import DEFAULT_CATALOG, AssetCatalog, CatalogEntry, load_catalog
from atomxr.assets.embedding import EmbeddingProvider, TrigramEmbedding, normalize_name
from atomxr.assets.external import ExternalCatalogClient, ExternalUnavailable, MockExternalClient
from atomxr.assets.matcher import (
    AssetMatcher,
    MatcherConfig,
    Resolution,
    cosine,
    resolve_asset,
)

__all__ = [
    "AssetCatalog",
    "AssetMatcher",
    "CatalogEntry",
    "DEFAULT_CATALOG",
    "EmbeddingProvider",
    "ExternalCatalogClient",
    "ExternalUnavailable",
    "MatcherConfig",
    "MockExternalClient",
    "Resolution",
    "TrigramEmbedding",
    "cosine",
    "load_catalog",
    "normalize_name",
    "resolve_asset",
]

"""External model-catalog client interface.

Contract: search(text) returns {"assetType": str, "meshRef": str} for the
closest model, or raises ExternalUnavailable.  Only a mock ships here;
wiring a live model database is an extension point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Protocol


class ExternalUnavailable(Exception):
    pass


class ExternalCatalogClient(Protocol):
    def search(self, query: str) -> dict: ...


@dataclass
class MockExternalClient:
    """Records every query; answers with a synthetic mesh reference."""

    queries: list[str] = field(default_factory=list)
    asset_type: str = "external"
    fail: bool = False

    def search(self, query: str) -> dict:
        if self.fail:
            raise ExternalUnavailable("external catalog unreachable")
        self.queries.append(query)
        return {"assetType": self.asset_type, "meshRef": f"mock://{query}"}

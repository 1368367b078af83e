"""Language-model providers behind a single text-in/text-out call.

The recorded-fixture provider keys completions by SHA-256 of the full
prompt, so any drift in prompt assembly shows up as a loud miss instead of
a silently different answer.
"""

from __future__ import annotations

import hashlib
import json
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol


class ProviderError(Exception):
    """The provider could not produce a completion for this prompt."""


class ModelProvider(Protocol):
    def complete(self, prompt: str) -> str: ...


def prompt_key(prompt: str) -> str:
    return hashlib.sha256(prompt.encode("utf-8")).hexdigest()


@dataclass
class FixtureProvider:
    completions: dict[str, str]

    @staticmethod
    def from_file(path: str | Path) -> "FixtureProvider":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return FixtureProvider({str(k): str(v) for k, v in data.items()})

    def complete(self, prompt: str) -> str:
        key = prompt_key(prompt)
        if key not in self.completions:
            raise ProviderError(f"no recorded completion for prompt {key[:12]}…")
        return self.completions[key]


class EchoProvider:
    """Returns the user turn itself; exercises the rejection/fallback path."""

    def complete(self, prompt: str) -> str:
        for line in reversed(prompt.splitlines()):
            if line.startswith("SPEECH:"):
                return line[len("SPEECH:"):]
        return prompt


@dataclass
class HttpProvider:
    """POSTs {"prompt": ...} to a completion endpoint; expects
    {"completion": ...} back.  This is the live-model integration point."""

    url: str
    timeout: float = 30.0

    def complete(self, prompt: str) -> str:
        body = json.dumps({"prompt": prompt}).encode("utf-8")
        request = urllib.request.Request(
            self.url, data=body, headers={"Content-Type": "application/json"})
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as response:
                payload = json.loads(response.read().decode("utf-8"))
        except Exception as exc:
            raise ProviderError(f"completion request failed: {exc}")
        if "completion" not in payload:
            raise ProviderError("completion endpoint returned no 'completion' field")
        return str(payload["completion"])

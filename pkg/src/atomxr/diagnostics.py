"""Diagnostics shared by the tokenizer, parser, validator and scene checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Span:
    """Half-open byte range [start, end) into the UTF-8 encoded source."""

    start: int
    end: int

    def to_json(self) -> dict:
        return {"start": self.start, "end": self.end}


ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning"
    code: str  # short machine tag, e.g. "unknown-function"
    message: str
    span: Span | None = None

    def to_json(self) -> dict:
        return {
            "severity": self.severity,
            "code": self.code,
            "message": self.message,
            "span": self.span.to_json() if self.span is not None else None,
        }

    def __str__(self) -> str:
        where = f" @ {self.span.start}..{self.span.end}" if self.span else ""
        return f"{self.severity}[{self.code}]: {self.message}{where}"


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.severity == ERROR for d in diagnostics)

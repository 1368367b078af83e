#!/usr/bin/env python3
"""Regenerate the recorded-provider fixture file and the golden prompt.

Run after changing the prompt bundle or the intent corpus:

    python tools/gen_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

from atomxr.intent.gaze import resolve_references
from atomxr.intent.prompt import DEFAULT_BUNDLE, assemble_prompt
from atomxr.intent.providers import prompt_key

ROOT = Path(__file__).parent.parent
DATA = ROOT / "tests" / "data"


def main() -> None:
    corpus = json.loads((DATA / "intent_corpus.json").read_text(encoding="utf-8"))
    fixtures: dict[str, str] = {}
    for entry in corpus:
        if entry["completion"] is None:
            continue  # create-object turns never reach the provider
        resolved, _ = resolve_references(entry["utterance"], entry["gazeTargets"])
        prompt = assemble_prompt(resolved, DEFAULT_BUNDLE)
        fixtures[prompt_key(prompt)] = entry["completion"]
    out = DATA / "provider_fixtures.json"
    out.write_text(json.dumps(fixtures, indent=2, sort_keys=True) + "\n",
                   encoding="utf-8")
    print(f"wrote {out} ({len(fixtures)} completions)")

    golden = assemble_prompt("Make cube1 chase me", DEFAULT_BUNDLE)
    (DATA / "golden_prompt.txt").write_text(golden, encoding="utf-8")
    print(f"wrote {DATA / 'golden_prompt.txt'} ({len(golden)} bytes)")


if __name__ == "__main__":
    main()

"""Gaze-based reference resolution.

Demonstrative pronouns ("this", "that", "this one", "that cube") are
replaced by the IDs the user gazed at, in gaze order.  The replacement is
rule-based and idempotent: a gaze target that already appears as a word in
the utterance is never assigned again, so re-running the resolver over its
own output changes nothing.  Pronouns left over once the gaze list is
exhausted stay in place and produce a diagnostic.

A deictic noun phrase ("this blue box") is consumed as a whole only when
its trailing word is a known asset noun, optionally preceded by known
color/size adjectives; "Make this orange" therefore consumes only "this"
(orange is an adjective here, not an object noun).
"""

from __future__ import annotations

import re

from atomxr.diagnostics import WARNING, Diagnostic
from atomxr.assets.catalog import DEFAULT_CATALOG, AssetCatalog
from atomxr.intent.lexicon import DEFAULT_LEXICON, Lexicon

_PRONOUN = re.compile(r"\b(this|that)\b", re.IGNORECASE)
_WORD = re.compile(r"[A-Za-z0-9_-]+")


def resolve_references(utterance: str, gaze_targets: list[str],
                       lexicon: Lexicon = DEFAULT_LEXICON,
                       catalog: AssetCatalog = DEFAULT_CATALOG,
                       ) -> tuple[str, list[Diagnostic]]:
    diagnostics: list[Diagnostic] = []
    present = {w.lower() for w in _WORD.findall(utterance)}
    available = [t for t in gaze_targets if t.lower() not in present]

    def is_asset_noun(word: str) -> bool:
        canonical = lexicon.canonical_asset_word(word)
        return catalog.get(canonical) is not None

    def is_adjective(word: str) -> bool:
        lowered = word.lower()
        return lowered in lexicon.colors or lowered in lexicon.sizes

    out: list[str] = []
    cursor = 0
    for match in _PRONOUN.finditer(utterance):
        if match.start() < cursor:
            continue  # inside a span a previous NP consumed
        end = match.end()

        # How much trailing NP to consume along with the pronoun.
        tail = utterance[end:]
        consumed_extra = 0
        words = []
        previous_end = 0
        for w in _WORD.finditer(tail):
            if tail[previous_end:w.start()].strip():
                break  # punctuation ends the noun phrase
            words.append(w)
            previous_end = w.end()
        if words and words[0].group().lower() == "one":
            consumed_extra = words[0].end()
        else:
            for w in words:
                if is_adjective(w.group()):
                    continue
                if is_asset_noun(w.group()):
                    consumed_extra = w.end()
                break

        out.append(utterance[cursor:match.start()])
        if available:
            out.append(available.pop(0))
            cursor = end + consumed_extra
        else:
            diagnostics.append(Diagnostic(
                WARNING, "unresolved-reference",
                f"no gaze target left for {utterance[match.start():end + consumed_extra]!r}"))
            out.append(utterance[match.start():end])
            cursor = end
    out.append(utterance[cursor:])
    return "".join(out), diagnostics

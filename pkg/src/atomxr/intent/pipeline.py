"""One user turn in, one AtomCommand out.

Pipeline: gaze-pronoun resolution, then create-object classification
(straight to the asset matcher, no model call), then the configured model
provider, then the rule-based fallback.  With no provider configured the
fallback is the whole translation path, which keeps the default setup
deterministic and offline.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from atomxr.assets.catalog import DEFAULT_CATALOG, AssetCatalog
from atomxr.assets.embedding import TrigramEmbedding
from atomxr.assets.matcher import AssetMatcher, MatcherConfig
from atomxr.diagnostics import ERROR, Diagnostic
from atomxr.intent.completion import parse_completion
from atomxr.intent.fallback import classify_create, fallback_translate
from atomxr.intent.gaze import resolve_references
from atomxr.intent.lexicon import DEFAULT_LEXICON, Lexicon
from atomxr.intent.prompt import DEFAULT_BUNDLE, PromptBundle, assemble_prompt
from atomxr.intent.providers import ModelProvider, ProviderError
from atomxr.runtime.registry import DEFAULT_REGISTRY, BuiltinRegistry
from atomxr.scene.commands import AtomCommand
from atomxr.scene.model import SceneSpec

PROVENANCE_MODEL = "model"
PROVENANCE_FALLBACK = "fallback"


class UntranslatableError(Exception):
    """Neither the model path nor the fallback produced a command."""

    def __init__(self, utterance: str, diagnostics: list[Diagnostic]):
        super().__init__(f"could not translate {utterance!r}")
        self.utterance = utterance
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class IntentRequest:
    utterance: str
    gaze_targets: tuple[str, ...] = ()
    session_id: str = ""


@dataclass
class TranslationResult:
    command: AtomCommand
    provenance: str  # "model" | "fallback"
    resolved_utterance: str
    diagnostics: list[Diagnostic] = field(default_factory=list)


@dataclass
class Translator:
    provider: ModelProvider | None = None
    bundle: PromptBundle = DEFAULT_BUNDLE
    lexicon: Lexicon = DEFAULT_LEXICON
    catalog: AssetCatalog = DEFAULT_CATALOG
    matcher_config: MatcherConfig = field(default_factory=MatcherConfig)
    external_client: object | None = None
    registry: BuiltinRegistry = DEFAULT_REGISTRY

    def __post_init__(self) -> None:
        self.matcher = AssetMatcher(self.catalog, TrigramEmbedding(),
                                    self.matcher_config, self.external_client)

    def translate(self, request: IntentRequest, spec: SceneSpec) -> TranslationResult:
        resolved, diagnostics = resolve_references(
            request.utterance, list(request.gaze_targets), self.lexicon, self.catalog)

        create = classify_create(resolved, self.matcher, self.lexicon)
        if create is not None:
            return TranslationResult(create, PROVENANCE_FALLBACK, resolved, diagnostics)

        if self.provider is not None:
            prompt = assemble_prompt(resolved, self.bundle)
            try:
                completion = self.provider.complete(prompt)
            except ProviderError as exc:
                diagnostics.append(Diagnostic(ERROR, "provider-failure", str(exc)))
            else:
                result = parse_completion(completion, self.registry)
                diagnostics.extend(result.diagnostics)
                if result.command is not None:
                    return TranslationResult(
                        result.command, PROVENANCE_MODEL, resolved, diagnostics)

        command = fallback_translate(resolved, spec, self.matcher, self.lexicon)
        if command is not None:
            return TranslationResult(command, PROVENANCE_FALLBACK, resolved, diagnostics)

        diagnostics.append(Diagnostic(
            ERROR, "untranslatable", f"no translation for {resolved!r}"))
        raise UntranslatableError(request.utterance, diagnostics)


def translate(request: IntentRequest, spec: SceneSpec,
              provider: ModelProvider | None = None,
              **kwargs) -> TranslationResult:
    return Translator(provider=provider, **kwargs).translate(request, spec)

"""Natural-language intent pipeline."""

from atomxr.intent.completion import CompletionResult, parse_completion
from atomxr.intent.fallback import classify_create, fallback_translate, resolve_object_ref
from atomxr.intent.gaze import resolve_references
from atomxr.intent.lexicon import DEFAULT_LEXICON, Lexicon, load_lexicon
from atomxr.intent.pipeline import (
    IntentRequest,
    TranslationResult,
    Translator,
    UntranslatableError,
    translate,
)
from atomxr.intent.prompt import (
    DEFAULT_BUNDLE,
    PromptBundle,
    PromptExample,
    assemble_prompt,
    load_bundle,
)
from atomxr.intent.providers import (
    EchoProvider,
    FixtureProvider,
    HttpProvider,
    ModelProvider,
    ProviderError,
    prompt_key,
)

__all__ = [
    "CompletionResult",
    "DEFAULT_BUNDLE",
    "DEFAULT_LEXICON",
    "EchoProvider",
    "FixtureProvider",
    "HttpProvider",
    "IntentRequest",
    "Lexicon",
    "ModelProvider",
    "PromptBundle",
    "PromptExample",
    "ProviderError",
    "TranslationResult",
    "Translator",
    "UntranslatableError",
    "assemble_prompt",
    "classify_create",
    "fallback_translate",
    "load_bundle",
    "load_lexicon",
    "parse_completion",
    "prompt_key",
    "resolve_object_ref",
    "resolve_references",
    "translate",
]

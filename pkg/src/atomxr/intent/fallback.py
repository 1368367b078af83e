"""Rule-based natural-language translation for offline operation.

Covers a documented subset: object create/delete/update (colors, size
words, direction nudges), chase behaviors, rotate-in-place, and
play-sound / move / disappear / appear actions hung off "when A hits B",
"when the game begins" and "when I press X" triggers.  Anything outside
the subset yields None and the caller decides what to do next.

Generated scripts use the compact single-quoted style the model examples
use; note the grammar has no unary minus, so negative vector components
are emitted as `0-1`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from atomxr.assets.matcher import AssetMatcher
from atomxr.intent.lexicon import DEFAULT_LEXICON, Lexicon
from atomxr.scene.commands import (
    AtomCommand,
    CreateCommand,
    CreateObject,
    DeleteObject,
    UpdateObject,
)
from atomxr.scene.model import SceneSpec

PLAYER_WORDS = {"me", "i", "player", "user", "myself"}

DIRECTIONS = {
    "forward": (0.0, 0.0, 1.0),
    "forwards": (0.0, 0.0, 1.0),
    "ahead": (0.0, 0.0, 1.0),
    "back": (0.0, 0.0, -1.0),
    "backward": (0.0, 0.0, -1.0),
    "backwards": (0.0, 0.0, -1.0),
    "left": (-1.0, 0.0, 0.0),
    "right": (1.0, 0.0, 0.0),
    "up": (0.0, 1.0, 0.0),
    "down": (0.0, -1.0, 0.0),
}

_HIT_VERBS = r"(?:hits?|runs? into|touches?|collides? with|collects?|catches|bumps? into)"

_TRIGGER_TAIL = re.compile(r"^(.*?)\s*,?\s+(?:when|whenever|every time|if)\s+(.+)$",
                           re.IGNORECASE | re.DOTALL)
_TRIGGER_HEAD = re.compile(r"^\s*(?:when|whenever|every time)\s+(.+?)\s*,\s*(.+)$",
                           re.IGNORECASE | re.DOTALL)
_GAME_START = re.compile(r"\bthe game (?:begins|starts)\b", re.IGNORECASE)
_PRESS = re.compile(r"\bpress(?:es)?\s+(?:the\s+|on\s+)?([\w-]+)", re.IGNORECASE)
_COLLIDE = re.compile(
    rf"(?:the\s+)?([\w-]+?)s?\s+{_HIT_VERBS}\s+(?:the\s+)?([\w-]+)", re.IGNORECASE)

_BEHAVIOR_VETO = re.compile(
    r"\b(chases?|follows?|rotates?|spins?|disappears?|appears?|when|whenever|if|hits?|"
    r"collides?|press(?:es)?|plays?)\b", re.IGNORECASE)
_CREATE = re.compile(
    r"\b(?:create|make|give|gimme|put|add|spawn|generate|draw|want|need|get)\b.*?"
    r"\b(?:a|an|another)\s+(.+)$", re.IGNORECASE | re.DOTALL)
_NP_CUTOFF = re.compile(r"\s+\b(?:into|in|to|onto|on|at|for|please)\b.*$", re.IGNORECASE)

_CHASE = re.compile(
    r"\b(?:the\s+)?([\w-]+)\s+(?:chases?|follows?)\s+(?:me|the player|player)\b(.*)$",
    re.IGNORECASE)
_ROTATE = re.compile(
    r"\bmake\s+(?:the\s+)?([\w-]+)\s+(?:rotate|spin)\b", re.IGNORECASE)
_SIZE_OF = re.compile(
    r"\b(?:change|set)\s+the\s+size\s+of\s+(?:the\s+)?([\w-]+)\s+to\s+"
    r"(?:make\s+it\s+|be\s+)?([\w-]+)", re.IGNORECASE)
_MAKE_WORD = re.compile(
    r"\b(?:make|turn|paint|color)\s+(?:the\s+)?([\w-]+)\s+([\w-]+)\s*[.!]?$",
    re.IGNORECASE)
_DELETE = re.compile(
    r"\b(?:delete|remove|destroy)\s+(?:the\s+)?([\w-]+)", re.IGNORECASE)
_HIDE = re.compile(r"\bhide\s+(?:the\s+)?([\w-]+)", re.IGNORECASE)
_SHOW = re.compile(r"\b(?:show|reveal)\s+(?:the\s+)?([\w-]+)", re.IGNORECASE)
_MOVE = re.compile(
    r"\bmove\s+(?:the\s+)?([\w-]+)\s+(\w+)(\s+a\s+(?:little|bit)|\s+slightly)?",
    re.IGNORECASE)
_PLAY = re.compile(r"\bplay\b", re.IGNORECASE)
_DISAPPEAR = re.compile(
    r"\bmake\s+(?:the\s+)?([\w-]+)\s+(?:disappear|vanish)\b|"
    r"\b(?:the\s+)?([\w-]+)\s+(?:disappears|vanishes)\b", re.IGNORECASE)
_APPEAR = re.compile(
    r"\bmake\s+(?:the\s+)?([\w-]+)\s+(?:appear|reappear)\b", re.IGNORECASE)


def vector_literal(vector: tuple[float, float, float]) -> str:
    """AtomScript vector text; negatives become 0-x (no unary minus)."""
    parts = []
    for component in vector:
        if component < 0:
            parts.append(f"0-{-component:g}")
        else:
            parts.append(f"{component:g}")
    return "[" + ",".join(parts) + "]"


def _clean(word: str) -> str:
    return word.strip().strip(".,!?;:'\"")


def resolve_object_ref(word: str, spec: SceneSpec,
                       lexicon: Lexicon = DEFAULT_LEXICON) -> str | None:
    """Map a word to an object id: the player, an exact id, or the most
    recently created object of the named asset type."""
    word = _clean(word)
    if not word:
        return None
    if word.lower() in PLAYER_WORDS:
        return "Player"
    for obj in spec.objects:
        if obj.id.lower() == word.lower():
            return obj.id
    canonical = lexicon.canonical_asset_word(word)
    for obj in reversed(spec.objects):
        if obj.asset_type.lower() == canonical:
            return obj.id
    return None


@dataclass
class _Context:
    spec: SceneSpec
    lexicon: Lexicon
    matcher: AssetMatcher | None


def classify_create(text: str, matcher: AssetMatcher | None,
                    lexicon: Lexicon = DEFAULT_LEXICON) -> CreateObject | None:
    """Create-object requests, classified before any model call."""
    if _BEHAVIOR_VETO.search(_strip_create_verbs(text)):
        return None
    match = _CREATE.search(text)
    if match is None:
        return None
    phrase = _NP_CUTOFF.sub("", match.group(1)).strip().strip(".,!?")
    if not phrase:
        return None

    words = phrase.split()
    size_factor: float | None = None
    color: tuple | None = None
    kept: list[str] = []
    for word in words:
        lowered = _clean(word).lower()
        if size_factor is None and lowered in lexicon.sizes:
            size_factor = lexicon.sizes[lowered]
        elif color is None and lowered in lexicon.colors:
            color = tuple(lexicon.colors[lowered])
        else:
            kept.append(word)
    if not kept:
        return None
    requested = " ".join(lexicon.canonical_asset_word(_clean(w)) for w in kept)

    if matcher is not None:
        resolution = matcher.resolve(requested)
        asset_type = resolution.asset_type
        source = resolution.source
    else:
        asset_type = lexicon.canonical_asset_word(kept[-1].lower())
        source = "builtin"
    size = None
    if size_factor is not None:
        size = (size_factor, size_factor, size_factor)
    return CreateObject(asset_type, size=size, color=color, source=source)


def _strip_create_verbs(text: str) -> str:
    # "make" doubles as a create verb and a behavior verb; the veto only
    # cares about behavior words beyond the leading verb phrase.
    return re.sub(r"^\s*(?:please\s+|can you\s+|could you\s+)*"
                  r"(?:create|make|give|put|add|spawn|generate)\b", "", text,
                  flags=re.IGNORECASE)


def _action_script(action: str, ctx: _Context, trigger_subject: str | None) -> str | None:
    """One statement for the body of a listener, or None if unrecognized."""

    def resolve(word: str) -> str | None:
        if _clean(word).lower() == "it" and trigger_subject:
            return trigger_subject
        return resolve_object_ref(word, ctx.spec, ctx.lexicon)

    if _PLAY.search(action):
        sound = ctx.lexicon.find_sound(action) or "music"
        return f"PlaySound('{sound}');"

    match = _DISAPPEAR.search(action)
    if match:
        target = resolve(match.group(1) or match.group(2))
        if target and target != "Player":
            return f"Disappear('{target}');"
        return None

    match = _APPEAR.search(action)
    if match:
        target = resolve(match.group(1))
        if target and target != "Player":
            return f"Appear('{target}');"
        return None

    match = _MOVE.search(action)
    if match:
        target = resolve(match.group(1))
        direction = DIRECTIONS.get(match.group(2).lower())
        if target and direction:
            return f"Move('{target}','fast',{vector_literal(direction)});"
        return None

    match = _DELETE.search(action)
    if match:
        target = resolve(match.group(1))
        if target and target != "Player":
            return f"DeleteObject('{target}');"
    return None


def _first_object_in(text: str, ctx: _Context) -> str | None:
    """First word of the text that names a scene object (not the player)."""
    for word in re.findall(r"[\w-]+", text):
        resolved = resolve_object_ref(word, ctx.spec, ctx.lexicon)
        if resolved and resolved != "Player":
            return resolved
    return None


def _triggered_command(action: str, trigger: str, ctx: _Context) -> AtomCommand | None:
    if _GAME_START.search(trigger):
        body = _action_script(action, ctx, None)
        if body:
            return CreateCommand(f"onStart{{{body}}}")
        return None

    press = _PRESS.search(trigger)
    if press:
        button = resolve_object_ref(press.group(1), ctx.spec, ctx.lexicon)
        if button:
            body = _action_script(action, ctx, button)
            if body:
                return CreateCommand(f"onButtonPress<'{button}'>{{{body}}}")
        return None

    collide = _COLLIDE.search(trigger)
    if collide:
        def resolve_participant(word: str) -> str | None:
            # "it" in the trigger refers back to the action's object:
            # "move the cherry forward when the player hits it".
            if _clean(word).lower() in ("it", "them"):
                return _first_object_in(action, ctx)
            return resolve_object_ref(word, ctx.spec, ctx.lexicon)

        first = resolve_participant(collide.group(1))
        second = resolve_participant(collide.group(2))
        if first and second and first != second:
            subject = first if second == "Player" else second
            body = _action_script(action, ctx, subject)
            if body:
                return CreateCommand(f"onCollision<'{first}','{second}'>{{{body}}}")
    return None


def fallback_translate(text: str, spec: SceneSpec,
                       matcher: AssetMatcher | None = None,
                       lexicon: Lexicon = DEFAULT_LEXICON) -> AtomCommand | None:
    """Translate a resolved utterance, or None when out of subset."""
    ctx = _Context(spec, lexicon, matcher)
    text = text.strip()

    match = _TRIGGER_HEAD.match(text) or None
    if match:
        command = _triggered_command(match.group(2), match.group(1), ctx)
        if command:
            return command
    match = _TRIGGER_TAIL.match(text)
    if match:
        command = _triggered_command(match.group(1), match.group(2), ctx)
        if command:
            return command

    match = _CHASE.search(text)
    if match:
        target = resolve_object_ref(match.group(1), spec, lexicon)
        if target and target != "Player":
            qualifier = match.group(2).lower()
            speed = "slow" if re.search(r"\bslow(?:ly)?\b", qualifier) else "fast"
            return CreateCommand(
                f"forever{{Move('{target}','{speed}',"
                f"GetPosition('Player')-GetPosition('{target}'));}}")

    match = _ROTATE.search(text)
    if match:
        target = resolve_object_ref(match.group(1), spec, lexicon)
        if target and target != "Player":
            return CreateCommand(f"forever{{Rotate('{target}',[0,90,0]);}}")

    match = _SIZE_OF.search(text)
    if match:
        target_id = resolve_object_ref(match.group(1), spec, lexicon)
        factor = lexicon.sizes.get(_clean(match.group(2)).lower())
        if target_id and target_id != "Player" and factor is not None:
            return _scaled_update(spec, target_id, factor)

    match = _MAKE_WORD.search(text)
    if match:
        target_id = resolve_object_ref(match.group(1), spec, lexicon)
        word = _clean(match.group(2)).lower()
        if target_id and target_id != "Player":
            if word in lexicon.colors:
                return UpdateObject(target_id, color=tuple(lexicon.colors[word]))
            if word in lexicon.sizes:
                return _scaled_update(spec, target_id, lexicon.sizes[word])

    match = _HIDE.search(text)
    if match:
        target_id = resolve_object_ref(match.group(1), spec, lexicon)
        if target_id and target_id != "Player":
            return UpdateObject(target_id, visible=False)

    match = _SHOW.search(text)
    if match:
        target_id = resolve_object_ref(match.group(1), spec, lexicon)
        if target_id and target_id != "Player":
            return UpdateObject(target_id, visible=True)

    match = _MOVE.search(text)
    if match:
        target_id = resolve_object_ref(match.group(1), spec, lexicon)
        direction = DIRECTIONS.get(match.group(2).lower())
        if target_id and target_id != "Player" and direction:
            distance = 0.5 if match.group(3) else 1.0
            obj = spec.find_object(target_id)
            position = tuple(p + d * distance for p, d in zip(obj.position, direction))
            return UpdateObject(target_id, position=position)

    match = _DELETE.search(text)
    if match:
        target_id = resolve_object_ref(match.group(1), spec, lexicon)
        if target_id and target_id != "Player":
            return DeleteObject(target_id)

    return classify_create(text, matcher, lexicon)


def _scaled_update(spec: SceneSpec, target_id: str, factor: float) -> UpdateObject:
    obj = spec.find_object(target_id)
    size = tuple(component * factor for component in obj.size)
    return UpdateObject(target_id, size=size)

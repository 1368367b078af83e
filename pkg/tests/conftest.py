"""Shared fixtures: corpus paths, the chase-game scene (built through the
fallback translator, the same way a user would build it), and the
space-shooter logic scene."""

from __future__ import annotations

from pathlib import Path

import pytest

from atomxr.intent.pipeline import IntentRequest, Translator
from atomxr.runtime.config import RuntimeConfig
from atomxr.runtime.state import PlayerInput, TimedInput
from atomxr.scene.commands import CreateCommand, CreateObject, apply_command
from atomxr.scene.journal import Journal
from atomxr.scene.model import SceneSpec

TESTS_DIR = Path(__file__).parent
CORPUS_POSITIVE = TESTS_DIR / "corpus" / "positive"
CORPUS_NEGATIVE = TESTS_DIR / "corpus" / "negative"
DATA_DIR = TESTS_DIR / "data"

CHASE_TASKS = [
    "When the game begins, play some piano music.",
    "Create a cherry.",
    "Change the size of the cherry to make it realistic.",
    "Make the cherry rotate in place.",
    "Play a collection sound effect when the player hits the cherry.",
    "Move the cherry forward a little when the player hits it.",
    "Create a watermelon.",
    "Make the watermelon chase the player slowly.",
    "Play a scary sound when the watermelon runs into the player.",
]

SHOOTER_SCRIPT = """\
score = 0;
lives = 3;
won = false;
over = false;
forever {
    if (score > 20) && (won == false) {
        PlaySound("win");
        won = true;
    }
    if (lives <= 0) && (over == false) {
        PlaySound("gameover");
        over = true;
    }
}
onCollision<"Player", "asteroid1"> {
    score = score + 1;
}
onCollision<"Player", "asteroid2"> {
    lives = lives - 1;
}
onButtonPress<"button1"> {
    Move("turret1", "30", [0 - 1, 0, 0]);
}
onButtonPress<"button2"> {
    Move("turret1", "30", [1, 0, 0]);
}
onButtonPress<"button3"> {
    Move("rocket1", "60", [0, 0, 1]);
}
"""


def build_chase_spec() -> SceneSpec:
    """The cherry-collecting chase game, authored through the fallback translator."""
    translator = Translator()
    spec = SceneSpec()
    journal = Journal()
    for utterance in CHASE_TASKS:
        result = translator.translate(IntentRequest(utterance), spec)
        spec = apply_command(spec, result.command, journal)
    return spec


def build_shooter_spec() -> SceneSpec:
    spec = SceneSpec()
    journal = Journal()
    placements = [
        ("turret", (0.0, 0.0, 5.0)),
        ("rocket", (2.0, 0.0, 5.0)),
        ("button", (10.0, 0.0, 0.0)),
        ("button", (10.0, 0.0, 1.0)),
        ("button", (10.0, 0.0, 2.0)),
        ("asteroid", (0.0, 0.0, 3.0)),
        ("asteroid", (3.0, 0.0, 0.0)),
    ]
    for asset_type, position in placements:
        spec = apply_command(spec, CreateObject(asset_type, position=position), journal)
    spec = apply_command(spec, CreateCommand(SHOOTER_SCRIPT), journal)
    return spec


def shooter_scenario() -> tuple[list[TimedInput], int]:
    """Presses, 21 player-asteroid1 contacts, then 3 asteroid2 contacts."""
    script: list[TimedInput] = []
    script.append(TimedInput(0, PlayerInput(press="button1")))
    script.append(TimedInput(1, PlayerInput(press="button1")))
    script.append(TimedInput(2, PlayerInput(press="button2")))
    script.append(TimedInput(3, PlayerInput(press="button3")))
    for t in range(10, 52):
        dz = 3.0 if t % 2 == 0 else -3.0
        script.append(TimedInput(t, PlayerInput(dz=dz)))
    for t in range(60, 66):
        dx = 3.0 if t % 2 == 0 else -3.0
        script.append(TimedInput(t, PlayerInput(dx=dx)))
    return script, 70


def chase_collect_scenario() -> tuple[list[TimedInput], int]:
    """Walk into the cherry, back out, and in again: two contact begins."""
    script: list[TimedInput] = []
    for t in range(0, 60):
        script.append(TimedInput(t, PlayerInput(dz=0.05)))
    for t in range(60, 90):
        script.append(TimedInput(t, PlayerInput(dz=-0.05)))
    return script, 120


@pytest.fixture(scope="session")
def chase_spec() -> SceneSpec:
    return build_chase_spec()


@pytest.fixture(scope="session")
def shooter_spec() -> SceneSpec:
    return build_shooter_spec()


@pytest.fixture
def runtime_config() -> RuntimeConfig:
    return RuntimeConfig()

import math

import pytest

from atomxr.lang import parse_program
from atomxr.runtime import events
from atomxr.runtime.config import RuntimeConfig
from atomxr.runtime.events import trace_to_jsonl
from atomxr.runtime.interpreter import (
    UnknownObjectError,
    ValidationFailure,
    eval_expression,
    press_button,
    run_scenario,
    start_play,
    tick,
)
from atomxr.runtime.state import PlayerInput, RuntimeState, TimedInput
from atomxr.scene.commands import CreateCommand, CreateObject, apply_command
from atomxr.scene.journal import Journal
from atomxr.scene.model import SceneSpec
from conftest import chase_collect_scenario, shooter_scenario


def build_spec(*commands):
    spec, journal = SceneSpec(), Journal()
    for command in commands:
        spec = apply_command(spec, command, journal)
    return spec


def sounds(state, name=None):
    return [e for e in state.trace if e.kind == events.SOUND_PLAYED
            and (name is None or e.payload["sound"] == name)]


# -- start_play ---------------------------------------------------------------


def test_onstart_sound_at_tick_zero():
    spec = build_spec(CreateCommand('onStart{PlaySound("piano");}'))
    state = start_play(spec)
    assert [(e.tick, e.kind, e.payload) for e in state.trace] == [
        (0, "soundPlayed", {"sound": "piano"})]


def test_empty_spec_starts_clean():
    state = start_play(SceneSpec())
    assert state.trace == [] and state.clock == 0


def test_top_level_runs_before_onstart():
    spec = build_spec(CreateCommand("x=1; onStart{x=x+1;}"))
    state = start_play(spec)
    assert state.variables["x"] == 2.0


def test_top_level_ordering_across_blocks():
    spec = build_spec(CreateCommand("x=1;"), CreateCommand("onStart{x=x*10;}"),
                      CreateCommand("x=x+1;"))
    state = start_play(spec)
    # both top-level lines run (block order) before any onStart body
    assert state.variables["x"] == 20.0


def test_validation_failure_refuses_start():
    spec = build_spec(CreateCommand("Wait(1);"))
    with pytest.raises(ValidationFailure) as excinfo:
        start_play(spec)
    assert any("Wait" in str(d) for d in excinfo.value.diagnostics)


def test_undeclared_warning_does_not_block_start():
    spec = build_spec(CreateCommand("forever { x = scoreboard; }"))
    start_play(spec)


def test_initial_overlap_does_not_fire():
    spec = build_spec(
        CreateObject("cube", position=(0, 0, 0.1)),
        CreateCommand('onCollision<"Player","cube1">{PlaySound("hit");}'))
    state = start_play(spec)
    assert sounds(state) == []
    tick(state)  # still overlapping: no begin edge
    assert sounds(state) == []


# -- tick kinematics ----------------------------------------------------------


def test_chase_step_matches_closed_form():
    spec = build_spec(
        CreateObject("cube", requested_name="cube2", position=(0, 0, 10)),
        CreateCommand("forever{Move('cube2','fast',"
                      "GetPosition('Player')-GetPosition('cube2'));}"))
    state = start_play(spec)
    tick(state)
    assert state.poses["cube2"].position == [0.0, 0.0, 10.0 - 2.0 * (1.0 / 60.0)]


def test_move_zero_vector_is_noop():
    spec = build_spec(CreateObject("cube"),
                      CreateCommand('forever{Move("cube1","fast",[0,0,0]);}'))
    state = start_play(spec)
    tick(state)
    assert state.poses["cube1"].position == [0.0, 0.0, 2.0]
    assert not [e for e in state.trace if e.kind == events.RUNTIME_ERROR]


def test_move_numeric_speed_string():
    spec = build_spec(CreateObject("cube"),
                      CreateCommand('forever{Move("cube1","30",[1,0,0]);}'))
    state = start_play(spec)
    tick(state)
    assert state.poses["cube1"].position[0] == 30.0 * (1.0 / 60.0)


def test_disappear_after_two_hits_and_five_seconds():
    script = (
        "numCollisions = 0;\n"
        "forever {\n"
        "\tif (TimeSinceStart() > 5) && (numCollisions >= 2) {\n"
        '\t\tDisappear("box1");\n'
        "\t}\n"
        "}\n"
        'onCollision<"Player", "box1"> {\n'
        "\tnumCollisions = numCollisions + 1;\n"
        "}\n"
    )
    spec = build_spec(CreateObject("cube", requested_name="box1", position=(0, 0, 3)),
                      CreateCommand(script))
    script_inputs = [
        TimedInput(2, PlayerInput(dz=3.0)), TimedInput(3, PlayerInput(dz=-3.0)),
        TimedInput(5, PlayerInput(dz=3.0)), TimedInput(6, PlayerInput(dz=-3.0)),
    ]
    state = run_scenario(spec, RuntimeConfig(), script_inputs, until_tick=320)
    vanished = [e for e in state.trace if e.kind == events.OBJECT_DISAPPEARED]
    assert len(vanished) == 1
    assert vanished[0].payload == {"id": "box1"}
    assert vanished[0].tick == 301  # first tick with clock*dt > 5
    assert state.variables["numCollisions"] == 2.0


def test_clock_time_product_exact():
    state = start_play(SceneSpec(), RuntimeConfig(dt=1.0 / 60.0))
    for expected in range(50):
        assert state.time_since_start() == float(expected) * (1.0 / 60.0)
        tick(state)


# -- expression evaluation ----------------------------------------------------


def eval_source(expr_source: str, state=None):
    program = parse_program(f"x = {expr_source};")
    state = state or RuntimeState(config=RuntimeConfig())
    return eval_expression(program.lines[0].value, state)


def test_vector_literal():
    assert eval_source("[0, 0, 2]") == [0.0, 0.0, 2.0]


def test_position_subtraction():
    spec = build_spec(CreateObject("cube", requested_name="cube2", position=(0, 0, 10)))
    state = start_play(spec)
    program = parse_program("x = GetPosition('Player') - GetPosition('cube2');")
    assert eval_expression(program.lines[0].value, state) == [0.0, 0.0, -10.0]


def test_precedence_evaluates_to_seven():
    assert eval_source("1 + 2 * 3") == 7.0


def test_text_concatenation():
    assert eval_source('"ab" + "cd"') == "abcd"


def test_comparisons_and_bools():
    assert eval_source("(1 < 2) && !(3 <= 2)") is True
    assert eval_source("1 == 1.0") is True
    assert eval_source('"a" == 1') is False
    assert eval_source("[1,2] == [1,2]") is True
    assert eval_source("[1,2] == [1,3]") is False
    assert eval_source("null == null") is True


def test_scalar_vector_ops():
    assert eval_source("[1, 2, 3] * 2") == [2.0, 4.0, 6.0]
    assert eval_source("2 * [1, 2, 3]") == [2.0, 4.0, 6.0]
    assert eval_source("[2, 4, 6] / 2") == [1.0, 2.0, 3.0]
    assert eval_source("[1, 2] + [3, 4]") == [4.0, 6.0]


def test_unknown_identifier_reads_null_with_warning():
    state = RuntimeState(config=RuntimeConfig())
    assert eval_source("mystery", state) is None
    warnings = [e for e in state.trace if e.kind == events.RUNTIME_ERROR]
    assert warnings and warnings[0].payload["severity"] == "warning"


def test_division_by_zero_aborts_statement_only():
    spec = build_spec(CreateCommand('forever { bad = 1 / 0; PlaySound("after"); }'))
    state = start_play(spec)
    tick(state)
    faults = [e for e in state.trace if e.kind == events.RUNTIME_ERROR
              and e.payload["code"] == "division-by-zero"]
    assert faults
    assert sounds(state, "after")  # later statements still ran


def test_length_mismatch_fault():
    spec = build_spec(CreateCommand("forever { bad = [1,2] + [1,2,3]; }"))
    state = start_play(spec)
    tick(state)
    assert any(e.payload.get("code") == "length-mismatch"
               for e in state.trace if e.kind == events.RUNTIME_ERROR)


# -- listeners ----------------------------------------------------------------


def test_forever_runs_once_per_tick():
    spec = build_spec(CreateCommand("n = 0; forever { n = n + 1; }"))
    state = start_play(spec)
    for _ in range(5):
        tick(state)
    assert state.variables["n"] == 5.0


def test_collision_edge_triggered_once_per_begin():
    spec = build_spec(
        CreateObject("cube", position=(0, 0, 3)),
        CreateCommand('onCollision<"Player","cube1">{PlaySound("hit");}'))
    state = start_play(spec)
    tick(state, PlayerInput(dz=3.0))   # contact begins
    tick(state)                        # still overlapping
    tick(state)
    assert len(sounds(state, "hit")) == 1
    tick(state, PlayerInput(dz=-3.0))  # separate
    tick(state, PlayerInput(dz=3.0))   # second begin
    assert len(sounds(state, "hit")) == 2


def test_collision_pair_is_unordered():
    spec = build_spec(
        CreateObject("cube", position=(0, 0, 3)),
        CreateCommand('onCollision<"cube1","Player">{PlaySound("hit");}'))
    state = start_play(spec)
    tick(state, PlayerInput(dz=3.0))
    assert len(sounds(state, "hit")) == 1


def test_collision_began_event_recorded():
    spec = build_spec(CreateObject("cube", position=(0, 0, 3)))
    state = start_play(spec)
    tick(state, PlayerInput(dz=3.0))
    begins = [e for e in state.trace if e.kind == events.COLLISION_BEGAN]
    assert begins == [events.EventRecord(0, "collisionBegan",
                                         {"a": "Player", "b": "cube1"})]


def test_invisible_objects_skip_collisions():
    spec = build_spec(
        CreateObject("cube", position=(0, 0, 3)),
        CreateCommand('onStart{Disappear("cube1");}'
                      'onCollision<"Player","cube1">{PlaySound("hit");}'))
    state = start_play(spec)
    tick(state, PlayerInput(dz=3.0))
    assert sounds(state, "hit") == []


def test_disappear_appear_transitions_only():
    spec = build_spec(CreateObject("cube"),
                      CreateCommand('forever{Disappear("cube1");}'))
    state = start_play(spec)
    for _ in range(5):
        tick(state)
    assert len([e for e in state.trace if e.kind == events.OBJECT_DISAPPEARED]) == 1


def test_press_button_queues_for_next_tick(shooter_spec):
    state = start_play(shooter_spec)
    press_button(state, "button1")
    assert state.poses["turret1"].position == [0.0, 0.0, 5.0]
    tick(state)
    assert state.poses["turret1"].position[0] == pytest.approx(-0.5)
    pressed = [e for e in state.trace if e.kind == events.BUTTON_PRESSED]
    assert pressed and pressed[0].payload == {"id": "button1"}


def test_press_unknown_object_raises(shooter_spec):
    state = start_play(shooter_spec)
    with pytest.raises(UnknownObjectError):
        press_button(state, "ghost")


def test_press_non_button_warns_but_queues():
    spec = build_spec(
        CreateObject("cube"),
        CreateCommand('onButtonPress<"cube1">{PlaySound("pressed");}'))
    state = start_play(spec)
    press_button(state, "cube1")
    tick(state)
    assert sounds(state, "pressed")
    assert any(e.payload.get("code") == "not-a-button"
               for e in state.trace if e.kind == events.RUNTIME_ERROR)


def test_two_presses_same_tick_fire_twice(shooter_spec):
    state = start_play(shooter_spec)
    press_button(state, "button1")
    press_button(state, "button1")
    tick(state)
    assert state.poses["turret1"].position[0] == pytest.approx(-1.0)


def test_runtime_create_and_delete_are_ephemeral():
    spec = build_spec(CreateCommand(
        'onStart { fresh = CreateObject("asteroid"); }'))
    state = start_play(spec, RuntimeConfig(seed=11))
    assert "asteroid1" in state.poses
    assert state.variables["fresh"] == "asteroid1"
    assert spec.objects == []  # the document is untouched
    created = [e for e in state.trace if e.kind == events.OBJECT_CREATED]
    low, high = state.config.spawn_box
    for axis in range(3):
        assert low[axis] <= created[0].payload["position"][axis] <= high[axis]


def test_runtime_create_positions_reproducible():
    spec = build_spec(CreateCommand('onStart { CreateObject("asteroid"); }'))
    a = start_play(spec, RuntimeConfig(seed=5)).poses["asteroid1"].position
    b = start_play(spec, RuntimeConfig(seed=5)).poses["asteroid1"].position
    c = start_play(spec, RuntimeConfig(seed=6)).poses["asteroid1"].position
    assert a == b and a != c


def test_delete_object_removes_contacts():
    spec = build_spec(
        CreateObject("cube", position=(0, 0, 0.2)),
        CreateCommand('onButtonPress<"x">{DeleteObject("cube1");}'))
    state = start_play(spec)
    assert state.contacts  # initial overlap with the player
    program = parse_program('DeleteObject("cube1");')
    from atomxr.runtime.interpreter import execute_lines

    execute_lines(program.lines, state)
    assert "cube1" not in state.poses and not state.contacts


def test_rotate_accumulates_orientation():
    spec = build_spec(CreateObject("cherry"),
                      CreateCommand('forever{Rotate("cherry1",[0,90,0]);}'))
    state = start_play(spec)
    for _ in range(60):
        tick(state)
    assert state.poses["cherry1"].orientation[1] == pytest.approx(90.0)


def test_change_color_emits_on_change_only():
    spec = build_spec(CreateObject("cube"),
                      CreateCommand('forever{ChangeColor("cube1",[1,0,0]);}'))
    state = start_play(spec)
    for _ in range(4):
        tick(state)
    changed = [e for e in state.trace if e.kind == events.COLOR_CHANGED]
    assert len(changed) == 1
    assert state.poses["cube1"].color == [1.0, 0.0, 0.0]


# -- scenarios ----------------------------------------------------------------


def test_empty_scenario_clock_advances():
    state = run_scenario(SceneSpec(), RuntimeConfig(), [], until_tick=100)
    assert state.clock == 100 and state.trace == []


def test_scenario_rejects_excessive_ticks():
    with pytest.raises(ValueError):
        run_scenario(SceneSpec(), RuntimeConfig(max_ticks=10), [], until_tick=11)


def test_chase_collect_coin_and_relocation(chase_spec):
    script, until = chase_collect_scenario()
    state = run_scenario(chase_spec, RuntimeConfig(), script, until_tick=until)
    coins = sounds(state, "coin")
    assert len(coins) == 2
    step = 2.0 * state.config.dt
    expected_z = 2.0
    for _ in coins:
        expected_z = expected_z + 1.0 * step
    assert state.poses["cherry1"].position == [0.0, 0.0, expected_z]
    assert sounds(state, "scary")  # the chaser caught the moving player en route


def test_chase_standstill_watermelon_catches(chase_spec):
    state = run_scenario(chase_spec, RuntimeConfig(), [], until_tick=200)
    scary = sounds(state, "scary")
    assert len(scary) == 1
    # closed form: contact when 2 - n*(0.5*dt) <= 0.75, minus one because
    # the contact check runs after the move inside the same tick
    dt = state.config.dt
    predicted = math.ceil((2.0 - 0.75) / (0.5 * dt)) - 1
    assert abs(scary[0].tick - predicted) <= 1
    assert sounds(state, "piano")[0].tick == 0


def test_shooter_score_and_lives(shooter_spec):
    script, until = shooter_scenario()
    state = run_scenario(shooter_spec, RuntimeConfig(), script, until_tick=until)
    assert state.variables["score"] == 21.0
    assert state.variables["lives"] == 0.0
    assert len(sounds(state, "win")) == 1
    assert len(sounds(state, "gameover")) == 1
    assert state.poses["turret1"].position[0] == pytest.approx(-0.5)
    assert state.poses["rocket1"].position[2] == pytest.approx(6.0)


def test_trace_serialization_stable(chase_spec):
    script, until = chase_collect_scenario()
    first = trace_to_jsonl(run_scenario(chase_spec, RuntimeConfig(), script, until).trace)
    second = trace_to_jsonl(run_scenario(chase_spec, RuntimeConfig(), script, until).trace)
    assert first == second
    assert first.splitlines()[0].startswith('{"tick":0,')

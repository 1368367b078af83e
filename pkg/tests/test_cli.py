import json

from click.testing import CliRunner

from atomxr.cli.main import cli
from conftest import CORPUS_NEGATIVE, CORPUS_POSITIVE


def invoke(*args, **kwargs):
    return CliRunner().invoke(cli, list(args), **kwargs)


def test_fmt_canonicalizes_quotes(tmp_path):
    path = tmp_path / "s.atom"
    path.write_text("forever{PlaySound('x');}")
    result = invoke("fmt", str(path))
    assert result.exit_code == 0
    assert result.output == 'forever {\n    PlaySound("x");\n}\n'


def test_fmt_idempotent_over_corpus(tmp_path):
    for source in sorted(CORPUS_POSITIVE.glob("*.atom"))[:10]:
        path = tmp_path / source.name
        path.write_text(source.read_text())
        once = invoke("fmt", str(path)).output
        path.write_text(once)
        assert invoke("fmt", str(path)).output == once


def test_fmt_write_in_place(tmp_path):
    path = tmp_path / "s.atom"
    path.write_text("x   =   1;")
    assert invoke("fmt", str(path), "--write").exit_code == 0
    assert path.read_text() == "x = 1;\n"


def test_check_clean_file(tmp_path):
    path = tmp_path / "ok.atom"
    path.write_text('onStart { PlaySound("piano"); }')
    assert invoke("check", str(path)).exit_code == 0


def test_check_negative_corpus_nonzero(tmp_path):
    path = sorted(CORPUS_NEGATIVE.glob("*.atom"))[0]
    result = invoke("check", str(path))
    assert result.exit_code == 1


def test_check_unknown_function(tmp_path):
    path = tmp_path / "wait.atom"
    path.write_text("Wait(1);")
    result = invoke("check", str(path))
    assert result.exit_code == 1
    assert "Wait" in result.output


def test_run_empty_file(tmp_path):
    path = tmp_path / "empty.atom"
    path.write_text("")
    result = invoke("run", str(path), "--ticks", "5")
    assert result.exit_code == 0
    assert result.output == ""


def test_run_unknown_function_nonzero(tmp_path):
    path = tmp_path / "wait.atom"
    path.write_text("Wait(1);")
    result = invoke("run", str(path), "--ticks", "1")
    assert result.exit_code == 1
    assert "unknown-function" in result.output


def test_run_collision_scenario(tmp_path):
    script = tmp_path / "coin.atom"
    script.write_text('onCollision<"Player", "coin1"> { PlaySound("Coin collect"); }')

    from atomxr.scene.commands import CreateObject, apply_command
    from atomxr.scene.journal import Journal
    from atomxr.scene.model import SceneSpec, serialize_spec

    spec = apply_command(SceneSpec(),
                         CreateObject("coin", requested_name="coin1",
                                      position=(0.0, 0.0, 3.0)), Journal())
    spec_path = tmp_path / "scene.json"
    spec_path.write_text(serialize_spec(spec))

    inputs = tmp_path / "inputs.jsonl"
    inputs.write_text('{"tick": 1, "dz": 3.0}\n')

    result = invoke("run", str(script), "--ticks", "5",
                    "--inputs", str(inputs), "--spec", str(spec_path))
    assert result.exit_code == 0
    events = [json.loads(line) for line in result.output.splitlines()]
    assert any(e["kind"] == "soundPlayed" and e["payload"]["sound"] == "Coin collect"
               for e in events)


def test_repl_create_and_spec():
    result = invoke("repl", input="create a cube\n:spec\n:quit\n")
    assert result.exit_code == 0
    assert '"createObject":{"assetType":"cube"}' in result.output.replace(" ", "")
    assert '"id":"cube1"' in result.output.replace(" ", "")


def test_repl_gaze_then_color():
    result = invoke("repl", input="create a cube\n:gaze cube1\nmake this blue\n:spec\n:quit\n")
    assert result.exit_code == 0
    assert '"color":[0.0,0.0,1.0]' in result.output.replace(" ", "")


def test_repl_play_tick_trace():
    lines = [
        "create a cherry",
        "when the game begins, play some piano music",
        ":play",
        ":tick 3",
        ":trace",
        ":quit",
    ]
    result = invoke("repl", input="\n".join(lines) + "\n")
    assert result.exit_code == 0
    assert '"sound":"piano"' in result.output
    assert "clock=3" in result.output


def test_repl_undo_scripts_delete():
    lines = [
        "create a cube",
        "make the cube rotate in place",
        ":scripts",
        ":delete block1",
        ":undo",
        ":quit",
    ]
    result = invoke("repl", input="\n".join(lines) + "\n")
    assert result.exit_code == 0
    assert "Rotate" in result.output
    assert "deleted block1" in result.output
    assert "undone" in result.output


def test_repl_save_load(tmp_path):
    path = tmp_path / "scene.json"
    result = invoke("repl", input=f"create a tree\n:save {path}\n:reset\n:load {path}\n:spec\n:quit\n")
    assert result.exit_code == 0
    assert path.exists()
    assert '"id":"tree1"' in result.output.replace(" ", "")


def test_repl_wrong_mode_message():
    result = invoke("repl", input=":play\ncreate a cube\n:quit\n")
    assert result.exit_code == 0
    assert "error:" in result.output


def test_usage_error_exit_code():
    assert invoke("run", "/nonexistent.atom").exit_code == 2

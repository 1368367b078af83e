"""Terminal front door: REPL authoring, batch runs, fmt/check, service.

Exit codes: 0 success, 1 diagnostics reported, 2 usage error.
"""

from __future__ import annotations

import json
import sys

import click

from atomxr.diagnostics import has_errors
from atomxr.intent.pipeline import Translator, UntranslatableError
from atomxr.lang import parse, pretty_print, validate
from atomxr.runtime.config import RuntimeConfig
from atomxr.runtime.events import trace_to_jsonl
from atomxr.runtime.interpreter import (
    UnknownObjectError,
    ValidationFailure,
    press_button,
    run_scenario,
    tick,
)
from atomxr.runtime.registry import DEFAULT_REGISTRY
from atomxr.runtime.state import PlayerInput, TimedInput
from atomxr.scene.commands import CreateCommand, apply_command, command_to_json
from atomxr.scene.journal import Journal
from atomxr.scene.model import SceneError, SceneSpec, serialize_spec
from atomxr.scene.store import load_spec_file, save_spec_file
from atomxr.server.app import ServiceConfig, build_translator
from atomxr.server.sessions import EDIT, PLAY, Session, WrongModeError


@click.group()
def cli():
    """AtomXR authoring tools."""


def _print_diagnostics(diagnostics) -> None:
    for diagnostic in diagnostics:
        click.echo(str(diagnostic), err=True)


@cli.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--write", is_flag=True, help="rewrite the file in place")
def fmt(source, write):
    """Pretty-print an AtomScript file in canonical form."""
    text = open(source, encoding="utf-8").read()
    result = parse(text)
    if result.program is None:
        _print_diagnostics(result.diagnostics)
        sys.exit(1)
    formatted = pretty_print(result.program)
    if write:
        with open(source, "w", encoding="utf-8") as handle:
            handle.write(formatted)
    else:
        click.echo(formatted, nl=False)


@cli.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
def check(source):
    """Parse and validate an AtomScript file."""
    text = open(source, encoding="utf-8").read()
    result = parse(text)
    if result.program is None:
        _print_diagnostics(result.diagnostics)
        sys.exit(1)
    diagnostics = validate(result.program, DEFAULT_REGISTRY)
    _print_diagnostics(diagnostics)
    sys.exit(1 if has_errors(diagnostics) else 0)


def _load_inputs(path: str) -> list[TimedInput]:
    script: list[TimedInput] = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            script.append(TimedInput(int(data["tick"]), PlayerInput(
                dx=float(data.get("dx", 0.0)),
                dy=float(data.get("dy", 0.0)),
                dz=float(data.get("dz", 0.0)),
                press=data.get("press"),
            )))
    return script


@cli.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--ticks", default=0, help="how many ticks to simulate")
@click.option("--inputs", type=click.Path(exists=True, dir_okay=False),
              help="JSON Lines of timed player inputs")
@click.option("--spec", "spec_path", type=click.Path(exists=True, dir_okay=False),
              help="scene spec to run the script against")
@click.option("--seed", default=0, help="seed for runtime object placement")
def run(source, ticks, inputs, spec_path, seed):
    """Parse, validate, and simulate a bare AtomScript file; the trace
    prints to stdout as JSON Lines."""
    text = open(source, encoding="utf-8").read()
    result = parse(text)
    if result.program is None:
        _print_diagnostics(result.diagnostics)
        sys.exit(1)

    spec = load_spec_file(spec_path) if spec_path else SceneSpec()
    if text.strip():
        journal = Journal()
        try:
            spec = apply_command(spec, CreateCommand(text), journal)
        except SceneError as exc:
            click.echo(str(exc), err=True)
            sys.exit(1)

    script = _load_inputs(inputs) if inputs else []
    config = RuntimeConfig(seed=seed)
    try:
        state = run_scenario(spec, config, script, until_tick=ticks)
    except ValidationFailure as exc:
        _print_diagnostics(exc.diagnostics)
        sys.exit(1)
    click.echo(trace_to_jsonl(state.trace), nl=False)


@cli.command()
@click.option("--provider", default=None,
              help="'fixtures:<path>' or 'live:<url>'; default is the rule-based fallback")
@click.option("--catalog", "catalog_path", default=None,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--dt", default=1.0 / 60.0, show_default=True)
@click.option("--seed", default=0)
def repl(provider, catalog_path, dt, seed):
    """Interactive authoring loop.

    Free text goes through the intent pipeline; meta-commands start with
    ':' — :play :edit :undo :redo :reset :save <path> :load <path>
    :scripts :delete <blockId> :gaze <id...> :tick <n> [dx dy dz]
    :press <id> :trace :quit
    """
    config = ServiceConfig(provider=provider, catalog_path=catalog_path,
                           runtime_config=RuntimeConfig(dt=dt, seed=seed))
    session = Session("repl", build_translator(config),
                      runtime_config=config.runtime_config)
    gaze: list[str] = []
    click.echo("atomxr repl — type a command, or :help")

    while True:
        try:
            line = input(f"[{session.mode}] > ").strip()
        except (EOFError, KeyboardInterrupt):
            click.echo("")
            return
        if not line:
            continue
        if line.startswith(":"):
            if not _meta(session, line, gaze):
                return
            continue
        try:
            result, debug = session.command(line, tuple(gaze))
        except UntranslatableError:
            click.echo("could not translate that; try rephrasing")
            continue
        except (WrongModeError, SceneError) as exc:
            click.echo(f"error: {exc}")
            continue
        finally:
            gaze.clear()
        click.echo(f"[{result.provenance}] {command_to_json(result.command)}")
        for diagnostic in debug:
            click.echo(f"  {diagnostic}")


def _meta(session: Session, line: str, gaze: list[str]) -> bool:
    parts = line.split()
    name, args = parts[0], parts[1:]
    try:
        if name == ":quit" or name == ":exit":
            return False
        elif name == ":help":
            click.echo(repl.__doc__ or "")
        elif name == ":play":
            session.set_mode(PLAY)
            click.echo("play mode")
        elif name == ":edit":
            session.set_mode(EDIT)
            click.echo("edit mode")
        elif name == ":undo":
            click.echo("undone" if session.undo() else "nothing to undo")
        elif name == ":redo":
            click.echo("redone" if session.redo() else "nothing to redo")
        elif name == ":reset":
            session.reset()
            click.echo("scene cleared")
        elif name == ":save":
            save_spec_file(session.spec, args[0])
            click.echo(f"saved to {args[0]}")
        elif name == ":load":
            session.spec = load_spec_file(args[0])
            session.journal = Journal()
            click.echo(f"loaded {args[0]}")
        elif name == ":scripts":
            for block in session.spec.scripts:
                click.echo(f"-- {block.block_id} --")
                click.echo(pretty_print(block.ast), nl=False)
        elif name == ":delete":
            session.delete_block(args[0])
            click.echo(f"deleted {args[0]}")
        elif name == ":gaze":
            gaze[:] = args
            click.echo(f"gazing at: {', '.join(gaze) or '(nothing)'}")
        elif name == ":spec":
            click.echo(serialize_spec(session.spec))
        elif name == ":tick":
            count = int(args[0]) if args else 1
            dx, dy, dz = (float(a) for a in args[1:4]) if len(args) >= 4 else (0.0, 0.0, 0.0)
            for _ in range(count):
                session.play_tick(PlayerInput(dx, dy, dz))
            click.echo(f"clock={session.runtime.clock}")
        elif name == ":press":
            press_button(session.runtime, args[0])
            tick(session.runtime)
            click.echo(f"pressed {args[0]}")
        elif name == ":trace":
            if session.runtime is not None:
                click.echo(trace_to_jsonl(session.runtime.trace), nl=False)
        else:
            click.echo(f"unknown meta-command {name}")
    except (WrongModeError, SceneError, ValidationFailure,
            UnknownObjectError, IndexError, ValueError, AttributeError) as exc:
        click.echo(f"error: {exc}")
    return True


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
@click.option("--store-dir", default="./scenes", show_default=True)
@click.option("--provider", default=None)
@click.option("--catalog", "catalog_path", default=None,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--dt", default=1.0 / 60.0, show_default=True)
@click.option("--tick-driver", type=click.Choice(["lockstep", "wallclock"]),
              default="lockstep", show_default=True)
@click.option("--static", "static_dir", default=None,
              help="directory with the built browser playground")
def serve(host, port, store_dir, provider, catalog_path, dt, tick_driver, static_dir):
    """Run the authoring service."""
    import uvicorn

    from atomxr.server.app import create_app

    config = ServiceConfig(store_dir=store_dir, provider=provider,
                           catalog_path=catalog_path, tick_driver=tick_driver,
                           runtime_config=RuntimeConfig(dt=dt),
                           static_dir=static_dir)
    uvicorn.run(create_app(config), host=host, port=port)


if __name__ == "__main__":
    cli()

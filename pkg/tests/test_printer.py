from pathlib import Path

import pytest

from atomxr.lang import nodes, parse, parse_program, pretty_print
from conftest import CORPUS_POSITIVE
from genprog import ProgramGenerator


def roundtrip(source: str) -> None:
    first = parse(source)
    assert first.program is not None, [str(d) for d in first.diagnostics]
    printed = pretty_print(first.program)
    second = parse(printed)
    assert second.program is not None, (printed, [str(d) for d in second.diagnostics])
    assert second.program == first.program, printed


def test_empty_program_prints_empty():
    assert pretty_print(nodes.Program(())) == ""


def test_canonical_forever_form():
    program = parse_program("forever{PlaySound('x');}")
    assert pretty_print(program) == 'forever {\n    PlaySound("x");\n}\n'


def test_double_quotes_preferred():
    program = parse_program("a = 'plain';")
    assert pretty_print(program) == 'a = "plain";\n'


def test_single_quotes_when_content_has_doubles():
    program = parse_program("a = 'say \"hi\"';")
    assert pretty_print(program) == "a = 'say \"hi\"';\n"


def test_else_if_layout():
    program = parse_program("if a { x = 1; } else if b { x = 2; } else { x = 3; }")
    assert pretty_print(program) == (
        "if a {\n    x = 1;\n} else if b {\n    x = 2;\n} else {\n    x = 3;\n}\n")


def test_float_and_int_distinct():
    program = parse_program("a = 1; b = 1.0; c = 0.5;")
    assert pretty_print(program) == "a = 1;\nb = 1.0;\nc = 0.5;\n"


def test_huge_float_stays_lexable():
    source = "x = 123456789012345678901234567890.5;"
    roundtrip(source)
    printed = pretty_print(parse_program(source))
    assert "e" not in printed and "E" not in printed


def test_reference_script_roundtrips():
    source = (CORPUS_POSITIVE / "disappear_after_hits_reference.atom").read_text()
    roundtrip(source)


def test_fmt_idempotent_on_collision_header():
    program = parse_program("onCollision<'Player','coin1'>{PlaySound('Coin collect');}")
    printed = pretty_print(program)
    assert printed == 'onCollision<"Player", "coin1"> {\n    PlaySound("Coin collect");\n}\n'
    assert pretty_print(parse_program(printed)) == printed


@pytest.mark.parametrize("path", sorted(CORPUS_POSITIVE.glob("*.atom")),
                         ids=lambda p: p.stem)
def test_corpus_roundtrip(path: Path):
    roundtrip(path.read_text(encoding="utf-8"))


def test_fuzz_roundtrip_sample():
    generator = ProgramGenerator(seed=20240817)
    for _ in range(200):
        roundtrip(generator.program())

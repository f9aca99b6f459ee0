from __future__ import annotations

import json
import xml.etree.ElementTree as ET

import pytest

from focksuture.cli import main, parse_diagram
from focksuture.diagrams import basis_diagram
from focksuture.fock import FockElement
from focksuture.words import parse_word


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_period(capsys):
    code, out, _ = run(capsys, "duality", "period", "1", "1")
    assert code == 0 and out.strip() == "H^3 = -1, order 6"
    code, out, _ = run(capsys, "duality", "period", "2", "1")
    assert out.strip() == "H^4 = 1, order 4"


def test_pairing(capsys):
    code, out, _ = run(capsys, "fock", "pairing", "xy", "yx")
    assert code == 0 and out.strip() == "1"
    assert run(capsys, "fock", "dot", "xy", "yx")[1].strip() == "0"


def test_apply_and_h(capsys):
    assert run(capsys, "fock", "apply", "a*(y,0) a(x,0)", "xy")[1].strip() == "yy"
    assert run(capsys, "duality", "H", "yx")[1].strip() == "-xy + yx"
    assert run(capsys, "duality", "H", "xy", "--power", "3")[1].strip() == "-xy"
    assert run(capsys, "duality", "Q+", "xyxy")[1].strip() == "-xxyy + xyxy"


def test_word_commands(capsys):
    assert run(capsys, "word", "leq", "xxyy", "yxyx")[1].strip() == "true"
    out = run(capsys, "word", "minmax", "yxxy", "xyyx")[1]
    assert out.split() == ["min", "xyxy", "max", "yxyx"]
    assert "h_x: 1 3" in run(capsys, "word", "profile", "xyxy")[1]


def test_diagram_commands(capsys, tmp_path):
    assert run(capsys, "diagram", "decompose", "0-3 1-2 4-5")[1].strip() == "xy - yx"
    assert run(capsys, "diagram", "decompose", "0-3", "1-2", "4-5")[1].strip() == "xy - yx"
    assert run(capsys, "diagram", "stack", "xy", "yx")[1].strip() == "connected"
    assert run(capsys, "diagram", "stack", "yx", "xy")[1].strip() == "disconnected"
    assert len(run(capsys, "diagram", "enumerate", "3")[1].splitlines()) == 5
    target = tmp_path / "d.svg"
    code, out, _ = run(capsys, "diagram", "render", "xyx", "--format", "svg", "--out", str(target))
    assert code == 0 and ET.parse(target).getroot().tag.endswith("svg")
    assert "0*" in run(capsys, "diagram", "render", "1")[1]
    assert run(capsys, "diagram", "bypass", "xy")[0] == 0


def test_suture_commands(capsys):
    assert run(capsys, "suture", "check", "xy - yx")[:2] == (0, "yes\n")
    assert run(capsys, "suture", "check", "xy + yx")[:2] == (1, "no\n")
    code, out, _ = run(capsys, "suture", "chain", "xy", "yx")
    assert code == 0 and out.split() == ["xy", "yx"]
    code, out, _ = run(capsys, "suture", "generate", "2", "--family", "C1")
    assert code == 0 and "16 elements" in out


def test_fullrank(capsys):
    code, out, _ = run(capsys, "fullrank", "3")
    assert code == 0 and out.splitlines()[-1] == "size 5, rank 5"


def test_verify_one_suite(capsys):
    code, out, _ = run(capsys, "verify", "temperley-lieb", "--max-n", "5")
    assert code == 0 and "1/1 checks passed" in out


def test_usage_errors(capsys):
    assert run(capsys, "word", "leq", "xz", "y")[0] == 2
    assert run(capsys, "verify", "nonsense")[0] == 2
    assert run(capsys, "nosuchcommand")[0] == 2
    assert run(capsys, "duality", "period", "1")[0] == 2
    assert run(capsys, "suture", "chain", "yx", "xy")[0] == 2
    assert run(capsys, "diagram", "decompose", "0-2 1-3")[0] == 2
    assert run(capsys, "fock", "apply", "b(x,0)", "xy")[0] == 2


JSON_COMMANDS = [
    ("word", "profile", "xyyx"),
    ("word", "leq", "xy", "yx"),
    ("word", "minmax", "yxxy", "xyyx"),
    ("fock", "apply", "T*(y,0)", "x"),
    ("fock", "pairing", "xy", "yx"),
    ("duality", "period", "2", "2"),
    ("duality", "H", "xyxy"),
    ("diagram", "enumerate", "3"),
    ("diagram", "decompose", "yxy"),
    ("diagram", "stack", "xy", "yx"),
    ("diagram", "bypass", "xyxy"),
    ("suture", "generate", "2"),
    ("suture", "check", "xy - yx"),
    ("suture", "chain", "xy", "yx"),
    ("verify", "words", "--max-n", "4"),
    ("fullrank", "2"),
]


@pytest.mark.parametrize("argv", JSON_COMMANDS, ids=lambda a: " ".join(a))
def test_json_round_trip(capsys, argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    data = json.loads(out)
    assert json.loads(json.dumps(data)) == data
    assert json.dumps(data, sort_keys=True) == out.strip()


def test_json_payloads_reparse_to_objects(capsys):
    out = run(capsys, "duality", "H", "yx", "--json")[1]
    assert FockElement.from_json(json.loads(out)) == FockElement.word(parse_word("yx")) - FockElement.word(parse_word("xy"))
    out = run(capsys, "diagram", "decompose", "yxy", "--json")[1]
    d = json.loads(out)["diagram"]
    assert parse_diagram(json.dumps(d)) == basis_diagram(parse_word("yxy"))


def test_verify_json_reproducible(capsys):
    a = run(capsys, "verify", "periodicity", "--max-n", "5", "--json", "--seed", "3")[1]
    b = run(capsys, "verify", "periodicity", "--max-n", "5", "--json", "--seed", "3")[1]
    assert a == b

import json
import subprocess
import sys
from pathlib import Path

import pytest

from kanext.cli import main

WS = Path(__file__).resolve().parent.parent / "demos" / "workspaces"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def ws(name):
    return ["--input", WS / name]


def test_validate_exact_output(capsys):
    code = main(["validate", "--input", str(WS / "representable.json"), "--cat", "chain3"])
    assert code == 0
    assert capsys.readouterr().out == '{"status": "ok"}\n'


def test_lan_sizes(capsys):
    code, doc = run(capsys, "lan", *ws("chain_inclusion.json"), "--K", "inc", "--X", "xfun")
    assert code == 0
    assert doc["status"] == "ok"
    assert {b: len(v) for b, v in doc["ext"]["sets"].items()} == {"0": 1, "1": 1, "2": 3}


def test_ran_sizes(capsys):
    code, doc = run(capsys, "ran", *ws("chain_inclusion.json"), "--K", "inc", "--X", "xfun")
    assert code == 0
    assert {b: len(v) for b, v in doc["ext"]["sets"].items()} == {"0": 2, "1": 2, "2": 2}


def test_common_flags_before_subcommand(capsys):
    code, doc = run(capsys, "--input", WS / "limits.json", "limit", "--X", "product")
    assert code == 0 and doc["size"] == 6


def test_adjunction_exit_codes(capsys):
    code, doc = run(capsys, "adjunction", *ws("galois.json"), "--L", "L", "--R", "R")
    assert code == 0 and doc["condition1"] and doc["condition2"]
    code, doc = run(capsys, "adjunction", *ws("galois.json"), "--L", "swapL", "--R", "swapR")
    assert code == 1 and doc["status"] == "fails"


def test_dangling_reference_exit_two(capsys):
    code, doc = run(capsys, "validate", *ws("broken_dangling.json"))
    assert code == 2
    assert doc["error"]["code"] == "workspace"
    assert doc["error"]["diagnostics"][0]["line"] is not None


def test_unknown_name_exit_two(capsys):
    code, doc = run(capsys, "limit", *ws("limits.json"), "--X", "nope")
    assert code == 2 and doc["error"]["code"] == "not-found"


def test_usage_error_exit_two(capsys):
    code, doc = run(capsys, "frobnicate")
    assert code == 2 and doc["error"]["code"] == "usage"


def test_order_ext_undefined_exit_one(capsys):
    code, doc = run(capsys, "order-ext", *ws("order_ext.json"), "--Q", "Qmid", "--R", "R", "--X", "Xmid")
    assert code == 1 and doc["error"]["code"] == "extension-undefined"


def test_guard_exit_one(capsys):
    code, doc = run(capsys, "yoneda", *ws("yoneda.json"), "--X", "X", "--a", "2", "--guard-nathom", "1")
    assert code == 1 and doc["error"]["code"] == "guard-exceeded"


def test_codensity(capsys):
    code, doc = run(capsys, "codensity", *ws("codensity.json"), "--G", "two", "--probe", "0", "--probe", "1")
    assert code == 0
    assert [p["size"] for p in doc["probes"]] == [2, 4]


def test_dot_written(tmp_path, capsys):
    dot = tmp_path / "c.dot"
    code, _ = run(capsys, "comma", *ws("chain_inclusion.json"), "--K", "inc", "--b", "1", "--dot", dot)
    assert code == 0
    assert dot.read_text().startswith("digraph")


@pytest.mark.parametrize("argv", [
    ["lan", "--K", "inc", "--X", "xfun"],
    ["ran", "--K", "inc", "--X", "xfun"],
    ["comma", "--K", "inc", "--b", "2", "--side", "right"],
])
def test_deterministic_bytes(argv):
    cmd = [sys.executable, "-m", "kanext.cli", *argv, "--input", str(WS / "chain_inclusion.json")]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True, env={"PYTHONHASHSEED": "123", "PATH": ""}).stdout
    assert first == second


def test_no_color(capsys, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    main(["limit", "--input", str(WS / "limits.json"), "--X", "nope"])
    assert "\x1b[" not in capsys.readouterr().err

import json
import subprocess
import sys

import pytest

from ordsgp import OrderedSemigroup, lz2, structure_from_dict
from ordsgp.cli import main

SL2 = {"order": 2, "table": [[0, 0], [0, 1]], "leq": [[True, True], [False, True]]}
NONASSOC = {"order": 2, "table": [[1, 0], [0, 0]], "leq": [[True, False], [False, True]]}


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload) if not isinstance(payload, str) else payload)
    return str(path)


def test_validate_ok(tmp_path, capsys):
    code = main(["validate", write(tmp_path, "s.json", SL2)])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"ok": True, "key": "n2:0001:1101"}


def test_validate_invalid_structure(tmp_path, capsys):
    code = main(["validate", write(tmp_path, "s.json", NONASSOC)])
    assert code == 1
    out = json.loads(capsys.readouterr().out)
    assert not out["ok"]
    assert out["violations"][0] == {"axiom": "associativity", "witness": [0, 0, 1]}


def test_validate_parse_error(tmp_path):
    with pytest.raises(SystemExit) as err:
        main(["validate", write(tmp_path, "s.json", "not json")])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["validate", write(tmp_path, "t.json", {"order": 1})])
    assert err.value.code == 2


def test_analyze_json(tmp_path, capsys):
    code = main(["analyze", write(tmp_path, "s.json", SL2), "--json"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["ordered_idempotents"] == [0, 1]
    assert out["predicates"]["left-simple"] is False
    assert out["predicates"]["right-pi-inverse"] is True
    assert out["suites"]["thm2"] == "equivalent"
    assert out["green"]["L"] == [[0], [1]]


def test_analyze_text(tmp_path, capsys):
    lz2_payload = {
        "order": 2,
        "table": [[0, 0], [1, 1]],
        "leq": [[True, False], [False, True]],
    }
    code = main(["analyze", write(tmp_path, "s.json", lz2_payload)])
    assert code == 0
    text = capsys.readouterr().out
    assert "predicate left-simple: yes" in text
    assert "predicate right-pi-inverse: no" in text


def test_enumerate_stdout_roundtrip(capsys):
    code = main(["enumerate", "--order", "2", "--orders", "discrete"])
    assert code == 0
    captured = capsys.readouterr()
    lines = captured.out.strip().splitlines()
    assert len(lines) == 8
    for line in lines:
        back = structure_from_dict(json.loads(line))
        assert isinstance(back, OrderedSemigroup)
    manifest = json.loads(captured.err.strip().splitlines()[-1])
    assert manifest["count"] == 8


def test_enumerate_to_file(tmp_path):
    out = tmp_path / "catalog.ndjson"
    code = main(["enumerate", "--order", "1", "--out", str(out)])
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 1
    manifest = json.loads((tmp_path / "catalog.ndjson.manifest.json").read_text())
    assert manifest["count"] == 1


def test_verify_ok(capsys):
    code = main(["verify", "--theorem", "thm2", "--max-order", "2"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["totals"]["DISCREPANCY"] == 0
    assert out["structures"] == 21
    assert "runtime_seconds" not in out


def test_verify_all_max_order_2(capsys):
    code = main(["verify", "--theorem", "all", "--max-order", "2"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["totals"]["DISCREPANCY"] == 0


def test_verify_thm2_order3(capsys):
    code = main(["verify", "--theorem", "thm2", "--max-order", "3"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["structures"] == 992
    assert out["totals"] == {"equivalent": 992, "hypothesis_not_met": 0, "DISCREPANCY": 0}


def test_verify_bogus_theorem_is_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["verify", "--theorem", "bogus", "--max-order", "2"])
    assert err.value.code == 64


def test_order_caps_are_usage_errors(capsys):
    assert main(["verify", "--theorem", "thm2", "--max-order", "5"]) == 64
    assert main(["enumerate", "--order", "5"]) == 64
    assert main(["search", "--satisfy", "regular", "--max-order", "9"]) == 64
    capsys.readouterr()


def test_usage_error_unknown_subcommand():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 64


def test_search_found(capsys):
    code = main(
        ["search", "--satisfy", "left-simple", "--violate", "right-simple", "--max-order", "2"]
    )
    assert code == 0
    out = json.loads(capsys.readouterr().out.strip())
    assert structure_from_dict(out) == lz2()


def test_search_exhausted(capsys):
    code = main(
        [
            "search",
            "--satisfy",
            "left-simple,right-simple",
            "--violate",
            "simple",
            "--max-order",
            "2",
        ]
    )
    assert code == 1
    err = capsys.readouterr().err
    assert json.loads(err.strip().splitlines()[-1])["found"] is False


def test_search_unknown_predicate(capsys):
    code = main(["search", "--satisfy", "mystery", "--max-order", "2"])
    assert code == 64


def test_workers_env_byte_identical_subprocess():
    cmd = [sys.executable, "-m", "ordsgp.cli", "verify", "--theorem", "all", "--max-order", "2"]
    runs = {}
    for workers in ("1", "2"):
        proc = subprocess.run(
            cmd, capture_output=True, text=True, env={"ORDSGP_WORKERS": workers, "PATH": "/usr/bin:/bin"}
        )
        assert proc.returncode == 0, proc.stderr
        runs[workers] = proc.stdout
    assert runs["1"] == runs["2"]

import json

import pytest

import cli
from algebra import ringfile
from config.settings import load_config
from models.report_models import TheoremId

NON_ASSOCIATIVE = "ring bad\nadd 2 2\nmul 1 1 -> 0 1\nmul 2 1 -> 0 1\ngroup trivial =\n"


@pytest.fixture
def ring_file(tmp_path, named):
    def write(*names):
        path = tmp_path / "instances.ring"
        path.write_text(ringfile.dumps([named[name] for name in names]))
        return str(path)
    return write


def test_validate_exit_codes(tmp_path, ring_file, capsys):
    assert cli.main(["validate", ring_file("F3xF3/swap", "2Z8/neg")]) == cli.EXIT_OK
    assert "2Z8/neg" in capsys.readouterr().out

    malformed = tmp_path / "malformed.ring"
    malformed.write_text("ring X\nadd 2\nmul 1 -> 1\n")
    assert cli.main(["validate", str(malformed)]) == cli.EXIT_PARSE
    assert "line 3" in capsys.readouterr().err

    bad = tmp_path / "bad.ring"
    bad.write_text(NON_ASSOCIATIVE)
    assert cli.main(["validate", str(bad)]) == cli.EXIT_INVALID
    assert "(0, 0, 0)" in capsys.readouterr().err


def test_check_writes_sorted_report(tmp_path, ring_file, capsys):
    out = tmp_path / "report.json"
    code = cli.main(["check", ring_file("M2(F2)/inner", "F3xF3/swap"), "--theorems", "RAD_1_4,LEVITZKI",
                     "--out", str(out)])
    assert code == cli.EXIT_OK
    reports = json.loads(out.read_text())
    keys = [(r["theorem"], r["ring"], r["group"]) for r in reports]
    assert keys == sorted(keys)
    assert len(reports) == 4
    assert all(r["caps"]["ideal_scan"] == 256 and r["seed"] == 0 for r in reports)
    assert "F3xF3/swap" in capsys.readouterr().out


def test_check_is_byte_identical_across_runs(tmp_path, ring_file):
    path = ring_file("F4_0/sym3")
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["check", path, "--out", str(first), "--seed", "5"]) == cli.EXIT_OK
    assert cli.main(["check", path, "--out", str(second), "--seed", "5"]) == cli.EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_check_empty_instance_list(tmp_path):
    out = tmp_path / "empty.json"
    assert cli.main(["check", "--out", str(out)]) == cli.EXIT_OK
    assert json.loads(out.read_text()) == []


def test_masked_check_exits_with_counterexample(tmp_path, ring_file):
    out = tmp_path / "masked.json"
    code = cli.main(["check", ring_file("M2(F2)/inner"), "--theorems", "RAD_1_4", "--mask", "RAD_1_4:unit",
                     "--out", str(out)])
    assert code == cli.EXIT_COUNTEREXAMPLE
    [report] = json.loads(out.read_text())
    assert report["verdict"] == "counterexample"


def test_search_command(tmp_path, ring_file, capsys):
    out = tmp_path / "hits.json"
    code = cli.main(["search", ring_file("M2(F2)/inner", "F3xF3/swap"), "--theorems", "RAD_1_4",
                     "--mask", "RAD_1_4:unit", "--out", str(out)])
    assert code == cli.EXIT_COUNTEREXAMPLE
    assert "1 counterexamples" in capsys.readouterr().out


def test_profile_command(ring_file, capsys):
    assert cli.main(["profile", ring_file("2Z8/neg")]) == cli.EXIT_OK
    profile = json.loads(capsys.readouterr().out)
    assert profile["bad_primes"] == [2]
    assert profile["fixed_ring"] == "{(0), (2)}"
    assert profile["trace_image"] == "{(0)}"


def test_profile_of_named_instance(capsys):
    assert cli.main(["profile", "--named", "--instance", "Z12/trivial"]) == cli.EXIT_OK
    profile = json.loads(capsys.readouterr().out)
    assert profile["prime_radical"] == "{(0), (6)}"
    assert profile["jacobson_radical"] == "{(0), (6)}"


def test_catalog_command_round_trips(tmp_path):
    out = tmp_path / "named.ring"
    manifest = tmp_path / "named.json"
    assert cli.main(["catalog", "--out", str(out), "--manifest", str(manifest)]) == cli.EXIT_OK
    assert cli.main(["validate", str(out)]) == cli.EXIT_OK
    assert ringfile.dumps(ringfile.load(out)) == out.read_text()
    assert len(json.loads(manifest.read_text())) >= 9


def test_bad_mask_is_a_usage_error(ring_file):
    with pytest.raises(SystemExit) as exc:
        cli.main(["check", ring_file("F3xF3/swap"), "--mask", "NOPE:1"])
    assert exc.value.code == 2


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("RINGINV_SEED", "9")
    monkeypatch.setenv("RINGINV_CAPS", "ideal_scan=64,d_search=4")
    monkeypatch.setenv("RINGINV_THEOREMS", "N1, BI_1_4")
    config = load_config({"caps": "d_search=8"})
    assert config.seed == 9
    assert config.caps.ideal_scan == 64
    assert config.caps.d_search == 8
    assert config.theorems == [TheoremId.N1, TheoremId.BI_1_4]
    assert load_config({"seed": 3}).seed == 3

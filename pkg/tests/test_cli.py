import json

import pytest

from nilorbits.cli import EXIT_BUDGET, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots_text(capsys):
    code, out, err = run(capsys, "roots", "G2", "--seed", "1")
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == 6
    assert "seed 1" in err


def test_roots_json_f4(capsys):
    code, out, _ = run(capsys, "roots", "F4", "--json")
    doc = json.loads(out)
    assert doc["gap_from_display"] == [4, 1, 3, 2]
    assert len(doc["roots"]) == 24 and doc["roots"][-1]["display"] == [2, 3, 4, 2]


def test_orbits_json_and_recheck(capsys, tmp_path):
    path = tmp_path / "g2.json"
    code, out, _ = run(capsys, "orbits", "G2", "--json", "--seed", "3", "--out", str(path))
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["count"] == 4 and doc["config"]["seed"] == 3
    assert {r["label"] for r in doc["records"]} == {"A1", "Ã1", "A1+Ã1", "G2"}
    assert json.loads(path.read_text()) == doc
    code, out, _ = run(capsys, "--recheck", str(path))
    assert code == EXIT_OK and "4/4 records re-verified" in out


def test_recheck_detects_tampering(capsys, tmp_path):
    path = tmp_path / "g2.json"
    run(capsys, "orbits", "G2", "--json", "--seed", "0", "--out", str(path))
    doc = json.loads(path.read_text())
    doc["records"][0]["e"][0][1] = "5"
    path.write_text(json.dumps(doc))
    code, _, _ = run(capsys, "--recheck", str(path))
    assert code == 1


def test_rep_valid(capsys):
    code, out, _ = run(capsys, "rep", "F4", "0,0,0,1", "--seed", "2", "--json")
    assert code == EXIT_OK
    rec = json.loads(out)["records"][0]
    assert rec["diagram"] == [0, 0, 0, 1]


def test_rep_invalid(capsys):
    code, out, err = run(capsys, "rep", "G2", "1,1", "--seed", "2", "--json")
    assert code == EXIT_INCONCLUSIVE
    assert json.loads(out)["valid"] is False
    assert "seed 2" in err


@pytest.mark.parametrize("argv", [
    ("rep", "G2", "0,0"),
    ("rep", "G2", "1,0,0"),
    ("rep", "G2", "a,b"),
    ("rep", "G2", "3,0"),
    ("orbits", "G2", "--trials", "0"),
    (),
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_unknown_type(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["roots", "B3"])
    assert exc.value.code == EXIT_USAGE


def test_missing_recheck_file(capsys, tmp_path):
    code, _, _ = run(capsys, "--recheck", str(tmp_path / "nope.json"))
    assert code == EXIT_USAGE


@pytest.mark.parametrize("command", ["index", "doublecen"])
def test_analysis_roundtrip(capsys, tmp_path, command):
    path = tmp_path / f"{command}.json"
    code, out, _ = run(capsys, command, "G2", "--seed", "5", "--out", str(path))
    assert code == EXIT_OK
    assert "G2" in out
    code, out, _ = run(capsys, "--recheck", str(path))
    assert code == EXIT_OK and "4/4" in out


def test_doublecen_degree(capsys):
    code, out, _ = run(capsys, "doublecen", "G2", "--seed", "5", "--degree", "2", "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["degree"] == 2
    mins = {tuple(r["diagram"]): r["min_dim"] for r in doc["records"]}
    assert mins[(0, 2)] == 3  # GAP order; displayed as 2 0


def test_exact_mode_g2(capsys):
    code, out, _ = run(capsys, "orbits", "G2", "--exact", "--seed", "0", "--json")
    assert code == EXIT_OK and json.loads(out)["budget_exceeded"] == 0


def test_exact_budget_exit(capsys):
    code, out, _ = run(capsys, "orbits", "G2", "--exact", "--budget", "1", "--seed", "0", "--json")
    assert code in (EXIT_OK, EXIT_BUDGET)
    assert json.loads(out)["count"] == 4


def test_jobs_do_not_change_output(capsys):
    _, one, _ = run(capsys, "orbits", "F4", "--seed", "11", "--json", "--jobs", "1")
    _, two, _ = run(capsys, "orbits", "F4", "--seed", "11", "--json", "--jobs", "2")
    assert one == two

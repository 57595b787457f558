import csv
import io
import json

import pytest

from cheesyhex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_dp(capsys):
    code, out, _ = run(capsys, "count", "--class", "blocks", "--level", "1", "--max-area", "12")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[-1] == {"area": "12", "count": "4914448"}


def test_count_brute_cc(capsys):
    code, out, _ = run(capsys, "count", "--class", "cc", "--max-area", "6", "--method", "brute")
    assert [r["count"] for r in csv.DictReader(io.StringIO(out))] == ["1", "3", "11", "42", "162", "626"]


def test_csv_and_json_agree(capsys):
    args = ["count", "--class", "blocks", "--level", "2", "--max-area", "12", "--method", "gf"]
    _, out_csv, _ = run(capsys, *args)
    _, out_json, _ = run(capsys, *args, "--output", "json")
    doc = json.loads(out_json)
    assert doc["rows"] == list(csv.DictReader(io.StringIO(out_csv)))
    assert doc["rows"][-1]["count"] == "6360809"


def test_big_counts_are_strings(capsys):
    _, out, _ = run(capsys, "count", "--level", "1", "--max-area", "40", "--output", "json")
    last = json.loads(out)["rows"][-1]["count"]
    assert isinstance(last, str) and int(last) > 2**63


def test_usage_errors(capsys):
    assert run(capsys, "count", "--class", "cheesy", "--method", "gf")[0] == 2
    assert run(capsys, "count", "--method", "brute", "--max-area", "13")[0] == 2
    assert run(capsys, "count", "--max-area", "0")[0] == 2
    assert run(capsys, "growth", "--level", "5")[0] == 2
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 2 and "unknown suite" in err
    with pytest.raises(SystemExit) as exc:
        main(["count", "--method", "exact"])
    assert exc.value.code == 2


def test_brute_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("CHEESYHEX_BRUTE_MAX_AREA", "4")
    assert run(capsys, "count", "--method", "brute", "--max-area", "5")[0] == 2
    assert run(capsys, "count", "--method", "brute", "--max-area", "4")[0] == 0


def test_emit_figures(capsys, tmp_path):
    path = tmp_path / "figs.txt"
    code, out, _ = run(capsys, "count", "--level", "1", "--max-area", "4", "--method", "brute",
                       "--emit-figures", str(path))
    assert code == 0
    assert len(path.read_text().splitlines()) == 1 + 3 + 11 + 44


def test_growth(capsys):
    _, out, _ = run(capsys, "growth", "--output", "json")
    rows = json.loads(out)["rows"]
    assert [r["growth"] for r in rows] == ["4.289698", "4.462811", "4.538766"]
    assert rows[1]["amplitude"] == "0.102214"


def test_tables(capsys):
    _, out, _ = run(capsys, "table", "1")
    row9 = list(csv.DictReader(io.StringIO(out)))[8]
    assert [row9[k] for k in ("cc", "level1", "level2", "level3")] == ["36106", "62097", "71242", "73558"]
    _, out, _ = run(capsys, "table", "2")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["blocks"] for r in rows] == ["3.863131", "4.289698", "4.462811", "4.538766"]
    assert [r["cheesy_source"] for r in rows[1:]] == ["external input"] * 3


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "extrapolate")
    assert code == 0 and "4.590" in out
    code, out, _ = run(capsys, "verify", "eq1", "--output", "json")
    assert code == 0 and json.loads(out)[0]["ok"]
    code, out, _ = run(capsys, "verify", "asymptotics")
    assert code == 1  # the published level 3 amplitude is not reproduced


def test_deterministic(capsys):
    first = run(capsys, "table", "2", "--output", "json")[1]
    assert run(capsys, "table", "2", "--output", "json")[1] == first

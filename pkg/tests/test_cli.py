"""CLI surface: flags, payloads, exit codes, determinism, sweep runner."""

import json

from sidelseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


def test_field_info(capsys):
    payload = run_json(capsys, "field-info", "--q", "9")
    assert payload == {"q": 9, "p": 3, "m": 2, "modulus": [1, 0, 1], "gamma": 4}


def test_gen_and_lc_round_trip(tmp_path, capsys):
    path = str(tmp_path / "seq.txt")
    code, _ = run(capsys, "gen", "--q", "7", "--d", "3", "--l", "6", "-o", path)
    assert code == 0
    assert open(path).read() == "3 6\n2 1 1 0 2 0\n"
    payload = run_json(capsys, "lc", path)
    assert payload == {"lc": 5}


def test_lc_all_zero(tmp_path, capsys):
    path = tmp_path / "zero.txt"
    path.write_text("3 4\n0 0 0 0\n")
    payload = run_json(capsys, "lc", str(path))
    assert payload == {"lc": 0}


def test_gen_to_stdout(capsys):
    code, out = run(capsys, "gen", "--q", "7", "--d", "3", "--l", "3")
    assert code == 0
    assert out == "3 3\n2 1 2\n"


def test_lc_reads_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("3 3\n2 1 2\n"))
    payload = run_json(capsys, "lc")
    assert payload == {"lc": 3}


def test_klc(tmp_path, capsys):
    path = tmp_path / "seq.txt"
    path.write_text("3 6\n2 1 1 0 2 0\n")
    payload = run_json(capsys, "klc", str(path), "--k", "1")
    assert payload == {"lc": 5, "k": 1, "lc_k": 4, "witness": [[0, 1]]}


def test_klc_budget_exit_code(tmp_path, capsys):
    path = tmp_path / "seq.txt"
    path.write_text("3 30\n" + " ".join(["1"] * 30) + "\n")
    code, _ = run(capsys, "klc", str(path), "--k", "2", "--budget", "10")
    assert code == 3


def test_budget_env_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SIDELSEQ_BUDGET", "10")
    path = tmp_path / "seq.txt"
    path.write_text("3 30\n" + " ".join(["1"] * 30) + "\n")
    code, _ = run(capsys, "klc", str(path), "--k", "2")
    assert code == 3


def test_invalid_input_exit_code(capsys):
    code, _ = run(capsys, "gen", "--q", "7", "--d", "3", "--l", "4")
    assert code == 2
    code, _ = run(capsys, "field-info", "--q", "12")
    assert code == 2


def test_bounds_payload(capsys):
    payload = run_json(capsys, "bounds", "--q", "103", "--d", "3", "--l", "51", "--k", "1")
    assert payload["klc_floor"] == 48
    assert payload["factorization"] == {"s": 1, "r": 17, "v": 1}
    assert payload["root_exclusion_ok"] is True


def test_cyclo_json_and_csv(capsys):
    payload = run_json(capsys, "cyclo", "--q", "7", "--v", "2")
    assert payload["counts"] == [[1, 2], [1, 1]]
    code, out = run(capsys, "cyclo", "--q", "7", "--v", "6", "--closed-form",
                    "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "i,j,count,source"
    assert len(lines) == 37


def test_cyclo_closed_form_requires_order6(capsys):
    code, _ = run(capsys, "cyclo", "--q", "7", "--v", "2", "--closed-form")
    assert code == 2


def test_verify_thm2(capsys):
    payload = run_json(capsys, "verify-thm2", "--q", "7")
    assert payload["S1"] == 2 and payload["S1_pred"] == 2
    assert payload["svalues_match"] is True
    assert payload["match"] is True
    assert payload["prediction"] == "none"


def test_verify_thm2_full_klc(capsys):
    payload = run_json(capsys, "verify-thm2", "--q", "103", "--full-klc")
    assert "lc" in payload and "lc1" in payload
    assert payload["match"] is True


def test_weil_payload(capsys):
    payload = run_json(capsys, "weil", "--q", "7", "--d", "3", "--poly", "0,1,1")
    assert payload["counts"] == [2, 0, 3]
    assert payload["e"] == 2
    assert payload["weil_ok"] is True
    payload = run_json(capsys, "weil", "--q", "7", "--d", "3", "--poly", "1,3,3,1")
    assert payload["applicable"] is False
    assert payload["weil_ok"] is None


def test_outputs_deterministic(capsys):
    args = ("verify-thm2", "--q", "31")
    _, out1 = run(capsys, *args)
    _, out2 = run(capsys, *args)
    assert out1 == out2
    args = ("bounds", "--q", "31", "--d", "3", "--l", "15", "--k", "1")
    _, out1 = run(capsys, *args)
    _, out2 = run(capsys, *args)
    assert out1 == out2


def test_sweep(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "q": {"min": 3, "max": 31, "primes_only": True},
        "d": 3,
        "l": "all",
        "k": {"max": 1},
        "analyses": ["lc", "klc", "bounds"],
    }))
    out_path = tmp_path / "out.jsonl"
    csv_path = tmp_path / "out.csv"
    summary = run_json(capsys, "sweep", "--config", str(cfg),
                       "--out", str(out_path), "--csv", str(csv_path))
    assert summary["bound_violations"] == 0
    assert summary["ok"] > 0
    records = [json.loads(line) for line in out_path.read_text().splitlines()]
    assert len(records) == summary["ok"] + summary["skipped"] + summary["budget_exceeded"]
    for rec in records:
        if rec["status"] == "ok":
            assert "lc" in rec and "gamma" in rec
    header = csv_path.read_text().splitlines()[0]
    assert header.startswith("q,gamma,d,l,k,status")


def test_sweep_empty_q(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"q": [], "d": 3, "l": "all", "k": [0]}))
    summary = run_json(capsys, "sweep", "--config", str(cfg),
                       "--out", str(tmp_path / "o.jsonl"))
    assert summary == {"ok": 0, "skipped": 0, "budget_exceeded": 0,
                       "bound_violations": 0}


def test_sweep_forced_budget(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "q": [103], "d": 3, "l": [51], "k": [2],
        "analyses": ["klc"], "budget": 1,
    }))
    out_path = tmp_path / "o.jsonl"
    summary = run_json(capsys, "sweep", "--config", str(cfg), "--out", str(out_path))
    assert summary["budget_exceeded"] == 1
    rec = json.loads(out_path.read_text().splitlines()[0])
    assert rec["status"] == "budget_exceeded"


def test_sweep_records_round_trip(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "q": [7, 13], "d": 3, "l": "all", "k": [0, 1],
        "analyses": ["lc", "klc", "bounds", "thm2"],
    }))
    out_path = tmp_path / "o.jsonl"
    run_json(capsys, "sweep", "--config", str(cfg), "--out", str(out_path))
    text = out_path.read_text()
    records = [json.loads(line) for line in text.splitlines()]
    assert all(json.dumps(r) for r in records)  # every record re-serializes

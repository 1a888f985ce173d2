import json

from prymkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "richelot")
    assert code == 0
    cert = json.loads(out.strip())
    assert cert["suite"] == "richelot" and cert["status"] == "pass"
    assert all(c["ok"] for c in cert["checks"])


def test_verify_all_pass_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--lambda", "9,2,8",
                           "--kappa15", "3", "--kappa23", "4", "--suite", "all")
    assert code == 0
    lines = [json.loads(l) for l in out.strip().splitlines()]
    assert [d["suite"] for d in lines] == [
        "richelot", "fibers", "identification", "pencil", "genus5", "heights",
    ]
    assert all(d["status"] == "pass" for d in lines)


def test_invalid_moduli_exit_two(capsys):
    code, _, err = run_cli(capsys, "verify", "--lambda", "4,2,2",
                           "--kappa15", "2", "--kappa23", "2")
    assert code == 2
    assert "distinct" in err


def test_mismatched_square_root_exit_two(capsys):
    code, _, err = run_cli(capsys, "verify", "--lambda", "9,2,8",
                           "--kappa15", "5", "--kappa23", "4")
    assert code == 2
    assert "k15" in err


def test_deterministic_output(capsys):
    _, out1, _ = run_cli(capsys, "verify", "--suite", "richelot")
    _, out2, _ = run_cli(capsys, "verify", "--suite", "richelot")
    strip = lambda s: "\n".join(
        json.dumps({k: v for k, v in json.loads(l).items() if k != "wall_time"},
                   sort_keys=True)
        for l in s.strip().splitlines()
    )
    assert strip(out1) == strip(out2)


def test_certificates_roundtrip(tmp_path, capsys):
    path = tmp_path / "certs.jsonl"
    code, _, _ = run_cli(capsys, "verify", "--suite", "richelot", "--suite", "fibers",
                         "--out", str(path))
    assert code == 0
    code, out, _ = run_cli(capsys, "verify", "--recheck", str(path))
    assert code == 0
    for line in out.strip().splitlines():
        assert json.loads(line)["recheck"] == "pass"


def test_recheck_detects_tampering(tmp_path, capsys):
    path = tmp_path / "certs.jsonl"
    run_cli(capsys, "verify", "--suite", "richelot", "--out", str(path))
    tampered = []
    for line in path.read_text().splitlines():
        cert = json.loads(line)
        cert["checks"][0]["r"] = "1"
        tampered.append(json.dumps(cert))
    path.write_text("\n".join(tampered) + "\n")
    code, out, _ = run_cli(capsys, "verify", "--recheck", str(path))
    assert code == 1
    assert json.loads(out.strip().splitlines()[0])["recheck"] == "fail"


def test_pencil_classify_stream(capsys):
    code, out, _ = run_cli(capsys, "pencil", "classify", "--t", "0", "--t", "1",
                           "--t", "3", "--t", "4")
    assert code == 0
    recs = [json.loads(l) for l in out.strip().splitlines()]
    by_t = {r["t"]: r["class"] for r in recs}
    assert by_t == {
        "0": "SmoothHyperelliptic",
        "1": "SmoothGenus3",
        "3": "ReducibleLinePlusGenus2",
        "4": "ReducibleLinePlusGenus2",
    }
    reducible = [r for r in recs if r["class"] == "ReducibleLinePlusGenus2"]
    assert all("genus2_component" in r["witness"] for r in reducible)


def test_fibers_inventories(capsys):
    code, out, _ = run_cli(capsys, "fibers", "--family", "shioda", "--family", "dual_kummer")
    assert code == 0
    recs = {json.loads(l)["family"]: json.loads(l) for l in out.strip().splitlines()}
    assert recs["shioda"]["inventory"] == {"I0*": 2, "I2": 6}
    assert recs["dual_kummer"]["inventory"] == {"I1": 8, "I4": 4}
    assert recs["shioda"]["total_ord_delta"] == 24


def test_invariants_command(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--curve",
                           '["0","144","-308","238","-77","10.5"]' .replace("10.5", "21/2"))
    assert code == 0
    rec = json.loads(out.strip())
    assert set(rec["igusa_clebsch"]) == {"I2", "I4", "I6", "I10"}


def test_invariants_rejects_non_squarefree(capsys):
    code, _, err = run_cli(capsys, "invariants", "--curve", '["0","0","1","0","0","1"]')
    assert code == 2
    assert "squarefree" in err


def test_thread_env_respected(capsys, monkeypatch):
    monkeypatch.setenv("PRYMKIT_THREADS", "1")
    code, out, _ = run_cli(capsys, "verify", "--suite", "richelot", "--suite", "identification")
    assert code == 0
    suites = [json.loads(l)["suite"] for l in out.strip().splitlines()]
    assert suites == ["richelot", "identification"]

import json
import subprocess
import sys

import pytest

from scldpcl.protograph import cutting_vector_sb, dump_protograph


def run_cli(*args: str) -> subprocess.CompletedProcess:
    cmd = [sys.executable, "-m", "scldpcl", *args]
    return subprocess.run(cmd, capture_output=True, text=True)


@pytest.fixture(scope="module")
def sb_doc(tmp_path_factory):
    path = tmp_path_factory.mktemp("docs") / "sb361.json"
    path.write_text(json.dumps(dump_protograph(cutting_vector_sb(3, 6, 1))))
    return str(path)


@pytest.fixture(scope="module")
def channel_doc(tmp_path_factory):
    path = tmp_path_factory.mktemp("docs") / "chan.json"
    path.write_text(json.dumps({"states": [0.33, 0.42], "alpha": 0.9}))
    return str(path)


def body_of(csv_text: str) -> str:
    return "\n".join(l for l in csv_text.splitlines() if not l.startswith("#"))


def test_help():
    cp = run_cli("--help")
    assert cp.returncode == 0
    for verb in ("analyze", "transfer-sweep", "design-search", "markov", "reproduce"):
        assert verb in cp.stdout


def test_analyze_report(sb_doc, tmp_path):
    out = tmp_path / "report.json"
    cp = run_cli("analyze", sb_doc, "--q-at", "0.18", "--q-at", "0.33",
                 "--tol", "1e-4", "-o", str(out))
    assert cp.returncode == 0, cp.stderr
    report = json.loads(out.read_text())
    th = report["thresholds"]
    assert abs(th["eps1_local"] - 0.2) < 1e-3
    assert abs(th["eps2_reduction"] - 0.3719) < 1e-3
    assert abs(th["eps3_zero_preserving"] - 0.4297) < 1e-3
    assert report["symmetric"] is True
    assert "sg_thresholds" in report
    q_entries = {e["eps"]: e for e in report["q_at"]}
    assert q_entries[0.18]["q"] == 1
    assert "locally decodable" in q_entries[0.18]["regime"]
    assert q_entries[0.33]["q"] == 3
    assert report["_manifest"]["command"] == "analyze"
    # the human table also prints
    assert "locally decodable" in cp.stdout


def test_transfer_sweep_csv(sb_doc, tmp_path):
    out = tmp_path / "sweep.csv"
    cp = run_cli("transfer-sweep", sb_doc, "--eps", "0.0", "--eps", "0.3547",
                 "--grid", "5", "-o", str(out))
    assert cp.returncode == 0, cp.stderr
    lines = out.read_text().splitlines()
    header = [l for l in lines if l.startswith("#")]
    assert any(l.startswith("# command: transfer-sweep") for l in header)
    rows = [l for l in lines if not l.startswith("#")]
    assert rows[0] == "eps,delta_1,Delta_1"
    # eps = 0 rows are exactly zero
    zero_rows = [r for r in rows[1:] if r.startswith("0.000000")]
    assert len(zero_rows) == 5
    assert all(r.split(",")[2] == "0.000000" for r in zero_rows)


def test_transfer_sweep_deterministic_body(sb_doc, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        cp = run_cli("transfer-sweep", sb_doc, "--eps", "0.42", "--grid", "4",
                     "-o", str(path))
        assert cp.returncode == 0
    assert body_of(a.read_text()) == body_of(b.read_text())


def test_design_search_odd_r(tmp_path):
    out = tmp_path / "designs.csv"
    cp = run_cli("design-search", "--l", "4", "--r", "5", "--t-max", "1",
                 "--m", "3", "--eps0", "0.1", "-o", str(out))
    assert cp.returncode == 0, cp.stderr
    rows = body_of(out.read_text()).splitlines()
    assert len(rows) == 2  # header + the single uncoupled design
    assert rows[1].split(",")[1] == "0"


def test_markov_pipeline(sb_doc, channel_doc, tmp_path):
    out = tmp_path / "markov.csv"
    cp = run_cli("markov", sb_doc, channel_doc, "--d-min", "2", "--d-max", "10",
                 "--d-step", "2", "-o", str(out))
    assert cp.returncode == 0, cp.stderr
    rows = body_of(out.read_text()).splitlines()
    assert rows[0] == "d,p_one_sided_l,p_one_sided_r,p_two_sided"
    first = rows[1].split(",")
    assert first[0] == "2"
    assert abs(float(first[2]) - 0.405) < 1e-5
    last = rows[-1].split(",")
    assert abs(float(last[2]) - 0.68547202965) < 1e-5


def test_markov_json_payload(sb_doc, channel_doc):
    cp = run_cli("markov", sb_doc, channel_doc, "--d-min", "2", "--d-max", "4",
                 "--format", "json")
    assert cp.returncode == 0, cp.stderr
    payload = json.loads(cp.stdout)
    assert payload["q"] == 3
    assert payload["a_sets"] == [[], [0], [1], []]
    assert payload["closed_form"] is False


def test_validation_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "l": 3, "r": 6, "t": 1,
        "b_left": [[1, 1, 0, 0, 0, 0]],
        "b_right": [[0, 0, 0, 1, 1, 1]],
    }))
    cp = run_cli("analyze", str(bad))
    assert cp.returncode == 1
    assert "Eq.15a" in cp.stderr


def test_reproduce_fig8(tmp_path):
    cp = run_cli("reproduce", "fig8", "--out-dir", str(tmp_path))
    assert cp.returncode == 0, cp.stderr
    assert "PASS" in cp.stdout
    assert (tmp_path / "fig8.csv").exists()


def test_reproduce_unknown_artifact():
    cp = run_cli("reproduce", "nosuch")
    assert cp.returncode != 0

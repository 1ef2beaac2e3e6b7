import csv
import dataclasses
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from qbrach import cli, frames


def _run(argv, capsys):
    code = cli.main(argv)
    return code, capsys.readouterr()


def test_verify_default_exit_zero(capsys):
    code, out = _run([], capsys)
    assert code == 0
    report = json.loads(out.out)
    assert report["schema"] == 1
    assert report["summary"]["mismatches"] == []
    assert len(report["claims"]) >= 20
    assert all(c["paper_anchor"] for c in report["claims"])
    by_id = {c["id"]: c for c in report["claims"]}
    assert by_id["braid.iSinvTSinv"]["status"] == "pass"
    assert by_id["stark.dc.printed-unitary"]["status"] == "deviate"


def test_verify_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["--out", str(a)]) == 0
    assert cli.main(["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r\n" not in a.read_bytes()


def test_verify_mismatch_exit_one(capsys, monkeypatch):
    real = cli.build_claims

    def flipped(cfg):
        out = real(cfg)
        out[0] = dataclasses.replace(out[0], expected_status=frames.DEVIATES)
        return out

    monkeypatch.setattr(cli, "build_claims", flipped)
    code, out = _run(["--format", "text"], capsys)
    assert code == 1
    assert "BAD" in out.out and "mismatches: 1" in out.out


@pytest.mark.parametrize("argv", [
    ["--samples", "1"],
    ["--t-start", "1", "--t-end", "1"],
    ["--tol", "0"],
    ["--omega-drive", "-1"],
    ["--R", "nan"],
    ["--R", "0"],
    ["--Delta", "0", "--V", "0"],
    ["--command", "trajectory", "--family", "Z"],
])
def test_config_errors_exit_two(argv, capsys):
    code, out = _run(argv, capsys)
    assert code == 2
    assert out.out == ""
    assert "error" in out.err


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as err:
        cli.main(["--format", "xml"])
    assert err.value.code == 2


def test_nan_residual_serialised_as_null(monkeypatch, capsys):
    real = cli.build_claims

    def broken(cfg):
        out = real(cfg)
        bad = frames.IdentityClaim("broken", "anchor", lambda t: 1 / 0, lambda t: 0, (0.0,))
        return out + [bad]

    monkeypatch.setattr(cli, "build_claims", broken)
    code, out = _run([], capsys)
    report = json.loads(out.out)
    last = report["claims"][-1]
    assert code == 1 and last["status"] == "error" and last["max_residual"] is None


def _trajectory(capsys, *extra):
    code, out = _run(["--command", "trajectory", *extra], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out.out)))
    return rows[0], np.array(rows[1:], dtype=float), out.out


@pytest.mark.parametrize("family", cli.TRAJECTORY_FAMILIES)
def test_trajectory_shape_and_header(family, capsys):
    header, data, raw = _trajectory(capsys, "--family", family, "--samples", "17")
    assert tuple(header) == cli.TRAJECTORY_HEADER
    assert data.shape == (17, 12)
    assert "\r" not in raw


def test_trajectory_eigenframe_starts_at_identity(capsys):
    _, data, _ = _trajectory(capsys, "--t-start", "0.25", "--t-end", "1")
    np.testing.assert_allclose(data[0, 1:9], [1, 0, 0, 0, 0, 0, 1, 0])
    np.testing.assert_allclose(data[0, 9:], [0, 0, 1])


@pytest.mark.parametrize("family", ["eigenframe", "T", "T^-1", "S", "S^-1", "V", "numerical"])
def test_trajectory_unit_bloch_vectors(family, capsys):
    _, data, _ = _trajectory(capsys, "--family", family, "--samples", "40", "--t-end", "3")
    np.testing.assert_allclose(np.linalg.norm(data[:, 9:], axis=1), 1.0, atol=1e-9 if family == "numerical" else 1e-12)


def test_trajectory_numerical_matches_time_ordered(capsys):
    from qbrach import brach, propnum
    _, data, _ = _trajectory(capsys, "--family", "numerical", "--samples", "5")
    u = propnum.schrodinger_propagate(lambda t: brach.optimal_hamiltonian(brach.OptimalQubitParams(), t), 0, 1).U
    np.testing.assert_allclose(data[-1, 1:9:2] + 1j * data[-1, 2:9:2], u.ravel(), atol=1e-8)


def test_trajectory_hyperbolic_bloch_decays(capsys):
    _, data, _ = _trajectory(capsys, "--family", "hyperbolic", "--samples", "50", "--t-end", "4")
    norms = np.linalg.norm(data[:, 9:], axis=1)
    assert norms[0] == pytest.approx(1.0)
    assert np.all(np.diff(norms) < 0)


def test_trajectory_other_formats(capsys):
    code, out = _run(["--command", "trajectory", "--format", "json", "--samples", "3"], capsys)
    doc = json.loads(out.out)
    assert doc["columns"] == list(cli.TRAJECTORY_HEADER) and len(doc["rows"]) == 3
    code, out = _run(["--command", "trajectory", "--format", "text", "--samples", "3"], capsys)
    assert len(out.out.splitlines()) == 4


def test_gates_report(capsys):
    code, out = _run(["--command", "gates"], capsys)
    assert code == 0
    best = {b["target"]: b for b in json.loads(out.out)["best"]}
    z = {m["family"]: m for m in best["pauli-z"]["matches"]}
    assert z["U"]["phi"] == pytest.approx(math.pi / 2, abs=1e-9)
    assert z["U"]["fidelity"] >= 1 - 1e-10
    x = {m["family"]: m for m in best["pauli-x"]["matches"]}
    assert x["U_V"]["phi"] == pytest.approx(math.pi / 2, abs=1e-9)
    assert x["U_V"]["fidelity"] >= 1 - 1e-10
    assert best["hadamard"]["best_fidelity"] == pytest.approx(1 / math.sqrt(2), abs=1e-9)
    assert not best["hadamard"]["reached"]
    assert best["phase-s"]["reached"]


def test_gates_refinement_off_grid(capsys):
    # with 7 samples pi/2 is not on the grid; golden-section refinement finds it
    code, out = _run(["--command", "gates", "--samples", "7"], capsys)
    best = {b["target"]: b for b in json.loads(out.out)["best"]}
    assert best["pauli-z"]["best_fidelity"] >= 1 - 1e-10
    assert best["pauli-x"]["best_fidelity"] >= 1 - 1e-10


def test_gates_text_and_csv(capsys):
    _, out = _run(["--command", "gates", "--format", "text"], capsys)
    assert out.out.splitlines()[0].startswith("pauli-x")
    _, out = _run(["--command", "gates", "--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(out.out)))
    assert rows[0] == ["target", "family", "phi", "fidelity"] and len(rows) == 1 + 4 * 6


def test_verify_csv_and_text(capsys):
    _, out = _run(["--format", "csv"], capsys)
    assert out.out.startswith("id,paper_anchor,status")
    _, out = _run(["--format", "text"], capsys)
    assert out.out.rstrip().endswith("mismatches: 0")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qbrach", "--command", "gates", "--format", "text"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "pauli-z" in res.stdout

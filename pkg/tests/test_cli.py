import json

import pytest

from reflectice.cli import main

CAL_PARAMS = '{"t": "3", "z": ["2"]}'


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_compute_wavefunction_calibration(capsys):
    code, body = run(capsys, [
        "compute-wavefunction", "--kind", "I", "--M", "1", "--N", "1",
        "--positions", "1", "--params", CAL_PARAMS])
    assert code == 0
    assert body["schema"] == "1"
    assert body["value"] == "13/2"
    assert body["positions"] == [1]


def test_compute_dwbp_calibration(capsys):
    code, body = run(capsys, [
        "compute-dwbp", "--kind", "I", "--M", "1", "--N", "1",
        "--params", CAL_PARAMS])
    assert code == 0 and body["value"] == "13/2"


def test_compute_dual_matches_library(capsys):
    from fractions import Fraction as F
    from reflectice.scalar import ParamPoint
    from reflectice.lattice import dual_wavefunction
    params = ('{"t": "3", "z": ["2", "5/2"], "alpha": ["1/2", "1/3", "1/4"],'
              ' "gamma": ["1/5", "1/6", "1/7"]}')
    code, body = run(capsys, [
        "compute-dual", "--kind", "I", "--M", "2", "--N", "2",
        "--positions", "1,2", "--params", params])
    assert code == 0
    point = ParamPoint(2, 2, F(3), [F(2), F(5, 2)],
                       [F(1, 2), F(1, 3), F(1, 4)],
                       [F(1, 5), F(1, 6), F(1, 7)])
    expect = dual_wavefunction("I", point, [1, 2])
    assert body["value"] == str(expect)


def test_compute_sp(capsys):
    code, body = run(capsys, [
        "compute-sp", "--lambda", "1", "--params", '{"z": ["2"]}'])
    assert code == 0 and body["value"] == "5/2"


def test_compute_whittaker(capsys):
    code, body = run(capsys, [
        "compute-whittaker", "--lambda", "1",
        "--params", '{"u": "1/2", "w": ["2"]}'])
    # [(z+u)z - (1/z+u)/z] / [(z^2-1)/z] at z = w^2 = 4
    assert code == 0 and body["value"] == "19/4"


def test_type2_rejects_t_and_z(capsys):
    code = main(["compute-wavefunction", "--kind", "II", "--M", "1",
                 "--N", "1", "--positions", "1", "--params", CAL_PARAMS])
    assert code == 2


def test_type1_rejects_u_and_w(capsys):
    code = main(["compute-wavefunction", "--kind", "I", "--M", "1",
                 "--N", "1", "--positions", "1",
                 "--params", '{"u": "2", "w": ["2"]}'])
    assert code == 2


def test_malformed_params_exit_2(capsys):
    code = main(["compute-dwbp", "--M", "1", "--N", "1",
                 "--params", '{"t": "3", "z": '])
    assert code == 2


def test_missing_params_exit_2(capsys):
    code = main(["compute-dwbp", "--M", "1", "--N", "1"])
    assert code == 2


def test_precondition_exit_3(capsys):
    # z = 0 is well-formed JSON but violates the spectral precondition
    code = main(["compute-wavefunction", "--M", "1", "--N", "1",
                 "--positions", "1", "--params", '{"t": "3", "z": ["0"]}'])
    assert code == 3


def test_dwbp_requires_square_exit_3(capsys):
    code = main(["compute-dwbp", "--M", "2", "--N", "1",
                 "--params", '{"t": "3", "z": ["2"]}'])
    assert code == 3


def test_bad_positions_exit_3(capsys):
    code = main(["compute-wavefunction", "--M", "2", "--N", "1",
                 "--positions", "3", "--params", '{"t": "3", "z": ["2"]}'])
    assert code == 3


def test_params_file_and_output_file(tmp_path, capsys):
    pfile = tmp_path / "params.json"
    pfile.write_text('{"t": "3", "z": ["2"]}')
    out = tmp_path / "result.json"
    code = main(["compute-dwbp", "--M", "1", "--N", "1",
                 "--params", str(pfile), "--output", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["value"] == "13/2"


def test_list_identities(capsys):
    code, body = run(capsys, ["list-identities"])
    assert code == 0
    ids = [e["identity_id"] for e in body["identities"]]
    assert "telescoping-lemma" in ids or len(ids) >= 10


def test_verify_env_seed(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("REFLECTICE_SEED", "5")
    code, body = run(capsys, ["verify", "--max-M", "2", "--max-N", "1"])
    assert code == 0
    assert body["seed"] == 5
    assert all(r["passed"] for r in body["reports"])


def test_verify_needs_seed(capsys, monkeypatch):
    monkeypatch.delenv("REFLECTICE_SEED", raising=False)
    assert main(["verify", "--max-M", "2", "--max-N", "1"]) == 2


def test_verify_reports_sorted_and_deterministic(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for out in (out1, out2):
        code = main(["verify", "--seed", "3", "--max-M", "3", "--max-N", "2",
                     "--output", str(out)])
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    ids = [r["identity_id"] for r in json.loads(out1.read_text())["reports"]]
    assert ids == sorted(ids)


def test_no_command_exit_2(capsys):
    assert main([]) == 2

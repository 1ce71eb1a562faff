import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from misoshift import fixtures as F, io
from misoshift.cli import main
from misoshift.oppoly import MatrixPolynomial

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(io.dumps(obj))
    return str(path)


def test_matrix_entries_always_pairs():
    enc = io.encode_matrix(np.array([[1.0, -0.0], [2.0, 3.0]]))
    assert enc == [[1.0, 0.0], [-0.0, 0.0], [2.0, 0.0], [3.0, 0.0]]
    assert all(isinstance(e, list) and len(e) == 2 for e in enc)


def test_bare_numbers_accepted():
    p = io.polynomial_from_json({"dim": 2, "coeffs": [[1, 0, 0, 1], [0, [1, 0], 1, 0]]})
    assert np.allclose(p(1), [[1, 1], [1, 1]])
    assert p.coeffs.dtype == np.float64


def test_complex_entries_survive():
    M = np.array([[1.0, 2 + 3j], [2 - 3j, 4.0]])
    assert np.array_equal(io.decode_matrix(io.encode_matrix(M), 2), M)


@pytest.mark.parametrize("obj", [
    F.invertible_2x2_polynomial(), F.divergent_3x3_polynomial(), MatrixPolynomial.identity(1)])
def test_polynomial_roundtrip_byte_stable(obj):
    text = io.dumps(io.polynomial_to_json(obj))
    again = io.dumps(io.polynomial_to_json(io.polynomial_from_json(json.loads(text))))
    assert text == again


@pytest.mark.parametrize("obj", [
    F.dirichlet_weights(5), F.identity_weights(2, 3, bilateral=True)])
def test_weights_roundtrip_byte_stable(obj):
    text = io.dumps(io.weights_to_json(obj))
    back = io.weights_from_json(json.loads(text))
    assert back.kind == obj.kind and back.first_index == obj.first_index
    assert io.dumps(io.weights_to_json(back)) == text


def test_malformed_documents():
    with pytest.raises(ValueError):
        io.polynomial_from_json({"dim": 2, "coeffs": [[1, 0, 0]]})
    with pytest.raises(ValueError):
        io.polynomial_from_json({"dim": 0, "coeffs": [[1]]})
    with pytest.raises(ValueError):
        io.decode_matrix([[1, 2, 3]], 1)


def test_shipped_fixtures_parse():
    for path in DATA.glob("*.json"):
        doc = io.load(path)
        assert "dim" in doc


def run(*args):
    return main([str(a) for a in args])


def test_construct_exit_codes(tmp_path, capsys):
    out = tmp_path / "res.json"
    ident = write(tmp_path, "i.json", io.polynomial_to_json(MatrixPolynomial.identity(2)))
    assert run("construct", "--input", ident, "--m", 1, "--horizon", 8, "--output", out) == 0
    rep = json.loads(out.read_text())
    assert rep["report"]["verdict"] is True
    assert np.allclose(io.weights_from_json(rep["weights"]).weights, np.eye(2))
    assert run("construct", "--input", DATA / "divergent_3x3.json", "--m", 4, "--bilateral") == 2
    assert run("construct", "--input", DATA / "invertible_2x2.json", "--m", 3, "--bilateral") == 0


def test_verify_exit_codes(tmp_path):
    ident = write(tmp_path, "w.json", io.weights_to_json(F.identity_weights(2, 6)))
    assert run("verify", "--input", ident, "--m", 1) == 0
    assert run("verify", "--input", DATA / "dirichlet_weights.json", "--m", 1) == 4
    assert run("verify", "--input", DATA / "dirichlet_weights.json", "--m", 2) == 0


def test_complete_exit_codes():
    for name in ("prefix_scalar", "prefix_nonhermitian", "prefix_noncommuting"):
        assert run("complete", "--input", DATA / f"{name}.json", "--horizon", 16) == 0
    assert run("complete", "--input", DATA / "prefix_singular.json") == 2


def test_analyze_reports(tmp_path, capsys):
    out = tmp_path / "a.json"
    assert run("analyze", "--input", DATA / "invertible_2x2.json", "--m", 3, "--bilateral",
               "--horizon", 12, "--output", out) == 0
    rep = json.loads(out.read_text())
    assert rep["adjoint_m_isometric"] is True
    inv = io.polynomial_from_json(rep["inverse_polynomial"])
    assert np.allclose(inv.coeffs, F.invertible_2x2_inverse().coeffs, atol=1e-12)
    assert rep["commutativity"]["status"] == "agree"
    ident = write(tmp_path, "i.json", io.polynomial_to_json(MatrixPolynomial.identity(2)))
    assert run("analyze", "--input", ident, "--m", 1, "--horizon", 4) == 0
    capsys.readouterr()
    assert run("analyze", "--input", DATA / "dirichlet_weights.json", "--m", 2,
               "--format", "json") == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["adjoint_m_isometric"] is False


def test_invert_poly():
    assert run("invert-poly", "--input", DATA / "invertible_2x2.json", "--m", 3) == 0
    assert run("invert-poly", "--input", DATA / "divergent_3x3.json") == 4


def test_io_and_argument_errors(tmp_path):
    assert run("verify", "--input", tmp_path / "missing.json", "--m", 1) == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("construct", "--input", bad) == 1
    assert run("verify", "--input", DATA / "dirichlet_weights.json", "--m", 3, "--horizon", 2) == 2
    assert run("verify", "--input", DATA / "dirichlet_weights.json", "--m", 1,
               "--tol-scale", 0) == 1


def test_exit_codes_deterministic():
    codes = {run("verify", "--input", DATA / "dirichlet_weights.json", "--m", 1) for _ in range(3)}
    assert codes == {4}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "misoshift", "verify", "--input",
                           str(DATA / "dirichlet_weights.json"), "--m", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "m-isometric" in proc.stdout

import json
import math

import numpy as np
import pytest

from design_uncertainty import save_design
from design_uncertainty.cli import main
from design_uncertainty.designs import QuantumDesign


def write_bell_state(path):
    phi = np.zeros(4)
    phi[0] = phi[3] = 1 / math.sqrt(2)
    mat = np.outer(phi, phi)
    payload = {"dims": [2, 2],
               "matrix": [[[float(x), 0.0] for x in row] for row in mat]}
    path.write_text(json.dumps(payload))


def write_product_state(path):
    mat = np.kron(np.diag([1.0, 0.0]), np.eye(2) / 2)
    payload = {"dims": [2, 2],
               "matrix": [[[float(x), 0.0] for x in row] for row in mat]}
    path.write_text(json.dumps(payload))


class TestVerify:
    def test_builtin_pass(self, capsys):
        assert main(["verify", "--design", "octahedron", "--t", "3"]) == 0
        assert capsys.readouterr().out.strip().endswith("PASS")

    def test_octahedron_fails_t4(self, capsys):
        assert main(["verify", "--design", "octahedron", "--t", "4"]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out
        assert "0.00833333333333" in out  # 1/120 frame residual

    def test_operator_method(self):
        assert main(["verify", "--design", "icosahedron", "--t", "5",
                     "--method", "operator"]) == 0

    def test_missing_file_exit_2(self, capsys):
        assert main(["verify", "--design", "no_such.json"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_design_file_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"dimension": 2, "strength": 1,
                                   "vectors": [[[1.0, 0.0], [0.0, 0.0]],
                                               [[1.0, 0.0], [1.0, 0.0]]]}))
        assert main(["verify", "--design", str(bad), "--t", "2"]) == 2
        assert "vector" in capsys.readouterr().err

    def test_saved_design_round_trip(self, tmp_path, octahedron):
        path = tmp_path / "oct.json"
        save_design(octahedron, path)
        assert main(["verify", "--design", str(path), "--t", "3"]) == 0


class TestSweep:
    def test_csv_endpoints_and_header(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(["sweep", "--design", "octahedron", "--points", "50",
                     "--alphas", "6", "--output", str(out)]) == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == ("beta_bar,bound_prior,bound_prop1,"
                            "bound_prop1_nr,bound_prop2_alpha6")
        first = [float(x) for x in lines[1].split(",")]
        assert first[0] == pytest.approx(1 / 36, abs=1e-12)
        assert first[2] == pytest.approx(math.log(6), abs=1e-10)
        last = [float(x) for x in lines[-1].split(",")]
        assert last[0] == pytest.approx(1 / 18, abs=1e-12)

    def test_row_ordering_invariant(self, tmp_path):
        out = tmp_path / "sweep.csv"
        main(["sweep", "--design", "icosidodecahedron", "--points", "100",
              "--output", str(out)])
        for line in out.read_text().strip().splitlines()[1:]:
            _, prior, prop1, nr = (float(x) for x in line.split(","))
            assert prop1 >= nr - 1e-12 >= prior - 2e-12

    def test_deterministic_output(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["sweep", "--design", "icosahedron", "--points", "80",
                "--alphas", "5,10"]
        main(args + ["--output", str(a)])
        main(args + ["--output", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_json_format(self, capsys):
        assert main(["sweep", "--design", "octahedron", "--points", "5",
                     "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert len(rows) == 5 and "bound_prop1" in rows[0]

    def test_mub_grouping(self, tmp_path):
        out = tmp_path / "mub.csv"
        assert main(["sweep", "--design", "octahedron", "--grouping", "mub",
                     "--points", "20", "--output", str(out)]) == 0
        first = out.read_text().strip().splitlines()[1].split(",")
        assert float(first[0]) == pytest.approx(0.25, abs=1e-12)


class TestAudit:
    def test_zero_violations(self, capsys):
        assert main(["audit", "--design", "octahedron", "--samples", "50",
                     "--seed", "7", "--alphas", "3,6,inf"]) == 0
        out = capsys.readouterr().out
        assert "violations: 0" in out
        assert "saturation events: 1" in out  # forced maximally mixed state

    def test_grouped_audit(self, capsys):
        assert main(["audit", "--design", "octahedron", "--grouping", "mub",
                     "--samples", "30", "--seed", "1"]) == 0
        assert "violations: 0" in capsys.readouterr().out


class TestSteering:
    def test_entangled_state_reports_violation(self, tmp_path, capsys):
        state = tmp_path / "bell.json"
        write_bell_state(state)
        assert main(["steering", "--state", str(state), "--design",
                     "octahedron", "--grouping", "mub"]) == 0
        out = capsys.readouterr().out
        assert "satisfied=False" in out
        assert "steering witnessed" in out

    def test_product_state_satisfied(self, tmp_path, capsys):
        state = tmp_path / "prod.json"
        write_product_state(state)
        assert main(["steering", "--state", str(state), "--design",
                     "octahedron", "--grouping", "mub", "--alpha", "3"]) == 0
        out = capsys.readouterr().out
        assert "satisfied=False" not in out

    def test_malformed_state_exit_2(self, tmp_path, capsys):
        state = tmp_path / "bad.json"
        state.write_text(json.dumps({"dims": [2, 2],
                                     "matrix": [[[1.0, 0.0]] * 2] * 2}))
        assert main(["steering", "--state", str(state),
                     "--design", "octahedron"]) == 2
        assert "error:" in capsys.readouterr().err

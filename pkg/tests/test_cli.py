"""CLI surface: parsing, file formats, round trips, exit codes."""

import json
import math
import os

import numpy as np
import pytest

from diracbeams.cli import main, parse_angle, parse_spin


def run_cli(args):
    return main(args)


def read_csv(path):
    meta, header, rows = {}, None, []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("#"):
                if "=" in line:
                    key, _, val = line[1:].partition("=")
                    meta[key.strip()] = val.strip()
                continue
            if header is None:
                header = line.split(",")
            else:
                rows.append([float(v) for v in line.split(",")])
    return meta, header, np.array(rows)


class TestParsing:
    def test_angles(self):
        assert parse_angle("45deg") == pytest.approx(math.pi / 4)
        assert parse_angle("0.5rad") == 0.5
        assert parse_angle("0.5") == 0.5

    def test_spins(self):
        assert parse_spin("+") == 0.5
        assert parse_spin("-") == -0.5
        assert parse_spin("0.5") == 0.5
        assert parse_spin("-0.5") == -0.5

    def test_bad_values_exit_1(self, tmp_path):
        assert run_cli(["expect", "--s", "up"]) == 1
        assert run_cli(["expect", "--theta0", "95deg"]) == 1
        assert run_cli(["profile", "--points", "1",
                        "--out", str(tmp_path / "x.csv")]) == 1
        assert run_cli(["nonsense"]) == 1


class TestProfile:
    def test_central_value_down_spin(self, tmp_path):
        out = tmp_path / "prof.csv"
        rc = run_cli(["profile", "--p", "2.4", "--theta0", "45deg",
                      "--ell", "1", "--s", "-0.5", "--points", "5",
                      "--xi-max", "4", "--out", str(out)])
        assert rc == 0
        meta, header, rows = read_csv(out)
        assert header == ["xi", "rho", "j_z", "j_phi"]
        assert rows[0, 0] == 0.0
        # rho(0) = delta / 2 = 2/13
        assert rows[0, 1] == pytest.approx(2.0 / 13.0, abs=1e-14)

    def test_central_value_up_spin(self, tmp_path):
        out = tmp_path / "prof.csv"
        run_cli(["profile", "--ell", "1", "--s", "+0.5", "--points", "3",
                 "--xi-max", "4", "--out", str(out)])
        _, _, rows = read_csv(out)
        assert rows[0, 1] == 0.0

    def test_pair_mode_curves_differ(self, tmp_path):
        out = tmp_path / "pair.csv"
        rc = run_cli(["profile", "--ell", "3", "--pair", "--points", "200",
                      "--xi-max", "20", "--out", str(out)])
        assert rc == 0
        _, header, rows = read_csv(out)
        assert "rho_plus" in header and "rho_minus" in header
        rho_p = rows[:, header.index("rho_plus")]
        rho_m = rows[:, header.index("rho_minus")]
        assert np.abs(rho_p - rho_m).max() > 1e-3

    def test_csv_roundtrip_17_digits(self, tmp_path):
        out = tmp_path / "prof.csv"
        run_cli(["profile", "--points", "50", "--out", str(out)])
        _, _, rows = read_csv(out)
        from diracbeams.beams import BeamConfig, density_profile
        cfg = BeamConfig(p=2.4, theta0=math.pi / 4, ell=1, s=0.5)
        prof = density_profile(cfg, np.linspace(0, 20, 50))
        assert np.array_equal(rows[:, 1], prof.rho)


class TestExpect:
    def test_reference_table(self, tmp_path):
        out = tmp_path / "e.json"
        rc = run_cli(["expect", "--p", "2.4", "--theta0", "45deg",
                      "--ell", "3", "--s", "+0.5", "--format", "json",
                      "--out", str(out)])
        assert rc == 0
        doc = json.loads(out.read_text())
        res = doc["results"]
        assert res["L_z"] == pytest.approx(3.1538461538461537, abs=1e-15)
        assert res["S_z"] == pytest.approx(0.34615384615384615, abs=1e-15)
        assert res["M_z"] == pytest.approx(3.8461538461538463, abs=1e-15)
        assert abs(res["L_z_delta"]) <= 1e-10
        assert abs(res["S_z_delta"]) <= 1e-10

    def test_conservation_in_emitted_table(self, tmp_path):
        out = tmp_path / "e.json"
        run_cli(["expect", "--ell", "2", "--s", "-", "--format", "json",
                 "--out", str(out)])
        res = json.loads(out.read_text())["results"]
        assert abs(res["L_z"] + res["S_z"] - (2 - 0.5)) <= 1e-14

    def test_paraxial_exact(self, tmp_path):
        out = tmp_path / "e.json"
        run_cli(["expect", "--theta0", "0", "--ell", "4", "--s", "+",
                 "--format", "json", "--out", str(out)])
        res = json.loads(out.read_text())["results"]
        assert res["L_z"] == 4.0
        assert res["S_z"] == 0.5

    def test_json_roundtrip_bit_exact(self, tmp_path):
        out = tmp_path / "e.json"
        run_cli(["expect", "--p", "2.4", "--theta0", "45deg", "--ell", "3",
                 "--s", "+", "--format", "json", "--out", str(out)])
        doc1 = json.loads(out.read_text())
        # serialize again: repr-based floats reproduce bit-exactly
        assert json.loads(json.dumps(doc1)) == doc1
        assert doc1["params"]["p_over_m"] == 2.4
        assert doc1["params"]["theta0"] == math.pi / 4


class TestValidate:
    def test_quick_passes_exit_0(self, tmp_path):
        out = tmp_path / "v.json"
        assert run_cli(["validate", "--quick", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["results"]["passed"] is True
        assert all(c["passed"] for c in doc["checks"])
        for c in doc["checks"]:
            assert {"name", "value", "threshold", "comparison"} <= set(c)

    def test_deterministic(self, tmp_path):
        out1, out2 = tmp_path / "v1.json", tmp_path / "v2.json"
        run_cli(["validate", "--quick", "--out", str(out1)])
        run_cli(["validate", "--quick", "--out", str(out2)])
        assert json.loads(out1.read_text()) == json.loads(out2.read_text())

    def test_injected_fault_caught_exit_2(self, tmp_path):
        out = tmp_path / "v.json"
        rc = run_cli(["validate", "--quick", "--inject-fault", "1.01",
                      "--out", str(out)])
        assert rc == 2
        doc = json.loads(out.read_text())
        failed = [c["name"] for c in doc["checks"] if not c["passed"]]
        assert "field_closed_vs_quadrature" in failed


class TestSweep:
    def test_delta_monotone_in_theta(self, tmp_path):
        out = tmp_path / "s.csv"
        rc = run_cli(["sweep", "--p-min", "2.4", "--p-max", "2.4",
                      "--p-points", "1", "--theta0-points", "12",
                      "--out", str(out)])
        assert rc == 0
        _, header, rows = read_csv(out)
        delta = rows[:, header.index("delta")]
        assert np.all(np.diff(delta) > 0.0)

    def test_delta_saturates_in_p(self, tmp_path):
        out = tmp_path / "s.csv"
        run_cli(["sweep", "--p-min", "0", "--p-max", "10", "--p-points", "6",
                 "--theta0-min", "45deg", "--theta0-max", "45deg",
                 "--theta0-points", "1", "--out", str(out)])
        _, header, rows = read_csv(out)
        delta = rows[:, header.index("delta")]
        assert np.all(np.diff(delta) > 0.0)
        assert delta[-1] < 0.5
        assert delta[-1] > 0.4

    def test_corner_matches_expect_bit_exact(self, tmp_path):
        sweep_out = tmp_path / "s.json"
        run_cli(["sweep", "--ell", "1", "--s", "+", "--p-min", "2.4",
                 "--p-max", "2.4", "--p-points", "1",
                 "--theta0-min", "45deg", "--theta0-max", "45deg",
                 "--theta0-points", "1", "--format", "json",
                 "--out", str(sweep_out)])
        doc = json.loads(sweep_out.read_text())
        cols = doc["results"]["columns"]
        row = doc["results"]["rows"][0]
        exp_out = tmp_path / "e.json"
        run_cli(["expect", "--p", "2.4", "--theta0", "45deg", "--ell", "1",
                 "--s", "+", "--format", "json", "--out", str(exp_out)])
        res = json.loads(exp_out.read_text())["results"]
        assert row[cols.index("L_z")] == res["L_z"]
        assert row[cols.index("S_z")] == res["S_z"]
        assert row[cols.index("M_z")] == res["M_z"]


class TestLinear:
    def test_linear_subcommand(self, tmp_path):
        out = tmp_path / "lin.json"
        rc = run_cli(["linear", "--ell", "1", "--s", "+",
                      "--widths", "30,45,70", "--radial-nodes", "2000",
                      "--format", "json", "--out", str(out)])
        assert rc == 0
        res = json.loads(out.read_text())["results"]
        assert res["L_z_bar"] == pytest.approx(1.0 + 2.0 / 13.0, abs=2e-3)
        assert "M_z_bar_comparison" in res
        assert abs(res["L_z_bar"] + res["S_z_bar"] - 1.5) <= 1e-12

    def test_bad_widths_exit_1(self):
        assert run_cli(["linear", "--widths", "abc"]) == 1
        assert run_cli(["linear", "--widths", "50,40"]) == 1


class TestIO:
    def test_unwritable_path_exit_3(self):
        assert run_cli(["expect", "--out", "/nonexistent-dir/x.csv"]) == 3

    def test_stdout_default(self, capsys):
        assert run_cli(["expect", "--theta0", "0"]) == 0
        out = capsys.readouterr().out
        assert "L_z" in out

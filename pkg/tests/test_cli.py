"""CLI tests: exit codes, JSON/CSV/SVG emission, determinism."""

import json

from trisectrix.cli import CSV_HEADER, main
from trisectrix.geom import Angle, Point2, SQRT3
from trisectrix.locus import LocusParams, TrisectionResult, verify_trisection


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTrisectCommand:
    def test_quarter_turn_json(self, capsys):
        code, out, _ = run(capsys, "trisect", "--angle-deg", "90", "--fold", "1")
        assert code == 0
        payload = json.loads(out)
        assert abs(payload["theta_deg"] - 30.0) <= 1e-10
        assert abs(payload["b_star"] - SQRT3) <= 1e-12
        assert abs(payload["unit_length"] - 2.0) <= 1e-12
        assert abs(payload["n_point"]["x"]) <= 1e-12
        assert abs(payload["n_point"]["y"] - 2.0) <= 1e-12
        assert abs(payload["sin_theta_normalized"] - 0.5) <= 1e-12
        for key in ("three_theta_deg", "iterations", "angle_residual_rad",
                    "verification"):
            assert key in payload

    def test_sixty_degrees(self, capsys):
        code, out, _ = run(capsys, "trisect", "--angle-deg", "60", "--fold", "1")
        assert code == 0
        payload = json.loads(out)
        assert abs(payload["theta_deg"] - 20.0) <= 1e-10

    def test_out_of_range_exits_3(self, capsys):
        code, _, err = run(capsys, "trisect", "--angle-deg", "120", "--fold", "1")
        assert code == 3
        assert "domain error" in err

    def test_missing_angle_exits_2(self, capsys):
        code, _, err = run(capsys, "trisect", "--fold", "1")
        assert code == 2

    def test_bad_fold_exits_2(self, capsys):
        code, _, _ = run(capsys, "trisect", "--angle-deg", "60", "--fold", "-1")
        assert code == 2

    def test_wrong_format_exits_2(self, capsys):
        code, _, _ = run(capsys, "trisect", "--angle-deg", "60", "--format", "csv")
        assert code == 2

    def test_unknown_flag_exits_2(self, capsys):
        assert main(["trisect", "--bogus"]) == 2

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "trisect", "--angle-deg", "60", "--format", "text")
        assert code == 0
        assert "trisected" in out

    def test_json_round_trips_through_verifier(self, capsys):
        code, out, _ = run(capsys, "trisect", "--angle-deg", "37.5", "--fold", "0.8")
        assert code == 0
        payload = json.loads(out)
        rebuilt = TrisectionResult(
            three_theta=Angle(payload["three_theta_rad"]),
            theta=Angle(payload["theta_rad"]),
            b_star=payload["b_star"],
            unit_length=payload["unit_length"],
            n_point=Point2(payload["n_point"]["x"], payload["n_point"]["y"]),
            iterations=payload["iterations"],
            final_bracket_width=payload["final_bracket_width"],
            angle_residual=payload["angle_residual_rad"],
        )
        report = verify_trisection(rebuilt, LocusParams(payload["fold_a"]))
        for name, value in payload["verification"].items():
            assert abs(report.residuals[name] - value) <= 1e-15


class TestLocusCommand:
    def test_header_and_rows(self, capsys):
        code, out, _ = run(capsys, "locus", "--fold", "1", "--samples", "3",
                           "--b-max", "10")
        assert code == 0
        lines = out.rstrip("\n").split("\n")
        assert lines[0] == CSV_HEADER
        assert len(lines) == 4
        first = [float(v) for v in lines[1].split(",")]
        assert abs(first[1]) <= 1e-12           # x = 0 at the curve start
        assert abs(first[2] - 2.0) <= 1e-12     # y = 2a

    def test_rows_satisfy_triple_angle(self, capsys):
        code, out, _ = run(capsys, "locus", "--fold", "0.6", "--samples", "50")
        assert code == 0
        rows = [line.split(",") for line in out.rstrip("\n").split("\n")[1:]]
        b_values = []
        for row in rows:
            b, q_deg, j_deg = float(row[0]), float(row[3]), float(row[4])
            b_values.append(b)
            assert abs(q_deg - 3.0 * j_deg) <= 1e-9
        assert b_values == sorted(b_values)

    def test_single_sample_exits_2(self, capsys):
        code, _, _ = run(capsys, "locus", "--fold", "1", "--samples", "1")
        assert code == 2

    def test_below_curve_start_exits_3(self, capsys):
        code, _, _ = run(capsys, "locus", "--fold", "1", "--b-min", "1.0")
        assert code == 3

    def test_byte_identical_runs(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["locus", "--fold", "1", "--samples", "40",
                     "--output", str(a)]) == 0
        assert main(["locus", "--fold", "1", "--samples", "40",
                     "--output", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestOrigamiCommand:
    def test_sixty_degrees_json(self, capsys):
        code, out, _ = run(capsys, "origami", "--angle-deg", "60")
        assert code == 0
        payload = json.loads(out)
        for key in ("alpha_deg", "beta_deg", "gamma_deg"):
            assert abs(payload[key] - 20.0) <= 1e-10
        assert max(abs(v) for v in payload["residuals"].values()) <= 1e-12
        assert "cp_vs_sin_theta" in payload["informational"]

    def test_quarter_turn_exits_3(self, capsys):
        code, _, _ = run(capsys, "origami", "--angle-deg", "90")
        assert code == 3

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "origami", "--angle-deg", "45",
                           "--format", "text")
        assert code == 0
        assert "alpha = beta = gamma" in out


class TestVerifyCommand:
    def test_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--tol", "1e-10")
        assert code == 0
        assert "result: PASS" in out

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "verify", "--tol", "1e-10", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert payload["angles_checked"] == 90
        assert payload["worst_residuals"]

    def test_unreachable_tolerance_fails(self, capsys):
        # Below the floating-point floor the solver cannot converge; the
        # sweep must report failure, not pretend.
        code, out, _ = run(capsys, "verify", "--tol", "1e-16")
        assert code == 1
        assert "FAIL" in out


class TestRenderCommand:
    def test_solved_diagram_structure(self, capsys, tmp_path):
        path = tmp_path / "fig.svg"
        assert main(["render", "--angle-deg", "75", "--fold", "1",
                     "--output", str(path)]) == 0
        svg = path.read_text()
        assert svg.count("<circle ") == 2
        assert svg.count("<polyline ") == 1
        assert ">N</text>" in svg

    def test_unsolved_diagram_labels_q(self, capsys, tmp_path):
        path = tmp_path / "fig.svg"
        assert main(["render", "--fold", "1", "--output", str(path)]) == 0
        svg = path.read_text()
        assert ">Q</text>" in svg and ">N</text>" not in svg

    def test_byte_identical_runs(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        args = ["render", "--angle-deg", "30", "--fold", "0.5", "--samples", "64"]
        assert main(args + ["--output", str(a)]) == 0
        assert main(args + ["--output", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_layer_flags(self, capsys, tmp_path):
        path = tmp_path / "bare.svg"
        assert main(["render", "--angle-deg", "75", "--no-labels",
                     "--output", str(path)]) == 0
        assert "<text" not in path.read_text()

    def test_tiny_canvas_exits_2(self, capsys):
        code, _, _ = run(capsys, "render", "--angle-deg", "75", "--width", "32")
        assert code == 2


class TestExitCodes:
    def test_unwritable_output_exits_5(self, capsys, tmp_path):
        target = tmp_path / "missing-dir" / "out.csv"
        code, _, err = run(capsys, "locus", "--fold", "1",
                           "--output", str(target))
        assert code == 5
        assert "i/o error" in err

    def test_convergence_failure_exits_4(self, capsys):
        code, _, err = run(capsys, "trisect", "--angle-deg", "47",
                           "--tol", "1e-15", "--max-iter", "2")
        assert code == 4
        assert "convergence" in err

    def test_bad_max_iter_exits_2(self, capsys):
        code, _, _ = run(capsys, "trisect", "--angle-deg", "47",
                         "--max-iter", "0")
        assert code == 2

    def test_help_exits_0(self, capsys):
        assert main(["--help"]) == 0

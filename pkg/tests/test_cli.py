"""Command-line surface: commands, exit codes, artifacts."""

import json

import pytest

from afm_transducer.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    lines = [l for l in text.strip().split("\n") if not l.startswith("#")]
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
    return rows


class TestEfficiencyCommand:
    def test_headline_value(self, capsys):
        code, out, _ = run_cli(capsys, "efficiency", "--preset", "mnf2-easyaxis-20GHz")
        assert code == 0
        row = parse_csv(out)[0]
        assert 3e-10 < float(row["eta"]) < 3e-9
        assert row["preset"] == "mnf2-easyaxis-20GHz"

    def test_config_file_with_override(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "preset = mnf2-easyaxis-20GHz\ncommand = efficiency\n"
            "gamma_beta_hz = 1e9\n"
        )
        code, out, _ = run_cli(capsys, "efficiency", "--config", str(cfg))
        assert code == 0
        # both cooperativities fall as 1/gamma, so tenfold linewidth
        # costs two orders of magnitude
        assert float(parse_csv(out)[0]["eta"]) == pytest.approx(7.15e-12, rel=0.01)

    def test_output_file_and_json(self, capsys, tmp_path):
        out_path = tmp_path / "result.json"
        code, out, _ = run_cli(
            capsys, "efficiency", "--preset", "mnf2-nocavity-20GHz",
            "--format", "json", "--output", str(out_path),
        )
        assert code == 0 and out == ""
        payload = json.loads(out_path.read_bytes())
        eta = payload["rows"][0][payload["columns"].index("eta")]
        assert 3e-20 < eta < 3e-19


class TestModesCommand:
    def test_zero_field_degenerate(self, capsys):
        code, out, _ = run_cli(capsys, "modes", "--preset", "mnf2-easyaxis-20GHz")
        assert code == 0
        row = parse_csv(out)[0]
        assert row["omega_alpha_hz"] == row["omega_beta_hz"]
        assert float(row["omega_alpha_hz"]) == pytest.approx(1.6703e12, rel=1e-4)
        assert float(row["kappa_alpha_effective"]) == 0.5

    def test_spin_flop_domain_error(self, capsys):
        code, out, err = run_cli(
            capsys, "modes", "--preset", "mnf2-easyaxis-20GHz", "--set", "b0_t=100",
        )
        assert code == 3
        error = json.loads(err)
        assert error["error"] == "SpinFlopError"


class TestCouplingsCommand:
    def test_pipeline_values(self, capsys):
        code, out, _ = run_cli(capsys, "couplings", "--preset", "mnf2-easyaxis-20GHz")
        assert code == 0
        row = parse_csv(out)[0]
        assert float(row["g_beta_hz"]) == pytest.approx(3.35e6, rel=1e-3)
        assert float(row["zeta_beta_hz"]) == pytest.approx(40e3, rel=1e-9)


class TestSweepCommand:
    def test_faraday_endpoints(self, capsys, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text(
            "preset = mnf2-easyaxis-20GHz\ncommand = sweep\n"
            "sweep_variable = faraday-angle\nsweep_lo = 0.01\nsweep_hi = 1\n"
            "sweep_count = 41\n"
        )
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run_cli(
            capsys, "sweep", "--config", str(cfg), "--output", str(out_path)
        )
        assert code == 0
        rows = parse_csv(out_path.read_text())
        assert len(rows) == 41
        assert 3e-14 < float(rows[0]["eta"]) < 3e-13
        assert 3e-10 < float(rows[-1]["eta"]) < 3e-9

    def test_rerun_byte_identical(self, capsys, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text(
            "preset = mnf2-nocavity-20GHz\ncommand = sweep\n"
            "sweep_variable = thickness\nsweep_lo = 1e-5\nsweep_hi = 1e-3\n"
            "sweep_count = 11\n"
        )
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        assert run_cli(capsys, "sweep", "--config", str(cfg), "--output", str(first))[0] == 0
        assert run_cli(capsys, "sweep", "--config", str(cfg), "--output", str(second))[0] == 0
        assert first.read_bytes() == second.read_bytes()

    def test_sweep_without_block_rejected(self, capsys):
        code, _, err = run_cli(capsys, "sweep", "--preset", "mnf2-easyaxis-20GHz")
        assert code == 2
        assert json.loads(err)["error"] == "ConfigError"


class TestValidateCommand:
    @pytest.mark.parametrize("preset", [
        "mnf2-easyaxis-20GHz", "mnf2-degenerate-250GHz", "mnf2-nocavity-20GHz",
    ])
    def test_presets_pass(self, capsys, preset):
        code, out, _ = run_cli(capsys, "validate", "--preset", preset)
        assert code == 0
        assert all(row["passed"] == "true" for row in parse_csv(out))

    def test_invariant_failure_exits_4(self, capsys):
        code, out, _ = run_cli(
            capsys, "validate", "--preset", "mnf2-easyaxis-20GHz", "--set", "b0_t=100",
        )
        assert code == 4
        rows = parse_csv(out)
        failed = [r for r in rows if r["passed"] == "false"]
        assert any("spin-flop" in r["check"] for r in failed)


class TestErrorPaths:
    def test_unknown_preset(self, capsys):
        code, _, err = run_cli(capsys, "efficiency", "--preset", "bogus")
        assert code == 2
        assert "bogus" in json.loads(err)["message"]

    def test_config_error_carries_line(self, capsys, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("preset = mnf2-easyaxis-20GHz\ngamma_beta_hz = -1 GHz\n")
        code, _, err = run_cli(capsys, "efficiency", "--config", str(cfg))
        assert code == 2
        assert json.loads(err)["line"] == 2

    def test_missing_inputs(self, capsys):
        code, _, err = run_cli(capsys, "efficiency")
        assert code == 2
        assert "either --config or --preset" in json.loads(err)["message"]

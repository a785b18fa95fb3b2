import json

import pytest

from aerolink.cli import main
from aerolink.output import RECORD_FIELDS


def test_paper_figs(tmp_path):
    assert main(["paper-figs", "--out", str(tmp_path / "d")]) == 0
    names = sorted(p.name for p in (tmp_path / "d").iterdir())
    assert names == sorted(f"{w}.{ext}" for w in ("los", "pathloss", "gain", "rssi") for ext in ("svg", "csv"))


def test_sweep_missing_config(tmp_path, capsys):
    assert main(["sweep", "--config", str(tmp_path / "missing.json"), "--out", "x.csv"]) == 1
    assert "missing.json" in capsys.readouterr().err


def test_sweep_from_config(tmp_path):
    cfg = tmp_path / "s.json"
    cfg.write_text(json.dumps({
        "schema_version": 1,
        "heights": {"start_m": 5, "stop_m": 50, "step_m": 5},
        "links": [{"kind": "tn", "ground_range_km": 1.0}, {"kind": "ntn", "elevation_deg": 30}],
        "output": {"figures": ["rssi"]},
    }))
    out = tmp_path / "r.csv"
    assert main(["sweep", "--config", str(cfg), "--out", str(out), "--figures", str(tmp_path / "f")]) == 0
    assert len(out.read_text().splitlines()) == 1 + 2 * 10
    assert [p.name for p in (tmp_path / "f").iterdir()] == ["rssi.svg"]


def test_sweep_invalid_config_lists_fields(tmp_path, capsys):
    cfg = tmp_path / "s.json"
    cfg.write_text(json.dumps({"schema_version": 1, "environment": {"gamma_m": 0, "alpha": 3}}))
    assert main(["sweep", "--config", str(cfg), "--out", str(tmp_path / "o.csv")]) == 1
    err = capsys.readouterr().err
    assert "gamma_m" in err and "alpha" in err
    assert not (tmp_path / "o.csv").exists()


def test_sweep_band_warning_goes_to_stderr(tmp_path, capsys):
    cfg = tmp_path / "s.json"
    cfg.write_text(json.dumps({"schema_version": 1, "heights_m": [10],
                               "links": [{"kind": "ntn", "elevation_deg": 90, "carrier_frequency_GHz": 0.85}]}))
    assert main(["sweep", "--config", str(cfg), "--out", str(tmp_path / "o.csv")]) == 0
    captured = capsys.readouterr()
    assert "warning" in captured.err and captured.out == ""


def test_sweep_write_failure_is_exit_2(tmp_path):
    cfg = tmp_path / "s.json"
    cfg.write_text(json.dumps({"schema_version": 1, "heights_m": [10]}))
    assert main(["sweep", "--config", str(cfg), "--out", str(tmp_path / "no" / "such" / "o.csv")]) == 2


def test_point_ntn_nadir(capsys):
    assert main(["point", "--link", "ntn", "--elevation-deg", "90", "--height-m", "100"]) == 0
    header, row = capsys.readouterr().out.splitlines()
    rec = dict(zip(header.split(","), row.split(",")))
    assert list(rec) == list(RECORD_FIELDS)
    assert float(rec["rssi_dBm"]) == pytest.approx(-91.0, abs=0.1)
    assert rec["covered"] == "true"


def test_point_overrides(capsys):
    assert main(["point", "--link", "ntn", "--elevation-deg", "10", "--height-m", "100",
                 "--rx-gain-dbi", "40", "--label", "boosted"]) == 0
    row = capsys.readouterr().out.splitlines()[1].split(",")
    assert row[0] == "boosted" and row[-1] == "true"


@pytest.mark.parametrize(
    "argv",
    [
        ["point", "--link", "tn", "--elevation-deg", "30", "--height-m", "10"],
        ["point", "--link", "ntn", "--distance-km", "1", "--height-m", "10"],
        ["point", "--link", "tn", "--distance-km", "1", "--elevation-deg", "3", "--height-m", "10"],
        ["point", "--link", "ntn", "--elevation-deg", "30", "--height-m", "10", "--etilt-deg", "3"],
        ["point", "--link", "ntn", "--elevation-deg", "0", "--height-m", "10"],
        ["point", "--link", "tn", "--distance-km", "1", "--height-m", "-3"],
        ["point", "--link", "tn", "--distance-km", "1", "--height-m", "10", "--gamma-m", "0"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    assert main(argv) == 1
    assert capsys.readouterr().err


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "aerolink", "point", "--link", "tn",
                           "--distance-km", "0.5", "--height-m", "40"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("link_label,")

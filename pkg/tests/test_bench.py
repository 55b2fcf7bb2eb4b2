from dataclasses import replace

import pandas as pd
import pytest

from scripts.cli.watermark_cli import main
from scripts.evaluation_engine import build_robustness_report
from scripts.evaluation_engine.bench_config import load_bench_config, parse_bench_config
from scripts.evaluation_engine.build_robustness_report import format_number, run_bench
from scripts.utilities.config import REPORT_COLUMNS, TABLE1_ATTACKS


BENCH_ATTACKS = (
    "none",
    "jpeg_like:q=30",
    "pixelate:b=2",
    "gamma:g=0.6",
    "collusion:copies=2,alpha=0.05,seed=3",
)


def write_config(directory, attacks=BENCH_ATTACKS, extra=""):
    lines = [
        "# robustness bench",
        "host = host.pgm",
        "watermark = watermark.pgm",
        "alpha = 0.1",
        *(f"attack = {text}" for text in attacks),
        "output_dir = bench",
        extra,
    ]
    path = directory / "bench.txt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


# -----------------------------------------------------------------------------
# Config
# -----------------------------------------------------------------------------

def test_config_resolves_paths_and_rosters(tmp_path):
    config = parse_bench_config(
        "host=images/h.pgm\nwatermark=/abs/w.pgm\nattack=@table1\nattack=hist_eq\nformat=md\nworkers=3\n",
        base_dir=tmp_path,
    )

    assert config.host == tmp_path / "images" / "h.pgm"
    assert str(config.watermark) == "/abs/w.pgm"
    assert len(config.attacks) == len(TABLE1_ATTACKS) + 1
    assert config.attacks[-1].kind == "hist_eq"
    assert config.report_format == "markdown"
    assert config.workers == 3


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("host=a.pgm\nwatermark=b.pgm\n", "no attacks configured"),
        ("host=a.pgm\nwatermark=b.pgm\nalpha=0\nattack=none\n", "alpha must be > 0"),
        ("host=a.pgm\nattack=none\n", "missing required config keys: watermark"),
        ("host=a.pgm\nwatermark=b.pgm\nseed=3\nattack=none\n", "unknown config key"),
        ("host=a.pgm\nwatermark=b.pgm\nattack=@table9\n", "unknown attack roster"),
        ("host=a.pgm\nwatermark=b.pgm\nattack=jpeg_like:q=0\n", "q out of domain"),
        ("host=a.pgm\nwatermark=b.pgm\nformat=xml\nattack=none\n", "unknown report format"),
    ],
)
def test_config_errors(tmp_path, text, message):
    with pytest.raises(ValueError, match=message):
        parse_bench_config(text, base_dir=tmp_path)


def test_missing_config_file(tmp_path):
    with pytest.raises(FileNotFoundError, match="bench config not found"):
        load_bench_config(tmp_path / "absent.txt")


def test_format_number():
    assert format_number(float("inf")) == "inf"
    assert format_number(0.123456789) == "0.123457"
    assert format_number(52.1234567) == "52.1235"


# -----------------------------------------------------------------------------
# Harness
# -----------------------------------------------------------------------------

def test_bench_writes_ordered_report(tmp_path, image_files):
    config = load_bench_config(write_config(tmp_path, extra="workers = 2"))
    result = run_bench(config)

    report = pd.read_csv(result.report_path, dtype=str, keep_default_na=False)
    assert tuple(report.columns) == REPORT_COLUMNS
    assert report["attack"].tolist() == ["none", "jpeg_like", "pixelate (approx)", "gamma", "collusion"]
    assert report["params"].tolist()[:3] == ["", "q=30", "b=2"]
    assert (report["status"] == "ok").all()
    assert result.failed_rows == 0

    no_attack = report.iloc[0]
    assert float(no_attack["max_nc"]) >= 0.999
    assert float(no_attack["psnr_db"]) >= 40.0
    assert set(report["best_quadrant"]) <= {"1", "2", "3", "4"}

    assert result.watermarked_path == tmp_path / "bench" / "watermarked.pgm"
    assert result.key_path.exists()


def test_bench_is_deterministic_across_worker_counts(tmp_path, image_files):
    config = load_bench_config(write_config(tmp_path))
    sequential = run_bench(config).report

    parallel = run_bench(replace(config, workers=3, show_progress=False)).report
    pd.testing.assert_frame_equal(sequential, parallel)


def test_failed_rows_are_reported_and_the_bench_continues(tmp_path, image_files, monkeypatch, capsys):
    original = build_robustness_report.apply_attack

    def flaky_attack(img, spec):
        if spec.kind == "gamma":
            raise ValueError("gamma exploded")
        return original(img, spec)

    monkeypatch.setattr(build_robustness_report, "apply_attack", flaky_attack)
    config_path = write_config(tmp_path)

    assert main(["bench", str(config_path), "--no-progress"]) == 1
    assert "1 attack row(s) failed" in capsys.readouterr().err

    report = pd.read_csv(tmp_path / "bench" / "robustness_report.csv", dtype=str, keep_default_na=False)
    assert report.loc[3, "status"] == "failed: gamma exploded"
    assert report.loc[3, "max_nc"] == ""
    assert (report.drop(index=3)["status"] == "ok").all()


def test_unexpected_row_errors_do_not_stop_the_bench(tmp_path, image_files, monkeypatch):
    original = build_robustness_report.apply_attack

    def exhausted_attack(img, spec):
        if spec.kind == "resize_cycle":
            raise MemoryError("Unable to allocate 8.00 TiB")
        return original(img, spec)

    monkeypatch.setattr(build_robustness_report, "apply_attack", exhausted_attack)
    config_path = write_config(tmp_path, attacks=("none", "resize_cycle:s=1099511627776", "hist_eq"))

    assert main(["bench", str(config_path), "--no-progress"]) == 1

    report = pd.read_csv(tmp_path / "bench" / "robustness_report.csv", dtype=str, keep_default_na=False)
    assert report["status"].tolist() == ["ok", "failed: Unable to allocate 8.00 TiB", "ok"]
    assert report.loc[2, "attack"] == "hist_eq"
    assert report.loc[1, "psnr_db"] == ""


def test_bench_markdown_report(tmp_path, image_files, capsys):
    config_path = write_config(tmp_path, attacks=("none", "hist_eq"))

    assert main(["bench", str(config_path), "--format", "markdown", "--no-progress"]) == 0

    lines = (tmp_path / "bench" / "robustness_report.md").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "| " + " | ".join(REPORT_COLUMNS) + " |"
    assert len(lines) == 4
    assert "report=" in capsys.readouterr().out

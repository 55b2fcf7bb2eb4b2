"""
File Name: bench_config.py
Last Modified: 2026-10-17

Overview:
Bench configuration file parsing.

Format: flat key=value lines, '#' starts a comment line, attack= may repeat.

    host = images/lena.pgm
    watermark = images/logo.pgm
    alpha = 0.05
    attack = @table1
    attack = jpeg_like:q=75
    output_dir = outputs/bench
    format = markdown
    workers = 4

Relative paths resolve against the config file's directory. attack=@table1
and attack=@table2 expand to the preset rosters in utilities.config.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from scripts.attacks.attack_spec import AttackSpec, parse_attack_spec
from scripts.utilities.config import (
    ATTACK_ROSTERS,
    DEFAULT_ALPHA,
    REPORT_FORMATS,
    get_bench_workers,
)
from scripts.utilities.file_paths import BENCH_OUTPUTS


CONFIG_KEYS = ("host", "watermark", "alpha", "attack", "output_dir", "format", "workers")
REQUIRED_KEYS = ("host", "watermark")
FORMAT_ALIASES = {"md": "markdown"}


@dataclass(frozen=True)
class BenchConfig:
    host: Path
    watermark: Path
    alpha: float
    attacks: tuple[AttackSpec, ...]
    output_dir: Path
    report_format: str = "csv"
    workers: int = 1
    show_progress: bool = True

    def __post_init__(self) -> None:
        if not math.isfinite(self.alpha) or self.alpha <= 0:
            raise ValueError(f"alpha must be > 0. Received {self.alpha}")

        if not self.attacks:
            raise ValueError("no attacks configured")

        if self.report_format not in REPORT_FORMATS:
            raise ValueError(
                f"unknown report format {self.report_format!r}; expected one of {REPORT_FORMATS}"
            )

        if self.workers < 1:
            raise ValueError(f"workers must be >= 1. Received {self.workers}")


def expand_attack_entry(value: str) -> list[AttackSpec]:
    """One attack= value; @table1 / @table2 expand to their rosters."""
    value = value.strip()

    if value.startswith("@"):
        if value not in ATTACK_ROSTERS:
            raise ValueError(f"unknown attack roster {value!r}; expected one of {sorted(ATTACK_ROSTERS)}")
        return [parse_attack_spec(text) for text in ATTACK_ROSTERS[value]]

    return [parse_attack_spec(value)]


def _resolve(base_dir: Path, value: str) -> Path:
    path = Path(value).expanduser()
    return path if path.is_absolute() else base_dir / path


def parse_bench_config(text: str, base_dir: Path) -> BenchConfig:
    values: dict[str, str] = {}
    attacks: list[AttackSpec] = []

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()

        if not line or line.startswith("#"):
            continue

        key, separator, value = line.partition("=")
        key = key.strip()
        value = value.strip()

        if not separator or not key:
            raise ValueError(f"malformed config line {line_number}: {raw_line!r}")

        if key not in CONFIG_KEYS:
            raise ValueError(f"unknown config key {key!r} on line {line_number}")

        if key == "attack":
            try:
                attacks.extend(expand_attack_entry(value))
            except ValueError as exc:
                raise ValueError(f"line {line_number}: {exc}") from exc
            continue

        if key in values:
            raise ValueError(f"config key {key!r} repeated on line {line_number}")

        values[key] = value

    missing = [key for key in REQUIRED_KEYS if not values.get(key)]
    if missing:
        raise ValueError(f"missing required config keys: {', '.join(missing)}")

    try:
        alpha = float(values["alpha"]) if "alpha" in values else DEFAULT_ALPHA
        workers = int(values["workers"]) if "workers" in values else get_bench_workers()
    except ValueError as exc:
        raise ValueError(f"invalid numeric config value: {exc}") from exc

    report_format = values.get("format", "csv").lower()
    report_format = FORMAT_ALIASES.get(report_format, report_format)

    output_dir = _resolve(base_dir, values["output_dir"]) if values.get("output_dir") else BENCH_OUTPUTS

    return BenchConfig(
        host=_resolve(base_dir, values["host"]),
        watermark=_resolve(base_dir, values["watermark"]),
        alpha=alpha,
        attacks=tuple(attacks),
        output_dir=output_dir,
        report_format=report_format,
        workers=workers,
    )


def load_bench_config(path: str | Path) -> BenchConfig:
    path = Path(path)

    if not path.exists():
        raise FileNotFoundError(f"bench config not found: {path}")

    return parse_bench_config(path.read_text(encoding="utf-8"), base_dir=path.resolve().parent)

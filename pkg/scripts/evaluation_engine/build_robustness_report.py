"""
File Name: build_robustness_report.py
Last Modified: 2026-10-17

Purpose:
    Regenerate a robustness table for one host / watermark pair.

    The watermark is embedded once. Each configured attack row is then
    applied to the watermarked image, the four candidates are extracted, and
    the row records PSNR(host, attacked) together with the best quadrant and
    its NC against the original watermark. A failing row is reported with
    its error and the remaining rows still run.

Inputs:
    - BenchConfig (host and watermark PGM paths, alpha, attack rows)

Outputs:
    - <output_dir>/robustness_report.csv or .md
    - <output_dir>/watermarked.pgm
    - <output_dir>/watermark.wmk
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import pandas as pd
from tqdm import tqdm

from scripts.attacks.apply_attacks import apply_attack
from scripts.attacks.attack_spec import AttackSpec, format_attack_params
from scripts.attacks.composite_attacks import build_collusion_copies, collusion_attack
from scripts.evaluation_engine.bench_config import BenchConfig
from scripts.imagecore.gray_image import GrayImage
from scripts.imagecore.pgm_io import load_pgm, save_pgm
from scripts.metrics.score_fidelity import psnr
from scripts.utilities.config import (
    APPROXIMATED_ATTACKS,
    REPORT_COLUMNS,
    REPORT_FILE_STEM,
    REPORT_SIGNIFICANT_DIGITS,
)
from scripts.utilities.file_paths import KEY_FILE_NAME, WATERMARKED_IMAGE_NAME, ensure_directory
from scripts.watermark.embed_watermark import embed
from scripts.watermark.extract_watermark import best_candidate, extract
from scripts.watermark.watermark_key import WatermarkKey, write_key


logger = logging.getLogger(__name__)

REPORT_SUFFIXES = {"csv": ".csv", "markdown": ".md"}
STATUS_OK = "ok"


@dataclass(frozen=True)
class BenchContext:
    host: GrayImage
    watermark: GrayImage
    watermarked: GrayImage
    key: WatermarkKey
    alpha: float


@dataclass(frozen=True)
class BenchResult:
    report: pd.DataFrame
    report_path: Path
    watermarked_path: Path
    key_path: Path

    @property
    def failed_rows(self) -> int:
        return int((self.report["status"] != STATUS_OK).sum())


# -----------------------------------------------------------------------------
# Formatting
# -----------------------------------------------------------------------------

def format_number(value: float) -> str:
    """6 significant digits; infinities print as inf."""
    if value == float("inf"):
        return "inf"
    if value == float("-inf"):
        return "-inf"
    return f"{value:.{REPORT_SIGNIFICANT_DIGITS}g}"


def attack_label(spec: AttackSpec) -> str:
    if spec.kind in APPROXIMATED_ATTACKS:
        return f"{spec.kind} (approx)"
    return spec.kind


def render_markdown(report: pd.DataFrame) -> str:
    header = "| " + " | ".join(report.columns) + " |"
    divider = "|" + "|".join("---" for _ in report.columns) + "|"
    body = ["| " + " | ".join(str(value) for value in row) + " |" for row in report.itertuples(index=False)]
    return "\n".join([header, divider, *body]) + "\n"


def write_report(report: pd.DataFrame, output_dir: Path, report_format: str) -> Path:
    ensure_directory(output_dir)
    path = output_dir / f"{REPORT_FILE_STEM}{REPORT_SUFFIXES[report_format]}"

    if report_format == "csv":
        report.to_csv(path, index=False)
    else:
        path.write_text(render_markdown(report), encoding="utf-8")

    return path


# -----------------------------------------------------------------------------
# Rows
# -----------------------------------------------------------------------------

def attack_watermarked(context: BenchContext, spec: AttackSpec) -> GrayImage:
    if spec.kind == "collusion":
        copies = build_collusion_copies(
            host=context.host,
            watermarked=context.watermarked,
            copies=spec["copies"],
            alpha=spec["alpha"],
            seed=spec.seed,
        )
        return collusion_attack(copies)

    return apply_attack(context.watermarked, spec)


def evaluate_attack(context: BenchContext, spec: AttackSpec) -> dict[str, str]:
    row = {
        "attack": attack_label(spec),
        "params": format_attack_params(spec),
        "psnr_db": "",
        "max_nc": "",
        "best_quadrant": "",
        "status": STATUS_OK,
    }

    try:
        attacked = attack_watermarked(context, spec)
        quality = psnr(context.host, attacked)
        quadrant, score = best_candidate(extract(attacked, context.key), context.watermark)
    except Exception as exc:
        # a failing row never stops the remaining rows
        message = str(exc) or type(exc).__name__
        logger.warning("Attack %s failed: %s", spec.kind, message)
        row["status"] = f"failed: {message}"
        return row

    row.update(
        psnr_db=format_number(quality),
        max_nc=format_number(score),
        best_quadrant=str(quadrant),
    )
    logger.info("%s: psnr_db=%s max_nc=%s (q%s)", row["attack"], row["psnr_db"], row["max_nc"], quadrant)
    return row


def evaluate_attacks(context: BenchContext, attacks, workers: int = 1, show_progress: bool = True) -> list[dict]:
    """Rows in roster order regardless of completion order."""
    progress = tqdm(total=len(attacks), desc="Attacks", unit="row", disable=not show_progress)

    def run(spec: AttackSpec) -> dict:
        row = evaluate_attack(context, spec)
        progress.update(1)
        return row

    try:
        if workers <= 1:
            return [run(spec) for spec in attacks]

        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, attacks))
    finally:
        progress.close()


# -----------------------------------------------------------------------------
# Bench
# -----------------------------------------------------------------------------

def run_bench(config: BenchConfig) -> BenchResult:
    host = load_pgm(config.host)
    watermark = load_pgm(config.watermark)

    watermarked, key = embed(host, watermark, config.alpha)
    logger.info("Embedded at alpha=%s; psnr_db=%s", config.alpha, format_number(psnr(host, watermarked)))

    ensure_directory(config.output_dir)
    watermarked_path = save_pgm(watermarked, config.output_dir / WATERMARKED_IMAGE_NAME)
    key_path = write_key(key, config.output_dir / KEY_FILE_NAME)

    context = BenchContext(host=host, watermark=watermark, watermarked=watermarked, key=key, alpha=config.alpha)
    rows = evaluate_attacks(context, config.attacks, config.workers, config.show_progress)

    report = pd.DataFrame(rows, columns=list(REPORT_COLUMNS))
    report_path = write_report(report, config.output_dir, config.report_format)

    logger.info("Report written to %s (%s rows)", report_path, len(report))
    return BenchResult(
        report=report,
        report_path=report_path,
        watermarked_path=watermarked_path,
        key_path=key_path,
    )

"""
File Name: watermark_cli.py
Last Modified: 2026-10-17

Purpose:
    Command-line entry point for the watermark toolkit.

    embed     host.pgm wm.pgm out.pgm out.wmk [--alpha A]
    extract   watermarked.pgm key.wmk out_dir [--reference wm.pgm]
    attack    image.pgm SPEC out.pgm
    metrics   reference.pgm test.pgm
    bench     config.txt [--workers N] [--format csv|markdown] [--no-progress]
    generate  host|watermark SIDE out.pgm [--seed N]

    Results go to stdout as name=value lines; diagnostics go to stderr as
    "Error: <message>". Exit status is 0 on success and 1 otherwise.

Usage:
    python -m scripts.cli.watermark_cli embed host.pgm logo.pgm marked.pgm marked.wmk --alpha 0.05
"""

from __future__ import annotations

import argparse
import dataclasses
import logging
import math
import sys
from pathlib import Path

from scripts.attacks.apply_attacks import apply_attack
from scripts.attacks.attack_spec import parse_attack_spec
from scripts.evaluation_engine.bench_config import load_bench_config
from scripts.evaluation_engine.build_robustness_report import format_number, run_bench
from scripts.imagecore.gray_image import quantize
from scripts.imagecore.pgm_io import load_pgm, save_pgm
from scripts.metrics.score_fidelity import mse, nc, psnr
from scripts.utilities.config import (
    DEFAULT_ALPHA,
    DEFAULT_HOST_SEED,
    DEFAULT_WATERMARK_SEED,
    REPORT_FORMATS,
    configure_logging,
)
from scripts.utilities.file_paths import candidate_path, ensure_directory
from scripts.utilities.synthetic_images import make_host_image, make_watermark_image
from scripts.watermark.embed_watermark import embed
from scripts.watermark.extract_watermark import best_candidate, extract
from scripts.watermark.watermark_key import read_key, write_key


logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# Commands
# -----------------------------------------------------------------------------

def cmd_embed(host: Path, wm: Path, alpha: float, out_image: Path, out_key: Path) -> int:
    if not math.isfinite(alpha) or alpha <= 0:
        raise ValueError(f"alpha must be > 0. Received {alpha}")

    host_image = load_pgm(host)
    watermarked, key = embed(host_image, load_pgm(wm), alpha)

    save_pgm(watermarked, out_image)
    write_key(key, out_key)

    print(f"psnr_db={format_number(psnr(host_image, watermarked))}")
    return 0


def cmd_extract(watermarked: Path, key: Path, out_dir: Path, reference: Path | None = None) -> int:
    result = extract(load_pgm(watermarked), read_key(key))

    ensure_directory(out_dir)
    for index, candidate in zip(result.source_quadrants, result.candidates):
        save_pgm(quantize(candidate), candidate_path(out_dir, index))

    logger.info("Candidates written to %s", out_dir)

    if reference is not None:
        quadrant, score = best_candidate(result, load_pgm(reference))
        print(f"best_quadrant={quadrant} nc={format_number(score)}")

    return 0


def cmd_attack(image: Path, spec: str, out: Path) -> int:
    original = load_pgm(image)
    attacked = apply_attack(original, parse_attack_spec(spec))

    save_pgm(attacked, out)
    print(f"psnr_db={format_number(psnr(original, attacked))}")
    return 0


def cmd_metrics(reference: Path, test: Path) -> int:
    reference_image = load_pgm(reference)
    test_image = load_pgm(test)

    print(f"mse={format_number(mse(reference_image, test_image))}")
    print(f"psnr_db={format_number(psnr(reference_image, test_image))}")
    print(f"nc={format_number(nc(reference_image, test_image))}")
    return 0


def cmd_bench(
    config: Path,
    workers: int | None = None,
    report_format: str | None = None,
    show_progress: bool = True,
) -> int:
    bench_config = load_bench_config(config)

    overrides = {"show_progress": show_progress}
    if workers is not None:
        overrides["workers"] = workers
    if report_format is not None:
        overrides["report_format"] = report_format

    result = run_bench(dataclasses.replace(bench_config, **overrides))

    print(f"report={result.report_path}")
    if result.failed_rows:
        print(f"Error: {result.failed_rows} attack row(s) failed; see {result.report_path}", file=sys.stderr)
        return 1

    return 0


def cmd_generate(kind: str, side: int, seed: int | None, out: Path) -> int:
    if kind == "host":
        image = make_host_image(side, DEFAULT_HOST_SEED if seed is None else seed)
    else:
        image = make_watermark_image(side, DEFAULT_WATERMARK_SEED if seed is None else seed)

    save_pgm(image, out)
    logger.info("Synthetic %s written to %s", kind, out)
    return 0


# -----------------------------------------------------------------------------
# Argument Parsing
# -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="watermark_cli",
        description="Hybrid DWT-DCT-SVD grayscale watermarking toolkit.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    embed_parser = commands.add_parser("embed", help="Embed a watermark and write the key sidecar.")
    embed_parser.add_argument("host", type=Path)
    embed_parser.add_argument("watermark", type=Path)
    embed_parser.add_argument("out_image", type=Path)
    embed_parser.add_argument("out_key", type=Path)
    embed_parser.add_argument("--alpha", type=float, default=DEFAULT_ALPHA, help="Embedding strength (> 0).")

    extract_parser = commands.add_parser("extract", help="Extract the four candidate watermarks.")
    extract_parser.add_argument("watermarked", type=Path)
    extract_parser.add_argument("key", type=Path)
    extract_parser.add_argument("out_dir", type=Path)
    extract_parser.add_argument("--reference", type=Path, help="Original watermark for best-quadrant NC.")

    attack_parser = commands.add_parser("attack", help="Apply one attack, e.g. jpeg_like:q=30.")
    attack_parser.add_argument("image", type=Path)
    attack_parser.add_argument("spec")
    attack_parser.add_argument("out", type=Path)

    metrics_parser = commands.add_parser("metrics", help="MSE, PSNR and NC of two same-size images.")
    metrics_parser.add_argument("reference", type=Path)
    metrics_parser.add_argument("test", type=Path)

    bench_parser = commands.add_parser("bench", help="Run a robustness bench from a config file.")
    bench_parser.add_argument("config", type=Path)
    bench_parser.add_argument("--workers", type=int, help="Attack rows evaluated in parallel.")
    bench_parser.add_argument("--format", dest="report_format", choices=REPORT_FORMATS)
    bench_parser.add_argument("--no-progress", dest="show_progress", action="store_false")

    generate_parser = commands.add_parser("generate", help="Write a synthetic host or watermark PGM.")
    generate_parser.add_argument("kind", choices=("host", "watermark"))
    generate_parser.add_argument("side", type=int)
    generate_parser.add_argument("out", type=Path)
    generate_parser.add_argument("--seed", type=int)

    return parser


def dispatch(args: argparse.Namespace) -> int:
    if args.command == "embed":
        return cmd_embed(args.host, args.watermark, args.alpha, args.out_image, args.out_key)
    if args.command == "extract":
        return cmd_extract(args.watermarked, args.key, args.out_dir, args.reference)
    if args.command == "attack":
        return cmd_attack(args.image, args.spec, args.out)
    if args.command == "metrics":
        return cmd_metrics(args.reference, args.test)
    if args.command == "bench":
        return cmd_bench(args.config, args.workers, args.report_format, args.show_progress)
    return cmd_generate(args.kind, args.side, args.seed, args.out)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; --help exits with 0
        return 0 if exc.code in (0, None) else 1

    try:
        configure_logging()
        return dispatch(args)
    except Exception as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

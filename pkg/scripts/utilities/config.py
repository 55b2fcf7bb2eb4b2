"""
File Name: config.py
Last Modified: 2026-10-17

Overview:
Central configuration module for the watermark toolkit.
Defines project paths, numerical constants and attack rosters so every
script references a single configuration source.

Inputs:
- Local project directory structure
- Optional .env file and environment variable overrides

Outputs:
- Shared path constants
- Transform, key format and report constants
- Validation helpers for environment overrides
"""

import logging
import os
from pathlib import Path

from dotenv import load_dotenv


load_dotenv()


# -----------------------------------------------------------------------------
# Project Root
# -----------------------------------------------------------------------------

PROJECT_ROOT_ENV_VAR = "WATERMARK_TOOLKIT_ROOT"
DEFAULT_ALPHA_ENV_VAR = "WATERMARK_DEFAULT_ALPHA"
LOG_LEVEL_ENV_VAR = "WATERMARK_LOG_LEVEL"
BENCH_WORKERS_ENV_VAR = "WATERMARK_BENCH_WORKERS"


def _resolve_project_root() -> Path:
    """Resolve project root. Allows environment override for portability."""
    env_root = os.getenv(PROJECT_ROOT_ENV_VAR)

    if env_root:
        root = Path(env_root).expanduser().resolve()
        if not root.exists() or not root.is_dir():
            raise NotADirectoryError(
                f"{PROJECT_ROOT_ENV_VAR} points to an invalid directory: {root}"
            )
        return root

    return Path(__file__).resolve().parents[2]


PROJECT_ROOT = _resolve_project_root()


# -----------------------------------------------------------------------------
# Data Directories
# -----------------------------------------------------------------------------

DATA_DIR = PROJECT_ROOT / "data"
IMAGES_DIR = DATA_DIR / "images"
KEYS_DIR = DATA_DIR / "keys"
OUTPUTS_DIR = DATA_DIR / "outputs"


# -----------------------------------------------------------------------------
# Pixel Format
# -----------------------------------------------------------------------------

PIXEL_MIN = 0
PIXEL_MAX = 255
PGM_MAGIC = b"P5"
PGM_MAXVAL = 255


# -----------------------------------------------------------------------------
# Transform Configuration
# -----------------------------------------------------------------------------

WAVELET_NAME = "haar"

# Haar never extends the signal on even lengths; periodization keeps the
# sub-bands at exactly half size.
WAVELET_MODE = "periodization"

SVD_TOLERANCE = 1e-12
SVD_SWEEP_FACTOR = 100
SVD_METHODS = ("lapack", "jacobi")

JPEG_BLOCK_SIZE = 8


# -----------------------------------------------------------------------------
# Embedding Configuration
# -----------------------------------------------------------------------------

FALLBACK_ALPHA = 0.05
QUADRANT_COUNT = 4


# -----------------------------------------------------------------------------
# Key File Format
# -----------------------------------------------------------------------------

KEY_MAGIC = b"WMK1"
KEY_HEADER_FORMAT = "<4sIId"


# -----------------------------------------------------------------------------
# Reporting
# -----------------------------------------------------------------------------

REPORT_SIGNIFICANT_DIGITS = 6
REPORT_FORMATS = ("csv", "markdown")
REPORT_COLUMNS = (
    "attack",
    "params",
    "psnr_db",
    "max_nc",
    "best_quadrant",
    "status",
)
REPORT_FILE_STEM = "robustness_report"

# Photoshop filters that only have documented approximations here
APPROXIMATED_ATTACKS = ("pixelate", "contrast", "sharpen")


# -----------------------------------------------------------------------------
# Synthetic Imagery
# -----------------------------------------------------------------------------

DEFAULT_HOST_SEED = 2013
DEFAULT_WATERMARK_SEED = 62
DEFAULT_HOST_SIDE = 512


# -----------------------------------------------------------------------------
# Attack Rosters
# -----------------------------------------------------------------------------

TABLE1_ATTACKS = (
    "gaussian_blur:k=5,sigma=1.0",
    "jpeg_like:q=30",
    "sharpen:s=0.8",
    "gaussian_noise:var=0.3,seed=11",
    "pixelate:b=2",
    "rotate:theta=20",
    "crop:f=0.25",
    "resize_cycle:s=256",
    "contrast:k=0.8",
    "hist_eq",
    "gamma:g=0.6",
    "salt_pepper:d=0.05,seed=12",
    "poisson:seed=13",
    "speckle:v=0.04,seed=14",
)

TABLE2_ATTACKS = (
    "jpeg_like:q=75",
    "jpeg_like:q=50",
    "jpeg_like:q=25",
    "gaussian_blur:k=3,sigma=1.0",
    "gaussian_noise:var=0.001,seed=21",
    "resize_cycle:s=256",
    "hist_eq",
    "intensity_adjust:lo_in=0,hi_in=0.8,lo_out=0,hi_out=1",
    "gamma:g=1.5",
    "rotate:theta=20",
    "crop:f=0.25",
    "pixelate:b=2",
    "sharpen:s=0.8",
    "rewatermark:alpha=0.05,seed=22",
    "collusion:copies=3,alpha=0.05,seed=23",
)

ATTACK_ROSTERS = {
    "@table1": TABLE1_ATTACKS,
    "@table2": TABLE2_ATTACKS,
}


# -----------------------------------------------------------------------------
# Environment Overrides
# -----------------------------------------------------------------------------

def get_default_alpha() -> float:
    """Return the default embedding strength, honoring the env override."""
    raw_value = os.getenv(DEFAULT_ALPHA_ENV_VAR)

    if raw_value is None or raw_value.strip() == "":
        return FALLBACK_ALPHA

    try:
        alpha = float(raw_value)
    except ValueError as exc:
        raise ValueError(
            f"{DEFAULT_ALPHA_ENV_VAR} must be numeric. Received: {raw_value!r}"
        ) from exc

    if not alpha > 0:
        raise ValueError(f"{DEFAULT_ALPHA_ENV_VAR} must be > 0. Received: {alpha}")

    return alpha


def get_log_level() -> int:
    """Map the configured level name to a logging constant."""
    level_name = os.getenv(LOG_LEVEL_ENV_VAR, "INFO").strip().upper()
    level = logging.getLevelName(level_name)

    if not isinstance(level, int):
        raise ValueError(f"{LOG_LEVEL_ENV_VAR} is not a logging level: {level_name!r}")

    return level


def get_bench_workers() -> int:
    """Default worker count for bench rows."""
    raw_value = os.getenv(BENCH_WORKERS_ENV_VAR)

    if raw_value is None or raw_value.strip() == "":
        return 1

    try:
        workers = int(raw_value)
    except ValueError as exc:
        raise ValueError(
            f"{BENCH_WORKERS_ENV_VAR} must be an integer. Received: {raw_value!r}"
        ) from exc

    if workers < 1:
        raise ValueError(f"{BENCH_WORKERS_ENV_VAR} must be >= 1. Received: {workers}")

    return workers


def configure_logging() -> None:
    """Entry points call this once; library modules only get loggers."""
    logging.basicConfig(level=get_log_level(), format="%(levelname)s | %(message)s")


DEFAULT_ALPHA = get_default_alpha()


if __name__ == "__main__":
    print("Configuration loaded successfully.")
    print(f"Project Root: {PROJECT_ROOT}")
    print(f"Default alpha: {DEFAULT_ALPHA}")
    print(f"Wavelet: {WAVELET_NAME} ({WAVELET_MODE})")

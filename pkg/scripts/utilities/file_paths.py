"""
File Name: file_paths.py
Last Modified: 2026-10-17

Overview:
Centralized file path definitions for the watermark toolkit.
Keeps embed, extract and bench outputs in consistent locations.

Inputs:
- Configuration paths from utilities.config

Outputs:
- Reusable Path objects for image, key and report locations
"""

from pathlib import Path

from scripts.utilities.config import (
    IMAGES_DIR,
    KEYS_DIR,
    OUTPUTS_DIR,
)


# -----------------------------------------------------------------------------
# Output Locations
# -----------------------------------------------------------------------------

BENCH_OUTPUTS = OUTPUTS_DIR / "bench"
EXTRACTED_OUTPUTS = OUTPUTS_DIR / "extracted"
ATTACKED_OUTPUTS = OUTPUTS_DIR / "attacked"


# -----------------------------------------------------------------------------
# Artifact Names
# -----------------------------------------------------------------------------

WATERMARKED_IMAGE_NAME = "watermarked.pgm"
KEY_FILE_NAME = "watermark.wmk"
CANDIDATE_NAME_TEMPLATE = "candidate_q{index}.pgm"


# -----------------------------------------------------------------------------
# Helper Functions
# -----------------------------------------------------------------------------

def ensure_directory(path: Path) -> None:
    """Create directory if missing to prevent downstream export failures."""
    if path.exists() and not path.is_dir():
        raise NotADirectoryError(f"Expected directory but found file: {path}")
    path.mkdir(parents=True, exist_ok=True)


def candidate_path(output_dir: Path, index: int) -> Path:
    return Path(output_dir) / CANDIDATE_NAME_TEMPLATE.format(index=index)


def ensure_project_directories() -> None:
    """Ensure all defined data directories exist."""
    for directory in (
        IMAGES_DIR,
        KEYS_DIR,
        BENCH_OUTPUTS,
        EXTRACTED_OUTPUTS,
        ATTACKED_OUTPUTS,
    ):
        ensure_directory(directory)


if __name__ == "__main__":
    ensure_project_directories()
    print("All project directories verified.")

"""
File Name: pgm_io.py
Last Modified: 2026-10-17

Overview:
Binary PGM (P5, maxval 255) reader and writer.

Inputs:
- P5 files with optional '#' comments between header tokens

Outputs:
- GrayImage values with integral pixels widened to float64
- P5 files with a canonical "P5\\n<cols> <rows>\\n255\\n" header
"""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from scripts.imagecore.gray_image import GrayImage
from scripts.utilities.config import PGM_MAGIC, PGM_MAXVAL
from scripts.utilities.file_paths import ensure_directory


logger = logging.getLogger(__name__)

WHITESPACE = b" \t\r\n\x0b\x0c"


def _read_header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """Collect header tokens after the magic, skipping comments."""
    tokens: list[bytes] = []
    position = len(PGM_MAGIC)

    while len(tokens) < count:
        if position >= len(data):
            raise ValueError("malformed header: file ends inside the PGM header")

        byte = data[position:position + 1]

        if byte in WHITESPACE:
            position += 1
            continue

        if byte == b"#":
            newline = data.find(b"\n", position)
            position = len(data) if newline < 0 else newline + 1
            continue

        start = position
        while position < len(data) and data[position:position + 1] not in WHITESPACE:
            position += 1
        tokens.append(data[start:position])

    if position >= len(data) or data[position:position + 1] not in WHITESPACE:
        raise ValueError("malformed header: missing whitespace after maxval")

    # exactly one whitespace byte separates maxval from the payload
    return tokens, position + 1


def _parse_positive_int(token: bytes, label: str) -> int:
    try:
        value = int(token.decode("ascii"))
    except (UnicodeDecodeError, ValueError) as exc:
        raise ValueError(f"malformed header: {label} is not an integer ({token!r})") from exc

    if value < 1:
        raise ValueError(f"malformed header: {label} must be positive ({value})")

    return value


def load_pgm(path: str | Path) -> GrayImage:
    """Read a binary P5 file into a GrayImage."""
    path = Path(path)

    if not path.exists():
        raise FileNotFoundError(f"image file not found: {path}")

    data = path.read_bytes()

    if data[:len(PGM_MAGIC)] != PGM_MAGIC:
        raise ValueError(f"unsupported magic {data[:2]!r} in {path}; only binary P5 is read")

    tokens, payload_start = _read_header_tokens(data, 3)
    cols = _parse_positive_int(tokens[0], "width")
    rows = _parse_positive_int(tokens[1], "height")
    maxval = _parse_positive_int(tokens[2], "maxval")

    if maxval != PGM_MAXVAL:
        raise ValueError(f"unsupported maxval {maxval} in {path}; expected {PGM_MAXVAL}")

    expected = rows * cols
    payload = data[payload_start:payload_start + expected]

    if len(payload) < expected:
        raise ValueError(
            f"truncated payload in {path}: expected {expected} bytes, found {len(payload)}"
        )

    pixels = np.frombuffer(payload, dtype=np.uint8).reshape(rows, cols)
    logger.debug("Loaded %sx%s PGM from %s", rows, cols, path)
    return GrayImage.from_array(pixels)


def save_pgm(img: GrayImage, path: str | Path) -> Path:
    """Write a quantized GrayImage as binary P5."""
    if not img.is_quantized():
        raise ValueError("image not quantized; call quantize() before save_pgm")

    path = Path(path)
    ensure_directory(path.parent)

    header = f"P5\n{img.cols} {img.rows}\n{PGM_MAXVAL}\n".encode("ascii")
    path.write_bytes(header + img.to_uint8().tobytes())
    logger.debug("Wrote %sx%s PGM to %s", img.rows, img.cols, path)
    return path

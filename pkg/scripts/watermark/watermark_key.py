"""
File Name: watermark_key.py
Last Modified: 2026-10-17

Overview:
Semi-blind side information for extraction, and its WMK1 sidecar format.

Layout (little-endian):
- magic "WMK1", u32 host_side, u32 wm_side, f64 alpha
- s_host[1..4], each host_side/4 f64
- u_w, vt_w, wm_ll, wm_hl, wm_lh, each (host_side/4)^2 f64 row-major
"""

from __future__ import annotations

import logging
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from scripts.utilities.config import KEY_HEADER_FORMAT, KEY_MAGIC, QUADRANT_COUNT
from scripts.utilities.file_paths import ensure_directory


logger = logging.getLogger(__name__)

FLOAT_DTYPE = np.dtype("<f8")
ORTHOGONALITY_TOLERANCE = 1e-8
MATRIX_FIELDS = ("u_w", "vt_w", "wm_ll", "wm_hl", "wm_lh")


@dataclass(frozen=True)
class WatermarkKey:
    alpha: float
    host_side: int
    wm_side: int
    s_host: tuple[np.ndarray, ...]
    u_w: np.ndarray
    vt_w: np.ndarray
    wm_ll: np.ndarray
    wm_hl: np.ndarray
    wm_lh: np.ndarray

    @property
    def band_side(self) -> int:
        """Side of every quadrant and of the watermark sub-bands."""
        return self.host_side // 4

    def validate(self) -> None:
        if self.host_side < 4 or self.host_side % 4:
            raise ValueError(f"host side must be divisible by 4. Key has {self.host_side}")

        if self.wm_side * 2 != self.host_side:
            raise ValueError(
                f"watermark must be host_side/2: key has wm_side={self.wm_side}, host_side={self.host_side}"
            )

        if not np.isfinite(self.alpha) or self.alpha < 0:
            raise ValueError(f"alpha must be >= 0. Key has {self.alpha}")

        side = self.band_side

        if len(self.s_host) != QUADRANT_COUNT:
            raise ValueError(f"key needs {QUADRANT_COUNT} s_host vectors, found {len(self.s_host)}")

        for index, values in enumerate(self.s_host, start=1):
            values = np.asarray(values)
            if values.shape != (side,):
                raise ValueError(f"s_host[{index}] has shape {values.shape}; expected ({side},)")
            if (values < 0).any() or (np.diff(values) > 0).any():
                raise ValueError(f"s_host[{index}] must be non-negative and non-increasing")

        for name in MATRIX_FIELDS:
            matrix = np.asarray(getattr(self, name))
            if matrix.shape != (side, side):
                raise ValueError(f"{name} has shape {matrix.shape}; expected ({side}, {side})")

        identity = np.eye(side)
        for name, basis in (("u_w", self.u_w), ("vt_w", self.vt_w)):
            deviation = np.abs(basis.T @ basis - identity).max()
            if deviation > ORTHOGONALITY_TOLERANCE:
                raise ValueError(f"{name} is not orthogonal (max deviation {deviation:.3e})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WatermarkKey):
            return NotImplemented
        return key_to_bytes(self) == key_to_bytes(other)

    __hash__ = None


def key_to_bytes(key: WatermarkKey) -> bytes:
    header = struct.pack(KEY_HEADER_FORMAT, KEY_MAGIC, key.host_side, key.wm_side, float(key.alpha))
    arrays = list(key.s_host) + [getattr(key, name) for name in MATRIX_FIELDS]
    payload = b"".join(np.ascontiguousarray(array, dtype=FLOAT_DTYPE).tobytes() for array in arrays)
    return header + payload


def key_from_bytes(data: bytes, source: str = "<bytes>") -> WatermarkKey:
    header_size = struct.calcsize(KEY_HEADER_FORMAT)

    if len(data) < len(KEY_MAGIC) or data[:len(KEY_MAGIC)] != KEY_MAGIC:
        raise ValueError(f"bad key magic in {source}: {data[:len(KEY_MAGIC)]!r}")

    if len(data) < header_size:
        raise ValueError(f"truncated key {source}: header needs {header_size} bytes")

    _, host_side, wm_side, alpha = struct.unpack_from(KEY_HEADER_FORMAT, data, 0)

    if host_side < 4 or host_side % 4 or wm_side * 2 != host_side:
        raise ValueError(f"malformed key {source}: host_side={host_side}, wm_side={wm_side}")

    side = host_side // 4
    vector_bytes = side * FLOAT_DTYPE.itemsize
    matrix_bytes = side * vector_bytes
    expected = header_size + QUADRANT_COUNT * vector_bytes + len(MATRIX_FIELDS) * matrix_bytes

    if len(data) < expected:
        raise ValueError(f"truncated key {source}: expected {expected} bytes, found {len(data)}")

    if len(data) > expected:
        raise ValueError(f"malformed key {source}: {len(data) - expected} trailing bytes")

    offset = header_size
    s_host = []
    for _ in range(QUADRANT_COUNT):
        s_host.append(np.frombuffer(data, dtype=FLOAT_DTYPE, count=side, offset=offset).astype(np.float64))
        offset += vector_bytes

    matrices = {}
    for name in MATRIX_FIELDS:
        flat = np.frombuffer(data, dtype=FLOAT_DTYPE, count=side * side, offset=offset)
        matrices[name] = flat.reshape(side, side).astype(np.float64)
        offset += matrix_bytes

    return WatermarkKey(
        alpha=float(alpha),
        host_side=int(host_side),
        wm_side=int(wm_side),
        s_host=tuple(s_host),
        **matrices,
    )


def write_key(key: WatermarkKey, path: str | Path) -> Path:
    key.validate()
    path = Path(path)
    ensure_directory(path.parent)
    path.write_bytes(key_to_bytes(key))
    logger.info("Key written to %s (host %s, alpha %s)", path, key.host_side, key.alpha)
    return path


def read_key(path: str | Path) -> WatermarkKey:
    path = Path(path)

    if not path.exists():
        raise FileNotFoundError(f"key file not found: {path}")

    key = key_from_bytes(path.read_bytes(), source=str(path))
    key.validate()
    return key

"""
File Name: zigzag.py
Last Modified: 2026-10-17

Overview:
JPEG-style zigzag scan and the four-quadrant coefficient mapping.

The scan walks anti-diagonals s = i + j; odd s runs i upward, even s runs i
downward. The scanned sequence is cut into four equal segments, each poured
row-major into an (N/2)x(N/2) quadrant: q1 low band, q2/q3 mid bands,
q4 high band. Everything here is index permutation only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from scripts.transforms.wavelet import as_matrix


@dataclass(frozen=True)
class QuadrantSet:
    q1: np.ndarray
    q2: np.ndarray
    q3: np.ndarray
    q4: np.ndarray

    def __iter__(self):
        return iter((self.q1, self.q2, self.q3, self.q4))

    @classmethod
    def from_sequence(cls, quadrants) -> QuadrantSet:
        q1, q2, q3, q4 = quadrants
        return cls(q1=q1, q2=q2, q3=q3, q4=q4)


@lru_cache(maxsize=32)
def zigzag_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row and column index arrays of the n x n zigzag order."""
    if n < 1:
        raise ValueError(f"zigzag size must be positive. Received {n}")

    rows: list[int] = []
    cols: list[int] = []

    for s in range(2 * n - 1):
        low = max(0, s - n + 1)
        high = min(s, n - 1)
        i_values = range(low, high + 1) if s % 2 else range(high, low - 1, -1)
        for i in i_values:
            rows.append(i)
            cols.append(s - i)

    row_index = np.array(rows, dtype=np.intp)
    col_index = np.array(cols, dtype=np.intp)
    row_index.setflags(write=False)
    col_index.setflags(write=False)
    return row_index, col_index


def _require_square(matrix) -> np.ndarray:
    m = as_matrix(matrix)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"non-square matrix {m.shape[0]}x{m.shape[1]} cannot be zigzag scanned")
    return m


def zigzag_scan(matrix) -> np.ndarray:
    m = _require_square(matrix)
    rows, cols = zigzag_indices(m.shape[0])
    return m[rows, cols]


def zigzag_to_quadrants(matrix) -> QuadrantSet:
    m = _require_square(matrix)
    n = m.shape[0]

    if n % 2:
        raise ValueError(f"odd dimension {n}; quadrant mapping needs an even side")

    half = n // 2
    segment = half * half
    sequence = zigzag_scan(m)

    return QuadrantSet.from_sequence(
        sequence[k * segment:(k + 1) * segment].reshape(half, half).copy()
        for k in range(4)
    )


def quadrants_to_matrix(quadrants: QuadrantSet) -> np.ndarray:
    parts = [np.asarray(q, dtype=np.float64) for q in quadrants]
    shapes = {part.shape for part in parts}

    if len(shapes) != 1:
        raise ValueError(f"quadrant size mismatch: {sorted(shapes)}")

    shape = parts[0].shape
    if len(shape) != 2 or shape[0] != shape[1] or shape[0] < 1:
        raise ValueError(f"quadrant size mismatch: quadrants must be square, got {shape}")

    n = 2 * shape[0]
    rows, cols = zigzag_indices(n)
    out = np.empty((n, n), dtype=np.float64)
    out[rows, cols] = np.concatenate([part.ravel() for part in parts])
    return out

"""
File Name: seeded_rng.py
Last Modified: 2026-10-17

Overview:
Portable, pinned random streams for the stochastic attacks.

- next_u64: SplitMix64 (state += 0x9E3779B97F4A7C15, then the 30/27/31 mixer)
- uniform: top 53 bits of next_u64 scaled by 2**-53, in [0, 1)
- normal: Box-Muller on two consecutive uniforms, sqrt(-2 ln(1 - u1)) cos(2 pi u2)
- poisson: Knuth's product method

The vectorised draws (uniforms, normals) reproduce n sequential scalar draws
bit for bit. poisson_field gives element j its own SplitMix64 stream, seeded
with the j-th output of this stream, so the whole field can advance in
lockstep.
"""

from __future__ import annotations

import math

import numpy as np


MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULTIPLIER_1 = 0xBF58476D1CE4E5B9
MIX_MULTIPLIER_2 = 0x94D049BB133111EB
UNIFORM_SCALE = 2.0 ** -53


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * MIX_MULTIPLIER_1) & MASK64
    z = ((z ^ (z >> 27)) * MIX_MULTIPLIER_2) & MASK64
    return z ^ (z >> 31)


def _mix_array(z: np.ndarray) -> np.ndarray:
    # uint64 arithmetic wraps modulo 2**64, matching the masked scalar path
    z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX_MULTIPLIER_1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX_MULTIPLIER_2)
    return z ^ (z >> np.uint64(31))


def _bits_to_uniform(bits: np.ndarray) -> np.ndarray:
    return (bits >> np.uint64(11)).astype(np.float64) * UNIFORM_SCALE


def _box_muller(u1: np.ndarray, u2: np.ndarray) -> np.ndarray:
    return np.sqrt(-2.0 * np.log1p(-u1)) * np.cos(2.0 * np.pi * u2)


class SeededRng:
    """SplitMix64 stream; every stochastic attack owns one."""

    def __init__(self, seed: int = 0) -> None:
        if seed < 0 or seed > MASK64:
            raise ValueError(f"seed out of domain: must be a 64-bit unsigned integer. Received {seed}")
        self.state = int(seed)

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return _mix(self.state)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * UNIFORM_SCALE

    def normal(self) -> float:
        return float(self.normals(1)[0])

    def poisson(self, mean: float) -> int:
        if mean < 0 or not math.isfinite(mean):
            raise ValueError(f"mean out of domain: {mean}")

        limit = math.exp(-mean)
        count = 0
        product = self.uniform()

        while product > limit:
            count += 1
            product *= self.uniform()

        return count

    def next_u64_array(self, n: int) -> np.ndarray:
        """n consecutive next_u64 outputs."""
        if n < 0:
            raise ValueError(f"draw count out of domain: {n}")

        steps = np.arange(1, n + 1, dtype=np.uint64) * np.uint64(GOLDEN_GAMMA)
        states = np.uint64(self.state) + steps
        self.state = (self.state + n * GOLDEN_GAMMA) & MASK64
        return _mix_array(states)

    def uniforms(self, n: int) -> np.ndarray:
        return _bits_to_uniform(self.next_u64_array(n))

    def normals(self, n: int) -> np.ndarray:
        pairs = self.uniforms(2 * n).reshape(n, 2)
        return _box_muller(pairs[:, 0], pairs[:, 1])

    def poisson_field(self, means) -> np.ndarray:
        """One Poisson draw per element, each on its own derived stream."""
        means = np.asarray(means, dtype=np.float64)

        if (means < 0).any() or not np.isfinite(means).all():
            raise ValueError("mean out of domain: Poisson means must be finite and >= 0")

        flat_means = means.ravel()
        states = self.next_u64_array(flat_means.size)
        limits = np.exp(-flat_means)

        counts = np.zeros(flat_means.size, dtype=np.int64)
        products = np.ones(flat_means.size, dtype=np.float64)
        active = np.ones(flat_means.size, dtype=bool)

        # first round always draws, later rounds only for still-active elements
        while active.any():
            states[active] += np.uint64(GOLDEN_GAMMA)
            products[active] *= _bits_to_uniform(_mix_array(states[active]))
            active &= products > limits
            counts[active] += 1

        return counts.reshape(means.shape)

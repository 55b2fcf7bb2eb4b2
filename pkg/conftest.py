"""Shared pytest fixtures: synthetic imagery and temporary PGM files."""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest


PROJECT_ROOT = Path(__file__).resolve().parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from scripts.imagecore.pgm_io import save_pgm  # noqa: E402
from scripts.utilities.config import DEFAULT_HOST_SEED, DEFAULT_WATERMARK_SEED  # noqa: E402
from scripts.utilities.synthetic_images import make_host_image, make_watermark_image  # noqa: E402
from scripts.watermark.embed_watermark import embed  # noqa: E402


TEST_HOST_SIDE = 128
TEST_ALPHA = 0.1


@pytest.fixture
def rng():
    return np.random.default_rng(20131)


@pytest.fixture(scope="session")
def host_image():
    return make_host_image(TEST_HOST_SIDE, DEFAULT_HOST_SEED)


@pytest.fixture(scope="session")
def watermark_image():
    return make_watermark_image(TEST_HOST_SIDE // 2, DEFAULT_WATERMARK_SEED)


@pytest.fixture(scope="session")
def embedded(host_image, watermark_image):
    """(watermarked, key) at the test alpha."""
    return embed(host_image, watermark_image, TEST_ALPHA)


@pytest.fixture
def image_files(tmp_path, host_image, watermark_image):
    host_path = save_pgm(host_image, tmp_path / "host.pgm")
    watermark_path = save_pgm(watermark_image, tmp_path / "watermark.pgm")
    return host_path, watermark_path

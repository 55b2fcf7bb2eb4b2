import numpy as np
import pytest

from scripts.imagecore.gray_image import GrayImage, quantize, quantize_array, round_half_away
from scripts.imagecore.pgm_io import load_pgm, save_pgm


def write_bytes(path, data: bytes):
    path.write_bytes(data)
    return path


# -----------------------------------------------------------------------------
# GrayImage and quantize
# -----------------------------------------------------------------------------

def test_quantize_rounds_half_away_and_clamps():
    img = GrayImage(np.array([[-3.2, 12.5, 254.5, 300.0]]))
    np.testing.assert_array_equal(quantize(img).pixels, [[0, 13, 255, 255]])


def test_quantize_just_below_half_rounds_down():
    assert quantize(GrayImage(np.array([[127.4999]]))).pixels[0, 0] == 127


def test_round_half_away_on_negative_ties():
    np.testing.assert_array_equal(round_half_away([-2.5, -0.5, 0.5, 2.5]), [-3, -1, 1, 3])


def test_round_half_away_near_half_and_at_large_magnitudes():
    below_half = np.nextafter(0.5, 0.0)
    np.testing.assert_array_equal(round_half_away([below_half, -below_half]), [0, 0])
    assert quantize(GrayImage(np.array([[below_half]]))).pixels[0, 0] == 0

    odd = 2.0 ** 52 + 1
    np.testing.assert_array_equal(round_half_away([odd, -odd]), [odd, -odd])


def test_quantize_is_idempotent_and_keeps_shape(rng):
    img = GrayImage(rng.normal(128, 90, size=(7, 5)))
    once = quantize(img)

    assert once.shape == (7, 5)
    assert quantize(once) == once
    assert once.is_quantized()


def test_integral_image_is_a_fixed_point(rng):
    img = GrayImage(rng.integers(0, 256, size=(4, 6)).astype(float))
    assert quantize(img) == img


def test_non_finite_pixels_are_rejected():
    with pytest.raises(ValueError, match="non-finite pixel"):
        GrayImage(np.array([[1.0, np.nan]]))

    with pytest.raises(ValueError, match="non-finite pixel"):
        quantize_array(np.array([[np.inf]]))


def test_gray_image_pixels_are_read_only():
    img = GrayImage(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        img.pixels[0, 0] = 1.0


# -----------------------------------------------------------------------------
# PGM I/O
# -----------------------------------------------------------------------------

def test_load_two_by_two_p5(tmp_path):
    path = write_bytes(tmp_path / "tiny.pgm", b"P5\n2 2\n255\n" + bytes([0, 128, 255, 7]))
    img = load_pgm(path)

    assert img.shape == (2, 2)
    np.testing.assert_array_equal(img.pixels, [[0, 128], [255, 7]])


def test_load_skips_header_comments(tmp_path):
    path = write_bytes(tmp_path / "comment.pgm", b"P5\n# made by hand\n3 1\n# max\n255\n" + bytes([1, 2, 3]))
    np.testing.assert_array_equal(load_pgm(path).pixels, [[1, 2, 3]])


def test_save_writes_canonical_payload(tmp_path):
    path = save_pgm(GrayImage(np.array([[0.0, 255.0, 128.0]])), tmp_path / "row.pgm")
    assert path.read_bytes() == b"P5\n3 1\n255\n" + bytes([0x00, 0xFF, 0x80])


def test_round_trip_preserves_pixels(tmp_path, host_image):
    path = save_pgm(host_image, tmp_path / "host.pgm")
    assert load_pgm(path) == host_image


def test_save_rejects_unquantized(tmp_path):
    with pytest.raises(ValueError, match="image not quantized"):
        save_pgm(GrayImage(np.array([[12.5]])), tmp_path / "bad.pgm")


def test_ascii_pgm_is_unsupported(tmp_path):
    path = write_bytes(tmp_path / "ascii.pgm", b"P2\n1 1\n255\n7\n")
    with pytest.raises(ValueError, match="unsupported magic"):
        load_pgm(path)


def test_sixteen_bit_maxval_is_unsupported(tmp_path):
    path = write_bytes(tmp_path / "deep.pgm", b"P5\n1 1\n65535\n" + bytes([0, 7]))
    with pytest.raises(ValueError, match="unsupported maxval"):
        load_pgm(path)


def test_truncated_payload(tmp_path):
    path = write_bytes(tmp_path / "short.pgm", b"P5\n2 2\n255\n" + bytes([1, 2, 3]))
    with pytest.raises(ValueError, match="truncated payload"):
        load_pgm(path)


def test_header_without_payload_separator_is_malformed(tmp_path):
    path = write_bytes(tmp_path / "cut.pgm", b"P5\n2 2\n255")
    with pytest.raises(ValueError, match="malformed header"):
        load_pgm(path)


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError, match="image file not found"):
        load_pgm(tmp_path / "absent.pgm")

#!/usr/bin/env python3
"""
Testes das medidas de qualidade: MSE, PSNR, entropia, média e variância.
"""
import sys
import os

# Adiciona a raiz do projeto ao path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import math

import numpy as np
import pytest

from swarm_enhance.histogram import LEVELS, LUT, GrayImage, apply_lut
from swarm_enhance.metrics import (
    MetricsError, compute_metrics, entropy, mean_intensity, mse, psnr, variance_intensity,
)
from swarm_enhance.synthetic import random_image


def _constant(value, width=8, height=8):
    return GrayImage.from_array(np.full((height, width), value, dtype=np.uint8))


def _half_and_half(width=8, height=8):
    array = np.zeros((height, width), dtype=np.uint8)
    array[:, width // 2:] = 255
    return GrayImage.from_array(array)


def test_mse_examples():
    image = random_image(10, 10, seed=1)
    assert mse(image, image) == 0.0
    assert mse(_constant(0), _constant(255)) == 65025.0


def test_psnr_examples():
    assert psnr(_constant(0), _constant(255)) == pytest.approx(0.0, abs=1e-12)
    a = _constant(10)
    b = _constant(11)
    assert psnr(a, b) == pytest.approx(20 * math.log10(255), abs=1e-9)
    assert psnr(a, b) == pytest.approx(48.1308, abs=1e-4)
    assert psnr(a, a) == float("inf")


def test_dimension_mismatch():
    with pytest.raises(MetricsError):
        mse(_constant(0, 4, 4), _constant(0, 4, 5))
    with pytest.raises(MetricsError):
        psnr(_constant(0, 4, 4), _constant(0, 5, 4))


def test_entropy_examples():
    assert entropy(_constant(77)) == 0.0
    assert entropy(_half_and_half()) == pytest.approx(1.0, abs=1e-12)
    every_level = GrayImage.from_array(np.arange(LEVELS, dtype=np.uint8).reshape(16, 16))
    assert entropy(every_level) == pytest.approx(8.0, abs=1e-12)


def test_mean_and_variance_examples():
    assert mean_intensity(_constant(128)) == 128.0
    assert variance_intensity(_constant(128)) == 0.0
    assert mean_intensity(_half_and_half()) == pytest.approx(127.5, abs=1e-12)
    assert variance_intensity(_half_and_half()) == pytest.approx(16256.25, abs=1e-9)


def _naive_metrics(a, b):
    pa = [int(v) for v in a.pixels.ravel()]
    pb = [int(v) for v in b.pixels.ravel()]
    n = len(pa)
    error = sum((x - y) ** 2 for x, y in zip(pa, pb)) / n
    counts = {}
    for v in pb:
        counts[v] = counts.get(v, 0) + 1
    ent = -sum((c / n) * math.log2(c / n) for c in counts.values())
    mean = sum(pb) / n
    var = sum((v - mean) ** 2 for v in pb) / n
    return error, ent, mean, var


def test_metrics_match_naive_recomputation():
    """50 pares aleatórios contra somas diretas em Python puro."""
    for seed in range(50):
        a = random_image(24, 16, seed=seed)
        b = random_image(24, 16, seed=1000 + seed, low=30, high=220)
        error, ent, mean, var = _naive_metrics(a, b)
        assert mse(a, b) == pytest.approx(error, rel=1e-6)
        assert psnr(a, b) == pytest.approx(20 * math.log10(255 / math.sqrt(error)), rel=1e-6)
        assert entropy(b) == pytest.approx(ent, rel=1e-6)
        assert mean_intensity(b) == pytest.approx(mean, rel=1e-6)
        assert variance_intensity(b) == pytest.approx(var, rel=1e-6)


def test_metric_properties():
    rng = np.random.default_rng(4)
    for seed in range(10):
        a = random_image(20, 20, seed=seed)
        b = random_image(20, 20, seed=seed + 50)
        assert psnr(a, b) == psnr(b, a)
        assert 0.0 <= entropy(a) <= 8.0

        shuffled = GrayImage.from_array(rng.permutation(a.pixels.ravel()).reshape(20, 20))
        assert entropy(shuffled) == pytest.approx(entropy(a), abs=1e-12)

        pixels = a.pixels.astype(np.float64)
        identity = np.mean(pixels ** 2) - np.mean(pixels) ** 2
        assert variance_intensity(a) == pytest.approx(identity, rel=1e-6)


def test_constant_shift_lut():
    image = random_image(16, 16, seed=3, low=20, high=200)
    shift = LUT(np.clip(np.arange(LEVELS) + 30, 0, 255))
    shifted = apply_lut(image, shift)
    assert mean_intensity(shifted) == pytest.approx(mean_intensity(image) + 30, abs=1e-9)
    assert variance_intensity(shifted) == pytest.approx(variance_intensity(image), rel=1e-9)


def test_compute_metrics_uses_reference():
    image = random_image(12, 12, seed=8)
    other = random_image(12, 12, seed=9)
    same = compute_metrics(image, reference=image)
    assert same.psnr_db == float("inf") and same.mse == 0.0
    metrics = compute_metrics(other, reference=image)
    assert metrics.mse == mse(image, other)
    assert metrics.entropy_bits == entropy(other)
    assert set(metrics.to_dict()) == {"entropy_bits", "psnr_db", "mean_intensity", "variance", "mse"}


def main():
    """Executa os testes deste módulo com pytest."""
    sys.exit(pytest.main([__file__, "-v"]))


if __name__ == "__main__":
    main()

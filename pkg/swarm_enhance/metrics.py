"""
Medidas de qualidade de imagem: MSE, PSNR, entropia de Shannon, média e
variância de intensidade.
"""
from dataclasses import asdict, dataclass

import numpy as np

from swarm_enhance.histogram import LEVELS, MAX_LEVEL, GrayImage, compute_histogram, normalize


class MetricsError(ValueError):
    """Imagens incompatíveis ou vazias."""
    pass


@dataclass(frozen=True)
class MetricSet:
    entropy_bits: float
    psnr_db: float
    mean_intensity: float
    variance: float
    mse: float

    def to_dict(self) -> dict:
        return asdict(self)


def _check_pair(a: GrayImage, b: GrayImage) -> None:
    if (a.width, a.height) != (b.width, b.height):
        raise MetricsError(
            f"Dimensões diferentes: {a.width}x{a.height} e {b.width}x{b.height}"
        )


def _probabilities(image: GrayImage) -> np.ndarray:
    if image.size == 0:
        raise MetricsError("Imagem vazia")
    return normalize(compute_histogram(image)).probs


def mse(a: GrayImage, b: GrayImage) -> float:
    """Soma dos quadrados das diferenças dividida por M·N."""
    _check_pair(a, b)
    diff = a.pixels.astype(np.float64) - b.pixels.astype(np.float64)
    return float(np.mean(diff * diff))


def psnr(a: GrayImage, b: GrayImage) -> float:
    """20·log10(255/√MSE); MSE = 0 devolve +inf."""
    error = mse(a, b)
    if error == 0.0:
        return float("inf")
    return float(20.0 * np.log10(MAX_LEVEL / np.sqrt(error)))


def entropy(image: GrayImage) -> float:
    """-Σ p·log2(p) sobre o histograma normalizado; 0·log 0 = 0."""
    probs = _probabilities(image)
    nonzero = probs[probs > 0]
    return float(max(-np.sum(nonzero * np.log2(nonzero)), 0.0))


def mean_intensity(image: GrayImage) -> float:
    """m = Σ z_k p(z_k)."""
    probs = _probabilities(image)
    return float(np.dot(np.arange(LEVELS), probs))


def variance_intensity(image: GrayImage) -> float:
    """σ² = Σ (z_k - m)² p(z_k) (variância populacional)."""
    probs = _probabilities(image)
    levels = np.arange(LEVELS, dtype=np.float64)
    m = float(np.dot(levels, probs))
    return float(np.dot((levels - m) ** 2, probs))


def compute_metrics(image: GrayImage, reference: GrayImage) -> MetricSet:
    """Conjunto completo de medidas de `image`; PSNR e MSE relativos a `reference`."""
    return MetricSet(
        entropy_bits=entropy(image),
        psnr_db=psnr(reference, image),
        mean_intensity=mean_intensity(image),
        variance=variance_intensity(image),
        mse=mse(reference, image),
    )

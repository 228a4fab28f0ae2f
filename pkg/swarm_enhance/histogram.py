"""
Núcleo de histogramas: conversões imagem↔histograma, equalização clássica
e aplicação de LUT.

Todos os valores são imutáveis depois de construídos (os arrays internos
são marcados como somente leitura), portanto podem ser compartilhados
entre execuções concorrentes.
"""
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

LEVELS = 256
MAX_LEVEL = LEVELS - 1


class HistogramError(ValueError):
    """Erro base do núcleo de histogramas."""
    pass


class EmptyImageError(HistogramError):
    """Imagem sem pixels."""
    pass


class EmptyHistogramError(HistogramError):
    """Histograma com soma zero (não normalizável)."""
    pass


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Imagem em tons de cinza de 8 bits, armazenada linha a linha (height × width)."""
    width: int
    height: int
    pixels: np.ndarray

    def __post_init__(self):
        width, height = int(self.width), int(self.height)
        if width <= 0 or height <= 0:
            raise EmptyImageError(f"Imagem vazia: dimensões {width}x{height}")

        raw = np.asarray(self.pixels)
        if raw.size != width * height:
            raise HistogramError(
                f"Número de pixels ({raw.size}) difere de largura x altura ({width * height})"
            )
        if raw.size and (not np.all(np.isfinite(raw)) or raw.min() < 0 or raw.max() > MAX_LEVEL):
            raise HistogramError("Valores de pixel devem estar em [0, 255]")
        if np.issubdtype(raw.dtype, np.floating) and not np.all(raw == np.round(raw)):
            raise HistogramError("Valores de pixel devem ser inteiros")

        object.__setattr__(self, "width", width)
        object.__setattr__(self, "height", height)
        object.__setattr__(self, "pixels", _frozen(raw.astype(np.uint8).reshape(height, width).copy()))

    @classmethod
    def from_array(cls, array: Union[np.ndarray, Sequence]) -> "GrayImage":
        """Cria uma imagem a partir de uma matriz 2-D (linhas x colunas)."""
        array = np.asarray(array)
        if array.ndim != 2:
            raise HistogramError(f"Esperada matriz 2-D, recebido array com {array.ndim} dimensões")
        height, width = array.shape
        if width == 0 or height == 0:
            raise EmptyImageError(f"Imagem vazia: dimensões {width}x{height}")
        return cls(width=width, height=height, pixels=array)

    @property
    def size(self) -> int:
        return self.width * self.height

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.width == other.width and self.height == other.height and np.array_equal(self.pixels, other.pixels)


@dataclass(frozen=True, eq=False)
class Histogram:
    """Contagens reais por nível de cinza (reais porque histogramas otimizados são contínuos)."""
    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.float64)
        if counts.shape != (LEVELS,):
            raise HistogramError(f"Histograma deve ter {LEVELS} posições, recebido {counts.shape}")
        if not np.all(np.isfinite(counts)):
            raise HistogramError("Histograma contém valores não finitos")
        if np.any(counts < 0):
            raise HistogramError("Histograma contém posições negativas; aplique clamp antes")
        object.__setattr__(self, "counts", _frozen(counts.copy()))

    @property
    def total(self) -> float:
        return float(self.counts.sum())


@dataclass(frozen=True, eq=False)
class PDF:
    probs: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=np.float64)
        if probs.shape != (LEVELS,):
            raise HistogramError(f"PDF deve ter {LEVELS} posições, recebido {probs.shape}")
        if np.any(probs < 0):
            raise HistogramError("PDF contém probabilidades negativas")
        if abs(probs.sum() - 1.0) > 1e-9:
            raise HistogramError(f"PDF deve somar 1 (soma = {probs.sum()!r})")
        object.__setattr__(self, "probs", _frozen(probs.copy()))


@dataclass(frozen=True, eq=False)
class LUT:
    """Tabela de mapeamento monótona de 256 posições."""
    map: np.ndarray

    def __post_init__(self):
        mapping = np.asarray(self.map)
        if mapping.shape != (LEVELS,):
            raise HistogramError(f"LUT deve ter {LEVELS} posições, recebido {mapping.shape}")
        if mapping.min() < 0 or mapping.max() > MAX_LEVEL:
            raise HistogramError("LUT contém valores fora de [0, 255]")
        if np.any(np.diff(mapping) < 0):
            raise HistogramError("LUT deve ser não decrescente")
        object.__setattr__(self, "map", _frozen(mapping.astype(np.int64).copy()))

    @classmethod
    def identity(cls) -> "LUT":
        return cls(np.arange(LEVELS))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.map, np.arange(LEVELS)))


def compute_histogram(image: GrayImage) -> Histogram:
    """
    Conta a frequência de cada nível de cinza.

    Raises:
        EmptyImageError: Se a imagem não tiver pixels
    """
    if image.size == 0:
        raise EmptyImageError("Imagem vazia")
    counts = np.bincount(image.pixels.ravel(), minlength=LEVELS)
    return Histogram(counts.astype(np.float64))


def normalize(hist: Histogram) -> PDF:
    """
    Divide as contagens pelo total.

    Raises:
        EmptyHistogramError: Se o total for zero
    """
    total = hist.total
    if total <= 0:
        raise EmptyHistogramError("Histograma vazio")
    return PDF(hist.counts / total)


def cumulative(pdf: PDF) -> np.ndarray:
    """CDF c[n] = soma de probs[0..n]; não decrescente, c[255] = 1 (±1e-9)."""
    return np.cumsum(pdf.probs)


def he_lut(pdf: PDF) -> LUT:
    """
    Mapeamento da equalização clássica: T[n] = clamp(floor(255 * c[n] + 0.5), 0, 255).

    O "+0.5" é arredondamento meio-para-cima do produto, não uma parcela por termo.
    """
    cdf = cumulative(pdf)
    mapping = np.floor(MAX_LEVEL * cdf + 0.5)
    return LUT(np.clip(mapping, 0, MAX_LEVEL).astype(np.int64))


def apply_lut(image: GrayImage, lut: LUT) -> GrayImage:
    """Aplica g(m, n) = T[f(m, n)] pixel a pixel; dimensões preservadas."""
    mapped = lut.map[image.pixels]
    return GrayImage(width=image.width, height=image.height, pixels=mapped)


def equalize(image: GrayImage) -> GrayImage:
    """Equalização clássica: histograma → PDF → CDF → LUT → imagem."""
    return apply_lut(image, he_lut(normalize(compute_histogram(image))))

"""
Funções de teste para o otimizador e imagens sintéticas determinísticas.

As imagens de documento de baixo contraste substituem as imagens de
teste digitalizadas: fundo claro ~N(150, 6) com traços de tinta ~N(120, 6).
"""
from dataclasses import dataclass
from typing import Callable, Dict

import numpy as np

from swarm_enhance.histogram import MAX_LEVEL, GrayImage


def sphere(x: np.ndarray) -> float:
    return float(np.sum(np.square(x)))


def rastrigin(x: np.ndarray) -> float:
    x = np.asarray(x, dtype=np.float64)
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)))


def rosenbrock(x: np.ndarray) -> float:
    x = np.asarray(x, dtype=np.float64)
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


@dataclass(frozen=True)
class Benchmark:
    name: str
    function: Callable[[np.ndarray], float]
    lower_bound: float
    upper_bound: float
    optimum: float = 0.0


BENCHMARKS: Dict[str, Benchmark] = {
    "sphere": Benchmark("sphere", sphere, -100.0, 100.0),
    "rastrigin": Benchmark("rastrigin", rastrigin, -5.12, 5.12),
    "rosenbrock": Benchmark("rosenbrock", rosenbrock, -30.0, 30.0),
}


def get_benchmark(name: str) -> Benchmark:
    key = str(name).strip().lower()
    if key not in BENCHMARKS:
        raise ValueError(f"Função de teste não suportada: {name}. Disponíveis: {list(BENCHMARKS.keys())}")
    return BENCHMARKS[key]


def _to_image(values: np.ndarray) -> GrayImage:
    return GrayImage.from_array(np.clip(np.rint(values), 0, MAX_LEVEL).astype(np.uint8))


def low_contrast_document(width: int = 64, height: int = 64, seed: int = 0,
                          paper: float = 150.0, ink: float = 120.0, noise: float = 6.0) -> GrayImage:
    """
    Página com linhas de "palavras" escuras sobre fundo claro, ambos ruidosos.

    Linhas de texto com 3 pixels de altura a cada 8 linhas; cada linha recebe
    palavras de 3 a 10 pixels separadas por espaços de 2 a 5 pixels.
    """
    rng = np.random.default_rng(seed)
    mask = np.zeros((height, width), dtype=bool)
    for top in range(2, max(height - 3, 2), 8):
        x = int(rng.integers(1, 4))
        while x < width - 1:
            length = int(rng.integers(3, 11))
            mask[top:top + 3, x:min(x + length, width - 1)] = True
            x += length + int(rng.integers(2, 6))

    values = rng.normal(paper, noise, size=(height, width))
    values[mask] = rng.normal(ink, noise, size=int(mask.sum()))
    return _to_image(values)


def gradient_image(width: int = 64, height: int = 64, low: int = 0, high: int = MAX_LEVEL) -> GrayImage:
    """Rampa horizontal de `low` a `high`."""
    ramp = np.linspace(low, high, width)
    return _to_image(np.tile(ramp, (height, 1)))


def random_image(width: int = 64, height: int = 64, seed: int = 0,
                 low: int = 0, high: int = MAX_LEVEL) -> GrayImage:
    """Pixels uniformes inteiros em [low, high]."""
    rng = np.random.default_rng(seed)
    return GrayImage.from_array(rng.integers(low, high + 1, size=(height, width)).astype(np.uint8))

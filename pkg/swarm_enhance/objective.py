"""
Funções de custo de modificação de histograma e seus minimizadores analíticos.

Custo tri-critério (λ, γ >= 0):

    J(h) = ||h - h_i||² + λ||h - u||² + γ||D h||²

com D a diferença regressiva (linha 0 nula). O minimizador resolve o sistema
tridiagonal simétrico positivo-definido ((1+λ)I + γDᵀD) h = h_i + λu pelo
algoritmo de Thomas; ele serve de oráculo para as execuções do enxame.
"""
from dataclasses import dataclass

import numpy as np

from swarm_enhance.histogram import LEVELS, Histogram


class ObjectiveError(ValueError):
    """Parâmetros ou vetores inválidos para a função de custo."""
    pass


class DiffMatrix:
    """
    Operador de diferença regressiva n x n, nunca materializado como matriz densa.

    (D h)[0] = 0 e (D h)[i] = h[i] - h[i-1] para i >= 1.
    """

    def __init__(self, dimension: int = LEVELS):
        if dimension < 1:
            raise ObjectiveError("Dimensão do operador deve ser positiva")
        self.dimension = dimension

    def apply(self, h: np.ndarray) -> np.ndarray:
        h = np.asarray(h, dtype=np.float64)
        out = np.empty_like(h)
        out[0] = 0.0
        out[1:] = h[1:] - h[:-1]
        return out

    def apply_transpose(self, v: np.ndarray) -> np.ndarray:
        # (Dᵀv)[j] = v[j]·[j>=1] - v[j+1]·[j<n-1]
        v = np.asarray(v, dtype=np.float64)
        out = np.zeros_like(v)
        out[1:] += v[1:]
        out[:-1] -= v[1:]
        return out

    def gram_bands(self):
        """Diagonais (inferior, principal, superior) de DᵀD no formato de Thomas."""
        n = self.dimension
        diag = np.full(n, 2.0)
        diag[0] = 1.0
        diag[-1] = 1.0
        if n == 1:
            diag[0] = 0.0
        lower = np.full(n, -1.0)
        lower[0] = 0.0
        upper = np.full(n, -1.0)
        upper[-1] = 0.0
        return lower, diag, upper

    def dense(self) -> np.ndarray:
        """Matriz densa (apenas para testes e inspeção)."""
        n = self.dimension
        matrix = np.zeros((n, n))
        idx = np.arange(1, n)
        matrix[idx, idx] = 1.0
        matrix[idx, idx - 1] = -1.0
        return matrix


@dataclass(frozen=True, eq=False)
class ObjectiveSpec:
    """Histograma de entrada, alvo uniforme e pesos λ (contraste) e γ (suavidade)."""
    h_input: Histogram
    u_target: Histogram
    lambda_: float
    gamma: float

    def __post_init__(self):
        if not (self.lambda_ >= 0) or not np.isfinite(self.lambda_):
            raise ObjectiveError(f"lambda deve ser >= 0, recebido {self.lambda_!r}")
        if not (self.gamma >= 0) or not np.isfinite(self.gamma):
            raise ObjectiveError(f"gamma deve ser >= 0, recebido {self.gamma!r}")
        u = self.u_target.counts
        if not np.all(u == u[0]):
            raise ObjectiveError("Histograma alvo deve ser constante")
        if not np.isclose(self.u_target.total, self.h_input.total, rtol=1e-12, atol=0.0):
            raise ObjectiveError("Histograma alvo deve ter o mesmo total do histograma de entrada")
        object.__setattr__(self, "lambda_", float(self.lambda_))
        object.__setattr__(self, "gamma", float(self.gamma))

    @classmethod
    def from_histogram(cls, h_input: Histogram, lambda_: float, gamma: float) -> "ObjectiveSpec":
        """Constrói a especificação com u[k] = Z / 256."""
        u = np.full(LEVELS, h_input.total / LEVELS)
        return cls(h_input=h_input, u_target=Histogram(u), lambda_=lambda_, gamma=gamma)

    @property
    def diff(self) -> DiffMatrix:
        return DiffMatrix(LEVELS)

    def rhs(self) -> np.ndarray:
        """b = h_i + λu."""
        return self.h_input.counts + self.lambda_ * self.u_target.counts

    def system_bands(self):
        """Diagonais de A = (1+λ)I + γDᵀD."""
        lower, diag, upper = self.diff.gram_bands()
        return self.gamma * lower, (1.0 + self.lambda_) + self.gamma * diag, self.gamma * upper

    def cost(self, h: np.ndarray) -> float:
        return tri_cost(h, self)


def _check_vector(h, dimension: int = LEVELS) -> np.ndarray:
    h = np.asarray(h, dtype=np.float64)
    if h.shape != (dimension,):
        raise ObjectiveError(f"Vetor deve ter {dimension} posições, recebido {h.shape}")
    return h


def tri_cost(h: np.ndarray, spec: ObjectiveSpec) -> float:
    """||h - h_i||² + λ||h - u||² + γ||Dh||²; com γ = 0 é o custo bi-critério."""
    h = _check_vector(h)
    fidelity = h - spec.h_input.counts
    contrast = h - spec.u_target.counts
    smooth = h[1:] - h[:-1]
    return float(
        np.dot(fidelity, fidelity)
        + spec.lambda_ * np.dot(contrast, contrast)
        + spec.gamma * np.dot(smooth, smooth)
    )


def gradient(h: np.ndarray, spec: ObjectiveSpec) -> np.ndarray:
    """2(h - h_i) + 2λ(h - u) + 2γDᵀDh."""
    h = _check_vector(h)
    diff = spec.diff
    return (
        2.0 * (h - spec.h_input.counts)
        + 2.0 * spec.lambda_ * (h - spec.u_target.counts)
        + 2.0 * spec.gamma * diff.apply_transpose(diff.apply(h))
    )


def solve_tridiagonal(lower: np.ndarray, diag: np.ndarray, upper: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """
    Resolve A x = rhs para A tridiagonal pelo algoritmo de Thomas.

    Args:
        lower: diagonal inferior (0, a_1, ..., a_{n-1}); lower[0] é ignorado
        diag: diagonal principal (b_0, ..., b_{n-1})
        upper: diagonal superior (c_0, ..., c_{n-2}, 0); upper[-1] é ignorado
        rhs: lado direito

    Returns:
        x: solução com o mesmo comprimento de rhs
    """
    lower = np.asarray(lower, dtype=np.float64)
    diag = np.array(diag, dtype=np.float64)
    upper = np.asarray(upper, dtype=np.float64)
    d = np.array(rhs, dtype=np.float64)
    n = len(d)
    if not (len(lower) == len(diag) == len(upper) == n):
        raise ObjectiveError("Diagonais e lado direito devem ter o mesmo comprimento")

    for k in range(1, n):
        m = lower[k] / diag[k - 1]
        diag[k] = diag[k] - m * upper[k - 1]
        d[k] = d[k] - m * d[k - 1]

    x = diag
    x[-1] = d[-1] / diag[-1]
    for k in range(n - 2, -1, -1):
        x[k] = (d[k] - upper[k] * x[k + 1]) / diag[k]
    return x


def closed_form_bicriteria(spec: ObjectiveSpec) -> np.ndarray:
    """ĥ = (h_i + λu) / (1 + λ); γ é ignorado."""
    return (spec.h_input.counts + spec.lambda_ * spec.u_target.counts) / (1.0 + spec.lambda_)


def closed_form_tricriteria(spec: ObjectiveSpec) -> np.ndarray:
    """ĥ = ((1+λ)I + γDᵀD)⁻¹ (h_i + λu) por solução tridiagonal direta."""
    lower, diag, upper = spec.system_bands()
    return solve_tridiagonal(lower, diag, upper, spec.rhs())


def system_residual(h: np.ndarray, spec: ObjectiveSpec) -> np.ndarray:
    """A·h - b, calculado sem materializar A."""
    h = _check_vector(h)
    diff = spec.diff
    return (1.0 + spec.lambda_) * h + spec.gamma * diff.apply_transpose(diff.apply(h)) - spec.rhs()

from .base import BaseHistogramOptimizer, OptimizationOutcome
from .factory import SUPPORTED_TYPES, get_optimizer, normalize_optimizer_name

__all__ = [
    "BaseHistogramOptimizer",
    "OptimizationOutcome",
    "SUPPORTED_TYPES",
    "get_optimizer",
    "normalize_optimizer_name",
]

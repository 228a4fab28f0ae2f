"""
swarm-enhance: realce de contraste de documentos em tons de cinza por
modificação de histograma otimizada com o enxame de galinhas (CSO/ICSO).
"""
from swarm_enhance.histogram import GrayImage, Histogram, LUT, PDF, compute_histogram, equalize
from swarm_enhance.metrics import MetricSet, compute_metrics
from swarm_enhance.objective import ObjectiveSpec, closed_form_tricriteria, tri_cost
from swarm_enhance.pipeline import EnhancementParams, EnhancementResult, OracleMode, enhance, sweep
from swarm_enhance.swarm import SwarmConfig, Variant, minimize

__version__ = "0.1.0"

__all__ = [
    "EnhancementParams",
    "EnhancementResult",
    "GrayImage",
    "Histogram",
    "LUT",
    "MetricSet",
    "ObjectiveSpec",
    "OracleMode",
    "PDF",
    "SwarmConfig",
    "Variant",
    "closed_form_tricriteria",
    "compute_histogram",
    "compute_metrics",
    "enhance",
    "equalize",
    "minimize",
    "sweep",
    "tri_cost",
]

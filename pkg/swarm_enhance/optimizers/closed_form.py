import numpy as np

from .base import BaseHistogramOptimizer, OptimizationOutcome
from swarm_enhance.objective import ObjectiveSpec, closed_form_tricriteria, tri_cost


class ClosedFormOptimizer(BaseHistogramOptimizer):
    """Minimizador exato do custo tri-critério (solução tridiagonal direta)."""
    name = "closed-form"

    def optimize(self, spec: ObjectiveSpec, seed: int) -> OptimizationOutcome:
        histogram = closed_form_tricriteria(spec)
        return OptimizationOutcome(histogram=histogram, history=np.array([tri_cost(histogram, spec)]))

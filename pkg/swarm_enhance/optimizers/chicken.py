from dataclasses import replace

import numpy as np

from .base import BaseHistogramOptimizer, OptimizationOutcome
from swarm_enhance.histogram import LEVELS
from swarm_enhance.objective import ObjectiveSpec
from swarm_enhance.swarm import SwarmConfig, Variant, minimize


class ChickenSwarmOptimizer(BaseHistogramOptimizer):
    """Busca o histograma ótimo com o enxame de galinhas na caixa [0, Z]^256."""
    variant = Variant.ICSO

    def problem_config(self, spec: ObjectiveSpec, seed: int) -> SwarmConfig:
        base = self.swarm_config or SwarmConfig.table_defaults()
        # Um bin é uma contagem não negativa limitada pelo total de pixels
        total = spec.h_input.total
        return replace(
            base.with_problem(LEVELS, 0.0, total),
            rng_seed=seed,
            variant=self.variant,
        )

    def optimize(self, spec: ObjectiveSpec, seed: int) -> OptimizationOutcome:
        config = self.problem_config(spec, seed)
        anchors = None
        if self.anchor_init:
            anchors = np.vstack([spec.h_input.counts, spec.u_target.counts])
        result = minimize(spec.cost, config, initial_positions=anchors)
        return OptimizationOutcome(
            histogram=result.best_position,
            history=result.history,
            diversity=result.diversity,
        )


class ICSOOptimizer(ChickenSwarmOptimizer):
    name = "icso"
    variant = Variant.ICSO


class CSOOptimizer(ChickenSwarmOptimizer):
    name = "cso"
    variant = Variant.CSO

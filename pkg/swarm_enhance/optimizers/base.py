from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np

from swarm_enhance.objective import ObjectiveSpec


@dataclass
class OptimizationOutcome:
    histogram: np.ndarray
    history: np.ndarray
    diversity: Optional[np.ndarray] = None


class BaseHistogramOptimizer(ABC):
    name = "base"

    def __init__(self, swarm_config=None, anchor_init: bool = True):
        """
        Inicializa o otimizador de histogramas.

        Args:
            swarm_config: Configuração do enxame (ignorada pelos solvers analíticos)
            anchor_init: Se True, semeia o enxame com h_i e u
        """
        self.swarm_config = swarm_config
        self.anchor_init = anchor_init

    @abstractmethod
    def optimize(self, spec: ObjectiveSpec, seed: int) -> OptimizationOutcome:
        pass

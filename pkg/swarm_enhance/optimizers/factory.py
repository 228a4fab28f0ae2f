from .chicken import CSOOptimizer, ICSOOptimizer
from .closed_form import ClosedFormOptimizer
from swarm_enhance.logger import EnhanceLogger

SUPPORTED_TYPES = {"icso": ICSOOptimizer, "cso": CSOOptimizer, "closed-form": ClosedFormOptimizer}

_ALIASES = {"closed_form": "closed-form", "closedform": "closed-form"}


def normalize_optimizer_name(name: str) -> str:
    """
    Normaliza aliases de nome de otimizador para a forma canônica.

    Args:
        name: Nome recebido (ex.: "ICSO", "closed_form")

    Returns:
        Nome canônico (pode não ser suportado; a validação fica com get_optimizer)
    """
    key = str(name).strip().lower()
    return _ALIASES.get(key, key)


def get_optimizer(name: str, swarm_config=None, anchor_init: bool = True):
    """
    Cria uma instância de otimizador de histogramas do tipo especificado.

    Args:
        name: Tipo do otimizador (icso, cso, closed-form)
        swarm_config: Configuração do enxame para as variantes metaheurísticas
        anchor_init: Semeia o enxame com h_i e u

    Returns:
        Instância da classe de otimizador correspondente
    """
    logger = EnhanceLogger.get_logger("swarm_enhance.optimizers.factory")
    logger.info(f"get_optimizer chamado com name={name}, anchor_init={anchor_init}")

    key = normalize_optimizer_name(name)
    if key not in SUPPORTED_TYPES:
        logger.error(f"Otimizador não suportado: {name}")
        raise ValueError(f"Otimizador não suportado: {name}. Tipos suportados: {list(SUPPORTED_TYPES.keys())}")

    optimizer_class = SUPPORTED_TYPES[key]
    return optimizer_class(swarm_config=swarm_config, anchor_init=anchor_init)

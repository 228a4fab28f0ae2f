"""
Utilitários comuns para as tools e a CLI do swarm-enhance.
"""
from typing import Any, Dict, List

from swarm_enhance.config import get_enhance_defaults, get_swarm_defaults
from swarm_enhance.logger import EnhanceLogger

logger = EnhanceLogger.get_logger("swarm_enhance.utils")


def derive_seed(base_seed: int, index: int) -> int:
    """
    Semente da execução `index`: base_seed + index.

    Execuções repetidas ficam independentes e reproduzíveis; o índice 0
    reproduz uma execução isolada com a mesma semente base.
    """
    return int(base_seed) + int(index)


def relative_gap(achieved: float, oracle: float) -> float:
    """(achieved - oracle) / |oracle|; com oráculo nulo devolve a diferença absoluta."""
    if oracle == 0:
        return float(achieved - oracle)
    return float((achieved - oracle) / abs(oracle))


def parse_float_list(value) -> List[float]:
    """
    Converte "0,1,5" ou uma sequência em lista de floats.

    Raises:
        ValueError: Se algum item não for numérico
    """
    if isinstance(value, str):
        items = [item.strip() for item in value.split(",") if item.strip()]
    else:
        items = list(value or [])
    return [float(item) for item in items]


def parse_name_list(value) -> List[str]:
    """Converte "icso,cso" ou uma sequência em lista de nomes minúsculos."""
    if isinstance(value, str):
        items = value.split(",")
    else:
        items = list(value or [])
    return [str(item).strip().lower() for item in items if str(item).strip()]


def ensure_run_params(params: Dict[str, Any]) -> Dict[str, Any]:
    """
    Completa os parâmetros de execução ausentes com os padrões configurados.
    Se não forem informados, busca automaticamente do ambiente/.env e, por
    fim, dos padrões embutidos.

    Args:
        params: Parâmetros fornecidos (chaves lambda, gamma, optimizer, iters,
            population, seed, repeats, workers, anchor_init e coeficientes do enxame)

    Returns:
        Dict: Novo dicionário com todas as chaves preenchidas
    """
    enhance_defaults = get_enhance_defaults()
    swarm_defaults = get_swarm_defaults()
    resolved = {
        "lambda": enhance_defaults["lambda"],
        "gamma": enhance_defaults["gamma"],
        "optimizer": enhance_defaults["optimizer"],
        "iters": swarm_defaults["max_iters"],
        "population": swarm_defaults["population"],
        "reorg_period": swarm_defaults["reorg_period"],
        "chick_follow_rooster": swarm_defaults["chick_follow_rooster"],
        "fl_min": swarm_defaults["fl_min"],
        "fl_max": swarm_defaults["fl_max"],
        "s_min": swarm_defaults["s_min"],
        "s_max": swarm_defaults["s_max"],
        "seed": 0,
        "repeats": 1,
        "workers": 1,
        "anchor_init": True,
    }
    missing = [key for key in resolved if params.get(key) is None]
    if missing:
        logger.info(f"Parâmetros não fornecidos, usando padrões: {missing}")
    resolved.update({key: value for key, value in params.items() if value is not None})
    return resolved

from swarm_enhance.config import get_enhance_defaults, get_swarm_defaults
from swarm_enhance.swarm import table_counts


def parameter_table(params: dict):
    """
    Tabela de parâmetros efetiva (padrões embutidos sobrescritos pelo ambiente),
    útil como recurso MCP.
    Espera:
    {
        "population": 20   # Opcional - divisão de papéis para outro N
    }
    """
    swarm = get_swarm_defaults()
    population = int(params.get("population") or swarm["population"])
    rooster_count, hen_count, chick_count, mother_count = table_counts(population)
    return {
        "name": "parameter_table",
        "content": {
            "population": population,
            "rooster_count": rooster_count,
            "hen_count": hen_count,
            "chick_count": chick_count,
            "mother_count": mother_count,
            "reorg_period": swarm["reorg_period"],
            "max_iters": swarm["max_iters"],
            "chick_follow_rooster": swarm["chick_follow_rooster"],
            "chick_follow_mother_range": [swarm["fl_min"], swarm["fl_max"]],
            "self_learning_range": [swarm["s_min"], swarm["s_max"]],
            **{f"enhance_{key}": value for key, value in get_enhance_defaults().items()},
        },
    }

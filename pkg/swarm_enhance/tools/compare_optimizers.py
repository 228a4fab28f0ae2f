from swarm_enhance.logger import EnhanceLogger
from swarm_enhance.optimizers import normalize_optimizer_name
from swarm_enhance.pgm import read_image
from swarm_enhance.pipeline import EnhancementParams, enhance_repeated
from swarm_enhance.report import build_compare_report, to_json_compatible, write_report
from swarm_enhance.tools.enhance_image import RUN_KEYS, run_config
from swarm_enhance.utils import ensure_run_params, parse_name_list
from swarm_enhance.validation import validate_run_params
from typing import Dict, Any

logger = EnhanceLogger.get_logger("swarm_enhance.compare_optimizers")


def compare_optimizers(params: Dict[str, Any]):
    """
    Executa cada otimizador `repeats` vezes com as mesmas sementes e compara
    médias de medidas e estatísticas de custo.
    Espera:
    {
        "input_path": "entrada.pgm",
        "optimizers": "icso,cso,closed-form",   # ou lista
        "repeats": 10,                          # Opcional (padrão 10)
        "report_path": "compare.json",          # Opcional
        "lambda": 5, "gamma": 50000, "iters": 1000, "population": 20, "seed": 0
    }
    """
    try:
        input_path = params["input_path"]
        names = [normalize_optimizer_name(n) for n in parse_name_list(params.get("optimizers"))]
        if params.get("repeats") is None:
            params = dict(params, repeats=10)

        checked = {k: params[k] for k in RUN_KEYS if params.get(k) is not None}
        validate_run_params(dict(checked, optimizers=names))
        run = ensure_run_params(params)

        image = read_image(input_path)
        sections = {}
        for name in dict.fromkeys(names):
            logger.info(f"Comparando otimizador {name} ({run['repeats']} execuções)")
            enhancement = EnhancementParams.from_run_params(run, optimizer=name)
            sections[name] = enhance_repeated(image, enhancement, int(run["repeats"]), int(run["workers"]))

        config = run_config("compare", run, input=str(input_path), optimizers=list(sections))
        report = build_compare_report(config, sections)
        if params.get("report_path"):
            write_report(report, params["report_path"])

        logger.info(f"Comparação concluída para {list(sections)}")
        return to_json_compatible(report)

    except Exception as e:
        logger.error(f"Erro ao comparar otimizadores: {e}", exc_info=True)
        raise

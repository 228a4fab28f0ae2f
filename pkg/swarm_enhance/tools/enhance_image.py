from swarm_enhance.logger import EnhanceLogger
from swarm_enhance.pgm import read_image, write_image
from swarm_enhance.pipeline import EnhancementParams, best_result, enhance_repeated
from swarm_enhance.report import build_report, to_json_compatible, write_report
from swarm_enhance.utils import ensure_run_params
from swarm_enhance.validation import validate_run_params
from typing import Dict, Any

logger = EnhanceLogger.get_logger("swarm_enhance.enhance_image")

RUN_KEYS = ("lambda", "gamma", "repeats", "seed", "population", "iters", "workers")


def run_config(command: str, run: Dict[str, Any], **extra) -> Dict[str, Any]:
    """Bloco "config" do relatório (sem caminhos de saída, para comparar execuções)."""
    config = {
        "command": command,
        "optimizer": run["optimizer"],
        "lambda": run["lambda"],
        "gamma": run["gamma"],
        "iters": run["iters"],
        "population": run["population"],
        "base_seed": run["seed"],
        "repeats": run["repeats"],
        "anchor_init": run["anchor_init"],
    }
    config.update(extra)
    return config


def enhance_image(params: Dict[str, Any]):
    """
    Realça uma imagem e devolve o relatório JSON.
    Espera:
    {
        "input_path": "entrada.pgm",
        "output_path": "saida.pgm",   # Opcional - grava a melhor execução
        "report_path": "run.json",    # Opcional
        "format": "P5|P2",            # Opcional (padrão P5)
        "lambda": 5, "gamma": 50000, "optimizer": "icso|cso|closed-form",
        "iters": 1000, "population": 20, "seed": 0, "repeats": 1, "workers": 1
        # Ausentes - busca do .env ou padrões embutidos automaticamente
    }
    """
    try:
        input_path = params["input_path"]
        validate_run_params({k: params[k] for k in RUN_KEYS if params.get(k) is not None})
        run = ensure_run_params(params)

        image = read_image(input_path)
        enhancement = EnhancementParams.from_run_params(run)

        logger.info(f"Realçando {input_path} com {enhancement.optimizer_name}, repeats={run['repeats']}")
        results = enhance_repeated(image, enhancement, int(run["repeats"]), int(run["workers"]))

        best = best_result(results)
        if params.get("output_path"):
            write_image(best.output_image, params["output_path"], params.get("format") or "P5")

        report = build_report(run_config("enhance", run, input=str(input_path)), results)
        if params.get("report_path"):
            write_report(report, params["report_path"])

        logger.info(f"Realce concluído. Melhor custo: {best.achieved_cost:.6g} (seed {best.seed})")
        return to_json_compatible(report)

    except Exception as e:
        logger.error(f"Erro ao realçar imagem: {e}", exc_info=True)
        raise

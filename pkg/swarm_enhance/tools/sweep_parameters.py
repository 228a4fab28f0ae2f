from pathlib import Path

from swarm_enhance.logger import EnhanceLogger
from swarm_enhance.pgm import read_image, write_image
from swarm_enhance.pipeline import EnhancementParams, sweep
from swarm_enhance.report import build_report, to_json_compatible, write_report
from swarm_enhance.tools.enhance_image import RUN_KEYS, run_config
from swarm_enhance.utils import ensure_run_params, parse_float_list
from swarm_enhance.validation import validate_run_params
from typing import Dict, Any

logger = EnhanceLogger.get_logger("swarm_enhance.sweep_parameters")


def sweep_parameters(params: Dict[str, Any]):
    """
    Varre a grade λ × γ, um resultado por par.
    Espera:
    {
        "input_path": "entrada.pgm",
        "lambdas": "0,1,5,20",          # ou lista
        "gammas": "0,10000",            # ou lista
        "output_dir": "saidas/",        # Opcional - grava uma imagem por par
        "report_path": "sweep.json",    # Opcional
        "optimizer": "icso", "iters": 1000, "population": 20, "seed": 0, "workers": 1
    }
    """
    try:
        input_path = params["input_path"]
        lambdas = parse_float_list(params.get("lambdas"))
        gammas = parse_float_list(params.get("gammas"))
        for value in lambdas:
            validate_run_params({"lambda": value})
        for value in gammas:
            validate_run_params({"gamma": value})
        validate_run_params({k: params[k] for k in RUN_KEYS if params.get(k) is not None})
        run = ensure_run_params(params)

        image = read_image(input_path)
        enhancement = EnhancementParams.from_run_params(run)
        logger.info(f"Varrendo {len(lambdas)}x{len(gammas)} pares em {input_path}")
        results = sweep(image, lambdas, gammas, enhancement, workers=int(run["workers"]))

        output_dir = params.get("output_dir")
        if output_dir:
            Path(output_dir).mkdir(parents=True, exist_ok=True)
            for result in results:
                name = f"sweep_l{result.lambda_:g}_g{result.gamma:g}.pgm"
                write_image(result.output_image, Path(output_dir) / name)

        config = run_config("sweep", run, input=str(input_path), lambdas=lambdas, gammas=gammas)
        report = build_report(config, results)
        if params.get("report_path"):
            write_report(report, params["report_path"])

        logger.info(f"Varredura concluída: {len(results)} resultados")
        return to_json_compatible(report)

    except Exception as e:
        logger.error(f"Erro na varredura de parâmetros: {e}", exc_info=True)
        raise

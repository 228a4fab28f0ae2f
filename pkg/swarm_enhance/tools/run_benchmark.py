from dataclasses import replace

import numpy as np

from swarm_enhance.logger import EnhanceLogger
from swarm_enhance.optimizers import normalize_optimizer_name
from swarm_enhance.report import subsample, to_json_compatible, write_report
from swarm_enhance.swarm import SwarmConfig, Variant, minimize
from swarm_enhance.synthetic import get_benchmark
from swarm_enhance.utils import derive_seed, ensure_run_params
from swarm_enhance.validation import ParameterError, validate_run_params
from typing import Dict, Any

logger = EnhanceLogger.get_logger("swarm_enhance.run_benchmark")


def run_benchmark(params: Dict[str, Any]):
    """
    Minimiza uma função de teste (sphere, rastrigin, rosenbrock) com CSO ou ICSO.
    Espera:
    {
        "function": "sphere",
        "dimension": 10,
        "optimizer": "icso|cso",
        "iters": 500, "population": 20, "seed": 0, "repeats": 5,
        "report_path": "bench.json"   # Opcional
    }
    """
    try:
        benchmark = get_benchmark(params.get("function") or "sphere")
        dimension = params.get("dimension")
        if dimension is None:
            dimension = 10
        validate_run_params({k: params[k] for k in ("repeats", "seed", "population", "iters")
                             if params.get(k) is not None})
        if isinstance(dimension, bool) or not isinstance(dimension, int) or dimension < 1:
            raise ParameterError(f"dimension deve ser inteiro >= 1 (recebido {dimension!r})")
        run = ensure_run_params(params)

        name = normalize_optimizer_name(run["optimizer"])
        if name not in (Variant.ICSO.value, Variant.CSO.value):
            raise ParameterError(f"Otimizador {name!r} não se aplica a funções de teste (use icso ou cso)")

        base = SwarmConfig.table_defaults(
            int(run["population"]),
            max_iters=int(run["iters"]),
            reorg_period=int(run["reorg_period"]),
            chick_follow_rooster=float(run["chick_follow_rooster"]),
            chick_follow_mother_range=(float(run["fl_min"]), float(run["fl_max"])),
            s_min=float(run["s_min"]),
            s_max=float(run["s_max"]),
            variant=Variant(name),
        ).with_problem(dimension, benchmark.lower_bound, benchmark.upper_bound)

        records = []
        for index in range(int(run["repeats"])):
            seed = derive_seed(int(run["seed"]), index)
            result = minimize(benchmark.function, replace(base, rng_seed=seed))
            records.append({
                "seed": seed,
                "best_fitness": result.best_fitness,
                "convergence": subsample(result.history),
                "final_diversity": float(result.diversity[-1]),
            })

        values = np.array([r["best_fitness"] for r in records])
        report = {
            "config": {
                "command": "benchmark",
                "function": benchmark.name,
                "dimension": dimension,
                "optimizer": name,
                "iters": run["iters"],
                "population": run["population"],
                "base_seed": run["seed"],
                "repeats": run["repeats"],
            },
            "runs": records,
            "aggregate": {
                "runs": len(records),
                "mean_fitness": float(np.mean(values)),
                "median_fitness": float(np.median(values)),
                "best_fitness": float(np.min(values)),
                "worst_fitness": float(np.max(values)),
                "optimum": benchmark.optimum,
            },
        }
        if params.get("report_path"):
            write_report(report, params["report_path"])

        logger.info(f"Benchmark {benchmark.name} concluído: mediana {report['aggregate']['median_fitness']:.6g}")
        return to_json_compatible(report)

    except Exception as e:
        logger.error(f"Erro ao executar benchmark: {e}", exc_info=True)
        raise

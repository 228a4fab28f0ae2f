"""
Relatórios JSON das execuções de realce.

Esquema:
    {
      "config": {...},
      "runs": [{seed, optimizer, lambda, gamma, achieved_cost, oracle_cost, gap,
                metrics_before, metrics_after, wall_time, convergence}, ...],
      "aggregate": {...}            # enhance: médias sobre as execuções
                                    # compare: {otimizador: médias + estatísticas de custo}
    }

Infinitos são gravados como as strings "inf" e "-inf".
"""
import json
import math
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Sequence

import numpy as np

from swarm_enhance.logger import EnhanceLogger
from swarm_enhance.pipeline import EnhancementResult

logger = EnhanceLogger.get_logger("swarm_enhance.report")

CONVERGENCE_POINTS = 20

_AVERAGED = ("achieved_cost", "oracle_cost", "gap", "wall_time")
_METRIC_BLOCKS = ("metrics_before", "metrics_after")


def subsample(history: Sequence[float], points: int = CONVERGENCE_POINTS) -> List[float]:
    """Até `points` amostras igualmente espaçadas, sempre incluindo a última."""
    history = np.asarray(history, dtype=np.float64)
    if len(history) <= points:
        return history.tolist()
    index = np.unique(np.linspace(0, len(history) - 1, points).round().astype(int))
    return history[index].tolist()


def run_record(result: EnhancementResult) -> Dict[str, Any]:
    return {
        "seed": result.seed,
        "optimizer": result.optimizer,
        "lambda": result.lambda_,
        "gamma": result.gamma,
        "achieved_cost": result.achieved_cost,
        "oracle_cost": result.oracle_cost,
        "gap": result.gap,
        "metrics_before": result.metrics_before.to_dict(),
        "metrics_after": result.metrics_after.to_dict(),
        "wall_time": result.wall_time,
        "convergence": subsample(result.convergence_history),
    }


def _mean(values: Iterable[float]) -> float:
    return float(np.mean(np.asarray(list(values), dtype=np.float64)))


def aggregate(records: Sequence[Mapping[str, Any]]) -> Dict[str, Any]:
    """Médias aritméticas dos campos numéricos de cada execução."""
    if not records:
        return {}
    summary: Dict[str, Any] = {"runs": len(records)}
    for key in _AVERAGED:
        summary[key] = _mean(r[key] for r in records)
    for block in _METRIC_BLOCKS:
        names = records[0][block].keys()
        summary[block] = {name: _mean(r[block][name] for r in records) for name in names}
    return summary


def cost_statistics(records: Sequence[Mapping[str, Any]]) -> Dict[str, float]:
    costs = np.array([r["achieved_cost"] for r in records], dtype=np.float64)
    gaps = np.array([r["gap"] for r in records], dtype=np.float64)
    return {
        "mean_cost": float(np.mean(costs)),
        "median_cost": float(np.median(costs)),
        "std_cost": float(np.std(costs)),
        "best_cost": float(np.min(costs)),
        "worst_cost": float(np.max(costs)),
        "median_gap": float(np.median(gaps)),
    }


def build_report(config: Mapping[str, Any], results: Sequence[EnhancementResult]) -> Dict[str, Any]:
    records = [run_record(r) for r in results]
    return {"config": dict(config), "runs": records, "aggregate": aggregate(records)}


def build_compare_report(config: Mapping[str, Any],
                         sections: Mapping[str, Sequence[EnhancementResult]]) -> Dict[str, Any]:
    """Uma seção de agregados por otimizador, na ordem recebida."""
    runs: List[Dict[str, Any]] = []
    summary: Dict[str, Any] = {}
    for name, results in sections.items():
        records = [run_record(r) for r in results]
        runs.extend(records)
        section = aggregate(records)
        section.update(cost_statistics(records))
        summary[name] = section
    return {"config": dict(config), "runs": runs, "aggregate": summary}


def to_json_compatible(value: Any) -> Any:
    """Converte tipos numpy e infinitos para valores serializáveis em JSON estrito."""
    if isinstance(value, Mapping):
        return {str(k): to_json_compatible(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_compatible(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_json_compatible(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
        return value
    if isinstance(value, Path):
        return str(value)
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    return value


def dumps_report(report: Mapping[str, Any]) -> str:
    return json.dumps(to_json_compatible(report), indent=2, ensure_ascii=False, allow_nan=False)


def write_report(report: Mapping[str, Any], path) -> None:
    Path(path).write_text(dumps_report(report) + "\n", encoding="utf-8")
    logger.info(f"Relatório gravado em {path}")


def read_report(path) -> Dict[str, Any]:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def strip_timing(report: Any) -> Any:
    """Cópia do relatório sem os campos wall_time (não determinísticos)."""
    if isinstance(report, Mapping):
        return {k: strip_timing(v) for k, v in report.items() if k != "wall_time"}
    if isinstance(report, list):
        return [strip_timing(v) for v in report]
    return report

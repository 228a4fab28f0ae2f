"""
Linha de comando do swarm-enhance.

Comandos: enhance, compare, sweep, metrics, benchmark.
Códigos de saída: 0 sucesso, 1 falha de execução, 2 erro de uso.
"""
import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import List, Optional

from swarm_enhance.config import load_env_config
from swarm_enhance.histogram import HistogramError
from swarm_enhance.logger import EnhanceLogger
from swarm_enhance.metrics import MetricsError
from swarm_enhance.objective import ObjectiveError
from swarm_enhance.optimizers import SUPPORTED_TYPES, normalize_optimizer_name
from swarm_enhance.pgm import ImageIOError
from swarm_enhance.pipeline import EnhancementError
from swarm_enhance.swarm import NonFiniteFitnessError, SwarmConfigError
from swarm_enhance.synthetic import BENCHMARKS
from swarm_enhance.tools import compare_optimizers, enhance_image, image_metrics, run_benchmark, sweep_parameters
from swarm_enhance.utils import parse_float_list, parse_name_list
from swarm_enhance.validation import ParameterError

logger = EnhanceLogger.get_logger("swarm_enhance.cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

RUNTIME_ERRORS = (
    ImageIOError, HistogramError, ObjectiveError, SwarmConfigError, NonFiniteFitnessError,
    EnhancementError, MetricsError, ParameterError, ValueError, OSError,
)


@dataclass(frozen=True)
class RunConfig:
    """Caminhos e parâmetros de uma execução da CLI."""
    input_path: str
    output_path: Optional[str]
    report_path: Optional[str]
    repeats: int
    base_seed: int


def _optimizer_name(value: str) -> str:
    name = normalize_optimizer_name(value)
    if name not in SUPPORTED_TYPES:
        raise argparse.ArgumentTypeError(
            f"otimizador desconhecido {value!r} (suportados: {', '.join(SUPPORTED_TYPES)})"
        )
    return name


def _optimizer_list(value: str) -> List[str]:
    names = parse_name_list(value)
    if not names:
        raise argparse.ArgumentTypeError("lista de otimizadores vazia")
    return [_optimizer_name(name) for name in names]


def _float_list(value: str) -> List[float]:
    try:
        values = parse_float_list(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"lista numérica inválida: {value!r}")
    if not values:
        raise argparse.ArgumentTypeError("lista vazia")
    for item in values:
        _non_negative_float(str(item))
    return values


def _non_negative_float(value: str) -> float:
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"número inválido: {value!r}")
    if not math.isfinite(number) or number < 0:
        raise argparse.ArgumentTypeError(f"valor deve ser finito e >= 0: {value!r}")
    return number


def _positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"inteiro inválido: {value!r}")
    if number < 1:
        raise argparse.ArgumentTypeError(f"valor deve ser >= 1: {value!r}")
    return number


def _seed(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"semente inválida: {value!r}")
    if number < 0:
        raise argparse.ArgumentTypeError(f"semente deve ser >= 0: {value!r}")
    return number


def _add_swarm_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--iters", type=_positive_int, help="gerações do enxame (padrão 1000)")
    parser.add_argument("--pop", type=_positive_int, help="população de galinhas (padrão 20)")
    parser.add_argument("--seed", type=_seed, default=0, help="semente base (padrão 0)")
    parser.add_argument("--workers", type=_positive_int, default=1,
                        help="threads para execuções independentes (padrão 1); sem ganho de velocidade no enxame (GIL)")


def _add_weight_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lambda", dest="lambda_", type=_non_negative_float, help="peso de contraste λ (padrão 5)")
    parser.add_argument("--gamma", type=_non_negative_float, help="peso de suavidade γ (padrão 50000)")
    parser.add_argument("--no-anchor", dest="anchor_init", action="store_false",
                        help="não semeia o enxame com o histograma de entrada e o uniforme")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swarm-enhance",
        description="Realce de contraste por modificação de histograma otimizada por enxame de galinhas.",
    )
    parser.add_argument("--log-level", default=None, help="nível de log (DEBUG, INFO, WARNING, ERROR)")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    enhance = commands.add_parser("enhance", help="realça uma imagem")
    enhance.add_argument("--input", required=True, help="imagem de entrada (PGM ou PNG)")
    enhance.add_argument("--output", required=True, help="imagem de saída (melhor execução)")
    enhance.add_argument("--optimizer", type=_optimizer_name, help="icso, cso ou closed-form (padrão icso)")
    enhance.add_argument("--repeats", type=_positive_int, default=1, help="execuções independentes (padrão 1)")
    enhance.add_argument("--report", help="relatório JSON (padrão: stdout)")
    enhance.add_argument("--format", choices=["P2", "P5"], default="P5", help="formato PGM de saída")
    _add_weight_flags(enhance)
    _add_swarm_flags(enhance)

    compare = commands.add_parser("compare", help="compara otimizadores em execuções repetidas")
    compare.add_argument("--input", required=True, help="imagem de entrada")
    compare.add_argument("--optimizers", required=True, type=_optimizer_list,
                         help="lista separada por vírgulas de icso, cso, closed-form")
    compare.add_argument("--repeats", type=_positive_int, default=10, help="execuções por otimizador (padrão 10)")
    compare.add_argument("--report", help="relatório JSON (padrão: stdout)")
    _add_weight_flags(compare)
    _add_swarm_flags(compare)

    sweep = commands.add_parser("sweep", help="varre a grade λ × γ")
    sweep.add_argument("--input", required=True, help="imagem de entrada")
    sweep.add_argument("--lambdas", required=True, type=_float_list, help="valores de λ, ex.: 0,1,5,20")
    sweep.add_argument("--gammas", required=True, type=_float_list, help="valores de γ, ex.: 0,10000")
    sweep.add_argument("--optimizer", type=_optimizer_name, help="icso, cso ou closed-form (padrão icso)")
    sweep.add_argument("--output-dir", help="diretório para uma imagem por par")
    sweep.add_argument("--report", help="relatório JSON (padrão: stdout)")
    sweep.add_argument("--no-anchor", dest="anchor_init", action="store_false")
    _add_swarm_flags(sweep)

    metrics = commands.add_parser("metrics", help="medidas de qualidade de uma imagem")
    metrics.add_argument("--input", required=True, help="imagem avaliada")
    metrics.add_argument("--reference", help="imagem de referência para MSE/PSNR")

    benchmark = commands.add_parser("benchmark", help="executa o enxame numa função de teste")
    benchmark.add_argument("--function", choices=sorted(BENCHMARKS), default="sphere")
    benchmark.add_argument("--dim", type=_positive_int, default=10, help="dimensão (padrão 10)")
    benchmark.add_argument("--optimizer", choices=["icso", "cso"], default="icso")
    benchmark.add_argument("--repeats", type=_positive_int, default=5)
    benchmark.add_argument("--report", help="relatório JSON (padrão: stdout)")
    _add_swarm_flags(benchmark)
    return parser


def _run_params(args: argparse.Namespace) -> dict:
    return {
        "lambda": getattr(args, "lambda_", None),
        "gamma": getattr(args, "gamma", None),
        "optimizer": getattr(args, "optimizer", None),
        "iters": args.iters,
        "population": args.pop,
        "seed": args.seed,
        "repeats": getattr(args, "repeats", None),
        "workers": args.workers,
        "anchor_init": getattr(args, "anchor_init", True),
    }


def _emit(report: dict, report_path: Optional[str]) -> None:
    if report_path:
        return
    print(json.dumps(report, indent=2, ensure_ascii=False))


def cmd_enhance(args: argparse.Namespace) -> int:
    run = RunConfig(args.input, args.output, args.report, args.repeats, args.seed)
    report = enhance_image(dict(
        _run_params(args),
        input_path=run.input_path,
        output_path=run.output_path,
        report_path=run.report_path,
        format=args.format,
    ))
    _emit(report, run.report_path)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    report = compare_optimizers(dict(
        _run_params(args),
        input_path=args.input,
        optimizers=args.optimizers,
        report_path=args.report,
    ))
    _emit(report, args.report)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    report = sweep_parameters(dict(
        _run_params(args),
        input_path=args.input,
        lambdas=args.lambdas,
        gammas=args.gammas,
        output_dir=args.output_dir,
        report_path=args.report,
    ))
    _emit(report, args.report)
    return EXIT_OK


def cmd_metrics(args: argparse.Namespace) -> int:
    print(json.dumps(image_metrics({"input_path": args.input, "reference_path": args.reference}), indent=2))
    return EXIT_OK


def cmd_benchmark(args: argparse.Namespace) -> int:
    report = run_benchmark(dict(
        _run_params(args),
        function=args.function,
        dimension=args.dim,
        report_path=args.report,
    ))
    _emit(report, args.report)
    return EXIT_OK


COMMANDS = {
    "enhance": cmd_enhance,
    "compare": cmd_compare,
    "sweep": cmd_sweep,
    "metrics": cmd_metrics,
    "benchmark": cmd_benchmark,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse encerra com 2 em erro de uso e 0 em --help
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    load_env_config()
    if args.log_level:
        EnhanceLogger.configure(level=args.log_level)

    try:
        return COMMANDS[args.command](args)
    except RUNTIME_ERRORS as e:
        print(f"swarm-enhance: erro: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

"""
Validação de parâmetros de execução do swarm-enhance.
Implementa verificações em camadas: erros rígidos bloqueiam a execução,
faixas indicativas apenas geram avisos.
"""
import math
from numbers import Integral, Real
from typing import Any, Dict, List, Tuple

from swarm_enhance.logger import EnhanceLogger
from swarm_enhance.optimizers import SUPPORTED_TYPES, normalize_optimizer_name

logger = EnhanceLogger.get_logger("swarm_enhance.validation")


class ParameterError(ValueError):
    """Exceção levantada quando parâmetros de execução são inválidos."""
    pass


class ParameterValidator:
    """
    Validador de parâmetros de realce e comparação.
    """

    # Faixas usadas nos experimentos de referência (não obrigatórias)
    ADVISORY_LAMBDA = (0.0, 20.0)
    ADVISORY_GAMMA = (1000.0, 1e9)

    @classmethod
    def validate(cls, params: Dict[str, Any]) -> Tuple[bool, List[str]]:
        """
        Valida um dicionário de parâmetros de execução.

        Args:
            params: Chaves opcionais lambda, gamma, repeats, seed, optimizers,
                population, iters, workers

        Returns:
            Tuple[bool, List[str]]: (é_válido, mensagens de erro e aviso)
        """
        errors: List[str] = []
        warnings: List[str] = []

        # 1. Pesos do custo
        for key in ("lambda", "gamma"):
            if key in params:
                errors.extend(cls._check_weight(key, params[key]))

        # 2. Contadores inteiros
        for key in ("repeats", "population", "iters", "workers"):
            if key in params:
                errors.extend(cls._check_positive_int(key, params[key]))

        # 3. Semente
        if "seed" in params:
            errors.extend(cls._check_seed(params["seed"]))

        # 4. Nomes de otimizadores
        if "optimizers" in params:
            errors.extend(cls._check_optimizers(params["optimizers"]))

        # 5. Faixas indicativas
        if not errors:
            warnings.extend(cls._check_advisory(params))

        for message in warnings:
            logger.warning(message)
        if errors:
            logger.error(f"Parâmetros inválidos: {errors}")
        return not errors, errors + warnings

    @classmethod
    def _check_weight(cls, key: str, value: Any) -> List[str]:
        if isinstance(value, bool) or not isinstance(value, Real) or not math.isfinite(value):
            return [f"{key} deve ser um número finito (recebido {value!r})"]
        if value < 0:
            return [f"{key} deve ser >= 0 (recebido {value!r})"]
        return []

    @classmethod
    def _check_positive_int(cls, key: str, value: Any) -> List[str]:
        if isinstance(value, bool) or not isinstance(value, Integral) or value < 1:
            return [f"{key} deve ser inteiro >= 1 (recebido {value!r})"]
        return []

    @classmethod
    def _check_seed(cls, value: Any) -> List[str]:
        if isinstance(value, bool) or not isinstance(value, Integral) or value < 0:
            return [f"seed deve ser inteiro sem sinal (recebido {value!r})"]
        return []

    @classmethod
    def _check_optimizers(cls, names: Any) -> List[str]:
        if isinstance(names, str):
            names = [names]
        names = list(names or [])
        if not names:
            return ["Lista de otimizadores vazia"]
        unknown = [n for n in names if normalize_optimizer_name(n) not in SUPPORTED_TYPES]
        if unknown:
            return [f"Otimizadores não suportados: {', '.join(map(str, unknown))}. "
                    f"Tipos suportados: {list(SUPPORTED_TYPES.keys())}"]
        return []

    @classmethod
    def _check_advisory(cls, params: Dict[str, Any]) -> List[str]:
        warnings = []
        low, high = cls.ADVISORY_LAMBDA
        if "lambda" in params and not low <= params["lambda"] <= high:
            warnings.append(f"AVISO: lambda={params['lambda']} fora da faixa usual [{low:g}, {high:g}]")
        low, high = cls.ADVISORY_GAMMA
        gamma = params.get("gamma", 0)
        if gamma > 0 and not low <= gamma <= high:
            warnings.append(f"AVISO: gamma={gamma} fora da faixa usual [{low:g}, {high:g}]")
        return warnings


def validate_run_params(params: Dict[str, Any]) -> List[str]:
    """
    Função utilitária para validar parâmetros de execução.
    Levanta ParameterError se algum parâmetro for inválido.

    Returns:
        Avisos (faixas indicativas) para parâmetros válidos

    Raises:
        ParameterError: Se algum parâmetro for inválido
    """
    is_valid, messages = ParameterValidator.validate(params)
    if not is_valid:
        raise ParameterError("; ".join(messages))
    return messages


def get_validation_report(params: Dict[str, Any]) -> Dict[str, Any]:
    """
    Gera um relatório de validação sem levantar exceções.
    """
    is_valid, messages = ParameterValidator.validate(params)
    return {
        "is_valid": is_valid,
        "errors": [m for m in messages if not m.startswith("AVISO")],
        "warnings": [m for m in messages if m.startswith("AVISO")],
        "advisory_lambda": list(ParameterValidator.ADVISORY_LAMBDA),
        "advisory_gamma": list(ParameterValidator.ADVISORY_GAMMA),
    }

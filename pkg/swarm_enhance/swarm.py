"""
Otimizador por enxame de galinhas (CSO) e sua variante melhorada (ICSO)
para minimização com restrições de caixa.

Convenção: minimização; "melhor" aptidão é a menor. A cada G gerações o
enxame é reorganizado em galos, galinhas e pintinhos; galos exploram com
ruído gaussiano multiplicativo, galinhas seguem o galo do grupo e roubam
de outro indivíduo, pintinhos seguem a mãe (CSO) ou a mãe, o galo e a
própria memória com coeficiente decrescente s (ICSO).

Uma execução é uma máquina de estados sequencial dona do seu próprio
gerador aleatório; execuções distintas podem rodar em paralelo desde que a
função objetivo aceite chamadas concorrentes somente-leitura.
"""
import math
from dataclasses import dataclass, field, replace
from enum import Enum, IntEnum
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from swarm_enhance.logger import EnhanceLogger

logger = EnhanceLogger.get_logger("swarm_enhance.swarm")

Objective = Callable[[np.ndarray], float]
Bound = Union[float, Sequence[float], np.ndarray]

# Expoentes acima deste valor saturam; o passo resultante já ultrapassa qualquer caixa
_MAX_EXPONENT = 50.0


class SwarmConfigError(ValueError):
    """Configuração do enxame viola um ou mais invariantes."""

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__("Configuração inválida do enxame: " + "; ".join(self.violations))


class NonFiniteFitnessError(ArithmeticError):
    """A função objetivo devolveu NaN ou infinito."""

    def __init__(self, position: np.ndarray, value: float):
        self.position = np.array(position, copy=True)
        self.value = value
        summary = np.array2string(self.position, precision=6, threshold=8)
        super().__init__(f"Aptidão não finita ({value!r}) na posição {summary}")


class Variant(str, Enum):
    CSO = "cso"
    ICSO = "icso"


class Role(IntEnum):
    ROOSTER = 0
    HEN = 1
    CHICK = 2


def _round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def table_counts(population: int) -> Tuple[int, int, int, int]:
    """
    Divisão de papéis padrão: RN = 0.05N, HN = 0.75N, MN = 0.1HN, CN = N - RN - HN.

    Returns:
        (RN, HN, CN, MN)
    """
    rooster_count = max(1, _round_half_up(0.05 * population))
    hen_count = _round_half_up(0.75 * population)
    mother_count = max(1, int(math.floor(0.1 * hen_count)))
    chick_count = population - rooster_count - hen_count
    return rooster_count, hen_count, chick_count, mother_count


@dataclass(frozen=True)
class SwarmConfig:
    population: int = 20
    rooster_count: int = 1
    hen_count: int = 15
    chick_count: int = 4
    mother_count: int = 1
    reorg_period: int = 10
    max_iters: int = 1000
    chick_follow_rooster: float = 0.4
    chick_follow_mother_range: Tuple[float, float] = (0.4, 1.0)
    s_min: float = 0.4
    s_max: float = 0.9
    epsilon: float = 1e-10
    lower_bound: Bound = 0.0
    upper_bound: Bound = 1.0
    dimension: int = 1
    rng_seed: int = 0
    variant: Variant = Variant.ICSO
    literal_s2: bool = False
    per_dimension_rand: bool = False
    per_dimension_randn: bool = True
    move_from_best: bool = False

    @classmethod
    def table_defaults(cls, population: int = 20, **overrides) -> "SwarmConfig":
        """Configuração com a divisão de papéis e os coeficientes padrão."""
        rooster_count, hen_count, chick_count, mother_count = table_counts(population)
        values = dict(
            population=population,
            rooster_count=rooster_count,
            hen_count=hen_count,
            chick_count=chick_count,
            mother_count=mother_count,
        )
        values.update(overrides)
        return cls(**values)

    def with_problem(self, dimension: int, lower_bound: Bound, upper_bound: Bound) -> "SwarmConfig":
        return replace(self, dimension=dimension, lower_bound=lower_bound, upper_bound=upper_bound)

    def lower(self) -> np.ndarray:
        return np.broadcast_to(np.asarray(self.lower_bound, dtype=np.float64), (self.dimension,)).copy()

    def upper(self) -> np.ndarray:
        return np.broadcast_to(np.asarray(self.upper_bound, dtype=np.float64), (self.dimension,)).copy()

    def violations(self) -> List[str]:
        """Lista os invariantes violados (vazia quando a configuração é válida)."""
        problems = []
        counts = {
            "population": self.population,
            "rooster_count": self.rooster_count,
            "hen_count": self.hen_count,
            "chick_count": self.chick_count,
            "mother_count": self.mother_count,
            "reorg_period": self.reorg_period,
            "max_iters": self.max_iters,
            "dimension": self.dimension,
        }
        for name, value in counts.items():
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool) or value < 1:
                problems.append(f"{name} deve ser inteiro positivo (recebido {value!r})")
        if problems:
            return problems

        if self.rooster_count + self.hen_count + self.chick_count != self.population:
            problems.append("RN + HN + CN deve ser igual a N")
        if not self.rooster_count < self.hen_count:
            problems.append("RN deve ser menor que HN")
        if self.mother_count > self.hen_count:
            problems.append("MN não pode exceder HN")

        low, high = self.chick_follow_mother_range
        if not (0.0 <= low <= high):
            problems.append("faixa de FL deve satisfazer 0 <= min <= max")
        if not (0.0 < self.s_min <= self.s_max):
            problems.append("s deve satisfazer 0 < s_min <= s_max")
        if not (self.epsilon > 0):
            problems.append("epsilon deve ser positivo")
        if not isinstance(self.rng_seed, (int, np.integer)) or self.rng_seed < 0:
            problems.append("rng_seed deve ser inteiro sem sinal")
        try:
            Variant(self.variant)
        except ValueError:
            problems.append(f"variante desconhecida: {self.variant!r}")

        try:
            lower, upper = self.lower(), self.upper()
        except ValueError:
            problems.append("limites devem ser escalares ou ter comprimento igual à dimensão")
        else:
            if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
                problems.append("limites devem ser finitos")
            elif np.any(lower >= upper):
                problems.append("lower_bound deve ser menor que upper_bound em toda dimensão")
        return problems

    def validate(self) -> "SwarmConfig":
        problems = self.violations()
        if problems:
            raise SwarmConfigError(problems)
        return self


@dataclass(frozen=True)
class Chicken:
    """Visão de um indivíduo do enxame (cópia; alterá-la não altera o estado)."""
    index: int
    position: np.ndarray
    fitness: float
    role: Role
    group: int
    mother: Optional[int]
    personal_best_position: np.ndarray
    personal_best_fitness: float


@dataclass
class SwarmState:
    positions: np.ndarray
    fitness: np.ndarray
    best_positions: np.ndarray
    best_fitness: np.ndarray
    global_best_position: np.ndarray
    global_best_fitness: float
    rng: np.random.Generator
    generation: int = 0
    roles: np.ndarray = None
    group: np.ndarray = None
    mother: np.ndarray = None
    is_mother: np.ndarray = None
    roosters: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))
    hens: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))
    chicks: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))

    @property
    def chickens(self) -> List[Chicken]:
        return [self.chicken(i) for i in range(len(self.fitness))]

    def chicken(self, i: int) -> Chicken:
        mother = int(self.mother[i]) if self.mother is not None and self.mother[i] >= 0 else None
        return Chicken(
            index=i,
            position=self.positions[i].copy(),
            fitness=float(self.fitness[i]),
            role=Role(int(self.roles[i])),
            group=int(self.group[i]),
            mother=mother,
            personal_best_position=self.best_positions[i].copy(),
            personal_best_fitness=float(self.best_fitness[i]),
        )


@dataclass
class SwarmResult:
    best_position: np.ndarray
    best_fitness: float
    history: np.ndarray
    diversity: np.ndarray
    state: SwarmState


def _evaluate(objective: Objective, position: np.ndarray) -> float:
    value = float(objective(position))
    if not math.isfinite(value):
        raise NonFiniteFitnessError(position, value)
    return value


def _clamp(position: np.ndarray, config: SwarmConfig) -> np.ndarray:
    return np.minimum(np.maximum(position, config.lower()), config.upper())


def _reference(state: SwarmState, config: SwarmConfig):
    if config.move_from_best:
        return state.best_positions, state.best_fitness
    return state.positions, state.fitness


def _exp(exponent: float) -> float:
    return math.exp(min(exponent, _MAX_EXPONENT))


def _lerp(x: np.ndarray, target: np.ndarray, t: float) -> np.ndarray:
    """x + t·(target - x), exato em t = 0, em t = 1 e quando x == target."""
    if t <= 0.5:
        return x + t * (target - x)
    return target - (1.0 - t) * (target - x)


def rooster_variance(f_i: float, f_k: Optional[float], epsilon: float) -> float:
    """σ² = 1 se f_i <= f_k, senão exp((f_k - f_i) / (|f_i| + ε)); sem outro galo, σ² = 1."""
    if f_k is None or f_i <= f_k:
        return 1.0
    return _exp((f_k - f_i) / (abs(f_i) + epsilon))


def hen_coefficients(f_i: float, f_r1: float, f_r2: Optional[float], epsilon: float,
                     literal_s2: bool = False) -> Tuple[float, float]:
    """
    S1 = exp((f_i - f_r1) / (|f_i| + ε)) e S2 = exp(f_r2 - f_i).

    Com literal_s2, S2 = 1 (forma impressa exp(f_i - f_i)).
    """
    s1 = _exp((f_i - f_r1) / (abs(f_i) + epsilon))
    if f_r2 is None:
        return s1, 0.0
    s2 = 1.0 if literal_s2 else _exp(f_r2 - f_i)
    return s1, s2


def self_learning_coefficient(t: float, config: SwarmConfig) -> float:
    """s = s_min * (s_max / s_min) ** (1 / (1 + 10 t / Itermax)); s(0) = s_max."""
    exponent = 1.0 / (1.0 + 10.0 * t / config.max_iters)
    return config.s_min * (config.s_max / config.s_min) ** exponent


def assign_roles(state: SwarmState, config: SwarmConfig) -> SwarmState:
    """
    Ordena por aptidão (empates: menor índice primeiro) e redistribui papéis,
    grupos e relações mãe-filho.
    """
    _, fitness = _reference(state, config)
    rng = state.rng
    order = np.argsort(fitness, kind="stable")
    rn, hn = config.rooster_count, config.hen_count
    roosters, hens, chicks = order[:rn], order[rn:rn + hn], order[rn + hn:]

    n = len(fitness)
    roles = np.empty(n, dtype=np.int64)
    roles[roosters] = Role.ROOSTER
    roles[hens] = Role.HEN
    roles[chicks] = Role.CHICK

    group = np.empty(n, dtype=np.int64)
    group[roosters] = roosters
    group[hens] = roosters[rng.integers(rn, size=hn)]

    mothers = hens[rng.choice(hn, size=config.mother_count, replace=False)]
    is_mother = np.zeros(n, dtype=bool)
    is_mother[mothers] = True

    mother = np.full(n, -1, dtype=np.int64)
    if len(chicks):
        mother[chicks] = mothers[rng.integers(len(mothers), size=len(chicks))]
        group[chicks] = group[mother[chicks]]

    state.roles = roles
    state.group = group
    state.mother = mother
    state.is_mother = is_mother
    state.roosters, state.hens, state.chicks = roosters, hens, chicks
    return state


def initialize(config: SwarmConfig, objective: Objective,
               initial_positions: Optional[np.ndarray] = None) -> SwarmState:
    """
    Sorteia N posições uniformes na caixa, avalia e atribui papéis.

    Args:
        config: Configuração validada do enxame
        objective: Função posição -> real a minimizar
        initial_positions: Linhas opcionais (k x dim) que substituem as k primeiras
            posições depois do sorteio, sem alterar a sequência aleatória

    Raises:
        SwarmConfigError: Se a configuração for inválida
        NonFiniteFitnessError: Se a objetivo devolver valor não finito
    """
    config.validate()
    rng = np.random.default_rng(config.rng_seed)
    lower, upper = config.lower(), config.upper()
    positions = rng.uniform(lower, upper, size=(config.population, config.dimension))

    if initial_positions is not None:
        anchors = np.atleast_2d(np.asarray(initial_positions, dtype=np.float64))
        if anchors.shape[1] != config.dimension or anchors.shape[0] > config.population:
            raise SwarmConfigError([
                f"initial_positions deve ter forma (k<={config.population}, {config.dimension}), "
                f"recebido {anchors.shape}"
            ])
        positions[:len(anchors)] = np.minimum(np.maximum(anchors, lower), upper)

    fitness = np.array([_evaluate(objective, p) for p in positions])
    best = int(np.argmin(fitness))
    state = SwarmState(
        positions=positions,
        fitness=fitness,
        best_positions=positions.copy(),
        best_fitness=fitness.copy(),
        global_best_position=positions[best].copy(),
        global_best_fitness=float(fitness[best]),
        rng=rng,
    )
    return assign_roles(state, config)


def update_rooster(i: int, state: SwarmState, config: SwarmConfig) -> np.ndarray:
    """x' = x + Randn(0, σ²) * x, com σ² comparando o galo i a outro galo k sorteado."""
    positions, fitness = _reference(state, config)
    rng = state.rng
    others = state.roosters[state.roosters != i]
    f_k = None
    if len(others):
        f_k = fitness[others[rng.integers(len(others))]]
    sigma2 = rooster_variance(fitness[i], f_k, config.epsilon)

    x = positions[i]
    shape = config.dimension if config.per_dimension_randn else 1
    noise = rng.standard_normal(shape)
    return _clamp(x + math.sqrt(sigma2) * noise * x, config)


def update_hen(i: int, state: SwarmState, config: SwarmConfig) -> np.ndarray:
    """x' = x + S1·Rand·(x_r1 - x) + S2·Rand·(x_r2 - x); r1 é o galo do grupo, r2 outro adulto."""
    positions, fitness = _reference(state, config)
    rng = state.rng
    r1 = state.group[i]
    adults = np.concatenate([state.roosters, state.hens])
    pool = adults[(adults != r1) & (adults != i)]
    r2 = pool[rng.integers(len(pool))] if len(pool) else None

    s1, s2 = hen_coefficients(
        fitness[i], fitness[r1], None if r2 is None else fitness[r2],
        config.epsilon, config.literal_s2,
    )
    shape = config.dimension if config.per_dimension_rand else 1
    rand1 = rng.random(shape)
    rand2 = rng.random(shape)

    x = positions[i]
    new = x + s1 * rand1 * (positions[r1] - x)
    if r2 is not None:
        new = new + s2 * rand2 * (positions[r2] - x)
    return _clamp(new, config)


def update_chick(i: int, state: SwarmState, config: SwarmConfig) -> np.ndarray:
    """
    CSO: x' = x + FL·(x_m - x).
    ICSO: x' = s·x + FL·(x_m - x) + F·(x_r - x), r = galo do grupo da mãe.
    """
    positions, _ = _reference(state, config)
    m = state.mother[i]
    low, high = config.chick_follow_mother_range
    follow_mother = state.rng.uniform(low, high)

    x = positions[i]
    new = _lerp(x, positions[m], follow_mother)
    if Variant(config.variant) is Variant.ICSO:
        # s·x + FL·(x_m - x) + F·(x_r - x), com o termo FL em comum com o CSO
        r = state.group[m]
        s = self_learning_coefficient(state.generation, config)
        new = (s - 1.0) * x + new + config.chick_follow_rooster * (positions[r] - x)
    return _clamp(new, config)


def _move(indices: np.ndarray, update, state: SwarmState, config: SwarmConfig, objective: Objective) -> None:
    for i in indices:
        new = update(i, state, config)
        state.positions[i] = new
        state.fitness[i] = _evaluate(objective, new)


def step(state: SwarmState, config: SwarmConfig, objective: Objective) -> SwarmState:
    """Uma geração: reorganiza se t % G == 0 (t > 0), move por papel e atualiza melhores."""
    if state.generation > 0 and state.generation % config.reorg_period == 0:
        assign_roles(state, config)

    _move(state.roosters, update_rooster, state, config, objective)
    _move(state.hens, update_hen, state, config, objective)
    _move(state.chicks, update_chick, state, config, objective)

    improved = state.fitness < state.best_fitness
    state.best_positions[improved] = state.positions[improved]
    state.best_fitness[improved] = state.fitness[improved]

    best = int(np.argmin(state.best_fitness))
    if state.best_fitness[best] < state.global_best_fitness:
        state.global_best_fitness = float(state.best_fitness[best])
        state.global_best_position = state.best_positions[best].copy()

    state.generation += 1
    return state


def swarm_diversity(state: SwarmState) -> float:
    """Distância média das posições ao centróide do enxame."""
    centered = state.positions - state.positions.mean(axis=0)
    return float(np.mean(np.linalg.norm(centered, axis=1)))


def minimize(objective: Objective, config: SwarmConfig,
             initial_positions: Optional[np.ndarray] = None) -> SwarmResult:
    """
    Executa Itermax gerações e devolve o melhor ponto e o histórico por geração.

    Raises:
        SwarmConfigError: Configuração inválida
        NonFiniteFitnessError: Objetivo não finito em alguma posição
    """
    state = initialize(config, objective, initial_positions)
    logger.info(
        f"Iniciando {Variant(config.variant).value.upper()}: N={config.population}, "
        f"dim={config.dimension}, Itermax={config.max_iters}, seed={config.rng_seed}"
    )
    history = np.empty(config.max_iters)
    diversity = np.empty(config.max_iters)
    for t in range(config.max_iters):
        step(state, config, objective)
        history[t] = state.global_best_fitness
        diversity[t] = swarm_diversity(state)

    logger.info(f"Otimização concluída. Melhor aptidão: {state.global_best_fitness:.6g}")
    return SwarmResult(
        best_position=state.global_best_position.copy(),
        best_fitness=state.global_best_fitness,
        history=history,
        diversity=diversity,
        state=state,
    )

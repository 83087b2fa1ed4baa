"""Elitist genetic search over ring-lattice truth tables.

Each generation the bottom half is culled, survivors are kept unchanged, and
the population is refilled with offspring of rank-weighted parent pairs.
Every random draw comes from a stream keyed by ``(master_seed, purpose,
generation, index)``, so a run depends only on its config.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

import numpy as np

from .info import intervention_distribution, o_information, tse_complexity
from .network import IN_DEGREE, N_NODES, BooleanNetwork, random_network, transition_map

log = logging.getLogger(__name__)

# stream purposes
_INIT, _FITNESS, _OFFSPRING = 0, 1, 2


class Objective(str, enum.Enum):
    MAX_REDUNDANCY = "MAX_REDUNDANCY"
    MAX_SYNERGY = "MAX_SYNERGY"
    MAX_TSE = "MAX_TSE"

    @property
    def class_label(self) -> str:
        return {"MAX_REDUNDANCY": "redundant", "MAX_SYNERGY": "synergistic", "MAX_TSE": "complex"}[self.value]

    @property
    def default_population(self) -> int:
        return 200 if self is Objective.MAX_TSE else 500


class DegeneratePopulationError(RuntimeError):
    pass


@dataclass(frozen=True)
class EvolutionConfig:
    objective: Objective = Objective.MAX_REDUNDANCY
    population_size: int | None = None
    generations: int = 750
    mutation_rate: float = 0.001
    tse_subset_cap: int = 75
    master_seed: int = 0
    n: int = N_NODES
    k: int = IN_DEGREE

    def __post_init__(self):
        object.__setattr__(self, "objective", Objective(self.objective))
        if self.population_size is None:
            object.__setattr__(self, "population_size", self.objective.default_population)
        if self.population_size < 4 or self.population_size % 2:
            raise ValueError(f"population_size must be even and >= 4, got {self.population_size}")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ValueError(f"mutation_rate must lie in [0, 1], got {self.mutation_rate}")
        if self.generations < 0:
            raise ValueError("generations must be >= 0")
        if self.tse_subset_cap < 1:
            raise ValueError("tse_subset_cap must be >= 1")


@dataclass(frozen=True)
class GenerationRecord:
    generation: int
    fitness_mean: float
    fitness_max: float
    fitness_min: float

    @classmethod
    def of(cls, generation: int, fitnesses) -> "GenerationRecord":
        f = np.asarray(fitnesses, dtype=np.float64)
        return cls(generation, float(f.mean()), float(f.max()), float(f.min()))


@dataclass
class EvolutionResult:
    config: EvolutionConfig
    population: list[BooleanNetwork]
    fitnesses: np.ndarray
    records: list[GenerationRecord] = field(default_factory=list)

    def fittest(self, count: int = 1) -> list[BooleanNetwork]:
        return self.population[:count]


def stream(master_seed: int, purpose: int, generation: int, index: int) -> np.random.Generator:
    return np.random.default_rng([master_seed, purpose, generation, index])


def fitness(
    net: BooleanNetwork,
    objective: Objective,
    tse_subset_cap: int = 75,
    rng: np.random.Generator | None = None,
) -> float:
    """Objective value of a network; higher is always fitter."""
    d = intervention_distribution(transition_map(net))
    objective = Objective(objective)
    if objective is Objective.MAX_REDUNDANCY:
        return o_information(d)
    if objective is Objective.MAX_SYNERGY:
        return -o_information(d)
    return tse_complexity(d, tse_subset_cap, rng)


def cull_and_rank(fitnesses) -> list[int]:
    """Indices of the surviving top half, ordered worst to best.

    Ties favour the lower population index. The survivor at list position
    ``r`` has rank weight ``r + 1``.
    """
    f = np.asarray(fitnesses, dtype=np.float64)
    best_first = np.lexsort((np.arange(len(f)), -f))
    keep = best_first[: len(f) // 2]
    return [int(i) for i in keep[::-1]]


def crossover(a: BooleanNetwork, b: BooleanNetwork, rng: np.random.Generator) -> BooleanNetwork:
    """Per node, a uniformly random half of the truth-table rows comes from ``a``."""
    n, rows = a.tables.shape
    order = np.argsort(rng.random((n, rows)), axis=1)
    from_a = np.zeros((n, rows), dtype=bool)
    np.put_along_axis(from_a, order[:, : rows // 2], True, axis=1)
    return BooleanNetwork(np.where(from_a, a.tables, b.tables))


def mutate(net: BooleanNetwork, rate: float, rng: np.random.Generator) -> BooleanNetwork:
    """Flip each truth-table bit independently with probability ``rate``."""
    flips = rng.random(net.tables.shape) < rate
    if not flips.any():
        return net
    return BooleanNetwork(net.tables ^ flips.astype(np.uint8))


def rank_weights(n_survivors: int) -> np.ndarray:
    w = np.arange(1, n_survivors + 1, dtype=np.float64)
    return w / w.sum()


def select_parents(n_survivors: int, rng: np.random.Generator) -> tuple[int, int]:
    """Two distinct survivor positions drawn with probability proportional to rank."""
    w = rank_weights(n_survivors)
    first = int(rng.choice(n_survivors, p=w))
    w2 = w.copy()
    w2[first] = 0.0
    second = int(rng.choice(n_survivors, p=w2 / w2.sum()))
    return first, second


def next_generation(
    survivors: list[BooleanNetwork],
    population_size: int,
    mutation_rate: float,
    master_seed: int = 0,
    generation: int = 0,
) -> list[BooleanNetwork]:
    """Survivors (ranked worst to best) followed by freshly bred offspring."""
    if len(survivors) < 2:
        raise DegeneratePopulationError(f"need at least 2 survivors to mate, got {len(survivors)}")
    offspring = []
    for j in range(population_size - len(survivors)):
        rng = stream(master_seed, _OFFSPRING, generation, j)
        pa, pb = select_parents(len(survivors), rng)
        child = crossover(survivors[pa], survivors[pb], rng)
        offspring.append(mutate(child, mutation_rate, rng))
    return list(survivors) + offspring


def _evaluate(nets, config: EvolutionConfig, generation: int, offset: int) -> list[float]:
    return [
        fitness(net, config.objective, config.tse_subset_cap, stream(config.master_seed, _FITNESS, generation, offset + i))
        for i, net in enumerate(nets)
    ]


def run_evolution(config: EvolutionConfig, progress=None) -> EvolutionResult:
    """Run the full search; the final population is sorted fittest first.

    Fitness is computed once per individual, when it is created, and carried
    with it while it survives.
    """
    size = config.population_size
    population = [random_network(stream(config.master_seed, _INIT, 0, i), config.n, config.k) for i in range(size)]
    fit = _evaluate(population, config, 0, 0)
    records = [GenerationRecord.of(0, fit)]

    for gen in range(1, config.generations + 1):
        ranked = cull_and_rank(fit)
        survivors = [population[i] for i in ranked]
        population = next_generation(survivors, size, config.mutation_rate, config.master_seed, gen)
        fit = [fit[i] for i in ranked] + _evaluate(population[len(ranked) :], config, gen, len(ranked))
        records.append(GenerationRecord.of(gen, fit))
        if progress is not None:
            progress(records[-1])
        if gen % 50 == 0:
            log.info("%s gen %d: max %.3f mean %.3f", config.objective.value, gen, records[-1].fitness_max, records[-1].fitness_mean)

    order = np.lexsort((np.arange(size), -np.asarray(fit)))
    return EvolutionResult(
        config=config,
        population=[population[i] for i in order],
        fitnesses=np.asarray(fit)[order],
        records=records,
    )

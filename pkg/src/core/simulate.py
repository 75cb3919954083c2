# src/core/simulate.py
"""
Monte Carlo simulation of the radiometer warden and of Bob's outage.

Trials are grouped in fixed-size blocks. Block ``b`` of stream ``s``
draws from ``PCG64(SeedSequence(seed, spawn_key=(s, b)))``, so a report
depends only on the seed and the block size, never on the worker count.
Stream 0 drives detection, stream 1 drives outage.
"""

# imports built-in modules
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence, TypeVar

# imports third-party modules
import numpy as np
from numpy.typing import ArrayLike

# imports local modules
from src.config import config
from src.exceptions import InvalidParameterError
from src.models import SystemParams, validate
from src.utils.logger import get_sim_logger

# Simulation logger
logger = get_sim_logger()

DETECTION_STREAM = 0
OUTAGE_STREAM = 1

T = TypeVar("T")


@dataclass(frozen=True)
class SimConfig:
    """Monte Carlo settings.

    Attributes
    ----------
    symbols_per_slot : int
        N, the number of symbols Willie averages per slot.
    trials : int
        Number of simulated slots.
    seed : int
        Root seed of every random stream.
    hypothesis_mix : float
        Share of detection trials that are H1 (Alice transmits) slots.
        H1 slots are spread evenly over the trial indices, so exactly
        ``floor(trials * hypothesis_mix)`` of them are H1.
    block_size : int
        Trials per random-stream block.
    workers : int
        Threads evaluating blocks; does not change results.
    """

    symbols_per_slot: int = field(default_factory=lambda: config.SIM_SYMBOLS_PER_SLOT)
    trials: int = field(default_factory=lambda: config.SIM_TRIALS)
    seed: int = field(default_factory=lambda: config.SIM_SEED)
    hypothesis_mix: float = 0.5
    block_size: int = field(default_factory=lambda: config.SIM_BLOCK_SIZE)
    workers: int = field(default_factory=lambda: config.SIM_WORKERS)

    def __post_init__(self) -> None:
        if self.symbols_per_slot < 1:
            raise InvalidParameterError("symbols_per_slot>=1", f"N={self.symbols_per_slot}")
        if self.trials < 1:
            raise InvalidParameterError("trials>=1", f"trials={self.trials}")
        if not 0.0 < self.hypothesis_mix < 1.0:
            raise InvalidParameterError("hypothesis_mix in (0,1)", f"mix={self.hypothesis_mix}")
        if self.block_size < 1 or self.workers < 1:
            raise InvalidParameterError(
                "block_size>=1 and workers>=1",
                f"block_size={self.block_size}, workers={self.workers}",
            )

    @property
    def blocks(self) -> int:
        return math.ceil(self.trials / self.block_size)

    def block_length(self, block: int) -> int:
        return min(self.block_size, self.trials - block * self.block_size)

    @property
    def h1_trials(self) -> int:
        return math.floor(self.trials * self.hypothesis_mix)

    def alice_slots(self, block: int) -> np.ndarray:
        """H1 mask of one block; slot i is H1 when floor(i * mix) steps up at i + 1."""
        start = block * self.block_size
        index = np.arange(start, start + self.block_length(block), dtype=float)
        return np.floor((index + 1.0) * self.hypothesis_mix) > np.floor(index * self.hypothesis_mix)


@dataclass(frozen=True)
class Estimate:
    """Binomial proportion with its standard error sqrt(p (1 - p) / n)."""

    value: float
    stderr: float
    count: int

    @classmethod
    def from_counts(cls, hits: int, count: int) -> "Estimate":
        if count == 0:
            return cls(math.nan, math.nan, 0)
        p = hits / count
        return cls(p, math.sqrt(p * (1.0 - p) / count), count)


@dataclass(frozen=True)
class SimReport:
    """Empirical detection and/or outage figures from one run.

    Detection runs fill the first three estimates, outage runs the last
    two fields. ``empirical_xi`` carries the combined standard error
    sqrt(se_fa^2 + se_md^2).
    """

    empirical_pfa: Estimate | None = None
    empirical_pmd: Estimate | None = None
    empirical_xi: Estimate | None = None
    empirical_lambda: Estimate | None = None
    empirical_omega: float | None = None


def block_rng(seed: int, stream: int, block: int) -> np.random.Generator:
    """Generator for one block of one stream."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream, block))))


def draw_test_statistic(
    rng: np.random.Generator, power: ArrayLike, symbols_per_slot: int, size: int
) -> np.ndarray:
    """Willie's average received power over N complex Gaussian symbols.

    ``power * chi2(2N) / (2N)``, drawn as ``power * Gamma(N, 1) / N``.
    """
    chi = rng.standard_gamma(symbols_per_slot, size) / symbols_per_slot
    return np.asarray(power, dtype=float) * chi


def _run_blocks(cfg: SimConfig, run_block: Callable[[int], T]) -> list[T]:
    """Evaluate every block; results come back in block order."""
    if cfg.workers == 1:
        return [run_block(b) for b in range(cfg.blocks)]
    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        return list(pool.map(run_block, range(cfg.blocks)))


def simulate_detection_sweep(
    params: SystemParams, gamma_grid: Sequence[float], cfg: SimConfig
) -> list[SimReport]:
    """Empirical P_FA, P_MD and their sum at every threshold of ``gamma_grid``.

    All thresholds are applied to the same simulated statistics, so the
    empirical error curve is smooth in gamma.
    """
    validate(params, check_epsilon=False)
    gammas = np.asarray(gamma_grid, dtype=float)
    if gammas.ndim != 1 or gammas.size == 0:
        raise InvalidParameterError("gamma grid non-empty", f"shape={gammas.shape}")
    if not 1 <= cfg.h1_trials < cfg.trials:
        raise InvalidParameterError(
            "both hypotheses need at least one trial",
            f"trials={cfg.trials}, hypothesis_mix={cfg.hypothesis_mix}",
        )

    def run_block(block: int) -> tuple[int, int, np.ndarray, np.ndarray]:
        rng = block_rng(cfg.seed, DETECTION_STREAM, block)
        n = cfg.block_length(block)
        alice_on = cfg.alice_slots(block)
        jammer_on = rng.random(n) < params.p_j
        jam_power = rng.uniform(params.p_min, params.p_max, n)
        power = alice_on * params.p_a + jammer_on * jam_power + params.sigma_w2
        statistic = draw_test_statistic(rng, power, cfg.symbols_per_slot, n)

        decide_h1 = statistic[:, None] >= gammas[None, :]
        false_alarms = np.count_nonzero(decide_h1 & ~alice_on[:, None], axis=0)
        misses = np.count_nonzero(~decide_h1 & alice_on[:, None], axis=0)
        logger.debug(f"Detection block {block}: {n} trials")
        return int(n - alice_on.sum()), int(alice_on.sum()), false_alarms, misses

    h0_slots = h1_slots = 0
    false_alarms = np.zeros(gammas.size, dtype=np.int64)
    misses = np.zeros(gammas.size, dtype=np.int64)
    for n0, n1, fa, md in _run_blocks(cfg, run_block):
        h0_slots += n0
        h1_slots += n1
        false_alarms += fa
        misses += md

    reports = []
    for fa, md in zip(false_alarms, misses):
        pfa = Estimate.from_counts(int(fa), h0_slots)
        pmd = Estimate.from_counts(int(md), h1_slots)
        xi = Estimate(
            min(1.0, pfa.value + pmd.value),
            math.hypot(pfa.stderr, pmd.stderr),
            cfg.trials,
        )
        reports.append(SimReport(empirical_pfa=pfa, empirical_pmd=pmd, empirical_xi=xi))

    logger.info(
        f"Detection simulation: {cfg.trials} trials, N={cfg.symbols_per_slot}, "
        f"{gammas.size} thresholds, seed={cfg.seed}"
    )
    return reports


def simulate_detection(params: SystemParams, gamma: float, cfg: SimConfig) -> SimReport:
    """Empirical detection errors of the radiometer at one threshold."""
    return simulate_detection_sweep(params, [gamma], cfg)[0]


def simulate_outage(params: SystemParams, cfg: SimConfig) -> SimReport:
    """Empirical outage probability and throughput at ``params.rate``."""
    validate(params, check_epsilon=False)

    def run_block(block: int) -> int:
        rng = block_rng(cfg.seed, OUTAGE_STREAM, block)
        n = cfg.block_length(block)
        jammer_on = rng.random(n) < params.p_j
        jam_power = rng.uniform(params.p_min, params.p_max, n)
        capacity = np.log2(1.0 + params.p_a / (jammer_on * jam_power + params.sigma_b2))
        return int(np.count_nonzero(capacity < params.rate))

    outages = sum(_run_blocks(cfg, run_block))
    lam = Estimate.from_counts(outages, cfg.trials)
    omega = params.rate * (1.0 - lam.value)
    logger.info(f"Outage simulation: {cfg.trials} trials, lambda={lam.value!r}, seed={cfg.seed}")
    return SimReport(empirical_lambda=lam, empirical_omega=omega)

"""
Trace generators: non-stationary Zipf, perturbation, adversarial cycles and
policy-coupled streams.

Random stream order for a Zipf trace of seed ``s`` (SplitMix64(s)):
1. at each phase start, one Fisher-Yates shuffle of the M block ids
   (M - 1 draws); the first ``hot_set_size`` entries are the hot set in rank
   order, the rest hold the cold ranks;
2. then one ``next_float`` per step of that phase, mapped to a rank by
   inverse CDF over weights ``rank ** -alpha``.
A coupled trace keeps consuming the same stream after the exogenous trace is
complete: one ``next_float`` coupling coin per step.
"""

import logging
import math
from typing import List, Optional

import numpy as np

from cache.cache_state import CacheState
from cache.policies import PolicyAux, policy_step
from cache.policy_kind import PolicyKind
from utils.error_handler import ConfigurationError, UsageError
from utils.rng import COUPLING_POLICY_STREAM, SplitMix64, derive_seed

from .trace_types import PerturbedTrace, Trace, TraceKind, ZipfSpec

logger = logging.getLogger("paging_lab.workload.generators")

_FLOOR_EPSILON = 1e-9


def flip_count(beta: float, length_t: int) -> int:
    """``floor(beta * T)``, robust to binary rounding of beta (0.29 * 100 == 29)."""
    return int(math.floor(beta * length_t + _FLOOR_EPSILON))


def _check_fraction(value: float, name: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise ConfigurationError(f"{name} must be in [0, 1], got {value}")


class ZipfTraceGenerator:
    """
    Generates one non-stationary Zipf trace.

    After ``generate`` the generator keeps the per-phase rank orders in
    ``rankings`` and its random stream in ``rng`` (positioned right after the
    last per-step draw).
    """

    def __init__(self, spec: ZipfSpec, seed: int):
        """
        Initialize the generator.

        Args:
            spec: Workload parameters
            seed: 64-bit seed
        """
        self.spec = spec
        self.seed = seed
        self.rng = SplitMix64(seed)
        self.rankings: List[List[int]] = []

        ranked = spec.universe_m if spec.cold_tail else spec.hot_set_size
        weights = np.arange(1, ranked + 1, dtype=np.float64) ** -spec.exponent_alpha
        cdf = np.cumsum(weights)
        self._cdf = cdf / cdf[-1]

    def _draw_ranks(self, count: int) -> np.ndarray:
        draws = np.fromiter(
            (self.rng.next_float() for _ in range(count)), dtype=np.float64, count=count
        )
        ranks = np.searchsorted(self._cdf, draws, side="right")
        return np.minimum(ranks, len(self._cdf) - 1)

    def generate(self) -> Trace:
        """
        Produce the trace.

        Returns:
            Trace with ``phase_boundaries`` at every multiple of ``shift_interval``
        """
        spec = self.spec
        requests = np.empty(spec.length_t, dtype=np.int64)
        boundaries = []

        for start in range(0, spec.length_t, spec.shift_interval):
            if start > 0:
                boundaries.append(start)
            order = self.rng.permutation(spec.universe_m)
            self.rankings.append(order)
            stop = min(start + spec.shift_interval, spec.length_t)
            ranks = self._draw_ranks(stop - start)
            requests[start:stop] = np.asarray(order, dtype=np.int64)[ranks]

        logger.debug(
            f"Generated Zipf trace: M={spec.universe_m} T={spec.length_t} "
            f"phases={len(self.rankings)} seed={self.seed}"
        )
        return Trace(
            requests=tuple(int(r) for r in requests),
            universe_m=spec.universe_m,
            length_t=spec.length_t,
            phase_boundaries=tuple(boundaries),
            kind=TraceKind.ZIPF,
            seed=self.seed,
        )


def gen_zipf_trace(spec: ZipfSpec, seed: int) -> Trace:
    """Generate a non-stationary Zipf trace; deterministic in ``(spec, seed)``."""
    return ZipfTraceGenerator(spec, seed).generate()


def perturb_trace(base: Trace, beta: float, seed: int) -> PerturbedTrace:
    """
    Replace exactly ``floor(beta * T)`` distinct positions of ``base``.

    Positions are chosen uniformly without replacement; each chosen position
    gets a block drawn uniformly from the ``M - 1`` blocks other than the
    original one. Draw order: position selection, then one replacement draw
    per position in ascending position order.

    Args:
        base: Non-empty trace
        beta: Fraction of positions to flip
        seed: 64-bit seed

    Raises:
        ConfigurationError: If beta is outside [0, 1] or flips are impossible
        UsageError: If ``base`` is empty
    """
    _check_fraction(beta, "beta")
    if base.length_t == 0:
        raise UsageError("cannot perturb an empty trace")

    flips = flip_count(beta, base.length_t)
    if flips > 0 and base.universe_m < 2:
        raise ConfigurationError("a single-block universe has no replacement block")

    rng = SplitMix64(seed)
    positions = sorted(rng.sample_indices(base.length_t, flips))
    requests = list(base.requests)
    for position in positions:
        original = requests[position]
        draw = rng.next_below(base.universe_m - 1)
        requests[position] = draw if draw < original else draw + 1

    trace = Trace(
        requests=tuple(requests),
        universe_m=base.universe_m,
        length_t=base.length_t,
        phase_boundaries=base.phase_boundaries,
        kind=TraceKind.PERTURBED,
        seed=seed,
    )
    return PerturbedTrace(trace=trace, hamming_d=flips, flipped_positions=tuple(positions))


def recall_perturb_trace(base: Trace, rho: float, seed: int) -> Trace:
    """
    Model approximate retrieval with recall ``rho``.

    Every request independently becomes a wrong block with probability
    ``1 - rho``, drawn uniformly from the other ``M - 1`` blocks. One coin
    per step; a replacement draw follows each miss. With a single-block
    universe nothing can be replaced and the base is returned unchanged.

    Raises:
        ConfigurationError: If rho is outside [0, 1]
    """
    _check_fraction(rho, "rho")
    if base.universe_m < 2:
        return base

    rng = SplitMix64(seed)
    miss_probability = 1.0 - rho
    requests = list(base.requests)
    for position, original in enumerate(requests):
        if rng.next_float() < miss_probability:
            draw = rng.next_below(base.universe_m - 1)
            requests[position] = draw if draw < original else draw + 1

    return Trace(
        requests=tuple(requests),
        universe_m=base.universe_m,
        length_t=base.length_t,
        phase_boundaries=base.phase_boundaries,
        kind=TraceKind.PERTURBED,
        seed=seed,
    )


def gen_adversarial_trace(k_blocks: int, length_t: int) -> Trace:
    """
    Cyclic request sequence over ``k_blocks + 1`` blocks: ``requests[t] = t mod (k+1)``.

    Raises:
        ConfigurationError: If ``k_blocks < 1`` or ``length_t < 0``
    """
    if k_blocks < 1:
        raise ConfigurationError(f"k_blocks must be >= 1, got {k_blocks}")
    if length_t < 0:
        raise ConfigurationError(f"length_t must be >= 0, got {length_t}")
    cycle = k_blocks + 1
    requests = np.arange(length_t, dtype=np.int64) % cycle
    return Trace(
        requests=tuple(int(r) for r in requests),
        universe_m=cycle,
        length_t=length_t,
        kind=TraceKind.ADVERSARIAL,
    )


def gen_coupled_trace(
    spec: ZipfSpec,
    beta_true: float,
    policy: PolicyKind,
    k_b: int,
    seed: int,
) -> Trace:
    """
    Generate a request stream that reacts to the policy serving it.

    At each step, with probability ``beta_true`` the request is the block the
    running policy evicted most recently; otherwise (and always before the
    first eviction) it is the exogenous Zipf request for that step.

    Args:
        spec: Exogenous workload parameters
        beta_true: Coupling probability
        policy: Online policy serving the stream
        k_b: Cache capacity in blocks
        seed: 64-bit seed shared with ``gen_zipf_trace``

    Returns:
        Trace equal to ``gen_zipf_trace(spec, seed)`` when ``beta_true == 0``

    Raises:
        ConfigurationError: On invalid beta_true or k_b
        UsageError: If ``policy`` needs the future of the trace
    """
    _check_fraction(beta_true, "beta_true")
    if policy.is_offline:
        raise UsageError(f"{policy.label} needs the full trace and cannot drive coupling")

    generator = ZipfTraceGenerator(spec, seed)
    exogenous = generator.generate()
    coins = generator.rng

    cache = CacheState.empty(k_b)
    aux = PolicyAux(rng=SplitMix64(derive_seed(seed, COUPLING_POLICY_STREAM)))
    last_evicted: Optional[int] = None
    requests = []

    for t, exogenous_request in enumerate(exogenous.requests):
        coupled = coins.next_float() < beta_true
        request = last_evicted if coupled and last_evicted is not None else exogenous_request
        outcome = policy_step(policy, cache, request, t, aux)
        if outcome.evicted is not None:
            last_evicted = outcome.evicted
        requests.append(request)

    return Trace(
        requests=tuple(requests),
        universe_m=spec.universe_m,
        length_t=spec.length_t,
        phase_boundaries=exogenous.phase_boundaries,
        kind=TraceKind.COUPLED,
        seed=seed,
    )


def hamming_distance(a: Trace, b: Trace) -> int:
    """
    Number of positions where two equally long traces differ.

    Raises:
        UsageError: If the lengths differ
    """
    if a.length_t != b.length_t:
        raise UsageError(f"length mismatch: {a.length_t} vs {b.length_t}")
    if a.length_t == 0:
        return 0
    left = np.asarray(a.requests, dtype=np.int64)
    right = np.asarray(b.requests, dtype=np.int64)
    return int(np.count_nonzero(left != right))

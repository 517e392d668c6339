"""
Tests for the trace generators.

Run with: PYTHONPATH=src pytest tests/test_workload/test_generators.py -v
"""

import pytest

from cache.policy_kind import BELADY, LRU, noisy_belady
from simulation.engine import simulate
from utils.error_handler import ConfigurationError, UsageError
from workload.generators import (
    ZipfTraceGenerator,
    flip_count,
    gen_adversarial_trace,
    gen_coupled_trace,
    gen_zipf_trace,
    hamming_distance,
    perturb_trace,
    recall_perturb_trace,
)
from workload.trace_types import Trace, TraceKind, ZipfSpec


@pytest.fixture(scope="module")
def zipf_trace(default_spec):
    """One default Zipf trace shared by the tests below."""
    return gen_zipf_trace(default_spec, 42)


def test_zipf_trace_is_deterministic(default_spec, zipf_trace):
    """Same spec and seed give the same requests."""
    assert gen_zipf_trace(default_spec, 42) == zipf_trace


def test_zipf_trace_depends_on_seed(default_spec, zipf_trace):
    assert gen_zipf_trace(default_spec, 43) != zipf_trace


def test_zipf_trace_shape(default_spec, zipf_trace):
    """Length, universe, provenance and phase starts follow the spec."""
    assert zipf_trace.length_t == 5000
    assert zipf_trace.universe_m == 64
    assert zipf_trace.kind is TraceKind.ZIPF
    assert zipf_trace.seed == 42
    assert zipf_trace.phase_boundaries == tuple(range(500, 5000, 500))


def test_hot_only_requests_stay_in_phase_hot_set(default_spec):
    """Without a cold tail every request is one of the phase's hot blocks."""
    generator = ZipfTraceGenerator(default_spec, 7)
    trace = generator.generate()
    for phase, ranking in enumerate(generator.rankings):
        hot = set(ranking[:default_spec.hot_set_size])
        window = trace.requests[phase * 500:(phase + 1) * 500]
        assert set(window) <= hot


def test_hot_set_changes_between_phases(default_spec):
    generator = ZipfTraceGenerator(default_spec, 7)
    generator.generate()
    hot_sets = {tuple(sorted(r[:16])) for r in generator.rankings}
    assert len(hot_sets) > 1


def test_rank_one_is_most_frequent(default_spec, zipf_trace):
    """Within a phase the top-ranked block is requested most."""
    generator = ZipfTraceGenerator(default_spec, 42)
    generator.generate()
    phase = zipf_trace.requests[:500]
    top = generator.rankings[0][0]
    counts = {b: phase.count(b) for b in set(phase)}
    assert max(counts, key=counts.get) == top


def test_cold_tail_reaches_outside_hot_set():
    spec = ZipfSpec(universe_m=64, exponent_alpha=0.5, hot_set_size=4,
                    shift_interval=5000, length_t=5000, cold_tail=True)
    trace = gen_zipf_trace(spec, 1)
    assert trace.distinct_blocks() > 4


def test_hot_set_larger_than_universe_rejected():
    with pytest.raises(ConfigurationError):
        ZipfSpec(universe_m=8, hot_set_size=16)


def test_flip_count_is_robust_to_rounding():
    assert flip_count(0.29, 100) == 29
    assert flip_count(0.1, 5000) == 500
    assert flip_count(0.0, 5000) == 0


def test_perturb_trace_changes_exactly_floor_beta_t(zipf_trace):
    """A perturbation differs from its base in exactly floor(beta*T) places."""
    perturbed = perturb_trace(zipf_trace, 0.1, 9)
    assert perturbed.hamming_d == 500
    assert hamming_distance(zipf_trace, perturbed.trace) == 500
    assert len(set(perturbed.flipped_positions)) == 500


def test_perturb_trace_zero_beta_is_identity(zipf_trace):
    perturbed = perturb_trace(zipf_trace, 0.0, 9)
    assert perturbed.trace == zipf_trace
    assert perturbed.hamming_d == 0


def test_perturb_trace_is_deterministic(zipf_trace):
    assert perturb_trace(zipf_trace, 0.2, 5).trace == perturb_trace(zipf_trace, 0.2, 5).trace


def test_perturb_trace_rejects_beta_out_of_range(zipf_trace):
    with pytest.raises(ConfigurationError):
        perturb_trace(zipf_trace, 1.5, 0)


def test_perturb_empty_trace_raises():
    with pytest.raises(UsageError):
        perturb_trace(Trace.from_requests([]), 0.5, 0)


def test_perturb_single_block_universe_raises():
    with pytest.raises(ConfigurationError):
        perturb_trace(Trace.from_requests([0, 0, 0, 0]), 0.5, 0)


def test_recall_perturb_full_recall_is_identity(zipf_trace):
    assert recall_perturb_trace(zipf_trace, 1.0, 3) == zipf_trace


def test_recall_perturb_zero_recall_changes_every_request(zipf_trace):
    noisy = recall_perturb_trace(zipf_trace, 0.0, 3)
    assert hamming_distance(zipf_trace, noisy) == zipf_trace.length_t


def test_recall_perturb_single_block_universe_unchanged():
    base = Trace.from_requests([0, 0, 0])
    assert recall_perturb_trace(base, 0.0, 3) == base


def test_adversarial_trace_cycles():
    """requests[t] == t mod (k + 1)."""
    trace = gen_adversarial_trace(3, 10)
    assert trace.requests == (0, 1, 2, 3, 0, 1, 2, 3, 0, 1)
    assert trace.universe_m == 4
    assert trace.kind is TraceKind.ADVERSARIAL


def test_adversarial_trace_rejects_zero_k():
    with pytest.raises(ConfigurationError):
        gen_adversarial_trace(0, 10)


def test_coupled_trace_at_zero_equals_zipf(small_spec):
    """With no coupling the stream is the exogenous Zipf trace."""
    assert gen_coupled_trace(small_spec, 0.0, LRU, 4, 11) == gen_zipf_trace(small_spec, 11)


def test_coupled_trace_differs_when_coupled(small_spec):
    coupled = gen_coupled_trace(small_spec, 0.4, LRU, 4, 11)
    assert coupled != gen_zipf_trace(small_spec, 11)
    assert coupled.kind is TraceKind.COUPLED


def test_full_coupling_starts_from_exogenous_stream(small_spec):
    """Until the first eviction there is nothing to re-request."""
    exogenous = gen_zipf_trace(small_spec, 11)
    coupled = gen_coupled_trace(small_spec, 1.0, LRU, 4, 11)
    first_t, first_victim = simulate(exogenous, LRU, 4).eviction_log[0]
    assert coupled.requests[:first_t + 1] == exogenous.requests[:first_t + 1]
    assert coupled.requests[first_t + 1] == first_victim
    # every request after that is the block just evicted
    assert simulate(coupled, LRU, 4).fault_indicator[first_t:].all()


def test_coupled_trace_rejects_offline_policies(small_spec):
    with pytest.raises(UsageError):
        gen_coupled_trace(small_spec, 0.1, BELADY, 4, 1)
    with pytest.raises(UsageError):
        gen_coupled_trace(small_spec, 0.1, noisy_belady(0.5), 4, 1)


def test_coupled_trace_rejects_bad_beta(small_spec):
    with pytest.raises(ConfigurationError):
        gen_coupled_trace(small_spec, 1.5, LRU, 4, 1)


def test_hamming_distance_length_mismatch():
    with pytest.raises(UsageError):
        hamming_distance(Trace.from_requests([1, 2]), Trace.from_requests([1]))

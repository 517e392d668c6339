"""
Eviction rules and the single-request transition shared by all policies.

Tie-breaks:
- BELADY: among blocks never used again (or with equal next use), the
  smallest block id is evicted.
- LFU: least recently used among the minimum-frequency blocks, then the
  smallest id.
- RANDOM / NOISY_BELADY: candidates are ranked by block id before drawing.

Random draws per eviction: RANDOM takes one ``next_below``; NOISY_BELADY
takes one ``next_float`` coin and, when the coin says "wrong", one
``next_below`` over the non-Belady blocks.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional

from utils.error_handler import UsageError
from utils.rng import SplitMix64

from .cache_state import CacheState, StepOutcome
from .next_use import NextUseIndex
from .policy_kind import PolicyKind, PolicyName


@dataclass
class PolicyAux:
    """Side information some rules need: the next-use index and a random stream."""
    next_use: Optional[NextUseIndex] = None
    rng: Optional[SplitMix64] = None


def _belady_victim(cache: CacheState, aux: PolicyAux) -> int:
    index = aux.next_use
    # A resident block's next request after now is the next use of its last access.
    return max(
        cache.resident,
        key=lambda b: (index.after(cache.last_access[b]), -b),
    )


def _lru_victim(cache: CacheState, aux: PolicyAux) -> int:
    return min(cache.resident, key=lambda b: cache.last_access[b])


def _lfu_victim(cache: CacheState, aux: PolicyAux) -> int:
    return min(
        cache.resident,
        key=lambda b: (cache.access_count[b], cache.last_access[b], b),
    )


def _lfu_persistent_victim(cache: CacheState, aux: PolicyAux) -> int:
    return min(
        cache.resident,
        key=lambda b: (cache.lifetime_count[b], cache.last_access[b], b),
    )


def _fifo_victim(cache: CacheState, aux: PolicyAux) -> int:
    return min(cache.resident, key=lambda b: cache.insertion_order[b])


def _random_victim(cache: CacheState, aux: PolicyAux) -> int:
    candidates = sorted(cache.resident)
    return candidates[aux.rng.next_below(len(candidates))]


def _noisy_belady_victim(cache: CacheState, aux: PolicyAux, p: float) -> int:
    target = _belady_victim(cache, aux)
    coin = aux.rng.next_float()
    if len(cache.resident) == 1 or coin < p:
        return target
    others = sorted(b for b in cache.resident if b != target)
    return others[aux.rng.next_below(len(others))]


_VICTIM_RULES: Dict[PolicyName, Callable[[CacheState, PolicyAux], int]] = {
    PolicyName.BELADY: _belady_victim,
    PolicyName.LRU: _lru_victim,
    PolicyName.LFU: _lfu_victim,
    PolicyName.LFU_PERSISTENT: _lfu_persistent_victim,
    PolicyName.FIFO: _fifo_victim,
    PolicyName.RANDOM: _random_victim,
}


def check_aux(kind: PolicyKind, aux: PolicyAux) -> None:
    """
    Verify that ``aux`` carries what ``kind`` needs.

    Raises:
        UsageError: If the next-use index or the random stream is missing
    """
    if kind.needs_next_use and aux.next_use is None:
        raise UsageError(f"{kind.label} needs a next-use index")
    if kind.needs_rng and aux.rng is None:
        raise UsageError(f"{kind.label} needs a random stream")


def select_victim(kind: PolicyKind, cache: CacheState, aux: PolicyAux) -> int:
    """
    Choose the block to evict from a full cache.

    Args:
        kind: Eviction rule
        cache: Non-empty cache state
        aux: Next-use index and/or random stream as required by ``kind``

    Returns:
        A resident block id
    """
    if kind.name is PolicyName.NOISY_BELADY:
        return _noisy_belady_victim(cache, aux, kind.p)
    return _VICTIM_RULES[kind.name](cache, aux)


def policy_step(
    kind: PolicyKind,
    cache: CacheState,
    request: int,
    t: int,
    aux: PolicyAux,
) -> StepOutcome:
    """
    Serve one request, updating ``cache`` in place.

    Args:
        kind: Eviction rule
        cache: Cache state owned by the caller
        request: Requested block id
        t: 0-based step index (position in the trace the next-use index covers)
        aux: Side information for offline or randomized rules

    Returns:
        Whether the request faulted, and which block was evicted/admitted

    Raises:
        UsageError: If ``aux`` lacks what ``kind`` needs
    """
    check_aux(kind, aux)

    if request in cache.resident:
        cache.touch(request, t)
        return StepOutcome(fault=False)

    evicted = None
    if cache.is_full():
        evicted = select_victim(kind, cache, aux)
        cache.evict(evicted)
    cache.admit(request, t)
    return StepOutcome(fault=True, evicted=evicted, admitted=request)

"""
Runs a Turing machine over a blocked tape and counts what each step costs.

Per step the head's block is fetched (one query), the transition is applied,
and the block is written back (one more query) only when a symbol changed.
Each step is charged ``B ** 2`` attention operations for processing the
fetched block.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

from utils.error_handler import ConfigurationError

from .blocked_tape import BlockedTape
from .machine import TmSpec

logger = logging.getLogger("paging_lab.tm.simulator")


@dataclass(frozen=True)
class TmRunResult:
    """
    Outcome of one run.

    ``tape_window`` covers every cell that held input or was visited, from
    the leftmost to the rightmost.
    """
    halted: bool
    steps: int
    final_state: str
    tape_window: Tuple[str, ...]
    window_start: int
    attention_ops: int
    retrieval_queries: int
    blank: str

    @property
    def tape_text(self) -> str:
        """Tape contents with surrounding blanks removed."""
        return "".join(self.tape_window).strip(self.blank)


def simulate_tm(
    tm: TmSpec,
    input_symbols: Sequence[str],
    block_b: int,
    max_steps: int = 10_000,
) -> TmRunResult:
    """
    Run ``tm`` on ``input_symbols`` starting at cell 0.

    Args:
        tm: Machine
        input_symbols: Initial tape from cell 0; a string is split into characters
        block_b: Block size B
        max_steps: Step budget; exhausting it yields ``halted=False``

    Raises:
        ConfigurationError: If ``block_b < 1`` or ``max_steps < 0``
        MalformedMachineError: If the machine reaches an undefined transition
    """
    if block_b < 1:
        raise ConfigurationError(f"block size must be >= 1, got {block_b}")
    if max_steps < 0:
        raise ConfigurationError(f"max_steps must be >= 0, got {max_steps}")

    symbols = list(input_symbols)
    tape = BlockedTape.with_input(symbols, block_b, tm.blank)
    state = tm.start_state
    low, high = 0, max(len(symbols) - 1, 0)
    steps = 0

    while state not in tm.halt_states and steps < max_steps:
        address = tape.address(tape.head)
        block = tape.fetch(address)
        offset = tape.offset(tape.head)
        transition = tm.transition(state, block[offset])

        if transition.write != block[offset]:
            block[offset] = transition.write
            tape.write_back(address, block)

        state = transition.next_state
        tape.head += transition.move.delta
        low, high = min(low, tape.head), max(high, tape.head)
        steps += 1

    result = TmRunResult(
        halted=state in tm.halt_states,
        steps=steps,
        final_state=state,
        tape_window=tape.window(low, high),
        window_start=low,
        attention_ops=steps * block_b * block_b,
        retrieval_queries=tape.queries,
        blank=tm.blank,
    )
    logger.debug(
        f"{tm.name}: {'halted' if result.halted else 'stopped'} after {steps} steps, "
        f"{result.retrieval_queries} queries, B={block_b}"
    )
    return result

"""
Single-tape Turing machine definitions and the machine file format.

A machine file is line oriented::

    # bit flipper
    start: q0
    halt: done
    blank: _
    q0 0 -> q0 1 R
    q0 1 -> q0 0 R
    q0 _ -> done _ R

Lines starting with ``#`` are comments. ``halt:`` may list several states.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Dict, FrozenSet, List, Tuple, Union

from utils.error_handler import MalformedMachineError

logger = logging.getLogger("paging_lab.tm.machine")

DEFAULT_BLANK = "_"
BUILTIN_PREFIX = "builtin:"


class Move(Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def delta(self) -> int:
        return -1 if self is Move.LEFT else 1


@dataclass(frozen=True)
class Transition:
    """What the machine does in one state on one symbol."""
    next_state: str
    write: str
    move: Move


@dataclass(frozen=True)
class TmSpec:
    """
    A deterministic single-tape machine.

    ``states`` and ``tape_alphabet`` are derived from the transition table
    when built through ``from_table``. The table may be partial; reaching a
    missing entry is reported when the machine runs.
    """
    states: FrozenSet[str]
    tape_alphabet: FrozenSet[str]
    transitions: Dict[Tuple[str, str], Transition] = field(hash=False)
    start_state: str
    halt_states: FrozenSet[str]
    blank: str = DEFAULT_BLANK
    name: str = "machine"

    def __post_init__(self):
        if self.blank not in self.tape_alphabet:
            raise MalformedMachineError(f"{self.name}: blank '{self.blank}' not in the tape alphabet")
        if self.start_state not in self.states:
            raise MalformedMachineError(f"{self.name}: start state '{self.start_state}' is unknown")
        unknown = self.halt_states - self.states
        if unknown:
            raise MalformedMachineError(f"{self.name}: unknown halt states {sorted(unknown)}")
        for (state, symbol), transition in self.transitions.items():
            if state in self.halt_states:
                raise MalformedMachineError(f"{self.name}: halt state '{state}' has a transition")
            if transition.next_state not in self.states:
                raise MalformedMachineError(f"{self.name}: unknown state '{transition.next_state}'")

    @classmethod
    def from_table(
        cls,
        transitions: Dict[Tuple[str, str], Transition],
        start_state: str,
        halt_states,
        blank: str = DEFAULT_BLANK,
        name: str = "machine",
    ) -> "TmSpec":
        """Build a spec, deriving states and alphabet from the table."""
        halts = frozenset(halt_states)
        states = {start_state} | set(halts)
        alphabet = {blank}
        for (state, symbol), transition in transitions.items():
            states.update((state, transition.next_state))
            alphabet.update((symbol, transition.write))
        return cls(
            states=frozenset(states),
            tape_alphabet=frozenset(alphabet),
            transitions=dict(transitions),
            start_state=start_state,
            halt_states=halts,
            blank=blank,
            name=name,
        )

    def transition(self, state: str, symbol: str) -> Transition:
        """
        Look up the transition for ``(state, symbol)``.

        Raises:
            MalformedMachineError: If none is defined
        """
        try:
            return self.transitions[(state, symbol)]
        except KeyError:
            raise MalformedMachineError(
                f"{self.name}: no transition for state '{state}' on symbol '{symbol}'"
            ) from None

    def missing_transitions(self) -> List[Tuple[str, str]]:
        """Non-halt (state, symbol) pairs without a transition."""
        return sorted(
            (state, symbol)
            for state in self.states - self.halt_states
            for symbol in self.tape_alphabet
            if (state, symbol) not in self.transitions
        )

    @property
    def is_total(self) -> bool:
        return not self.missing_transitions()


def parse_machine(text: str, name: str = "machine") -> TmSpec:
    """
    Parse machine-file text.

    Raises:
        MalformedMachineError: On a malformed line, a duplicate transition or
            a missing ``start:`` header
    """
    start = None
    halts: List[str] = []
    blank = DEFAULT_BLANK
    transitions: Dict[Tuple[str, str], Transition] = {}

    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        where = f"{name}:{line_no}"

        header, _, value = stripped.partition(":")
        if header in ("start", "halt", "blank") and "->" not in stripped:
            tokens = value.replace(",", " ").split()
            if not tokens:
                raise MalformedMachineError(f"{where}: '{header}:' needs a value")
            if header == "start":
                start = tokens[0]
            elif header == "halt":
                halts.extend(tokens)
            else:
                blank = tokens[0]
            continue

        left, arrow, right = stripped.partition("->")
        source, target = left.split(), right.split()
        if not arrow or len(source) != 2 or len(target) != 3:
            raise MalformedMachineError(f"{where}: expected 'state symbol -> state symbol L|R'")
        try:
            move = Move(target[2].upper())
        except ValueError:
            raise MalformedMachineError(f"{where}: move must be L or R, got '{target[2]}'") from None
        key = (source[0], source[1])
        if key in transitions:
            raise MalformedMachineError(f"{where}: duplicate transition for {key}")
        transitions[key] = Transition(next_state=target[0], write=target[1], move=move)

    if start is None:
        raise MalformedMachineError(f"{name}: missing 'start:' line")
    return TmSpec.from_table(transitions, start, halts, blank=blank, name=name)


BUILTIN_MACHINES: Dict[str, str] = {
    "bit-flip": """
        # flip each bit moving right, halt on blank
        start: flip
        halt: done
        flip 0 -> flip 1 R
        flip 1 -> flip 0 R
        flip _ -> done _ R
    """,
    "unary-successor": """
        # append one 1 to a unary number
        start: scan
        halt: done
        scan 1 -> scan 1 R
        scan _ -> done 1 R
    """,
    "even-parity": """
        # accept when the input holds an even number of 1s
        start: even
        halt: accept reject
        even 0 -> even 0 R
        even 1 -> odd 1 R
        even _ -> accept _ R
        odd 0 -> odd 0 R
        odd 1 -> even 1 R
        odd _ -> reject _ R
    """,
    "right-walker": """
        # mark every 1 with x, drop # at the end, walk back to the start
        start: walk
        halt: home
        walk 1 -> walk x R
        walk x -> walk x R
        walk # -> back # L
        walk _ -> back # L
        back 1 -> back 1 L
        back x -> back x L
        back # -> back # L
        back _ -> home _ R
    """,
}


def builtin_machine(name: str) -> TmSpec:
    """
    One of the bundled witness machines.

    Raises:
        MalformedMachineError: If ``name`` is unknown
    """
    if name not in BUILTIN_MACHINES:
        raise MalformedMachineError(
            f"unknown builtin machine '{name}'; choose from {sorted(BUILTIN_MACHINES)}"
        )
    return parse_machine(BUILTIN_MACHINES[name], name=name)


def parse_machine_file(path: Union[str, Path]) -> TmSpec:
    """
    Load a machine file, or a bundled machine given as ``builtin:<name>``.

    Raises:
        MalformedMachineError: If the file cannot be read or parsed
    """
    text_path = str(path)
    if text_path.startswith(BUILTIN_PREFIX):
        return builtin_machine(text_path[len(BUILTIN_PREFIX):])
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise MalformedMachineError(f"cannot read machine file {path}: {e}") from e
    spec = parse_machine(text, name=Path(path).name)
    if not spec.is_total:
        logger.warning(f"{spec.name}: {len(spec.missing_transitions())} transitions undefined")
    return spec

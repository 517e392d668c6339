"""
Tape stored as fixed-size blocks in an address-indexed external store.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from utils.error_handler import ConfigurationError


@dataclass
class BlockedTape:
    """
    Cells live in blocks of ``block_b`` symbols keyed by ``floor(cell / B)``.

    Absent addresses read as all blank. Every ``fetch`` and every ``store``
    counts as one retrieval query.
    """
    block_b: int
    blank: str
    store: Dict[int, Tuple[str, ...]] = field(default_factory=dict)
    head: int = 0
    queries: int = 0

    def __post_init__(self):
        if self.block_b < 1:
            raise ConfigurationError(f"block size must be >= 1, got {self.block_b}")

    @classmethod
    def with_input(cls, symbols: Sequence[str], block_b: int, blank: str) -> "BlockedTape":
        """Lay ``symbols`` out from cell 0; loading is not charged."""
        tape = cls(block_b=block_b, blank=blank)
        for start in range(0, len(symbols), block_b):
            chunk = list(symbols[start:start + block_b])
            chunk += [blank] * (block_b - len(chunk))
            tape.store[start // block_b] = tuple(chunk)
        return tape

    def address(self, cell: int) -> int:
        # floor division keeps negative cells in the right block
        return cell // self.block_b

    def offset(self, cell: int) -> int:
        return cell % self.block_b

    def fetch(self, address: int) -> List[str]:
        """Copy of the block at ``address``."""
        self.queries += 1
        return list(self.store.get(address, (self.blank,) * self.block_b))

    def write_back(self, address: int, block: Sequence[str]) -> None:
        if len(block) != self.block_b:
            raise ConfigurationError(f"block of length {len(block)} does not match B={self.block_b}")
        self.queries += 1
        self.store[address] = tuple(block)

    def read_cell(self, cell: int) -> str:
        """Uncharged inspection of one cell."""
        block = self.store.get(self.address(cell))
        return block[self.offset(cell)] if block else self.blank

    def window(self, low: int, high: int) -> Tuple[str, ...]:
        """Uncharged contents of cells ``low..high`` inclusive."""
        return tuple(self.read_cell(cell) for cell in range(low, high + 1))

"""
Trace file reading and writing.

Format: an optional header line ``# M=<m> T=<t> seed=<s> kind=<kind>``
followed by one decimal block id per line, newline-terminated. ``seed=none``
marks traces without a seed.
"""

import logging
import re
from pathlib import Path
from typing import Optional, Union

from utils.error_handler import TraceFormatError

from .trace_types import Trace, TraceKind

logger = logging.getLogger("paging_lab.workload.trace_io")

_BLOCK_ID = re.compile(r"[0-9]+")
_HEADER = re.compile(
    r"^#\s*M=(?P<m>[0-9]+)\s+T=(?P<t>[0-9]+)\s+seed=(?P<seed>[0-9]+|none)\s+kind=(?P<kind>\w+)\s*$"
)


def format_trace(trace: Trace) -> str:
    """Render a trace in file format."""
    seed = "none" if trace.seed is None else str(trace.seed)
    lines = [f"# M={trace.universe_m} T={trace.length_t} seed={seed} kind={trace.kind.value}"]
    lines.extend(str(block) for block in trace.requests)
    return "\n".join(lines) + "\n"


def write_trace(trace: Trace, path: Union[str, Path]) -> Path:
    """
    Write a trace file, creating parent directories.

    Returns:
        The path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_trace(trace), encoding="utf-8")
    logger.info(f"Wrote {trace.kind.value} trace (T={trace.length_t}) to {path}")
    return path


def parse_trace(text: str, source: str = "<string>") -> Trace:
    """
    Parse trace file contents.

    Args:
        text: File contents
        source: Name used in error messages

    Raises:
        TraceFormatError: On malformed lines, header mismatches or an empty trace
    """
    universe: Optional[int] = None
    declared_length: Optional[int] = None
    seed: Optional[int] = None
    kind = TraceKind.CUSTOM
    requests = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _HEADER.match(line)
            if match and universe is None and not requests:
                universe = int(match.group("m"))
                declared_length = int(match.group("t"))
                seed = None if match.group("seed") == "none" else int(match.group("seed"))
                try:
                    kind = TraceKind(match.group("kind"))
                except ValueError:
                    raise TraceFormatError(
                        f"unknown trace kind '{match.group('kind')}'",
                        source=source,
                        line=line_number,
                    ) from None
            continue
        if not _BLOCK_ID.fullmatch(line):
            raise TraceFormatError(
                f"expected a decimal block id, got {line!r}", source=source, line=line_number
            )
        requests.append(int(line))

    if not requests:
        raise TraceFormatError("trace is empty", source=source)
    if declared_length is not None and declared_length != len(requests):
        raise TraceFormatError(
            f"header declares T={declared_length} but {len(requests)} requests found",
            source=source,
        )
    if universe is not None and max(requests) >= universe:
        raise TraceFormatError(
            f"block id {max(requests)} outside universe M={universe}", source=source
        )

    return Trace.from_requests(requests, universe_m=universe, kind=kind, seed=seed)


def read_trace(path: Union[str, Path]) -> Trace:
    """
    Read a trace file.

    Raises:
        TraceFormatError: If the file is missing, malformed or empty
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise TraceFormatError(f"cannot read trace file: {e}", source=str(path)) from None
    except UnicodeDecodeError:
        raise TraceFormatError("trace file is not UTF-8 text", source=str(path)) from None
    return parse_trace(text, source=str(path))

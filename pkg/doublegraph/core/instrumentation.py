"""
Progress tracking for corpus sweeps, probes and other long-running operations.

Each operation logs START, any number of UNDERWAY lines, then PASSED or
FAILED. Wall time since START is appended to UNDERWAY and terminal lines.
"""

import logging
import time
from typing import Dict

logger = logging.getLogger("doublegraph.instrumentation")
_started: Dict[str, float] = {}


def _clock(operation: str, finished: bool) -> str:
    began = _started.pop(operation, None) if finished else _started.get(operation)
    if began is None:
        return ""
    return f" ({time.perf_counter() - began:.2f}s)"


def track_start(operation: str, detail: str = "") -> None:
    _started[operation] = time.perf_counter()
    msg = f"[instrumentation] START: {operation}"
    if detail:
        msg += f" | {detail}"
    logger.info(msg)


def track_underway(operation: str, detail: str) -> None:
    logger.info("[instrumentation] UNDERWAY: %s | %s%s", operation, detail,
                _clock(operation, finished=False))


def track_passed(operation: str, detail: str) -> None:
    logger.info("[instrumentation] PASSED: %s | %s%s", operation, detail,
                _clock(operation, finished=True))


def track_failed(operation: str, detail: str) -> None:
    """Logged at WARNING; an operation that never started gets no timing."""
    logger.warning("[instrumentation] FAILED: %s | %s%s", operation, detail,
                   _clock(operation, finished=True))

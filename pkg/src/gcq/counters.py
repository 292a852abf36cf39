"""Per-call operation counters.

Counting is opt-in: wrap a computation in :func:`count_ops` and every
instrumented primitive executed inside the block adds to the yielded
:class:`OpCounters`.  Outside such a block the tally calls are no-ops.
"""

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass


@dataclass
class OpCounters:
    additions: int = 0
    scalar_multiplications: int = 0
    divisions: int = 0
    inversions: int = 0

    @property
    def total(self):
        return self.additions + self.scalar_multiplications + self.divisions + self.inversions


_active: ContextVar = ContextVar("gcq_opcounters", default=None)


@contextmanager
def count_ops():
    """Collect operation counts for everything run inside the ``with`` block."""
    counters = OpCounters()
    token = _active.set(counters)
    try:
        yield counters
    finally:
        _active.reset(token)


def tally(kind, amount=1):
    counters = _active.get()
    if counters is not None and amount:
        setattr(counters, kind, getattr(counters, kind) + amount)

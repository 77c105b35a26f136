"""Named random substreams derived from a single 64-bit seed.

Every random choice in the package flows through one of these streams so that
components can be re-seeded independently: the window placement, the
measurement draws, and the backprop weight init each get their own child of
the root seed and never consume each other's numbers.
"""

from __future__ import annotations

import numpy as np

STREAMS = {
    "window": 0,
    "measurement": 1,
    "backprop-init": 2,
}


def substream(seed: int, name: str) -> np.random.Generator:
    """Generator for the named substream of `seed`."""
    try:
        key = STREAMS[name]
    except KeyError:
        raise ValueError(f"unknown substream {name!r}, expected one of {sorted(STREAMS)}")
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(key,)))

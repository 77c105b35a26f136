"""Finite windows over the infinite integer weight lattice.

A window is a z^w hypercube of lattice points. Vertex index <-> coordinate
conversion uses base-z digits with dimension 0 least significant, and weights
come from scaling the (origin-shifted, center-adjusted) lattice index by the
granularity delta_p:

    weight_j = delta_p * (origin_j + coord_j - floor(z/2))

For even z the window spans indices {-z/2, ..., z/2 - 1} around the origin;
a symmetric span does not exist, so the half-open convention is fixed here.

Windows that contain no solutions get shifted. Shifts displace the origin by
multiples of z per dimension, enumerated ring by ring in Chebyshev distance:
within a ring, a mixed-radix counter runs with dimension 0 fastest and the
per-dimension displacement values ordered 0, +z, -z, +2z, -2z, ...; tuples
whose Chebyshev norm is below the ring radius are skipped (they belong to an
earlier ring). shift_index 0 is the unshifted window, shift_index 1 displaces
by (z, 0, ..., 0), and distinct indices give disjoint windows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from itertools import chain, repeat
from typing import Iterator

import numpy as np

from .seeding import substream

_RING_SLICE = 1 << 16  # raw counter positions decoded per numpy pass


@dataclass(frozen=True)
class WeightWindow:
    w: int
    z: int
    origin: tuple[int, ...]
    delta_p: float

    def __post_init__(self):
        if self.w < 1:
            raise ValueError(f"w must be positive, got {self.w}")
        if self.z < 1:
            raise ValueError(f"z must be positive, got {self.z}")
        if len(self.origin) != self.w:
            raise ValueError(f"origin must have length w={self.w}, got {len(self.origin)}")
        if not self.delta_p > 0:
            raise ValueError(f"delta_p must be positive, got {self.delta_p}")


def window_size(window: WeightWindow) -> int:
    """Vertex count z^w (exact, arbitrary precision)."""
    return window.z ** window.w


def index_to_coords(idx: int, window: WeightWindow) -> tuple[int, ...]:
    """Base-z digits of idx, dimension 0 least significant."""
    n = window_size(window)
    if not 0 <= idx < n:
        raise ValueError(f"index {idx} out of range [0, {n})")
    coords = []
    for _ in range(window.w):
        coords.append(idx % window.z)
        idx //= window.z
    return tuple(coords)


def coords_to_index(coords, window: WeightWindow) -> int:
    """Inverse of index_to_coords."""
    if len(coords) != window.w:
        raise ValueError(f"expected {window.w} coordinates, got {len(coords)}")
    idx = 0
    for j in reversed(range(window.w)):
        c = coords[j]
        if not 0 <= c < window.z:
            raise ValueError(f"coordinate {c} out of range [0, {window.z})")
        idx = idx * window.z + c
    return idx


def coords_to_weights(coords, window: WeightWindow) -> np.ndarray:
    """Real synaptic weights for a coordinate tuple."""
    c = np.asarray(coords, dtype=np.int64)
    center = window.z // 2
    return window.delta_p * (np.asarray(window.origin, dtype=np.int64) + c - center)


def index_to_weights(idx: int, window: WeightWindow) -> np.ndarray:
    return coords_to_weights(index_to_coords(idx, window), window)


def _digit_values(r: int, z: int) -> np.ndarray:
    """Displacement value of each ring-r digit: 0, +z, -z, ..., +rz, -rz."""
    vals = np.zeros(2 * r + 1, dtype=np.int64)
    for d in range(1, 2 * r + 1):
        mag = (d + 1) // 2
        vals[d] = mag * z if d % 2 == 1 else -mag * z
    return vals


def ring_size(w: int, r: int) -> int:
    """Number of displacement tuples at Chebyshev radius exactly r (in units of z)."""
    return (2 * r + 1) ** w - (2 * r - 1) ** w


def _ring_block(w: int, z: int, r: int, lo: int, hi: int) -> np.ndarray:
    """Accepted displacement rows among raw counter positions [lo, hi) of ring r."""
    base = 2 * r + 1
    idx = np.arange(lo, hi, dtype=np.int64)
    digits = np.empty((idx.size, w), dtype=np.int64)
    tmp = idx
    for m in range(w):
        digits[:, m] = tmp % base
        tmp = tmp // base
    keep = (digits >= 2 * r - 1).any(axis=1)
    return _digit_values(r, z)[digits[keep]]


def iter_displacements(w: int, z: int, batch=8192) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (first_shift_index, displacement rows) in shift order, forever.

    Row i of a yielded array is the displacement for shift_index
    first_shift_index + i. `batch` bounds how many counter positions are
    decoded per yield; it may be an int or an iterable of ints (a schedule,
    e.g. small batches first when early hits are likely), the last value
    repeating forever.
    """
    if isinstance(batch, int):
        sizes = repeat(batch)
    else:
        schedule = list(batch)
        sizes = chain(schedule, repeat(schedule[-1]))
    next_index = 1
    r = 1
    while True:
        base = 2 * r + 1
        total = base ** w
        lo = 0
        while lo < total:
            hi = min(lo + max(next(sizes), 1), total)
            rows = _ring_block(w, z, r, lo, hi)
            if rows.size:
                yield next_index, rows
                next_index += rows.shape[0]
            lo = hi
        r += 1


def shift_window(window: WeightWindow, shift_index: int) -> WeightWindow:
    """The window at position `shift_index` of the ring enumeration."""
    if shift_index < 0:
        raise ValueError("shift_index must be non-negative")
    if shift_index == 0:
        return window
    j = shift_index
    r = 1
    while j > ring_size(window.w, r):
        j -= ring_size(window.w, r)
        r += 1
    base = 2 * r + 1
    total = base ** window.w
    lo = 0
    while lo < total:
        hi = min(lo + _RING_SLICE, total)
        rows = _ring_block(window.w, window.z, r, lo, hi)
        if j <= rows.shape[0]:
            disp = rows[j - 1]
            origin = tuple(int(o + d) for o, d in zip(window.origin, disp))
            return replace(window, origin=origin)
        j -= rows.shape[0]
        lo = hi
    raise AssertionError("ring enumeration exhausted early")  # unreachable


def random_window(w: int, z: int, delta_p: float, seed: int) -> WeightWindow:
    """Window with origin drawn uniformly from [-z, z]^w (seeded)."""
    rng = substream(seed, "window")
    origin = tuple(int(v) for v in rng.integers(-z, z + 1, size=w))
    return WeightWindow(w=w, z=z, origin=origin, delta_p=delta_p)


def to_descriptor(window: WeightWindow) -> dict:
    return {"w": window.w, "z": window.z, "delta_p": window.delta_p,
            "origin": list(window.origin)}


def from_descriptor(d: dict) -> WeightWindow:
    return WeightWindow(w=int(d["w"]), z=int(d["z"]),
                        origin=tuple(int(v) for v in d["origin"]),
                        delta_p=float(d["delta_p"]))


def descriptor_json(window: WeightWindow) -> str:
    return json.dumps(to_descriptor(window), sort_keys=True)

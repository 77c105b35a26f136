"""Classical oracle: which window vertices solve XOR.

A vertex solves when its weight vector classifies all four XOR patterns
correctly. The oracle enumerates a window exhaustively and keeps the sorted
list of solution indices; that list (not a dense 0/1 array, which would be
wasteful at 134M vertices) is the marked set the walk searches for.

Three evaluation routes exist on purpose and are tested against each other:
a scalar per-vertex predicate (evaluate_vertex), a chunked vectorized
enumerator (enumerate_solutions, optionally multi-threaded), and a plain
double-loop reference (reference_enumerate). A fourth, scan_window_counts,
is a float32 fast path that only counts solutions across many candidate
windows at once; the trainer uses it to locate a promising window and then
confirms with enumerate_solutions, so its reduced precision can never leak
into results.
"""

from __future__ import annotations

import json
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import mlp
from .weight_space import (WeightWindow, from_descriptor, index_to_weights,
                           to_descriptor, window_size)

DEFAULT_VERTEX_CAP = 2 ** 30

_MAGIC = b"QWSOLSET"

_X = np.array(mlp.XOR_INPUTS)
_TARGETS_TRUE = np.array([t == 1.0 for t in mlp.XOR_TARGETS])


class WindowTooLarge(ValueError):
    """Enumeration refused: vertex count above the cap and no override."""


@dataclass
class SolutionSet:
    window: WeightWindow
    indices: np.ndarray  # sorted int64 vertex indices

    @property
    def k(self) -> int:
        return int(self.indices.size)


def _require_mlp_window(window: WeightWindow) -> None:
    if window.w != mlp.N_WEIGHTS:
        raise ValueError(
            f"oracle needs a {mlp.N_WEIGHTS}-weight window, got w={window.w}")


def evaluate_vertex(idx: int, window: WeightWindow) -> bool:
    """Does this vertex's weight vector classify XOR perfectly?"""
    _require_mlp_window(window)
    weights = index_to_weights(idx, window)
    return mlp.classification_error(weights) == 0


def reference_enumerate(window: WeightWindow) -> SolutionSet:
    """Deliberately naive double loop over vertices and patterns.

    Kept as the independent reference the optimized enumerator is checked
    against; do not optimize.
    """
    _require_mlp_window(window)
    hits = []
    for idx in range(window_size(window)):
        weights = index_to_weights(idx, window)
        wrong = 0
        for (x0, x1), t in zip(mlp.XOR_INPUTS, mlp.XOR_TARGETS):
            if mlp.classify(weights, x0, x1) != int(t):
                wrong += 1
        if wrong == 0:
            hits.append(idx)
    return SolutionSet(window=window, indices=np.array(hits, dtype=np.int64))


def _chunk_weights(idx: np.ndarray, window: WeightWindow) -> np.ndarray:
    """(m, w) weight rows for a block of flat indices."""
    coords = np.empty((idx.size, window.w), dtype=np.int64)
    tmp = idx.astype(np.int64)
    for j in range(window.w):
        coords[:, j] = tmp % window.z
        tmp = tmp // window.z
    origin = np.asarray(window.origin, dtype=np.int64)
    return window.delta_p * (origin + coords - window.z // 2)


def _solution_mask(weights: np.ndarray) -> np.ndarray:
    """Boolean mask over weight rows: True where XOR is classified perfectly."""
    with np.errstate(over="ignore"):
        u1 = (np.outer(_X[:, 0], weights[:, 0]) + np.outer(_X[:, 1], weights[:, 1])
              - weights[None, :, 2])
        u2 = (np.outer(_X[:, 0], weights[:, 3]) + np.outer(_X[:, 1], weights[:, 4])
              - weights[None, :, 5])
        h1 = 1.0 / (1.0 + np.exp(-u1))
        h2 = 1.0 / (1.0 + np.exp(-u2))
    y = weights[None, :, 6] * h1 + weights[None, :, 7] * h2 - weights[None, :, 8]
    return ((y >= 0.5) == _TARGETS_TRUE[:, None]).all(axis=0)


def _enumerate_chunk(window: WeightWindow, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    mask = _solution_mask(_chunk_weights(idx, window))
    return idx[mask]


def enumerate_solutions(window: WeightWindow, chunk_size: int = 1 << 16,
                        workers: int = 1, force: bool = False) -> SolutionSet:
    """Exact solution set of a window, chunked and optionally threaded.

    Refuses windows above DEFAULT_VERTEX_CAP vertices unless force=True (the
    z=8 window is under the cap but takes a while; truly huge windows need
    the explicit override). The result is independent of chunk size and
    worker count: chunks cover disjoint index ranges and the merge sorts.
    """
    _require_mlp_window(window)
    n = window_size(window)
    if n > DEFAULT_VERTEX_CAP and not force:
        raise WindowTooLarge(
            f"window has {n} vertices, above the cap {DEFAULT_VERTEX_CAP}; "
            f"pass force=True to enumerate anyway")
    starts = range(0, n, chunk_size)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(
                lambda s: _enumerate_chunk(window, s, min(s + chunk_size, n)), starts))
    else:
        parts = [_enumerate_chunk(window, s, min(s + chunk_size, n)) for s in starts]
    indices = np.sort(np.concatenate(parts)) if parts else np.empty(0, dtype=np.int64)
    return SolutionSet(window=window, indices=indices)


def count_solutions(s: SolutionSet) -> int:
    return s.k


# Workspace buffers for scan_window_counts, keyed by (padded block size, z).
# Padding to powers of two keeps the cache bounded while the trainer feeds
# batches of arbitrary truncated sizes.
_SCAN_WS: dict = {}


def _scan_workspace(n: int, z: int) -> dict:
    cap = 1 << max(5, (n - 1).bit_length())
    key = (cap, z)
    if key not in _SCAN_WS:
        zc = z ** 3
        _SCAN_WS[key] = {
            "u1": np.empty((cap, 4, z, z, z), np.float32),
            "u2": np.empty((cap, 4, z, z, z), np.float32),
            "A": np.empty((cap, 4, zc, z), np.float32),
            "Bm": np.empty((cap, 4, zc, z), np.float32),
            "lo": np.empty((cap, zc, z, zc, z), np.float32),
            "hi": np.empty((cap, zc, z, zc, z), np.float32),
            "tmp": np.empty((cap, zc, z, zc, z), np.float32),
            "m1": np.empty((cap, zc, z, zc, z), bool),
            "m2": np.empty((cap, zc, z, zc, z), bool),
        }
    return {name: arr[:n] for name, arr in _SCAN_WS[key].items()}


def _scan_block(origins: np.ndarray, z: int, delta_p: float) -> np.ndarray:
    n = origins.shape[0]
    zc = z ** 3
    w = _scan_workspace(n, z)
    x0 = _X[:, 0].astype(np.float32)[None, :, None, None, None]
    x1 = _X[:, 1].astype(np.float32)[None, :, None, None, None]
    vals = (delta_p * (origins[:, :, None] + np.arange(z)[None, None, :] - z // 2)
            ).astype(np.float32)

    def hidden(j, u):
        # u over (n, 4 patterns, z, z, z) for weight dims j, j+1, j+2
        u[:] = x0 * vals[:, j, None, :, None, None]
        u += x1 * vals[:, j + 1, None, None, :, None]
        u -= vals[:, j + 2, None, None, None, :]
        np.negative(u, out=u)
        with np.errstate(over="ignore"):
            np.exp(u, out=u)
        u += np.float32(1.0)
        np.reciprocal(u, out=u)
        return u.reshape(n, 4, zc)

    h1 = hidden(0, w["u1"])
    h2 = hidden(3, w["u2"])
    A, Bm = w["A"], w["Bm"]
    np.multiply(h1[:, :, :, None], vals[:, 6, None, None, :], out=A)
    np.multiply(h2[:, :, :, None], vals[:, 7, None, None, :], out=Bm)

    # s_p = a*h1 + b*h2 over (n, h1 choice, a, h2 choice, b); the c interval
    # is (max(s_00, s_11) - 0.5, min(s_01, s_10) - 0.5], folded into c + 0.5
    lo, hi, tmp = w["lo"], w["hi"], w["tmp"]
    np.add(A[:, 0, :, :, None, None], Bm[:, 0, None, None, :, :], out=lo)
    np.add(A[:, 3, :, :, None, None], Bm[:, 3, None, None, :, :], out=tmp)
    np.maximum(lo, tmp, out=lo)
    np.add(A[:, 1, :, :, None, None], Bm[:, 1, None, None, :, :], out=hi)
    np.add(A[:, 2, :, :, None, None], Bm[:, 2, None, None, :, :], out=tmp)
    np.minimum(hi, tmp, out=hi)

    cshift = vals[:, 8] + np.float32(0.5)
    counts = np.zeros(n, dtype=np.int64)
    m1, m2 = w["m1"], w["m2"]
    for ci in range(z):
        cv = cshift[:, ci][:, None, None, None, None]
        np.greater(cv, lo, out=m1)
        np.less_equal(cv, hi, out=m2)
        np.logical_and(m1, m2, out=m1)
        counts += m1.reshape(n, -1).sum(axis=1)
    return counts


def scan_window_counts(origins: np.ndarray, z: int, delta_p: float) -> np.ndarray:
    """Solution count per candidate window, float32, many windows at once.

    origins is (B, 9); returns (B,) int64 counts. Exploits the 2-2-1 shape:
    for fixed hidden choices and output weights a, b, the output bias c enters
    y = s - c monotonically, so XOR-correctness is an interval test on c
    instead of a test per vertex. Counts are float32-accurate; callers that
    need the exact set confirm hits with enumerate_solutions. Work happens in
    cache-sized blocks on reused buffers; results are block-size independent.
    """
    origins = np.asarray(origins, dtype=np.int64)
    if origins.ndim != 2 or origins.shape[1] != 9:
        raise ValueError("origins must be (B, 9)")
    B = origins.shape[0]
    block = max(32, (1 << 20) // max(z ** 8, 1))
    block = 1 << (block.bit_length() - 1)
    counts = np.empty(B, dtype=np.int64)
    for i in range(0, B, block):
        j = min(i + block, B)
        counts[i:j] = _scan_block(origins[i:j], z, delta_p)
    return counts


def to_json(s: SolutionSet) -> str:
    return json.dumps({"window": to_descriptor(s.window), "k": s.k,
                       "indices": [int(i) for i in s.indices]})


def from_json(text: str) -> SolutionSet:
    d = json.loads(text)
    indices = np.array(d["indices"], dtype=np.int64)
    if "k" in d and d["k"] != len(indices):
        raise ValueError("k does not match the index list")
    return SolutionSet(window=from_descriptor(d["window"]), indices=indices)


def write_binary(s: SolutionSet, path) -> None:
    """Compact form: magic, u64 descriptor length, descriptor JSON, u64 count,
    then the indices delta-encoded as u64 little-endian (first delta is the
    first index)."""
    desc = json.dumps(to_descriptor(s.window), sort_keys=True).encode()
    deltas = np.diff(s.indices, prepend=np.int64(0)).astype("<u8")
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<Q", len(desc)))
        fh.write(desc)
        fh.write(struct.pack("<Q", s.k))
        fh.write(deltas.tobytes())


def read_binary(path) -> SolutionSet:
    with open(path, "rb") as fh:
        if fh.read(8) != _MAGIC:
            raise ValueError("not a solution-set file")
        (desc_len,) = struct.unpack("<Q", fh.read(8))
        window = from_descriptor(json.loads(fh.read(desc_len).decode()))
        (k,) = struct.unpack("<Q", fh.read(8))
        deltas = np.frombuffer(fh.read(8 * k), dtype="<u8")
        if deltas.size != k:
            raise ValueError("truncated solution-set file")
    return SolutionSet(window=window, indices=np.cumsum(deltas.astype(np.int64)))

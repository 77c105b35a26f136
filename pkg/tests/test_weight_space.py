import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwtrain import weight_space as ws


def _win(w=9, z=2, origin=None, delta_p=0.5):
    return ws.WeightWindow(w=w, z=z, origin=origin or (0,) * w, delta_p=delta_p)


def test_window_validation():
    with pytest.raises(ValueError):
        ws.WeightWindow(w=0, z=2, origin=(), delta_p=0.5)
    with pytest.raises(ValueError):
        ws.WeightWindow(w=2, z=0, origin=(0, 0), delta_p=0.5)
    # z=1 is a degenerate but legal single-point-per-dim window
    assert ws.window_size(ws.WeightWindow(w=2, z=1, origin=(0, 0),
                                          delta_p=0.5)) == 1
    with pytest.raises(ValueError):
        ws.WeightWindow(w=2, z=2, origin=(0,), delta_p=0.5)
    with pytest.raises(ValueError):
        ws.WeightWindow(w=2, z=2, origin=(0, 0), delta_p=0.0)


def test_window_size():
    assert ws.window_size(_win()) == 512
    assert ws.window_size(_win(w=2, z=4, origin=(0, 0))) == 16


def test_index_coords_low_dim_first():
    win = _win(w=3, z=4, origin=(0, 0, 0))
    assert ws.index_to_coords(0, win) == (0, 0, 0)
    assert ws.index_to_coords(1, win) == (1, 0, 0)
    assert ws.index_to_coords(4, win) == (0, 1, 0)
    assert ws.index_to_coords(16, win) == (0, 0, 1)
    assert ws.index_to_coords(63, win) == (3, 3, 3)


@given(st.integers(min_value=2, max_value=5), st.integers(min_value=1, max_value=4),
       st.integers(min_value=0, max_value=10 ** 6))
@settings(max_examples=150, deadline=None)
def test_index_coords_round_trip(z, w, raw):
    win = ws.WeightWindow(w=w, z=z, origin=(0,) * w, delta_p=0.25)
    idx = raw % ws.window_size(win)
    coords = ws.index_to_coords(idx, win)
    assert all(0 <= c < z for c in coords)
    assert ws.coords_to_index(coords, win) == idx


def test_weights_formula():
    # weight_j = delta_p * (origin_j + coord_j - floor(z/2))
    win = ws.WeightWindow(w=2, z=4, origin=(3, -1), delta_p=0.5)
    assert ws.coords_to_weights((0, 0), win) == pytest.approx([0.5, -1.5])
    assert ws.coords_to_weights((3, 2), win) == pytest.approx([2.0, -0.5])
    assert ws.index_to_weights(0, win) == pytest.approx([0.5, -1.5])


@given(st.integers(min_value=0, max_value=511))
@settings(max_examples=60, deadline=None)
def test_all_weights_are_delta_p_multiples(idx):
    win = _win(origin=(2, -3, 0, 1, -1, 4, 0, -2, 3), delta_p=0.5)
    wts = ws.index_to_weights(idx, win)
    steps = wts / win.delta_p
    assert np.allclose(steps, np.round(steps), atol=1e-9)


def test_ring_size_formula_vs_brute_force():
    # ring r holds the displacement vectors with Chebyshev norm exactly r*z
    z = 3
    for w in (1, 2, 3):
        for r in (1, 2):
            brute = [d for d in itertools.product(
                range(-r * z, r * z + 1, z), repeat=w)
                if max(abs(c) for c in d) == r * z]
            assert ws.ring_size(w, r) == len(brute) == (2 * r + 1) ** w - (2 * r - 1) ** w


def test_first_ring_enumeration_order():
    # per-dimension digit order 0, +z, -z, +2z, ...; dim 0 advances fastest;
    # keep rows whose largest magnitude hits the ring radius
    got = []
    for first, rows in ws.iter_displacements(2, 4, batch=64):
        assert first == 1
        got = [tuple(int(v) for v in r) for r in rows[:8]]
        break
    assert got == [(4, 0), (-4, 0), (0, 4), (4, 4), (-4, 4),
                   (0, -4), (4, -4), (-4, -4)]


def test_displacements_cover_each_ring_once():
    seen = set()
    count = 0
    for first, rows in ws.iter_displacements(3, 2, batch=128):
        assert first == count + 1
        for r in rows:
            seen.add(tuple(int(v) for v in r))
        count += len(rows)
        if count >= ws.ring_size(3, 1) + ws.ring_size(3, 2):
            break
    assert len(seen) == count
    ring1 = {d for d in itertools.product((-2, 0, 2), repeat=3) if any(d)}
    assert ring1 <= seen


def test_batch_schedule_matches_flat_batches():
    flat = []
    for first, rows in ws.iter_displacements(2, 3, batch=16):
        flat.extend(tuple(int(v) for v in r) for r in rows)
        if len(flat) >= 100:
            break
    ramp = []
    for first, rows in ws.iter_displacements(2, 3, batch=[4, 8, 32]):
        assert first == len(ramp) + 1
        ramp.extend(tuple(int(v) for v in r) for r in rows)
        if len(ramp) >= 100:
            break
    assert flat[:100] == ramp[:100]


def test_shift_window_matches_enumeration():
    win = _win(w=2, z=4, origin=(5, -2))
    disp = []
    for first, rows in ws.iter_displacements(2, 4, batch=64):
        disp.extend(tuple(int(v) for v in r) for r in rows)
        if len(disp) >= 90:
            break
    for i in (1, 2, 8, 9, 40, 80):
        shifted = ws.shift_window(win, i)
        assert shifted.origin == (5 + disp[i - 1][0], -2 + disp[i - 1][1])
        assert (shifted.z, shifted.w, shifted.delta_p) == (win.z, win.w, win.delta_p)


def test_shift_window_zero_is_identity():
    win = _win(w=2, z=4, origin=(5, -2))
    assert ws.shift_window(win, 0) == win


def test_random_window_is_seed_deterministic():
    a = ws.random_window(9, 2, 0.5, seed=42)
    b = ws.random_window(9, 2, 0.5, seed=42)
    c = ws.random_window(9, 2, 0.5, seed=43)
    assert a == b
    assert a != c
    assert all(-2 <= o <= 2 for o in a.origin)
    assert (a.w, a.z, a.delta_p) == (9, 2, 0.5)


def test_descriptor_round_trip():
    win = _win(w=3, z=4, origin=(1, -5, 2), delta_p=0.25)
    assert ws.from_descriptor(ws.to_descriptor(win)) == win
    assert '"delta_p": 0.25' in ws.descriptor_json(win)

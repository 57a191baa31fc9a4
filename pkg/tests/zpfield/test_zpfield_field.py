# -*- coding: utf-8 -*-
import sys
sys.path.insert(0,'..')

from concurrent.futures import ThreadPoolExecutor
import numpy as np
import pytest

from sedatom.physmodel import CavityConfig, ANGSTROM, bohr_radius
from sedatom.zpfield import FieldRealization, WindowRange, ModeId, Direction, Polarization, eval_fields, brute_force_fields, \
    window_indices, full_range


def _assert_fields_close(actual, expected):
    scale = max(np.max(np.abs(expected[0])), np.max(np.abs(expected[1])))
    assert np.allclose(actual[0], expected[0], rtol=1e-9, atol=1e-9 * scale)
    assert np.allclose(actual[1], expected[1], rtol=1e-9, atol=1e-9 * scale)


def test_single_mode():
    realization = FieldRealization(3, CavityConfig())
    n = 90000
    omega = n * realization.omega_min

    a = [realization.mode_amplitudes(ModeId(n, d, p)) for d in (Direction.PLUS_Z, Direction.MINUS_Z) for p in (Polarization.X, Polarization.Y)]
    for t in [0., 1.3e-17, 4.2e-13]:
        c = [A * np.cos(omega * t) - B * np.sin(omega * t) for A, B in a]
        E, B = eval_fields(t, WindowRange(n, n), realization)
        E_expected = realization.norm * np.array([c[0] + c[2], c[1] + c[3], 0.])
        B_expected = realization.norm * np.array([-c[1] + c[3], c[0] - c[2], 0.])
        _assert_fields_close((E, B), (E_expected, B_expected))

    # At t = 0 only the A coefficients contribute
    E, _ = eval_fields(0., WindowRange(n, n), realization)
    assert abs(E[0] - realization.norm * (a[0][0] + a[2][0])) <= 1e-12 * abs(E[0])


def test_window_summation():
    realization = FieldRealization(5, CavityConfig(L_z=4085. * ANGSTROM))
    for t in [0., 2.5e-17, 1e-15]:
        E, B = eval_fields(t, full_range(realization), realization)
        assert E[2] == 0. and B[2] == 0.
        _assert_fields_close((E, B), brute_force_fields(t, realization))

        window = window_indices(bohr_radius(), 0.3, realization)
        assert not window.empty
        _assert_fields_close(eval_fields(t, window, realization), brute_force_fields(t, realization, window))

    # Sums over disjoint windows add up
    t = 3e-16
    E_1, B_1 = eval_fields(t, WindowRange(1, 50), realization)
    E_2, B_2 = eval_fields(t, WindowRange(51, realization.n_max), realization)
    _assert_fields_close((E_1 + E_2, B_1 + B_2), eval_fields(t, full_range(realization), realization))

    # Repeated evaluation is deterministic
    E, B = eval_fields(t, WindowRange(10, 20), realization)
    assert np.array_equal(E, eval_fields(t, WindowRange(10, 20), FieldRealization(5, CavityConfig(L_z=4085. * ANGSTROM)))[0])


def test_scaling():
    cavity = CavityConfig(L_z=4085. * ANGSTROM)
    t = 7e-16
    E, B = eval_fields(t, full_range(FieldRealization(9, cavity)), FieldRealization(9, cavity))
    E_2, B_2 = eval_fields(t, full_range(FieldRealization(9, cavity)), FieldRealization(9, cavity, amplitude_scale=2.))
    assert np.allclose(E_2, 2. * E, rtol=1e-12, atol=0.)
    assert np.allclose(B_2, 2. * B, rtol=1e-12, atol=0.)

    off = FieldRealization(9, cavity, amplitude_scale=0.)
    assert off.is_zero
    E, B = eval_fields(t, full_range(off), off)
    assert np.all(E == 0.) and np.all(B == 0.)

    E, B = eval_fields(t, WindowRange(5, 4), FieldRealization(9, cavity))
    assert np.all(E == 0.) and np.all(B == 0.)

    with pytest.raises(ValueError):
        FieldRealization(-1, cavity)


def test_concurrent_evaluation():
    realization = FieldRealization(11, CavityConfig(L_z=4085. * ANGSTROM))
    windows = [WindowRange(1 + 10 * i, 10 + 10 * i) for i in range(8)]
    times = np.linspace(0., 1e-15, 50)
    expected = {w: [eval_fields(t, w, FieldRealization(11, CavityConfig(L_z=4085. * ANGSTROM))) for t in times] for w in windows}

    def evaluate(window):
        wrong = 0
        for _ in range(20):
            for t, (E_ref, B_ref) in zip(times, expected[window]):
                E, B = eval_fields(t, window, realization)
                wrong += int(not (np.array_equal(E, E_ref) and np.array_equal(B, B_ref)))
        return wrong

    switch_interval = sys.getswitchinterval()
    sys.setswitchinterval(1e-6)
    try:
        with ThreadPoolExecutor(max_workers=len(windows)) as pool:
            wrong = list(pool.map(evaluate, windows))
    finally:
        sys.setswitchinterval(switch_interval)

    assert sum(wrong) == 0


def test_time_average():
    # Uniform sampling of one lattice period with more than 2 n_max points averages every cross term exactly away
    realization = FieldRealization(4, CavityConfig(L_z=4085. * ANGSTROM))
    window = full_range(realization)
    samples = 512
    assert samples > 2 * realization.n_max
    times = np.arange(samples) * 2. * np.pi / realization.omega_min / samples

    fields = [eval_fields(t, window, realization) for t in times]
    E_squared = np.mean([np.dot(E, E) for E, _ in fields])
    B_squared = np.mean([np.dot(B, B) for _, B in fields])

    _, A, B = realization.table(window)
    E_expected = realization.norm**2 * np.sum((A[:, 0] + A[:, 2])**2 + (B[:, 0] + B[:, 2])**2 + (A[:, 1] + A[:, 3])**2 + (B[:, 1] + B[:, 3])**2) / 2.
    B_expected = realization.norm**2 * np.sum((A[:, 3] - A[:, 1])**2 + (B[:, 3] - B[:, 1])**2 + (A[:, 0] - A[:, 2])**2 + (B[:, 0] - B[:, 2])**2) / 2.
    assert abs(E_squared / E_expected - 1.) < 1e-9
    assert abs(B_squared / B_expected - 1.) < 1e-9

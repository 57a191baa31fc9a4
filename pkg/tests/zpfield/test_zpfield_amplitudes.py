# -*- coding: utf-8 -*-
import sys
sys.path.insert(0,'..')

import numpy as np
import pytest
from scipy import stats

from sedatom.physmodel import CavityConfig, DEFAULT_CONSTANTS
from sedatom.zpfield import ModeId, Direction, Polarization, COMPONENTS, standard_normal_table, cached_standard_normal_table, \
    amplitude_table, amplitude_std, amplitudes, uniform_from_raw, mode_frequency


def test_uniforms():
    raw = np.array([0, 1 << 11, 2**64 - 1], dtype=np.uint64)
    u = uniform_from_raw(raw)
    assert u[0] == 2.**-53
    assert u[1] == 2. * 2.**-53
    assert u[2] == 1.
    assert np.all(u > 0.)


def test_determinism():
    z = standard_normal_table(42, 1, 100)
    assert z.shape == (100, 4, 2)
    assert np.array_equal(z, standard_normal_table(42, 1, 100))

    # Values depend on the mode only - not on the range they are generated with
    np.testing.assert_allclose(z[49:60], standard_normal_table(42, 50, 60), rtol=1e-12, atol=1e-14)
    np.testing.assert_allclose(z[9], standard_normal_table(42, 10, 10)[0], rtol=1e-12, atol=1e-14)

    # Cached chunks match the direct generation, also across chunk boundaries
    np.testing.assert_allclose(cached_standard_normal_table(42, 2040, 2060), standard_normal_table(42, 2040, 2060), rtol=1e-12, atol=1e-14)
    np.testing.assert_allclose(cached_standard_normal_table(42, 1, 100), z, rtol=1e-12, atol=1e-14)
    assert np.array_equal(cached_standard_normal_table(42, 2040, 2060), cached_standard_normal_table(42, 2040, 2060))

    # Different seeds give different realizations
    assert not np.allclose(z, standard_normal_table(43, 1, 100))

    assert standard_normal_table(42, 10, 9).shape == (0, 4, 2)
    with pytest.raises(ValueError):
        standard_normal_table(42, 0, 5)


def test_amplitudes():
    cavity = CavityConfig()
    omega, A, B = amplitude_table(7, 100, 199, cavity)
    assert omega.shape == (100,)
    assert A.shape == (100, 4) and B.shape == (100, 4)
    assert np.allclose(omega, mode_frequency(np.arange(100, 200), cavity))

    for n in [100, 150, 199]:
        for k, (direction, polarization) in enumerate(COMPONENTS):
            a = amplitudes(7, ModeId(n, direction, polarization), cavity)
            assert abs(a.A - A[n - 100, k]) <= 1e-12 * abs(A[n - 100, k]) + 1e-30
            assert abs(a.B - B[n - 100, k]) <= 1e-12 * abs(B[n - 100, k]) + 1e-30

    # Identical requests give identical values
    assert amplitudes(7, ModeId(123, Direction.MINUS_Z, Polarization.X), cavity) == amplitudes(7, ModeId(123, Direction.MINUS_Z, Polarization.X), cavity)

    assert abs(amplitude_std(1e16) - np.sqrt(2. * np.pi * DEFAULT_CONSTANTS.hbar * 1e16)) < 1e-20


def test_statistics():
    cavity = CavityConfig()
    n_lo, n_hi = 1, 20000
    omega, A, B = amplitude_table(1, n_lo, n_hi, cavity, use_cache=False)
    sigma = amplitude_std(omega)[:, np.newaxis]

    for values in (A, B):
        z = (values / sigma).ravel()
        assert 0.97 <= np.var(z) <= 1.03
        assert abs(np.mean(z)) < 4. / np.sqrt(z.size)
        assert stats.kstest(z, 'norm').pvalue > 1e-4

    # A and B are independent
    assert abs(stats.pearsonr((A / sigma).ravel(), (B / sigma).ravel())[0]) < 4. / np.sqrt(A.size)

    # The spread grows with sqrt(omega)
    high = amplitude_table(1, 500001, 520000, cavity, use_cache=False)
    assert np.std(high[1]) > 5. * np.std(A)

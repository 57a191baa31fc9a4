# -*- coding: utf-8 -*-
import sys
sys.path.insert(0,'..')

import numpy as np
import pytest

from sedatom.exceptions import CollapseEvent
from sedatom.physmodel import RunConfig, CavityConfig, ANGSTROM, bohr_radius, circular_frequency, decay_rate_r3
from sedatom.zpfield import FieldRealization
from sedatom.dynamics import ParticleState, EquationOfMotion
from sedatom.integrator import prepare_integrator


def _equation(config):
    return EquationOfMotion(FieldRealization(config.seed, config.cavity, config.constants, config.field_amplitude_scale), config)


def test_kepler_conservation():
    a_B = bohr_radius()
    config = RunConfig(field_amplitude_scale=0., radiation_reaction=False)
    eom = _equation(config)
    period = 2. * np.pi / circular_frequency(a_B)

    for tableau in ("cash-karp", "dormand-prince"):
        integrator = prepare_integrator(tableau, config.integrator.scaled(1e-3))
        state = ParticleState.circular(a_B)
        initial = state.diagnostics()
        drift = []

        def observer(before, after, dt):
            d = after.diagnostics()
            drift.append(max(abs(d['energy'] / initial['energy'] - 1.), abs(d['angular_momentum'] / initial['angular_momentum'] - 1.)))

        final = integrator.advance(state, 10. * period, eom, observer)
        assert max(drift) < 1e-8
        assert abs(final.radius / a_B - 1.) < 1e-7
        # Back at the start after full revolutions
        assert np.linalg.norm(final.position - state.position) < 1e-6 * a_B

    # Elliptic orbits conserve their invariants as well
    integrator = prepare_integrator("cash-karp", config.integrator.scaled(1e-3))
    state = ParticleState(position=[a_B, 0.], velocity=[0., 1.2 * ParticleState.circular(a_B).speed])
    initial = state.diagnostics()
    final = integrator.advance(state, 5. * period, eom)
    assert abs(final.diagnostics()['energy'] / initial['energy'] - 1.) < 1e-8
    assert abs(final.diagnostics()['eccentricity'] - initial['eccentricity']) < 1e-7


def test_radiation_reaction_decay():
    a_B = bohr_radius()
    config = RunConfig(field_amplitude_scale=0.)
    integrator = prepare_integrator(config.tableau, config.integrator)

    state = ParticleState.circular(a_B)
    final = integrator.advance(state, 1e-14, _equation(config))
    assert final.radius < a_B
    assert final.diagnostics()['energy'] < state.diagnostics()['energy']

    change = final.radius**3 - a_B**3
    assert abs(change / (decay_rate_r3() * 1e-14) - 1.) < 0.05

    # Crossing the lower guard ends the run
    integrator = prepare_integrator(config.tableau, config.integrator, guards=(a_B * (1. - 1e-5), 500. * ANGSTROM))
    with pytest.raises(CollapseEvent) as ex:
        integrator.advance(state, 1e-14, _equation(config))
    assert 0. < ex.value.t < 1e-14
    assert ex.value.state.radius < a_B * (1. - 1e-5)


def test_driven_determinism():
    config = RunConfig(cavity=CavityConfig(L_z=4085. * ANGSTROM), r0=0.6 * ANGSTROM, window_fraction=0.3)
    results = []
    for _ in range(2):
        integrator = prepare_integrator(config.tableau, config.integrator, guards=(config.r_min_guard, config.r_max_guard))
        results.append(integrator.advance(ParticleState.circular(config.r0), 2e-16, _equation(config)))
    assert results[0] == results[1]

    # A different realization gives a different trajectory
    other = RunConfig(cavity=config.cavity, r0=config.r0, window_fraction=0.3, seed=2)
    integrator = prepare_integrator(other.tableau, other.integrator)
    assert integrator.advance(ParticleState.circular(config.r0), 2e-16, _equation(other)) != results[0]

# -*- coding: utf-8 -*-
import sys
sys.path.insert(0,'..')

import numpy as np

from sedatom.physmodel import bohr_radius, circular_speed
from sedatom.dynamics import ParticleState


def test_state():
    a_B = bohr_radius()
    state = ParticleState.circular(a_B, t=2.)
    assert state.t == 2.
    assert state.radius == a_B
    assert state.speed == circular_speed(a_B)
    assert state.position[1] == 0. and state.velocity[0] == 0. and state.velocity[1] > 0.

    y = state.vector
    assert np.array_equal(y, [a_B, 0., 0., circular_speed(a_B)])
    assert ParticleState.from_vector(y, 2.) == state
    assert ParticleState.from_vector(y, 3.) != state

    # States do not share memory with their inputs
    z = np.array([1., 2.])
    s = ParticleState(z, [0., 0.])
    z[0] = 5.
    assert s.position[0] == 1.

    assert state.diagnostics()['eccentricity'] < 1e-6

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import numpy as np

from sedatom.physmodel import RunConfig, bohr_radius, decay_rate_r3
from sedatom.zpfield import FieldRealization
from sedatom.dynamics import ParticleState, EquationOfMotion
from sedatom.integrator import EmbeddedRungeKutta, prepare_integrator


# Runge-Kutta-Fehlberg 4(5) pair - the fifth order solution is propagated
class Fehlberg45(EmbeddedRungeKutta):
    name = "fehlberg"
    c = np.array([0., 1/4, 3/8, 12/13, 1., 1/2])
    A = np.array([
        [0., 0., 0., 0., 0.],
        [1/4, 0., 0., 0., 0.],
        [3/32, 9/32, 0., 0., 0.],
        [1932/2197, -7200/2197, 7296/2197, 0., 0.],
        [439/216, -8., 3680/513, -845/4104, 0.],
        [-8/27, 2., -3544/2565, 1859/4104, -11/40]
        ])
    b = np.array([16/135, 0., 6656/12825, 28561/56430, -9/50, 2/55])
    b_star = np.array([25/216, 0., 1408/2565, 2197/4104, -1/5, 0.])


if __name__ == "__main__":
    # Radiation reaction only
    config = RunConfig(field_amplitude_scale=0.).validate()
    eom = EquationOfMotion(FieldRealization(config.seed, config.cavity, config.constants, amplitude_scale=0.), config)

    # Use our custom integrator 'Fehlberg45'
    integrator = prepare_integrator(Fehlberg45(), config.integrator)

    a_B = bohr_radius(config.constants)
    state = integrator.advance(ParticleState.circular(a_B, config.constants), 1e-13, eom)
    print(f"d(r^3)/dt: simulated {(state.radius**3 - a_B**3) / 1e-13:.4e} cm^3/s, predicted {decay_rate_r3(config.constants):.4e} cm^3/s")

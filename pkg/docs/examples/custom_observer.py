#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from sedatom.physmodel import RunConfig
from sedatom.zpfield import FieldRealization
from sedatom.dynamics import ParticleState, EquationOfMotion
from sedatom.integrator import prepare_integrator
from sedatom.ensemble import Observer, HistogramObserver, ObserverChain, RadialHistogram


# Custom observer that keeps track of the orbital energy
class EnergyObserver(Observer):
    def __init__(self, constants):
        self.constants = constants
        self.t = []
        self.energy = []

        super(EnergyObserver, self).__init__()

    def observe(self, before, after, dt):
        self.t.append(after.t)
        self.energy.append(after.diagnostics(self.constants)['energy'])


if __name__ == "__main__":
    config = RunConfig(seed=42).validate()

    # Equation of motion with the zero-point field of seed 42
    realization = FieldRealization(config.seed, config.cavity, config.constants)
    eom = EquationOfMotion(realization, config)
    integrator = prepare_integrator(config.tableau, config.integrator, guards=(config.r_min_guard, config.r_max_guard))

    # Record the energy and the radial histogram at the same time
    energy = EnergyObserver(config.constants)
    histogram = RadialHistogram.from_config(config.histogram)
    observer = ObserverChain([energy, HistogramObserver(histogram)])

    state = integrator.advance(ParticleState.circular(config.r0, config.constants), 1e-13, eom, observer)
    print(f"final radius {state.radius:.4e} cm after {integrator.n_accepted} steps")
    print(f"energy went from {energy.energy[0]:.6e} erg to {energy.energy[-1]:.6e} erg")
    print(f"most likely radius {histogram.normalize().peak_radius:.4e} cm")

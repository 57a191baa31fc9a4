#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import numpy as np

from sedatom.physmodel import RunConfig, ANGSTROM, bohr_radius, qm_radial_density
from sedatom.ensemble import run_campaign


if __name__ == "__main__":
    # Short campaign: three runs, 1 ps, snapshots every 0.25 ps
    config = RunConfig(seeds=[1, 2, 3], t_end=1e-12, snapshot_times=[2.5e-13, 5e-13, 7.5e-13, 1e-12]).validate()

    # Run the campaign on three processes
    result = run_campaign(config, workers=3)

    for run in result.runs:
        print(f"run {run.seed}: ended at t={run.end_time:.3e} s, event: {run.event['kind'] if run.event else 'none'}")

    # Compare the merged densities with the ground state
    a_B = bohr_radius(config.constants)
    for report in result.reports:
        print(f"t={report.t:.3e} s: l1 distance {report.l1_to_qm:.3f}, peak at {report.density.peak_radius / ANGSTROM:.2f} A")

    density = result.reports[-1].density
    print(np.column_stack((density.r_center / ANGSTROM, density.P, qm_radial_density(density.r_center, a_B)))[40:70])

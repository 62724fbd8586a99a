"""Teleporting an entangled pair through two copies of the resource.

Run with ``python3 demos/03_entanglement_teleportation.py``.
"""
import dataclasses

import numpy as np

from heisenberg_teleport import (
    ModelParams,
    T1Input,
    asymptotic_state,
    named_state,
    t1_average_fidelity,
    t1_fidelity,
    t1_fidelity_coefficients,
    t1_output_components,
    t1_output_negativity,
)
from heisenberg_teleport.scenario import load_preset, scenario_csv

p = ModelParams(J=1, chi=0.9, Jz=0.5, B=3, b=1, D=0, gamma=0.02)
rho = asymptotic_state(named_state("psi_plus"), p)

# Output entanglement against input entanglement N_in = sin(theta).
for n_in in (0.0, 0.25, 0.5, 0.75, 1.0):
    out = t1_output_components(rho, T1Input.from_negativity(n_in))
    print(f"N_in = {n_in:4.2f}   N_out = {t1_output_negativity(out):.4f}")

# Fidelity is quadratic in N_in.
f1, f2 = t1_fidelity_coefficients(rho)
state = T1Input(theta=1.0)
print(f"f1 = {f1:.4f}, f2 = {f2:.4f}")
print("f1 + f2 N^2 =", round(f1 + f2 * state.negativity**2, 6), " direct =", round(t1_fidelity(rho, state), 6))

# Average fidelity; the spin-orbit term and inhomogeneity degrade it.
for D in (0, 1, 3):
    for b in (0, 1, 3):
        q = dataclasses.replace(p, D=D, b=b)
        print(f"D = {D}  b = {b}   F_A = {t1_average_fidelity(asymptotic_state(named_state('psi_plus'), q)):.4f}")

# The same numbers come from the fig6 preset (first lines only).
print("\n".join(scenario_csv(load_preset("fig6", {"stop": "0.5", "stop2": "0.5"})).splitlines()[:4]))

"""One-qubit teleportation through the evolving resource.

Run with ``python3 demos/02_standard_teleportation.py``.
"""
import dataclasses

import numpy as np

from heisenberg_teleport import (
    ModelParams,
    QubitAngles,
    T0Case,
    bell_probabilities,
    max_fidelity_t0,
    named_state,
    phi_max_asymptotic,
    phi_max_case,
    propagate,
    teleport_t0,
)

p = ModelParams(J=1, chi=0.9, Jz=0.5, B=3, b=1, D=0, gamma=0.02)

# Bell weights of the resource set the depolarizing channel.
rho = propagate(named_state("psi_plus"), p, 10.0)
print("Bell weights (Psi-, Phi-, Phi+, Psi+):", np.round(bell_probabilities(rho).as_array(), 4))

# Teleport one state; the receiver may relabel corrections to match Psi+.
s = QubitAngles(theta=np.pi / 3, phi=0.5)
for adapt in (False, True):
    out = teleport_t0(rho, s, adapt_frame=adapt)
    fid = (s.ket().conj() @ out @ s.ket()).real
    print(f"adapt_frame={adapt!s:5}  fidelity = {fid:.4f}")
print("maximal average fidelity:", round(max_fidelity_t0(rho), 4))

# Closed form against the numerical pipeline, every initial state.
for case in T0Case:
    closed = phi_max_case(case, p, 10.0)
    numeric = max_fidelity_t0(propagate(case.initial_state(), p, 10.0))
    print(f"{case.name:10s} case {case.case:3s} {closed:.6f}  {numeric:.6f}")

# Long-time values; 2/3 is the classical bound.
for D in (0, 1, 2, 5):
    q = dataclasses.replace(p, D=D)
    print(f"D = {D}   Psi+: {phi_max_asymptotic(T0Case.PSI_PLUS, q):.4f}"
          f"   |01>: {phi_max_asymptotic(T0Case.KET01, q):.4f}")

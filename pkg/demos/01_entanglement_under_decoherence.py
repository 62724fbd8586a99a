"""Entanglement of the resource as intrinsic decoherence sets in.

Run with ``python3 demos/01_entanglement_under_decoherence.py``.
"""
import dataclasses

import numpy as np

from heisenberg_teleport import (
    ModelParams,
    asymptotic_state,
    kraus_operators,
    long_time,
    named_state,
    negativity,
    propagate,
    propagate_kraus,
    trace_distance,
)

p = ModelParams(J=1, chi=0.9, Jz=0.5, B=1, b=1, D=0, gamma=0.09)
rho0 = named_state("ket00")

# The product state |00> picks up entanglement from the anisotropic
# coupling, then the oscillations are damped out.
for t in (0, 1, 2, 5, 10, 20, 50):
    print(f"t = {t:5.1f}   N = {negativity(propagate(rho0, p, t)):.4f}")

# The dephased limit keeps only the energy populations.
print("N at long times:", round(negativity(asymptotic_state(rho0, p)), 4))
print("time scale used as 'long':", round(long_time(p), 1))

# The steady entanglement depends non-monotonically on the field.
for B in np.arange(0, 5.01, 0.5):
    q = dataclasses.replace(p, B=B)
    print(f"B = {B:3.1f}   N_inf = {negativity(asymptotic_state(rho0, q)):.4f}")

# Kraus representation of the same map, truncated at 1e-12.
ks = kraus_operators(p, 3.0)
print("Kraus operators:", ks.K, " defect:", f"{ks.defect:.1e}")
print("distance to spectral solution:",
      f"{trace_distance(propagate_kraus(rho0, ks), propagate(rho0, p, 3.0)):.1e}")

# A Bell state that is an eigenstate is immune to the decoherence.
robust = dataclasses.replace(p, B=0)
phi = named_state("phi_plus")
print("Phi+ at B=0 after t=100:", round(negativity(propagate(phi, robust, 100)), 12))

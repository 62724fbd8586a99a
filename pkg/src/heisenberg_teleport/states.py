"""Named two-qubit states and single-qubit Pauli matrices."""

from __future__ import annotations

import numpy as np

SQ2 = np.sqrt(0.5)

PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

KETS = {
    "ket00": np.array([1, 0, 0, 0], dtype=complex),
    "ket01": np.array([0, 1, 0, 0], dtype=complex),
    "ket10": np.array([0, 0, 1, 0], dtype=complex),
    "ket11": np.array([0, 0, 0, 1], dtype=complex),
    "phi_plus": SQ2 * np.array([1, 0, 0, 1], dtype=complex),
    "phi_minus": SQ2 * np.array([1, 0, 0, -1], dtype=complex),
    "psi_plus": SQ2 * np.array([0, 1, 1, 0], dtype=complex),
    "psi_minus": SQ2 * np.array([0, 1, -1, 0], dtype=complex),
}

# Bell projectors in measurement order E0..E3: Psi-, Phi-, Phi+, Psi+.
BELL_ORDER = ("psi_minus", "phi_minus", "phi_plus", "psi_plus")


def projector(ket) -> np.ndarray:
    ket = np.asarray(ket, dtype=complex)
    return np.outer(ket, ket.conj())


def named_state(name: str) -> np.ndarray:
    """Density matrix of one of the keys of :data:`KETS`."""
    try:
        return projector(KETS[name])
    except KeyError:
        raise ValueError(f"unknown state {name!r}; expected one of {sorted(KETS)}") from None


BELL_PROJECTORS = tuple(projector(KETS[name]) for name in BELL_ORDER)

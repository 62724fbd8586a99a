"""Negativity of two-qubit states."""

from __future__ import annotations

import numpy as np

from .errors import NotXState
from .model import X_MASK

__all__ = ["partial_transpose", "negativity", "negativity_xstate", "xstate_pt_eigenvalues"]


def partial_transpose(rho) -> np.ndarray:
    """Transpose the first qubit: entry (ij, kl) moves to (kj, il)."""
    rho = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    return rho.transpose(2, 1, 0, 3).reshape(4, 4)


def negativity(rho) -> float:
    """``2 * max(-lambda_min(rho^T_A), 0)``; equals 1 for Bell states."""
    pt = partial_transpose(rho)
    lam = np.linalg.eigvalsh(0.5 * (pt + pt.conj().T))
    return max(-2.0 * float(lam[0]), 0.0) + 0.0  # + 0.0 folds -0.0


def xstate_pt_eigenvalues(rho, tol: float = 1e-12) -> np.ndarray:
    """Closed-form eigenvalues of the partial transpose of an X state.

    The partial transpose swaps the roles of ``rho_14`` and ``rho_23``, so the
    {|01>, |10>} populations pair with ``|rho_14|`` and the {|00>, |11>}
    populations with ``|rho_23|``.
    """
    rho = np.asarray(rho, dtype=complex)
    off = np.abs(rho[~X_MASK])
    if off.max() > tol:
        raise NotXState(f"non-X entry of magnitude {off.max():.3g}")
    r11, r22, r33, r44 = rho.diagonal().real
    r14, r23 = rho[0, 3], rho[1, 2]
    root_a = np.sqrt((r22 - r33) ** 2 + 4 * abs(r14) ** 2)
    root_b = np.sqrt((r11 - r44) ** 2 + 4 * abs(r23) ** 2)
    return np.array(
        [
            0.5 * ((r22 + r33) + root_a),
            0.5 * ((r22 + r33) - root_a),
            0.5 * ((r11 + r44) + root_b),
            0.5 * ((r11 + r44) - root_b),
        ]
    )


def negativity_xstate(rho, tol: float = 1e-12) -> float:
    """Negativity of an X-shaped state without an eigensolver.

    Raises
    ------
    NotXState
        If an entry off the two diagonals exceeds ``tol``.
    """
    lam = xstate_pt_eigenvalues(rho, tol)
    return max(-2.0 * float(lam.min()), 0.0) + 0.0  # + 0.0 folds -0.0

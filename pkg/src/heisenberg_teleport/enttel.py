"""Entanglement teleportation of a two-qubit pure state through two resource copies.

Each qubit of the input goes through its own copy of the resource, so the
output is a product of two generalized depolarizing channels with joint
weights ``p_mu * p_nu``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import XState
from .states import PAULI
from .teleport import bell_probabilities

__all__ = [
    "T1Input",
    "T1Output",
    "teleport_t1",
    "t1_output_components",
    "t1_output_negativity",
    "t1_fidelity",
    "t1_fidelity_coefficients",
    "t1_average_fidelity",
    "t1_average_fidelity_quadrature",
]


# corrections sigma_mu (x) sigma_nu, row index mu, column index nu
_PAULI_PAIRS = np.array([[np.kron(a, b) for b in PAULI] for a in PAULI])


@dataclass(frozen=True)
class T1Input:
    """Input ``cos(theta/2)|10> + exp(i phi) sin(theta/2)|01>``; negativity ``sin(theta)``."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta out of [0, pi]: {self.theta}")
        if not 0.0 <= self.phi <= 2 * math.pi:
            raise ValueError(f"phi out of [0, 2pi]: {self.phi}")

    @classmethod
    def from_negativity(cls, n_in: float, phi: float = 0.0) -> "T1Input":
        """Input with ``theta = arcsin(n_in)`` in [0, pi/2]."""
        return cls(math.asin(min(max(n_in, 0.0), 1.0)), phi)

    @property
    def negativity(self) -> float:
        return math.sin(self.theta)

    def ket(self) -> np.ndarray:
        v = np.zeros(4, dtype=complex)
        v[2] = math.cos(self.theta / 2)
        v[1] = np.exp(1j * self.phi) * math.sin(self.theta / 2)
        return v

    def density(self) -> np.ndarray:
        k = self.ket()
        return np.outer(k, k.conj())


@dataclass(frozen=True)
class T1Output:
    """X-shaped replica state.

    ``alpha`` is the |00> and |11> population, ``a_prime``/``b_prime`` the
    |01>/|10> populations, ``kappa = <00|rho|11>`` (real) and
    ``c_prime = <01|rho|10>``.
    """

    alpha: float
    a_prime: float
    b_prime: float
    kappa: float
    c_prime: complex

    def matrix(self) -> np.ndarray:
        return XState(
            mu_plus=self.alpha,
            mu_minus=self.alpha,
            w1=self.a_prime,
            w2=self.b_prime,
            nu=self.kappa,
            z=self.c_prime,
        ).matrix()


def teleport_t1(rho_channel, state: T1Input) -> np.ndarray:
    """Replica state from the full 16-term Pauli sum."""
    probs = bell_probabilities(rho_channel).as_array()
    weights = np.outer(probs, probs)
    u = _PAULI_PAIRS
    terms = u @ state.density() @ np.conj(np.swapaxes(u, -1, -2))
    return np.einsum("mn,mnij->ij", weights, terms)


def _channel_moments(rho_channel):
    rho = np.asarray(rho_channel, dtype=complex)
    XState.from_matrix(rho)  # raises NotXState
    s_psi = rho[1, 1].real + rho[2, 2].real
    s_phi = rho[0, 0].real + rho[3, 3].real
    return s_psi, s_phi, rho[1, 2].real, rho[0, 3].real


def t1_output_components(rho_channel, state: T1Input) -> T1Output:
    """Replica state from its five independent components.

    Raises
    ------
    NotXState
        If the channel is not X-shaped.
    """
    s_psi, s_phi, re23, re14 = _channel_moments(rho_channel)
    th, ph = state.theta, state.phi
    c2, s2 = math.cos(th / 2) ** 2, math.sin(th / 2) ** 2
    return T1Output(
        alpha=s_psi * s_phi,
        a_prime=s_phi**2 * c2 + s_psi**2 * s2,
        b_prime=s_psi**2 * c2 + s_phi**2 * s2,
        kappa=4 * re23 * re14 * math.cos(ph) * math.sin(th),
        c_prime=2 * np.exp(1j * ph) * (re23**2 + np.exp(-2j * ph) * re14**2) * math.sin(th),
    )


def t1_output_negativity(out: T1Output) -> float:
    """Negativity of the replica from its partial-transpose eigenvalues."""
    root = math.sqrt((out.a_prime - out.b_prime) ** 2 + 4 * out.kappa**2)
    lam = (
        0.5 * (out.a_prime + out.b_prime + root),
        0.5 * (out.a_prime + out.b_prime - root),
        out.alpha + abs(out.c_prime),
        out.alpha - abs(out.c_prime),
    )
    return max(-2.0 * min(lam), 0.0) + 0.0  # + 0.0 folds -0.0


def t1_fidelity(rho_channel, state: T1Input) -> float:
    """Overlap ``<psi_in|rho_out|psi_in>`` of the replica with the input."""
    k = state.ket()
    return float((k.conj() @ teleport_t1(rho_channel, state) @ k).real)


def t1_fidelity_coefficients(rho_channel, phi: float = 0.0) -> tuple[float, float]:
    """``(f1, f2)`` with fidelity ``f1 + f2 * N_in**2`` for inputs of phase ``phi``."""
    s_psi, _, re23, re14 = _channel_moments(rho_channel)
    f1 = s_psi**2
    f2 = 0.5 - s_psi + 2 * (re14**2 * math.cos(2 * phi) + re23**2)
    return f1, f2


def t1_average_fidelity(rho_channel) -> float:
    """Fidelity averaged over inputs with the measure ``sin(theta) dtheta dphi / 4pi``."""
    s_psi, s_phi, re23, _ = _channel_moments(rho_channel)
    return (2 * s_psi**2 + s_phi**2 + 4 * re23**2) / 3


def _t1_superoperator(rho_channel) -> np.ndarray:
    # row-major vec: vec(U X U^dagger) = kron(U, conj(U)) vec(X)
    probs = bell_probabilities(rho_channel).as_array()
    weights = np.outer(probs, probs)
    u = _PAULI_PAIRS
    supers = np.einsum("mnij,mnkl->mnikjl", u, u.conj()).reshape(4, 4, 16, 16)
    return np.einsum("mn,mnab->ab", weights, supers)


def t1_average_fidelity_quadrature(rho_channel, n_theta: int = 96, n_phi: int = 96) -> float:
    """Same average by direct quadrature over the input sphere.

    Gauss-Legendre in ``cos(theta)`` and the uniform rule in ``phi``. The
    replica states are produced in one batch through the 16x16 matrix of the
    protocol map.
    """
    x, w = np.polynomial.legendre.leggauss(n_theta)
    thetas = np.arccos(x)
    phis = 2 * math.pi * np.arange(n_phi) / n_phi
    th, ph = np.meshgrid(thetas, phis, indexing="ij")
    kets = np.zeros(th.shape + (4,), dtype=complex)
    kets[..., 2] = np.cos(th / 2)
    kets[..., 1] = np.exp(1j * ph) * np.sin(th / 2)
    rho_in = np.einsum("...i,...j->...ij", kets, kets.conj()).reshape(th.shape + (16,))
    rho_out = (rho_in @ _t1_superoperator(rho_channel).T).reshape(th.shape + (4, 4))
    fid = np.einsum("...i,...ij,...j->...", kets.conj(), rho_out, kets).real
    # (1/4pi) int dphi int d(cos theta) = (1/2) sum_w mean_phi
    return float(0.5 * np.sum(w * fid.mean(axis=1)))

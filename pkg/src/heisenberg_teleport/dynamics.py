"""Milburn intrinsic-decoherence dynamics of the two-qubit resource.

The master equation used throughout is

    d rho / dt = -i [H, rho] - (gamma / 2) [H, [H, rho]]

with ``gamma`` a rate: ``gamma = 0`` is unitary, larger ``gamma`` dephases
faster. In the energy basis each coherence picks up
``exp(-gamma t (e_m - e_n)**2 / 2 - i (e_m - e_n) t)``.

Four evaluators are provided. :func:`propagate` is the canonical one and the
others are checked against it:

* :func:`propagate` - exact spectral solution.
* :func:`propagate_xstate_closed_form` - component formulas for X states.
* :func:`kraus_operators` / :func:`propagate_kraus` - truncated Kraus series.
* :func:`integrate_master_equation` - fixed-step classical RK4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import expm

from .errors import (
    DegenerateClosedForm,
    NoDephasing,
    NotXState,
    StepTooLarge,
    TruncationFailure,
)
from .model import (
    X_MASK,
    ModelParams,
    Spectrum,
    build_hamiltonian,
    degeneracy_threshold,
    numeric_spectrum,
)

__all__ = [
    "XState",
    "KrausSet",
    "AuxFunctions",
    "aux_functions",
    "propagate",
    "propagate_xstate_closed_form",
    "kraus_operators",
    "propagate_kraus",
    "integrate_master_equation",
    "asymptotic_state",
    "long_time",
    "trace_distance",
]


@dataclass(frozen=True)
class XState:
    """Two-qubit state whose only nonzero entries sit on the two diagonals.

    ``mu_plus``/``mu_minus`` are the |00>/|11> populations, ``w1``/``w2`` the
    |01>/|10> populations, ``nu = <00|rho|11>`` and ``z = <01|rho|10>``.
    """

    mu_plus: float = 0.0
    mu_minus: float = 0.0
    w1: float = 0.0
    w2: float = 0.0
    nu: complex = 0.0
    z: complex = 0.0

    def __post_init__(self):
        for name in ("mu_plus", "mu_minus", "w1", "w2"):
            object.__setattr__(self, name, float(getattr(self, name)))
        object.__setattr__(self, "nu", complex(self.nu))
        object.__setattr__(self, "z", complex(self.z))

    def matrix(self) -> np.ndarray:
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0], rho[1, 1], rho[2, 2], rho[3, 3] = self.mu_plus, self.w1, self.w2, self.mu_minus
        rho[0, 3], rho[3, 0] = self.nu, np.conj(self.nu)
        rho[1, 2], rho[2, 1] = self.z, np.conj(self.z)
        return rho

    @classmethod
    def from_matrix(cls, rho, tol: float = 1e-12) -> "XState":
        rho = np.asarray(rho, dtype=complex)
        off = np.abs(rho[~X_MASK])
        if off.size and off.max() > tol:
            raise NotXState(f"non-X entry of magnitude {off.max():.3g}")
        return cls(
            mu_plus=rho[0, 0].real,
            mu_minus=rho[3, 3].real,
            w1=rho[1, 1].real,
            w2=rho[2, 2].real,
            nu=rho[0, 3],
            z=rho[1, 2],
        )

    def is_valid(self, tol: float = 1e-12) -> bool:
        pops = (self.mu_plus, self.mu_minus, self.w1, self.w2)
        return (
            abs(sum(pops) - 1) <= tol
            and min(pops) >= -tol
            and abs(self.nu) ** 2 <= self.mu_plus * self.mu_minus + tol
            and abs(self.z) ** 2 <= self.w1 * self.w2 + tol
        )


@dataclass(frozen=True)
class KrausSet:
    """Truncated Kraus representation ``rho -> sum_k M_k rho M_k^dagger``."""

    operators: tuple
    defect: float

    @property
    def K(self) -> int:
        return len(self.operators)


class AuxFunctions(NamedTuple):
    """Time-dependent factors of the X-state closed form.

    ``B_Psi`` and ``b_Psi_p`` are ``B * Psi(t)`` and ``b * Psi'(t)``; keeping
    the products makes ``B = 0`` and ``b = 0`` ordinary points.
    """

    Phi: float
    B_Psi: complex
    Phi_p: float
    b_Psi_p: complex
    Theta: complex
    Theta_sigma: complex


def aux_functions(p: ModelParams, t: float) -> AuxFunctions:
    xi, eta, g = p.xi, p.eta, p.gamma
    damp_eta = math.exp(-2 * eta**2 * g * t)
    damp_xi = math.exp(-2 * xi**2 * g * t)
    c_eta, s_eta = math.cos(2 * eta * t), math.sin(2 * eta * t)
    c_xi, s_xi = math.cos(2 * xi * t), math.sin(2 * xi * t)
    return AuxFunctions(
        Phi=damp_eta * c_eta,
        B_Psi=complex(p.B * c_eta, -eta * s_eta) * damp_eta,
        Phi_p=damp_xi * c_xi,
        b_Psi_p=complex(p.b * c_xi, -xi * s_xi) * damp_xi,
        Theta=complex((xi**2 + p.b**2) * c_xi, -2 * p.b * xi * s_xi) * damp_xi,
        # same function for the {|00>, |11>} block (eta, B in place of xi, b)
        Theta_sigma=complex((eta**2 + p.B**2) * c_eta, -2 * p.B * eta * s_eta) * damp_eta,
    )


def _coherence_factors(energies, gamma, t, thr):
    gaps = energies[:, None] - energies[None, :]
    gaps[np.abs(gaps) <= thr] = 0.0
    return np.exp(-0.5 * gamma * t * gaps**2 - 1j * gaps * t)


def propagate(rho0, p: ModelParams, t: float, spectrum: Spectrum | None = None) -> np.ndarray:
    """Exact state at time ``t`` from the spectral solution.

    Valid for every parameter value. Energies closer than the degeneracy
    threshold are treated as equal, so the result does not depend on how a
    degenerate eigenspace is resolved. ``spectrum`` overrides the eigenbasis
    from :func:`numeric_spectrum`; it must diagonalize ``build_hamiltonian(p)``.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    rho0 = np.asarray(rho0, dtype=complex)
    if t == 0:
        return 0.5 * (rho0 + rho0.conj().T)
    H = build_hamiltonian(p)
    eig = numeric_spectrum(H) if spectrum is None else spectrum
    V = eig.vectors
    factors = _coherence_factors(eig.energies.copy(), p.gamma, t, degeneracy_threshold(H))
    rho_e = V.conj().T @ rho0 @ V
    rho = V @ (factors * rho_e) @ V.conj().T
    return 0.5 * (rho + rho.conj().T)


def _check_closed_form(p: ModelParams):
    thr = degeneracy_threshold(build_hamiltonian(p))
    if abs(p.J * p.chi) <= thr or abs(p.flip_flop) <= thr:
        raise DegenerateClosedForm("closed-form X evolution needs J*chi != 0 and J - i*Jz*D != 0")


def propagate_xstate_closed_form(x0: XState, p: ModelParams, t: float) -> XState:
    """Evolve an X state with the explicit component formulas.

    Each invariant block is a driven two-level system, so both blocks use the
    same expressions: the {|01>, |10>} block with ``(xi, b, J + i Jz D)`` and
    the {|00>, |11>} block with ``(eta, B, J chi)``. For real ``nu`` the
    |00>/|11> expressions collapse to the familiar real forms, e.g.
    ``rho_14 = nu/eta^2 [(J chi)^2 + B^2 Psi(t)]`` for ``mu_+ = mu_- = 0``.

    Raises
    ------
    DegenerateClosedForm
        When ``J chi`` or ``J - i Jz D`` vanishes.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    _check_closed_form(p)
    f = aux_functions(p, t)

    mu_p, mu_m, nu = _block(
        x0.mu_plus, x0.mu_minus, x0.nu,
        field=p.B, coupling=complex(p.J * p.chi), gap=p.eta,
        Phi=f.Phi, field_Psi=f.B_Psi, Theta=f.Theta_sigma,
    )
    w1, w2, z = _block(
        x0.w1, x0.w2, x0.z,
        field=p.b, coupling=p.flip_flop, gap=p.xi,
        Phi=f.Phi_p, field_Psi=f.b_Psi_p, Theta=f.Theta,
    )
    return XState(mu_plus=mu_p, mu_minus=mu_m, w1=w1, w2=w2, nu=nu, z=z)


def _block(a, c, coh, *, field, coupling, gap, Phi, field_Psi, Theta):
    # a, c: populations of the upper/lower basis state; coh: their coherence
    k2 = abs(coupling) ** 2
    s = 1.0 / (2 * gap**2)
    g_conj = np.conj(coupling)
    cross = coh * s * g_conj * (field - field_Psi)
    upper = a * s * (2 * field**2 + k2 * (1 + Phi)) + c * s * k2 * (1 - Phi) + 2 * cross.real
    lower = a * s * k2 * (1 - Phi) + c * s * (2 * field**2 + k2 * (1 + Phi)) - 2 * cross.real
    coh_t = (
        a * s * coupling * (field - field_Psi)
        + c * s * coupling * (field_Psi - field)
        + coh * s * (k2 + Theta)
        + np.conj(coh) * s * coupling**2 * (1 - Phi)
    )
    return float(upper), float(lower), complex(coh_t)


def kraus_operators(p: ModelParams, t: float, tol: float = 1e-12, max_terms: int = 512) -> KrausSet:
    """Kraus operators ``M_k = sqrt((gamma t)^k / k!) H^k exp(-iHt) exp(-gamma t H^2 / 2)``.

    Terms are added until ``||I - sum_k M_k^dagger M_k||_2 <= tol``. The
    exponentials come from :func:`scipy.linalg.expm` and the powers from
    repeated products, so this route shares no eigendecomposition with
    :func:`propagate`.

    Raises
    ------
    TruncationFailure
        If more than ``max_terms`` operators would be needed.
    """
    if t < 0 or tol <= 0:
        raise ValueError("need t >= 0 and tol > 0")
    H = build_hamiltonian(p)
    gt = p.gamma * t
    base = expm(-1j * t * H) @ expm(-0.5 * gt * (H @ H))
    eye = np.eye(4)

    ops = []
    completeness = np.zeros((4, 4), dtype=complex)
    scaled = np.eye(4, dtype=complex)  # sqrt((gamma t)^k / k!) H^k, built incrementally
    for k in range(max_terms):
        if k > 0:
            if gt == 0.0:
                break
            with np.errstate(over="ignore", invalid="ignore"):
                scaled = (scaled @ H) * math.sqrt(gt / k)
        with np.errstate(over="ignore", invalid="ignore"):
            M = scaled @ base
        if not np.all(np.isfinite(M)):
            break
        ops.append(M)
        completeness += M.conj().T @ M
        defect = np.linalg.norm(eye - completeness, 2)
        if defect <= tol:
            return KrausSet(tuple(ops), float(defect))
    if gt == 0.0:
        return KrausSet(tuple(ops), float(np.linalg.norm(eye - completeness, 2)))
    raise TruncationFailure(
        f"Kraus series needs more than {max_terms} terms (gamma*t*||H||^2 too large); use propagate"
    )


def propagate_kraus(rho0, ks: KrausSet) -> np.ndarray:
    rho0 = np.asarray(rho0, dtype=complex)
    out = np.zeros((4, 4), dtype=complex)
    for M in ks.operators:
        out += M @ rho0 @ M.conj().T
    return out


def _liouvillian(H: np.ndarray, gamma: float) -> np.ndarray:
    # row-major vec: vec(A X B) = kron(A, B.T) vec(X)
    eye = np.eye(4)
    comm = np.kron(H, eye) - np.kron(eye, H.T)
    return -1j * comm - 0.5 * gamma * comm @ comm


def integrate_master_equation(rho0, p: ModelParams, t: float, steps: int) -> np.ndarray:
    """Classical RK4 with ``steps`` equal steps from 0 to ``t``.

    Raises
    ------
    StepTooLarge
        If ``(t / steps) * ||H||_2 >= 0.1``.
    """
    rho0 = np.asarray(rho0, dtype=complex)
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if t == 0:
        return rho0.copy()
    H = build_hamiltonian(p)
    h = t / steps
    if h * np.linalg.norm(H, 2) >= 0.1:
        raise StepTooLarge(f"step {h:.3g} too large for ||H|| = {np.linalg.norm(H, 2):.3g}")
    L = _liouvillian(H, p.gamma)
    y = rho0.reshape(-1)
    for _ in range(steps):
        k1 = L @ y
        k2 = L @ (y + 0.5 * h * k1)
        k3 = L @ (y + 0.5 * h * k2)
        k4 = L @ (y + h * k3)
        y = y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
    return y.reshape(4, 4)


def asymptotic_state(rho0, p: ModelParams) -> np.ndarray:
    """Fully dephased state: drop every coherence between distinct energies.

    Raises
    ------
    NoDephasing
        If ``p.gamma == 0``.
    """
    if p.gamma == 0:
        raise NoDephasing("gamma = 0: the state never dephases")
    rho0 = np.asarray(rho0, dtype=complex)
    H = build_hamiltonian(p)
    eig = numeric_spectrum(H)
    V = eig.vectors
    gaps = np.abs(eig.energies[:, None] - eig.energies[None, :])
    keep = gaps <= degeneracy_threshold(H)
    rho_e = V.conj().T @ rho0 @ V
    rho = V @ np.where(keep, rho_e, 0) @ V.conj().T
    return 0.5 * (rho + rho.conj().T)


def long_time(p: ModelParams, factor: float = 50.0) -> float:
    """Time after which every coherence has decayed by ``exp(-factor / 2)``.

    Returns ``factor / (gamma * g_min**2)`` with ``g_min`` the smallest
    nonzero energy gap; ``inf`` if there is no nonzero gap.
    """
    if p.gamma == 0:
        raise NoDephasing("gamma = 0: the state never dephases")
    H = build_hamiltonian(p)
    e = numeric_spectrum(H).energies
    gaps = np.abs(e[:, None] - e[None, :])
    gaps = gaps[gaps > degeneracy_threshold(H)]
    if gaps.size == 0:
        return math.inf
    return factor / (p.gamma * gaps.min() ** 2)


def trace_distance(a, b) -> float:
    """Half the trace norm of ``a - b`` (Hermitian inputs)."""
    diff = np.asarray(a) - np.asarray(b)
    return 0.5 * float(np.abs(np.linalg.eigvalsh(0.5 * (diff + diff.conj().T))).sum())

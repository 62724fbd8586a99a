"""Standard one-qubit teleportation through a mixed two-qubit resource.

With a mixed resource the protocol acts on the input as a generalized
depolarizing channel

    rho_out = sum_mu p_mu sigma_mu rho_in sigma_mu

where ``p_mu = Tr[E_mu rho]`` are the weights of the resource on the Bell
projectors E0 = |Psi-><Psi-|, E1 = |Phi-><Phi-|, E2 = |Phi+><Phi+|,
E3 = |Psi+><Psi+|, paired with the corrections I, sigma_x, sigma_y, sigma_z.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .dynamics import aux_functions
from .errors import DegenerateClosedForm, NoDephasing
from .model import ModelParams, build_hamiltonian, degeneracy_threshold
from .states import BELL_PROJECTORS, PAULI, named_state

__all__ = [
    "QubitAngles",
    "BellProbabilities",
    "T0Case",
    "bell_probabilities",
    "bell_probabilities_trace",
    "teleport_t0",
    "max_fidelity_t0",
    "phi_max_case",
    "phi_max_asymptotic",
]

TWO_THIRDS = 2.0 / 3.0


@dataclass(frozen=True)
class QubitAngles:
    """Pure qubit ``cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>``."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta out of [0, pi]: {self.theta}")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise ValueError(f"phi out of [0, 2pi): {self.phi}")

    def ket(self) -> np.ndarray:
        return np.array(
            [math.cos(self.theta / 2), np.exp(1j * self.phi) * math.sin(self.theta / 2)],
            dtype=complex,
        )

    def density(self) -> np.ndarray:
        k = self.ket()
        return np.outer(k, k.conj())


@dataclass(frozen=True)
class BellProbabilities:
    p0: float
    p1: float
    p2: float
    p3: float

    def as_array(self) -> np.ndarray:
        return np.array([self.p0, self.p1, self.p2, self.p3])

    @property
    def fully_entangled_fraction(self) -> float:
        return max(self.p0, self.p1, self.p2, self.p3)


class T0Case(enum.Enum):
    """Initial resource states with closed-form maximal fidelity."""

    PSI_PLUS = ("i", "psi_plus")
    PSI_MINUS = ("i", "psi_minus")
    PHI_PLUS = ("ii", "phi_plus")
    PHI_MINUS = ("ii", "phi_minus")
    KET01 = ("iii", "ket01")
    KET10 = ("iii", "ket10")
    KET00 = ("iv", "ket00")
    KET11 = ("iv", "ket11")

    @property
    def case(self) -> str:
        return self.value[0]

    def initial_state(self) -> np.ndarray:
        return named_state(self.value[1])


def bell_probabilities(rho) -> BellProbabilities:
    """Bell weights from the four matrix elements that determine them."""
    rho = np.asarray(rho, dtype=complex)
    psi_sector = 0.5 * (rho[1, 1].real + rho[2, 2].real)
    phi_sector = 0.5 * (rho[0, 0].real + rho[3, 3].real)
    re23, re14 = rho[1, 2].real, rho[0, 3].real
    return BellProbabilities(
        p0=psi_sector - re23,
        p1=phi_sector - re14,
        p2=phi_sector + re14,
        p3=psi_sector + re23,
    )


def bell_probabilities_trace(rho) -> BellProbabilities:
    """Bell weights as ``Tr[E_mu rho]``."""
    rho = np.asarray(rho, dtype=complex)
    return BellProbabilities(*(float(np.trace(E @ rho).real) for E in BELL_PROJECTORS))


def teleport_t0(rho_channel, state: QubitAngles, adapt_frame: bool = False) -> np.ndarray:
    """Output qubit of standard teleportation through ``rho_channel``.

    With ``adapt_frame=True`` the receiver composes every correction with the
    Pauli that belongs to the dominant Bell component, so that component acts
    as the identity. This realizes the maximal fidelity ``(2F + 1) / 3`` for
    any resource, e.g. a |Psi+> resource teleports perfectly.
    """
    probs = bell_probabilities(rho_channel).as_array()
    rho_in = state.density()
    frame = PAULI[int(np.argmax(probs))] if adapt_frame else PAULI[0]
    out = np.zeros((2, 2), dtype=complex)
    for p_mu, s in zip(probs, PAULI):
        u = frame @ s
        out += p_mu * u @ rho_in @ u.conj().T
    return out


def max_fidelity_t0(rho_channel) -> float:
    """``(2F + 1) / 3`` with ``F`` the largest Bell weight of the resource."""
    return (2.0 * bell_probabilities(rho_channel).fully_entangled_fraction + 1.0) / 3.0


def _require_gap(value: float, p: ModelParams, what: str):
    if value <= degeneracy_threshold(build_hamiltonian(p)):
        raise DegenerateClosedForm(f"{what} vanishes; closed-form fidelity undefined")


def phi_max_case(case: T0Case, p: ModelParams, t: float) -> float:
    """Closed-form maximal fidelity at time ``t`` for one of the four cases.

    Both Bell components of the populated sector sum to one, so the maximal
    weight is ``1/2 + |Re coherence|`` and every case carries an absolute
    value.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    f = aux_functions(p, t)
    kind = case.case
    if kind in ("i", "iii"):
        _require_gap(p.xi, p, "xi")
        xi2 = p.xi**2
        if kind == "i":
            return TWO_THIRDS + abs(p.J**2 + (p.b**2 + (p.Jz * p.D) ** 2) * f.Phi_p) / (3 * xi2)
        swing = math.sin(2 * p.xi * t) * math.exp(-2 * xi2 * p.gamma * t)
        return TWO_THIRDS + abs(
            p.b * p.J * (1 - f.Phi_p) / (3 * xi2) - p.Jz * p.D * swing / (3 * p.xi)
        )
    _require_gap(p.eta, p, "eta")
    eta2 = p.eta**2
    jchi = p.J * p.chi
    if kind == "ii":
        return TWO_THIRDS + abs(jchi**2 + p.B**2 * f.Phi) / (3 * eta2)
    return TWO_THIRDS + abs(p.B * jchi * (1 - f.Phi)) / (3 * eta2)


def phi_max_asymptotic(case: T0Case, p: ModelParams) -> float:
    """Long-time limit of :func:`phi_max_case`; never below 2/3."""
    if p.gamma == 0:
        raise NoDephasing("gamma = 0: no asymptotic state")
    kind = case.case
    if kind in ("i", "iii"):
        _require_gap(p.xi, p, "xi")
        xi2 = p.xi**2
        if kind == "i":
            return TWO_THIRDS + p.J**2 / (3 * xi2)
        return TWO_THIRDS + abs(p.b * p.J) / (3 * xi2)
    _require_gap(p.eta, p, "eta")
    eta2 = p.eta**2
    if kind == "ii":
        return TWO_THIRDS + (p.J * p.chi) ** 2 / (3 * eta2)
    return TWO_THIRDS + abs(p.B * p.J * p.chi) / (3 * eta2)

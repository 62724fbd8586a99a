"""Two-qubit anisotropic Heisenberg XYZ Hamiltonian and its spectrum.

Basis ordering is |00>, |01>, |10>, |11> with |0> the +1 eigenstate of
sigma_z. Units have hbar = 1 and every parameter is dimensionless.

The Hamiltonian is

    H = J chi (s1+ s2+ + s1- s2-) + (J + i Jz D) s1+ s2- + (J - i Jz D) s1- s2+
        + Jz/2 sz1 sz2 + (B + b)/2 sz1 + (B - b)/2 sz2

which only couples |00> with |11> and |01> with |10> ("X" pattern).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateClosedForm

__all__ = [
    "ModelParams",
    "Spectrum",
    "build_hamiltonian",
    "closed_form_spectrum",
    "numeric_spectrum",
    "thermal_state",
    "degeneracy_threshold",
    "X_MASK",
]

# Positions allowed to be nonzero in an X-shaped 4x4 matrix.
X_MASK = np.array(
    [
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [0, 1, 1, 0],
        [1, 0, 0, 1],
    ],
    dtype=bool,
)

# Index pairs of the two invariant blocks: {|00>, |11>} and {|01>, |10>}.
_SIGMA_BLOCK = (0, 3)
_PSI_BLOCK = (1, 2)


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the resource plus the dephasing rate.

    Parameters
    ----------
    J : float
        Mean XY coupling, ``(Jx + Jy) / 2``.
    chi : float
        XY anisotropy ``(Jx - Jy) / (Jx + Jy)``, restricted to [-1, 1].
    Jz : float
        Coupling along z.
    B : float
        Mean magnetic field along z.
    b : float
        Field inhomogeneity; site fields are ``B + b`` and ``B - b``.
    D : float
        Dimensionless spin-orbit (Dzyaloshinski-Moriya) strength; the DM vector
        is ``Jz * D`` along z.
    gamma : float
        Intrinsic decoherence rate, ``gamma >= 0``. Zero means unitary motion.
    """

    J: float = 1.0
    chi: float = 0.0
    Jz: float = 0.0
    B: float = 0.0
    b: float = 0.0
    D: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        for name in ("J", "chi", "Jz", "B", "b", "D", "gamma"):
            value = float(getattr(self, name))
            if not np.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if not -1.0 <= self.chi <= 1.0:
            raise ValueError(f"chi out of [-1,1]: {self.chi}")
        if self.gamma < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")

    @property
    def xi(self) -> float:
        """Half gap of the {|01>, |10>} block."""
        return float(np.sqrt(self.b**2 + self.J**2 + (self.Jz * self.D) ** 2))

    @property
    def eta(self) -> float:
        """Half gap of the {|00>, |11>} block."""
        return float(np.sqrt(self.B**2 + (self.J * self.chi) ** 2))

    @property
    def flip_flop(self) -> complex:
        """The <01|H|10> matrix element ``J + i Jz D``."""
        return complex(self.J, self.Jz * self.D)


def _frozen(a):
    a = np.array(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Spectrum:
    """Eigenpairs of a 4x4 Hermitian matrix.

    ``vectors[:, k]`` is the eigenvector for ``energies[k]``. ``tags[k]`` is
    one of ``"psi+"``, ``"psi-"``, ``"sigma+"``, ``"sigma-"`` when the pair
    belongs to one of the X blocks, otherwise ``None``.
    """

    energies: np.ndarray
    vectors: np.ndarray
    tags: tuple = field(default=(None, None, None, None))

    def __post_init__(self):
        object.__setattr__(self, "energies", _frozen(np.asarray(self.energies, dtype=float)))
        object.__setattr__(self, "vectors", _frozen(np.asarray(self.vectors, dtype=complex)))
        object.__setattr__(self, "tags", tuple(self.tags))

    def projector(self, k: int) -> np.ndarray:
        v = self.vectors[:, k]
        return np.outer(v, v.conj())

    def by_tag(self, tag: str) -> tuple[float, np.ndarray]:
        k = self.tags.index(tag)
        return float(self.energies[k]), self.vectors[:, k]


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """Return the 4x4 Hamiltonian matrix in the standard product basis."""
    H = np.zeros((4, 4), dtype=complex)
    H[0, 0] = p.Jz / 2 + p.B
    H[1, 1] = -p.Jz / 2 + p.b
    H[2, 2] = -p.Jz / 2 - p.b
    H[3, 3] = p.Jz / 2 - p.B
    H[0, 3] = H[3, 0] = p.J * p.chi
    H[1, 2] = p.flip_flop
    H[2, 1] = np.conj(p.flip_flop)
    return H


def degeneracy_threshold(H: np.ndarray) -> float:
    """Gaps (and closed-form denominators) below this count as zero."""
    return 1e-12 * (1.0 + np.linalg.norm(H, 2))


def closed_form_spectrum(p: ModelParams) -> Spectrum:
    """Analytic eigenpairs, ordered psi+, psi-, sigma+, sigma-.

    The psi pair lives in span{|01>, |10>} with energies ``-Jz/2 +- xi``; the
    sigma pair lives in span{|00>, |11>} with energies ``Jz/2 +- eta``.

    Raises
    ------
    DegenerateClosedForm
        If ``J - i Jz D`` or ``J chi`` vanishes; the eigenvector formulas divide
        by them. Use :func:`numeric_spectrum` instead.
    """
    thr = degeneracy_threshold(build_hamiltonian(p))
    g = p.flip_flop
    if abs(g) <= thr:
        raise DegenerateClosedForm("J - i*Jz*D vanishes; psi eigenvectors undefined")
    if abs(p.J * p.chi) <= thr:
        raise DegenerateClosedForm("J*chi vanishes; sigma eigenvectors undefined")
    xi, eta = p.xi, p.eta

    energies = []
    vectors = np.zeros((4, 4), dtype=complex)
    k = 0
    for sign in (+1, -1):
        ratio = (p.b + sign * xi) / np.conj(g)
        norm = 1.0 / np.sqrt(1.0 + (p.b + sign * xi) ** 2 / abs(g) ** 2)
        vectors[1, k] = norm * ratio
        vectors[2, k] = norm
        energies.append(-p.Jz / 2 + sign * xi)
        k += 1
    for sign in (+1, -1):
        ratio = (p.B + sign * eta) / (p.J * p.chi)
        norm = 1.0 / np.sqrt(1.0 + ratio**2)
        vectors[0, k] = norm * ratio
        vectors[3, k] = norm
        energies.append(p.Jz / 2 + sign * eta)
        k += 1
    return Spectrum(energies, vectors, ("psi+", "psi-", "sigma+", "sigma-"))


def _fix_phase(v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    # make the first non-negligible component real and positive
    idx = np.flatnonzero(np.abs(v) > tol)[0]
    return v * (abs(v[idx]) / v[idx])


def _lex_key(v: np.ndarray) -> tuple:
    return tuple(x for c in v for x in (-round(c.real, 12), -round(c.imag, 12)))


def numeric_spectrum(H: np.ndarray) -> Spectrum:
    """Eigenpairs of a Hermitian 4x4 matrix from LAPACK.

    X-shaped matrices are diagonalized block by block, so every eigenvector
    is supported on a single block even when energies from different blocks
    coincide, and each pair gets its psi/sigma tag. Pairs are sorted by
    ascending energy; ties (within :func:`degeneracy_threshold`) are broken
    lexicographically on the phase-fixed eigenvector, larger leading
    components first.
    """
    H = np.asarray(H, dtype=complex)
    thr = degeneracy_threshold(H)
    pairs = []
    if np.all(np.abs(H[~X_MASK]) <= thr):
        for block, name in ((_PSI_BLOCK, "psi"), (_SIGMA_BLOCK, "sigma")):
            sub = H[np.ix_(block, block)]
            w, u = np.linalg.eigh(sub)
            for j, sign in ((1, "+"), (0, "-")):
                v = np.zeros(4, dtype=complex)
                v[list(block)] = u[:, j]
                pairs.append((w[j], _fix_phase(v), name + sign))
    else:
        w, u = np.linalg.eigh(H)
        for j in range(4):
            pairs.append((w[j], _fix_phase(u[:, j]), None))

    pairs.sort(key=lambda item: item[0])
    # group near-equal energies, then order each group lexicographically
    ordered = []
    group = [pairs[0]]
    for item in pairs[1:] + [None]:
        if item is not None and item[0] - group[0][0] <= thr:
            group.append(item)
            continue
        if len(group) > 1:
            group.sort(key=lambda it: _lex_key(it[1]))
        ordered.extend(group)
        group = [item]

    energies = np.array([it[0] for it in ordered])
    vectors = np.column_stack([it[1] for it in ordered])
    return Spectrum(energies, vectors, tuple(it[2] for it in ordered))


def thermal_state(p: ModelParams, beta: float) -> np.ndarray:
    """Gibbs state ``exp(-beta H) / Z`` built from the numeric spectrum."""
    if not np.isfinite(beta):
        raise ValueError("beta must be finite")
    eig = numeric_spectrum(build_hamiltonian(p))
    e = eig.energies
    # shift by the ground energy so large beta cannot overflow
    weights = np.exp(-beta * (e - e.min()))
    weights /= weights.sum()
    V = eig.vectors
    return (V * weights) @ V.conj().T

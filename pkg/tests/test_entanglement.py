import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heisenberg_teleport import (
    NotXState,
    named_state,
    negativity,
    negativity_xstate,
    partial_transpose,
)
from heisenberg_teleport.entanglement import xstate_pt_eigenvalues

from conftest import random_density, random_unitary, random_xstate

BELL = ("phi_plus", "phi_minus", "psi_plus", "psi_minus")
PRODUCT = ("ket00", "ket01", "ket10", "ket11")


def werner(p):
    return p * named_state("psi_minus") + (1 - p) * np.eye(4) / 4


@pytest.mark.parametrize("name", BELL)
def test_bell_states_are_maximally_entangled(name):
    assert negativity(named_state(name)) == pytest.approx(1, abs=1e-12)
    assert negativity_xstate(named_state(name)) == pytest.approx(1, abs=1e-12)


@pytest.mark.parametrize("name", PRODUCT)
def test_product_states_have_zero_negativity(name):
    assert negativity(named_state(name)) == 0
    assert negativity_xstate(named_state(name)) == 0


def test_maximally_mixed_state():
    assert negativity(np.eye(4) / 4) == 0


@pytest.mark.parametrize("p, expected", [(0.7, 0.55), (1 / 3, 0.0), (0.2, 0.0), (1.0, 1.0)])
def test_werner_states(p, expected):
    # negativity = max(0, (3p - 1) / 2)
    assert negativity(werner(p)) == pytest.approx(expected, abs=1e-12)
    assert negativity_xstate(werner(p)) == pytest.approx(expected, abs=1e-12)


def test_partial_transpose_moves_entries():
    rho = np.arange(16, dtype=complex).reshape(4, 4)
    pt = partial_transpose(rho)
    # |i j><k l| -> |k j><i l|
    assert pt[0, 3] == rho[2, 1]
    assert pt[1, 2] == rho[3, 0]
    np.testing.assert_array_equal(np.diag(pt), np.diag(rho))
    np.testing.assert_array_equal(partial_transpose(pt), rho)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_invariant_under_local_unitaries(seed):
    rng = np.random.default_rng(seed)
    rho = random_density(rng)
    U = np.kron(random_unitary(rng), random_unitary(rng))
    assert negativity(U @ rho @ U.conj().T) == pytest.approx(negativity(rho), abs=1e-10)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_separable_mixtures_have_zero_negativity(seed):
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(5))
    rho = np.zeros((4, 4), dtype=complex)
    for w in weights:
        a, b = random_density_qubit(rng), random_density_qubit(rng)
        rho += w * np.kron(a, b)
    assert negativity(rho) < 1e-12


def random_density_qubit(rng):
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    r = a @ a.conj().T
    return r / np.trace(r).real


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_negativity_bounded(seed):
    n = negativity(random_density(np.random.default_rng(seed)))
    assert 0 <= n <= 1 + 1e-12


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_xstate_closed_form_matches_generic(seed):
    rho = random_xstate(np.random.default_rng(seed)).matrix()
    assert negativity_xstate(rho) == pytest.approx(negativity(rho), abs=1e-12)
    lam = np.sort(xstate_pt_eigenvalues(rho))
    np.testing.assert_allclose(lam, np.linalg.eigvalsh(partial_transpose(rho)), atol=1e-12)


def test_xstate_closed_form_rejects_general_state(rng):
    with pytest.raises(NotXState):
        negativity_xstate(random_density(rng))

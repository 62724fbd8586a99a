import numpy as np
import pytest

from heisenberg_teleport import ModelParams, XState

# Caption parameters of the figures.
FIG1_LEFT = ModelParams(J=1, chi=0.9, Jz=0.5, B=0, b=1, D=0, gamma=0.09)
FIG1_RIGHT = ModelParams(J=1, chi=0.9, Jz=0.5, B=3, b=1, D=0, gamma=0.02)

_ACCEPTANCE = []


def random_xstate(rng) -> XState:
    pops = rng.dirichlet(np.ones(4))
    mu_p, w1, w2, mu_m = pops
    nu = np.sqrt(mu_p * mu_m) * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
    z = np.sqrt(w1 * w2) * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
    return XState(mu_plus=mu_p, mu_minus=mu_m, w1=w1, w2=w2, nu=nu, z=z)


def random_params(rng, scale=1.0, gamma_max=0.1) -> ModelParams:
    u = lambda: rng.uniform(-scale, scale)
    return ModelParams(J=u(), chi=rng.uniform(-1, 1), Jz=u(), B=u(), b=u(), D=u(),
                       gamma=rng.uniform(0, gamma_max))


def random_density(rng, rank=4) -> np.ndarray:
    a = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng, n=2) -> np.ndarray:
    q, r = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def record_criterion():
    """Log an acceptance criterion result; printed in the terminal summary."""

    def record(label, ok, detail=""):
        _ACCEPTANCE.append((label, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")

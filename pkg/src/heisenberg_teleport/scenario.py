"""Scenario configs, parameter sweeps and CSV output.

A config is a flat ``key = value`` text file; ``#`` starts a comment. Every
key is optional:

=============  ===========  ==================================================
key            default      meaning
=============  ===========  ==================================================
name           custom       label only
J, chi, Jz     1, 0.9, 0.5  couplings (chi in [-1, 1])
B, b, D        0, 1, 0      field, inhomogeneity, spin-orbit strength
gamma          0.09         intrinsic decoherence rate (>= 0)
initial        ket00        ket00 ket01 ket10 ket11 phi_plus phi_minus
                            psi_plus psi_minus thermal xstate
beta           1.0          inverse temperature for ``initial = thermal``
mu_plus ...    0            ``mu_plus mu_minus w1 w2 nu z`` for ``xstate``;
                            ``nu`` and ``z`` accept complex literals (0.1+0.2j)
sweep          t            first axis: t B b D theta gamma
start, stop,   0, 50, 0.1   grid of the first axis (inclusive stop)
step
sweep2         (none)       optional second axis, same choices
start2, stop2, (none)       grid of the second axis
step2
t              0            evolution time when ``t`` is not swept
asymptotic     false        use the fully dephased state instead of rho(t)
protocol       none         none, t0 or t1
theta, phi     pi/2, 0      input angles for t0/t1 when theta is not swept
=============  ===========  ==================================================

Rows come out in ascending order of the first axis and, within it, of the
second axis. Axis ranges in the shipped presets (B, D, b in [0, 5], t in
[0, 50]) are a choice; the figures they mirror do not print their ranges.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import math
from dataclasses import dataclass
from importlib import resources
from typing import Iterator

import numpy as np

from .dynamics import XState, asymptotic_state, propagate
from .enttel import T1Input, t1_average_fidelity, t1_fidelity, t1_output_components, t1_output_negativity
from .entanglement import negativity
from .errors import ParseError, ValidationError
from .model import ModelParams, thermal_state
from .states import KETS, named_state
from .teleport import bell_probabilities, max_fidelity_t0

__all__ = [
    "Axis",
    "Scenario",
    "SweepRow",
    "COLUMNS",
    "parse_config",
    "load_preset",
    "preset_names",
    "run_scenario",
    "write_csv",
    "scenario_csv",
]

AXES = ("t", "B", "b", "D", "theta", "gamma")
PROTOCOLS = ("none", "t0", "t1")
INITIAL_STATES = tuple(KETS) + ("thermal", "xstate")
COLUMNS = ("negativity", "p0", "p1", "p2", "p3", "Phi_max", "N_out", "F", "F_A")

_DEFAULTS = {
    "name": "custom",
    "J": 1.0,
    "chi": 0.9,
    "Jz": 0.5,
    "B": 0.0,
    "b": 1.0,
    "D": 0.0,
    "gamma": 0.09,
    "initial": "ket00",
    "beta": 1.0,
    "mu_plus": 0.0,
    "mu_minus": 0.0,
    "w1": 0.0,
    "w2": 0.0,
    "nu": 0j,
    "z": 0j,
    "sweep": "t",
    "start": 0.0,
    "stop": 50.0,
    "step": 0.1,
    "sweep2": None,
    "start2": None,
    "stop2": None,
    "step2": None,
    "t": 0.0,
    "asymptotic": False,
    "protocol": "none",
    "theta": math.pi / 2,
    "phi": 0.0,
}

_FLOAT_KEYS = {
    "J", "chi", "Jz", "B", "b", "D", "gamma", "beta", "mu_plus", "mu_minus", "w1", "w2",
    "start", "stop", "step", "start2", "stop2", "step2", "t", "theta", "phi",
}
_COMPLEX_KEYS = {"nu", "z"}
_BOOL_KEYS = {"asymptotic"}


@dataclass(frozen=True)
class Axis:
    name: str
    start: float
    stop: float
    step: float

    def values(self) -> np.ndarray:
        n = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return self.start + self.step * np.arange(n)


@dataclass(frozen=True)
class Scenario:
    name: str
    params: ModelParams
    initial: str
    sweep: Axis
    sweep2: Axis | None = None
    protocol: str = "none"
    theta: float = math.pi / 2
    phi: float = 0.0
    t: float = 0.0
    asymptotic: bool = False
    beta: float = 1.0
    xstate: XState | None = None

    @property
    def axes(self) -> tuple:
        return (self.sweep,) if self.sweep2 is None else (self.sweep, self.sweep2)

    def initial_state(self, params: ModelParams) -> np.ndarray:
        if self.initial == "thermal":
            return thermal_state(params, self.beta)
        if self.initial == "xstate":
            return self.xstate.matrix()
        return named_state(self.initial)


@dataclass(frozen=True)
class SweepRow:
    """One grid point. Columns a protocol does not produce are ``None``."""

    axes: tuple
    negativity: float
    p0: float | None = None
    p1: float | None = None
    p2: float | None = None
    p3: float | None = None
    Phi_max: float | None = None
    N_out: float | None = None
    F: float | None = None
    F_A: float | None = None

    def values(self) -> tuple:
        return self.axes + tuple(getattr(self, c) for c in COLUMNS)


def _convert(key, raw, lineno):
    try:
        if key in _FLOAT_KEYS:
            return float(raw)
        if key in _COMPLEX_KEYS:
            return complex(raw.replace(" ", ""))
        if key in _BOOL_KEYS:
            low = raw.lower()
            if low in ("true", "yes", "1", "on"):
                return True
            if low in ("false", "no", "0", "off"):
                return False
            raise ValueError(raw)
    except ValueError:
        raise ParseError(f"bad value for {key}: {raw!r}", lineno) from None
    return raw


def _parse_pairs(text: str) -> dict:
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in _DEFAULTS:
            raise ParseError(f"unknown key {key!r}", lineno)
        if key in values:
            raise ParseError(f"duplicate key {key!r}", lineno)
        if not raw:
            raise ParseError(f"missing value for {key!r}", lineno)
        values[key] = _convert(key, raw, lineno)
    return values


def parse_config(text: str, overrides: dict | None = None) -> Scenario:
    """Parse and validate a config.

    ``overrides`` maps keys to raw strings and wins over the text.

    Raises
    ------
    ParseError
        Malformed line, unknown or duplicate key, unconvertible value.
    ValidationError
        A value breaks a constraint; the message names it.
    """
    values = dict(_DEFAULTS)
    values.update(_parse_pairs(text))
    for key, raw in (overrides or {}).items():
        if key not in _DEFAULTS:
            raise ParseError(f"unknown key {key!r}")
        values[key] = _convert(key, str(raw), None)
    return _build(values)


def _axis(values, suffix):
    name = values["sweep" + suffix]
    bounds = [values[k + suffix] for k in ("start", "stop", "step")]
    if name not in AXES:
        raise ValidationError(f"sweep{suffix} must be one of {', '.join(AXES)}, got {name!r}")
    if any(v is None for v in bounds):
        raise ValidationError(f"sweep{suffix} = {name} needs start{suffix}, stop{suffix}, step{suffix}")
    start, stop, step = bounds
    if not all(math.isfinite(v) for v in bounds):
        raise ValidationError(f"sweep{suffix} range must be finite")
    if step <= 0:
        raise ValidationError(f"step{suffix} must be > 0")
    if not start < stop:
        raise ValidationError(f"start{suffix} must be < stop{suffix}")
    return Axis(name, start, stop, step)


def _build(values: dict) -> Scenario:
    try:
        params = ModelParams(*(values[k] for k in ("J", "chi", "Jz", "B", "b", "D", "gamma")))
    except ValueError as exc:
        raise ValidationError(str(exc)) from None

    initial = values["initial"]
    if initial not in INITIAL_STATES:
        raise ValidationError(f"initial must be one of {', '.join(INITIAL_STATES)}, got {initial!r}")
    xstate = None
    if initial == "xstate":
        xstate = XState(*(values[k] for k in ("mu_plus", "mu_minus", "w1", "w2", "nu", "z")))
        if not xstate.is_valid(1e-9):
            raise ValidationError("xstate is not a density matrix (populations must be >= 0 and sum to 1, "
                                  "|nu|^2 <= mu_plus*mu_minus, |z|^2 <= w1*w2)")
    if not math.isfinite(values["beta"]) or values["beta"] < 0:
        raise ValidationError("beta must be finite and >= 0")

    protocol = values["protocol"]
    if protocol not in PROTOCOLS:
        raise ValidationError(f"protocol must be one of {', '.join(PROTOCOLS)}, got {protocol!r}")

    sweep = _axis(values, "")
    sweep2 = None
    if values["sweep2"] is not None:
        sweep2 = _axis(values, "2")
        if sweep2.name == sweep.name:
            raise ValidationError("sweep2 must differ from sweep")
    axes = (sweep,) if sweep2 is None else (sweep, sweep2)
    names = [a.name for a in axes]

    if values["asymptotic"] and "t" in names:
        raise ValidationError("asymptotic = true cannot sweep t")
    if "theta" in names and protocol == "none":
        raise ValidationError("sweeping theta needs protocol t0 or t1")
    for axis in axes:
        lo, hi = axis.values()[[0, -1]]
        if axis.name == "t" and lo < 0:
            raise ValidationError("t must be >= 0")
        if axis.name == "gamma" and lo < 0:
            raise ValidationError("gamma must be >= 0")
        if axis.name == "theta" and (lo < 0 or hi > math.pi + 1e-12):
            raise ValidationError("theta out of [0, pi]")
    if values["t"] < 0:
        raise ValidationError("t must be >= 0")
    if not 0.0 <= values["theta"] <= math.pi:
        raise ValidationError("theta out of [0, pi]")
    if not 0.0 <= values["phi"] < 2 * math.pi:
        raise ValidationError("phi out of [0, 2pi)")
    if values["asymptotic"]:
        gammas = next((a.values() for a in axes if a.name == "gamma"), [params.gamma])
        if min(gammas) <= 0:
            raise ValidationError("asymptotic = true needs gamma > 0")

    return Scenario(
        name=values["name"],
        params=params,
        initial=initial,
        sweep=sweep,
        sweep2=sweep2,
        protocol=protocol,
        theta=values["theta"],
        phi=values["phi"],
        t=values["t"],
        asymptotic=values["asymptotic"],
        beta=values["beta"],
        xstate=xstate,
    )


def preset_names() -> list[str]:
    files = resources.files(__package__).joinpath("presets").iterdir()
    return sorted(f.name[:-4] for f in files if f.name.endswith(".cfg"))


def preset_text(name: str) -> str:
    if name not in preset_names():
        raise ValidationError(f"unknown preset {name!r}; available: {', '.join(preset_names())}")
    return resources.files(__package__).joinpath("presets", name + ".cfg").read_text(encoding="utf-8")


def load_preset(name: str, overrides: dict | None = None) -> Scenario:
    return parse_config(preset_text(name), overrides)


def grid(s: Scenario):
    """Grid points as tuples of axis values, first axis outermost."""
    if s.sweep2 is None:
        for v in s.sweep.values():
            yield (float(v),)
    else:
        inner = s.sweep2.values()
        for v in s.sweep.values():
            for w in inner:
                yield (float(v), float(w))


def grid_point(s: Scenario, point: tuple):
    """Resolve ``(params, t, theta)`` at one grid point."""
    params, t, theta = s.params, s.t, s.theta
    changes = {}
    for axis, value in zip(s.axes, point):
        if axis.name == "t":
            t = value
        elif axis.name == "theta":
            theta = min(value, math.pi)
        else:
            changes[axis.name] = value
    if changes:
        params = dataclasses.replace(params, **changes)
    return params, t, theta


def channel_state(s: Scenario, params: ModelParams, t: float) -> np.ndarray:
    rho0 = s.initial_state(params)
    if s.asymptotic:
        return asymptotic_state(rho0, params)
    return propagate(rho0, params, t)


def run_scenario(s: Scenario) -> Iterator[SweepRow]:
    """Yield one :class:`SweepRow` per grid point, in ascending axis order."""
    for point in grid(s):
        params, t, theta = grid_point(s, point)
        rho = channel_state(s, params, t)
        row = {"axes": point, "negativity": negativity(rho)}
        if s.protocol == "t0":
            probs = bell_probabilities(rho)
            row.update(p0=probs.p0, p1=probs.p1, p2=probs.p2, p3=probs.p3, Phi_max=max_fidelity_t0(rho))
        elif s.protocol == "t1":
            state = T1Input(theta, s.phi)
            row.update(
                N_out=t1_output_negativity(t1_output_components(rho, state)),
                F=t1_fidelity(rho, state),
                F_A=t1_average_fidelity(rho),
            )
        yield SweepRow(**row)


def format_number(x) -> str:
    if x is None:
        return ""
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} in output")
    return format(float(x) + 0.0, ".12g")  # + 0.0 folds -0.0 into 0.0


def write_csv(header, rows, fh) -> None:
    """Write rows of numbers with 12 significant digits and LF line endings."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(v) for v in row])


def scenario_csv(s: Scenario) -> str:
    buf = io.StringIO()
    header = [a.name for a in s.axes] + list(COLUMNS)
    write_csv(header, (r.values() for r in run_scenario(s)), buf)
    return buf.getvalue()

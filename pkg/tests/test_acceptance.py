"""Acceptance criteria 1-9.

Each test records one PASS/FAIL line (printed in the terminal summary under
"acceptance criteria") and then asserts the same condition.
"""

import dataclasses
import math

import numpy as np

from heisenberg_teleport import (
    ModelParams,
    T0Case,
    T1Input,
    asymptotic_state,
    integrate_master_equation,
    kraus_operators,
    long_time,
    max_fidelity_t0,
    named_state,
    negativity,
    negativity_xstate,
    phi_max_asymptotic,
    propagate,
    propagate_kraus,
    propagate_xstate_closed_form,
    t1_average_fidelity,
    t1_average_fidelity_quadrature,
    t1_fidelity,
    t1_fidelity_coefficients,
    t1_output_components,
    t1_output_negativity,
    thermal_state,
    trace_distance,
)
from heisenberg_teleport.scenario import load_preset, parse_config, preset_names, run_scenario, scenario_csv

from conftest import FIG1_LEFT, FIG1_RIGHT, random_params, random_xstate

# Shared base of criteria 4 and 6.
T0_BASE = ModelParams(J=1, chi=0.9, Jz=0.5, B=0, b=1, D=0, gamma=0.09)


def test_criterion_1_oracle_triad(rng, record_criterion):
    worst_kraus = worst_rk4 = 0.0
    for _ in range(200):
        p = random_params(rng, scale=1.0, gamma_max=0.1)
        rho0 = random_xstate(rng).matrix()
        t = rng.uniform(0, 10)
        exact = propagate(rho0, p, t)
        worst_kraus = max(worst_kraus, trace_distance(propagate_kraus(rho0, kraus_operators(p, t)), exact))
        worst_rk4 = max(worst_rk4, trace_distance(integrate_master_equation(rho0, p, t, 10_000), exact))
    ok = worst_kraus <= 1e-10 and worst_rk4 <= 1e-6
    record_criterion("1 oracle triad", ok, f"kraus {worst_kraus:.2e} (<=1e-10), rk4 {worst_rk4:.2e} (<=1e-6)")
    assert ok


def test_criterion_2_closed_form(rng, record_criterion):
    worst = 0.0
    n_zero_B = n_zero_b = 0
    drawn = 0
    while drawn < 200:
        p = random_params(rng, scale=2.0, gamma_max=0.5)
        if drawn % 4 == 1:
            p = dataclasses.replace(p, B=0.0)
        elif drawn % 4 == 2:
            p = dataclasses.replace(p, b=0.0)
        if abs(p.J * p.chi) < 1e-3 or abs(p.flip_flop) < 1e-3:
            continue  # non-degenerate draws only
        n_zero_B += p.B == 0.0
        n_zero_b += p.b == 0.0
        x0 = random_xstate(rng)
        t = rng.uniform(0, 10)
        got = propagate_xstate_closed_form(x0, p, t).matrix()
        worst = max(worst, np.abs(got - propagate(x0.matrix(), p, t)).max())
        drawn += 1
    ok = worst <= 1e-9
    record_criterion("2 closed-form X evolution", ok,
                     f"max entry error {worst:.2e} (<=1e-9); {n_zero_B} draws B=0, {n_zero_b} draws b=0")
    assert ok


def test_criterion_3_fixed_points(record_criterion):
    cases = []
    for p in (FIG1_LEFT, FIG1_RIGHT):
        for beta in (0.0, 0.5, 2.0):
            cases.append((f"thermal beta={beta}", thermal_state(p, beta), p))
    for name in ("phi_plus", "phi_minus"):
        cases.append((name, named_state(name), dataclasses.replace(FIG1_RIGHT, B=0.0)))
    for name in ("psi_plus", "psi_minus"):
        for p in (FIG1_LEFT, FIG1_RIGHT):
            cases.append((name, named_state(name), dataclasses.replace(p, D=0.0, b=0.0)))
    worst = max(trace_distance(propagate(rho, p, t), rho) for _, rho, p in cases for t in (1, 10, 100))
    ok = worst < 1e-10
    record_criterion("3 fixed points", ok, f"max trace distance {worst:.2e} (<1e-10) over {len(cases)} states")
    assert ok


def test_criterion_4_t0_asymptotics(record_criterion):
    grid = np.linspace(0, 5, 5)
    worst = 0.0
    for axis in ("D", "B"):
        for value in grid:
            p = dataclasses.replace(T0_BASE, **{axis: value})
            t_star = long_time(p)
            for case in T0Case:
                pipeline = max_fidelity_t0(propagate(case.initial_state(), p, t_star))
                worst = max(worst, abs(pipeline - phi_max_asymptotic(case, p)))
    perfect = phi_max_asymptotic(T0Case.PSI_PLUS, dataclasses.replace(T0_BASE, D=0.0, b=0.0))
    no_flip = phi_max_asymptotic(T0Case.PSI_PLUS, dataclasses.replace(T0_BASE, J=0.0))
    ok = worst <= 1e-6 and abs(perfect - 1) <= 1e-9 and abs(no_flip - 2 / 3) <= 1e-9
    record_criterion("4 T0 asymptotics", ok,
                     f"pipeline vs closed form {worst:.2e} (<=1e-6); D=b=0 -> {perfect:.12f}; "
                     f"J=0 -> {no_flip:.12f}")
    assert ok


def test_criterion_5_t1_laws(rng, record_criterion):
    worst_law = 0.0
    for _ in range(500):
        rho = random_xstate(rng).matrix()
        state = T1Input(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))
        f1, f2 = t1_fidelity_coefficients(rho, state.phi)
        worst_law = max(worst_law, abs(f1 + f2 * state.negativity**2 - t1_fidelity(rho, state)))
    worst_avg = 0.0
    for _ in range(50):
        rho = random_xstate(rng).matrix()
        worst_avg = max(worst_avg, abs(t1_average_fidelity(rho) - t1_average_fidelity_quadrature(rho, 96, 96)))

    # perfect channel: |Psi+> resource without inhomogeneity or spin-orbit term
    s = parse_config("initial = psi_plus\nb = 0\nD = 0\nasymptotic = true\nprotocol = t1\n"
                     "sweep = theta\nstart = 0\nstop = 1.5707963267948966\nstep = 0.07853981633974483")
    rows = list(run_scenario(s))
    worst_fa = max(abs(r.F_A - 1) for r in rows)
    worst_nout = max(abs(r.N_out - math.sin(r.axes[0])) for r in rows)
    fig6 = {r.axes: r for r in run_scenario(load_preset("fig6", {"stop": "0.25", "stop2": "0.25"}))}
    worst_fa = max(worst_fa, abs(fig6[(0.0, 0.0)].F_A - 1))

    ok = worst_law <= 1e-12 and worst_avg <= 1e-6 and worst_fa <= 1e-9 and worst_nout <= 1e-9
    record_criterion("5 T1 laws", ok,
                     f"f1+f2*N^2 {worst_law:.2e} (<=1e-12); F_A quadrature {worst_avg:.2e} (<=1e-6); "
                     f"perfect channel |F_A-1| {worst_fa:.2e}, |N_out-N_in| {worst_nout:.2e} (<=1e-9)")
    assert ok


def test_criterion_6_asymptotic_average_fidelity(record_criterion):
    p = T0_BASE
    t_star = long_time(p)
    values = {name: t1_average_fidelity(propagate(named_state(name), p, t_star)) for name in ("psi_plus", "ket01")}
    ok = all(abs(v - 0.75) <= 1e-6 for v in values.values())
    record_criterion("6 asymptotic F_A", ok, ", ".join(f"{k} -> {v:.10f}" for k, v in values.items()) + " (0.75)")
    assert ok


def _asymptotic_negativity(name, p):
    return negativity(asymptotic_state(named_state(name), p))


def test_criterion_7_qualitative_claims(record_criterion):
    slack = 1e-9
    results = {}

    # (a) product state |00>, field sweep
    Bs = np.arange(21) * 0.25
    nB = np.array([_asymptotic_negativity("ket00", dataclasses.replace(FIG1_LEFT, B=B)) for B in Bs])
    rising, falling = nB[Bs <= 1.0], nB[Bs >= 1.0]
    results["a"] = bool(np.all(np.diff(rising) >= -slack) and np.all(np.diff(falling) <= slack))

    # (b) |01> and |Psi+>, spin-orbit sweep
    Ds = np.arange(21) * 0.25
    ok_b = True
    for name in ("ket01", "psi_plus"):
        nD = np.array([_asymptotic_negativity(name, dataclasses.replace(FIG1_RIGHT, D=D)) for D in Ds])
        ok_b &= bool(np.all(np.diff(nD) <= slack))
    results["b"] = ok_b

    # (c) replica negativity over D x N_in
    n_in = np.linspace(0, 1, 21)
    table = np.empty((21, 21))
    for i, D in enumerate(Ds):
        rho = asymptotic_state(named_state("psi_plus"), dataclasses.replace(FIG1_RIGHT, D=D))
        for j, n in enumerate(n_in):
            table[i, j] = t1_output_negativity(t1_output_components(rho, T1Input.from_negativity(n)))
    results["c"] = bool(np.all(np.diff(table, axis=1) >= -slack) and np.all(np.diff(table, axis=0) <= slack))

    # (d) steady state after 10 / (gamma g_min^2)
    worst = 0.0
    figures = [("ket00", FIG1_LEFT, "B"), ("phi_plus", FIG1_LEFT, "B"),
               ("ket01", FIG1_RIGHT, "D"), ("psi_plus", FIG1_RIGHT, "D")]
    for name, base, axis in figures:
        for value in (0.0, 1.0, 2.5, 5.0):
            p = dataclasses.replace(base, **{axis: value})
            rho0 = named_state(name)
            n_inf = negativity(asymptotic_state(rho0, p))
            t0 = long_time(p, factor=10)
            for t in t0 * np.linspace(1, 5, 9):
                worst = max(worst, abs(negativity(propagate(rho0, p, t)) - n_inf))
    results["d"] = worst < 0.05

    ok = all(results.values())
    detail = ", ".join(f"({k}) {'ok' if v else 'violated'}" for k, v in results.items())
    record_criterion("7 qualitative figure claims", ok,
                     f"{detail}; N_inf(B) peak at B={Bs[np.argmax(nB)]:.2f}; max |N(t)-N_inf| {worst:.2e}")
    assert ok


def test_criterion_8_negativity_closed_form(rng, record_criterion):
    worst = max(abs(negativity_xstate(rho) - negativity(rho))
                for rho in (random_xstate(rng).matrix() for _ in range(1000)))
    bell = [negativity_xstate(named_state(n)) for n in ("phi_plus", "phi_minus", "psi_plus", "psi_minus")]
    product = [negativity_xstate(named_state(n)) for n in ("ket00", "ket01", "ket10", "ket11")]
    werner = negativity(0.7 * named_state("psi_minus") + 0.3 * np.eye(4) / 4)
    ok = (worst <= 1e-12 and all(abs(v - 1) <= 1e-12 for v in bell)
          and all(v == 0 for v in product) and abs(werner - 0.55) <= 1e-12)
    record_criterion("8 negativity closed form", ok,
                     f"max error {worst:.2e} (<=1e-12); Werner(0.7) -> {werner:.12f}")
    assert ok


def test_criterion_9_determinism(record_criterion):
    differing = [name for name in preset_names()
                 if scenario_csv(load_preset(name)).encode() != scenario_csv(load_preset(name)).encode()]
    ok = not differing
    record_criterion("9 determinism", ok,
                     f"{len(preset_names())} presets byte-identical" if ok else f"differ: {differing}")
    assert ok

"""Command-line driver.

Exit codes: 0 success, 2 config error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import sys

from . import scenario as sc
from .errors import (
    DegenerateClosedForm,
    InvalidScenario,
    NoDephasing,
    NotXState,
    StepTooLarge,
    TruncationFailure,
)
from .model import build_hamiltonian, closed_form_spectrum, numeric_spectrum

EXIT_CONFIG = 2
EXIT_NUMERIC = 3
_NUMERIC_ERRORS = (DegenerateClosedForm, NoDephasing, NotXState, StepTooLarge, TruncationFailure)


def _load(args) -> sc.Scenario:
    overrides = {}
    for item in args.set or ():
        if "=" not in item:
            raise InvalidScenario(f"--set expects key=value, got {item!r}")
        key, value = item.split("=", 1)
        overrides[key.strip()] = value.strip()
    if args.config and args.preset:
        raise InvalidScenario("use either --config or --preset, not both")
    if args.preset:
        return sc.load_preset(args.preset, overrides)
    text = ""
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidScenario(f"cannot read config: {exc}") from None
    return sc.parse_config(text, overrides)


def _with_protocol(s: sc.Scenario, protocol: str) -> sc.Scenario:
    if protocol == "none" and "theta" in [a.name for a in s.axes]:
        raise InvalidScenario("sweeping theta needs protocol t0 or t1")
    return dataclasses.replace(s, protocol=protocol)


def _spectrum_rows(s: sc.Scenario, closed: bool):
    eig = closed_form_spectrum(s.params) if closed else numeric_spectrum(build_hamiltonian(s.params))
    header = ["index", "tag", "energy"] + [f"{part}_v{i}" for i in range(1, 5) for part in ("re", "im")]
    rows = []
    for k in range(4):
        vec = eig.vectors[:, k]
        rows.append(
            [str(k + 1), eig.tags[k] or "", sc.format_number(eig.energies[k])]
            + [sc.format_number(x) for c in vec for x in (c.real, c.imag)]
        )
    return header, rows


def _evolve_rows(s: sc.Scenario):
    header = [a.name for a in s.axes] + [
        f"{part}_rho{i}{j}" for i in range(1, 5) for j in range(1, 5) for part in ("re", "im")
    ]
    rows = []
    for point in sc.grid(s):
        params, t, _ = sc.grid_point(s, point)
        rho = sc.channel_state(s, params, t)
        rows.append([sc.format_number(v) for v in point]
                    + [sc.format_number(x) for c in rho.ravel() for x in (c.real, c.imag)])
    return header, rows


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to a key = value scenario file")
    common.add_argument("--preset", help="name of a shipped preset (see 'presets')")
    common.add_argument("--set", action="append", metavar="KEY=VALUE",
                        help="override one config key; may repeat")
    common.add_argument("--out", default="-", help="output path, '-' for stdout")
    common.add_argument("--format", default="csv", choices=["csv"])

    parser = argparse.ArgumentParser(
        prog="heisenberg-teleport",
        description="Two-qubit Heisenberg XYZ resource under intrinsic decoherence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("spectrum", parents=[common], help="eigenpairs of the Hamiltonian")
    p.add_argument("--closed-form", action="store_true", help="use the analytic eigenpairs")
    sub.add_parser("evolve", parents=[common], help="density matrix entries over the grid")
    sub.add_parser("negativity", parents=[common], help="resource negativity over the grid")
    sub.add_parser("t0", parents=[common], help="standard teleportation over the grid")
    sub.add_parser("t1", parents=[common], help="entanglement teleportation over the grid")
    sub.add_parser("sweep", parents=[common], help="run the scenario as configured")
    sub.add_parser("presets", parents=[common], help="list presets, or print one with --preset")
    return parser


def _emit(text: str, out: str):
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "presets":
            if args.preset:
                _emit(sc.preset_text(args.preset), args.out)
            else:
                _emit("".join(name + "\n" for name in sc.preset_names()), args.out)
            return 0

        s = _load(args)
        if args.command in ("spectrum", "evolve"):
            header, rows = (_spectrum_rows(s, args.closed_form) if args.command == "spectrum"
                            else _evolve_rows(s))
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
            _emit(buf.getvalue(), args.out)
            return 0

        protocol = {"negativity": "none", "t0": "t0", "t1": "t1"}.get(args.command)
        if protocol is not None:
            s = _with_protocol(s, protocol)
        _emit(sc.scenario_csv(s), args.out)
        return 0
    except InvalidScenario as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except _NUMERIC_ERRORS as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point exposing each experiment with machine-readable
output.

Tabular results go to CSV (with ``#`` metadata lines carrying the resolved
configuration, seed and version, so a run can be reproduced byte-identically);
matrices and frames go to JSON.  Exit codes: 0 success, 1 numerical failure,
2 usage error.  Output goes to stdout unless ``--output`` is given; relative
output paths are resolved against ``$DARKHOLONOMY_OUTDIR`` when set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from math import pi

import numpy as np

from . import __version__
from .application import (
    baseline_ramp_fidelity,
    dicke_fidelity,
    initial_product_state,
    prepare_dicke_holonomic,
)
from .dynamics import DEFAULT_T_SCALE, fidelity_sweep
from .fock import SectorConfig, enumerate_basis
from .gates import approximate_x, axis_angle, find_theta_star, universality_sample
from .holonomy import (
    TransportError,
    closed_form_program,
    proj_distance,
    transport,
)
from .model import ControlParams, ModelConfig
from .paths import PathSyntaxError, parse_angle, parse_path
from .subspace import dark_frame, zeno_frame, zeta_states

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2
OUTDIR_ENV = "DARKHOLONOMY_OUTDIR"


def _meta_lines(args: argparse.Namespace, **extra) -> list[str]:
    skip = {"func", "output"}
    resolved = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    resolved.update(extra)
    pairs = " ".join(f"{k}={v}" for k, v in resolved.items())
    return [f"# darkholonomy {__version__}", f"# config: {pairs}"]


def _write_text(text: str, args: argparse.Namespace) -> None:
    out = getattr(args, "output", None)
    if out is None:
        sys.stdout.write(text)
        return
    base = os.environ.get(OUTDIR_ENV, "")
    path = out if os.path.isabs(out) or not base else os.path.join(base, out)
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _emit_csv(header: list[str], rows, args: argparse.Namespace, **extra) -> None:
    buf = io.StringIO()
    for line in _meta_lines(args, **extra):
        buf.write(line + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    _write_text(buf.getvalue(), args)


def _emit_json(payload: dict, args: argparse.Namespace, **extra) -> None:
    skip = {"func", "output"}
    resolved = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    resolved.update(extra)
    payload = {"meta": {"version": __version__, "config": resolved}, **payload}
    _write_text(json.dumps(payload, indent=2) + "\n", args)


def _matrix(M: np.ndarray) -> dict:
    return {"re": np.real(M).tolist(), "im": np.imag(M).tolist()}


def _sector(args) -> SectorConfig:
    return SectorConfig(args.n, args.p)


def cmd_basis(args) -> int:
    basis = enumerate_basis(_sector(args))
    rows = [
        (i, s.n_a1, s.n_a2, s.n_b1, s.n_b2, s.n_c)
        for i, s in enumerate(basis.states)
    ]
    _emit_csv(["index", "n_a1", "n_a2", "n_b1", "n_b2", "n_c"], rows, args,
              dim=basis.dim)
    return EXIT_OK


def cmd_zeno(args) -> int:
    config = ModelConfig(sector=_sector(args), g=args.g)
    basis = enumerate_basis(config.sector)
    frame = zeno_frame(config, basis)
    payload = {"dimension": frame.columns.shape[1], "columns": _matrix(frame.columns)}
    if (args.n, args.p) == (4, 2):
        zetas = zeta_states(basis)
        payload["zeta_overlap"] = _matrix(zetas.conj().T @ frame.columns)
    _emit_json(payload, args)
    return EXIT_OK


def cmd_dark(args) -> int:
    config = ModelConfig(sector=_sector(args), g=args.g)
    basis = enumerate_basis(config.sector)
    params = ControlParams(
        omega=1.0, theta=args.theta, phi_a=args.phi_a, phi_b=args.phi_b
    )
    frame = dark_frame(config, params, basis)
    _emit_json(
        {"dimension": frame.columns.shape[1], "columns": _matrix(frame.columns)},
        args,
    )
    return EXIT_OK


def cmd_holonomy(args) -> int:
    path = parse_path(args.path)
    config = ModelConfig(sector=SectorConfig(4, 2), g=args.g)
    payload: dict = {"segments": len(path)}
    U_t = U_c = None
    if args.method in ("transport", "both"):
        if len(path) == 0:
            U_t = np.eye(2, dtype=complex)
        else:
            U_t = transport(path, config).U
        payload["transport"] = _matrix(U_t)
    if args.method in ("closed", "both"):
        U_c = closed_form_program(path).U
        payload["closed"] = _matrix(U_c)
    U = U_t if U_t is not None else U_c
    aa = axis_angle(U)
    payload["axis"] = aa.axis.tolist()
    payload["angle"] = aa.angle
    if args.method == "both":
        payload["cross_distance"] = proj_distance(U_t, U_c)
    _emit_json(payload, args)
    return EXIT_OK


def cmd_universality(args) -> int:
    pts = universality_sample(max_len=args.max_len, count=args.count, seed=args.seed)
    rows = [(f"{x:.12g}", f"{y:.12g}", f"{z:.12g}", int(l)) for x, y, z, l in pts]
    _emit_csv(["x", "y", "z", "seq_len"], rows, args)
    return EXIT_OK


def cmd_synth_x(args) -> int:
    theta_star = find_theta_star(args.ma, args.mb)
    k, dist, _ = approximate_x(theta_star, args.ma, args.mb, max_reps=args.max_reps)
    _emit_csv(
        ["theta_star", "k", "distance"],
        [(f"{theta_star:.12g}", k, f"{dist:.12g}")],
        args,
    )
    return EXIT_OK


def cmd_dicke(args) -> int:
    config = ModelConfig(sector=SectorConfig(4, 2), g=args.g)
    result, fidelity = prepare_dicke_holonomic(
        config, args.ma, args.mb, args.theta1
    )
    _emit_json(
        {
            "fidelity": fidelity,
            "baseline_ramp_fidelity": baseline_ramp_fidelity(config),
            "holonomy": _matrix(result.U),
            "steps_used": result.steps_used,
            "est_error": result.est_error,
        },
        args,
    )
    return EXIT_OK


def cmd_sweep(args) -> int:
    g_list = [float(x) for x in args.g_list.split(",") if x.strip()]
    if not g_list or any(g <= 0 for g in g_list):
        raise argparse.ArgumentTypeError("--g-list needs positive values")
    rows = fidelity_sweep(
        g_list,
        m_a=args.ma,
        m_b=args.mb,
        theta_1=args.theta1,
        t_scale=args.t_scale,
    )
    table = [
        (
            f"{r['g']:.12g}",
            f"{r['fidelity_full']:.12g}",
            f"{r['fidelity_zeno']:.12g}",
            f"{r['fidelity_holonomic']:.12g}",
            f"{r['fidelity_no_phi']:.12g}",
        )
        for r in rows
    ]
    _emit_csv(
        ["g", "fidelity_full", "fidelity_zeno", "fidelity_holonomic",
         "fidelity_no_phi"],
        table,
        args,
    )
    return EXIT_OK


def _angle(text: str) -> float:
    try:
        return parse_angle(text)
    except PathSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="darkholonomy",
        description="Dark-subspace holonomy experiments with CSV/JSON output.",
    )
    parser.add_argument("--output", help="output file (default stdout); relative "
                        f"paths resolve against ${OUTDIR_ENV}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=fn)
        # accepted after the subcommand as well; SUPPRESS keeps a value
        # given before the subcommand from being clobbered by the default
        p.add_argument("--output", default=argparse.SUPPRESS,
                       help="output file (default stdout)")
        return p

    p = add("basis", cmd_basis, help="enumerate the symmetric sector basis")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--p", type=int, default=2)

    p = add("zeno", cmd_zeno, help="Zeno frame of the cavity-coupling null space")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--g", type=float, default=20.0)

    p = add("dark", cmd_dark, help="dark frame at fixed control parameters")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--g", type=float, default=20.0)
    p.add_argument("--theta", type=_angle, default=pi / 4)
    p.add_argument("--phi-a", type=_angle, default=0.0)
    p.add_argument("--phi-b", type=_angle, default=0.0)

    p = add("holonomy", cmd_holonomy, help="holonomy of a parameter path")
    p.add_argument("--path", required=True,
                   help='e.g. "theta:pi/4->0.669; phi:ma=-24,mb=1@theta=0.669"')
    p.add_argument("--method", choices=("transport", "closed", "both"),
                   default="both")
    p.add_argument("--g", type=float, default=20.0)

    p = add("universality", cmd_universality,
            help="Bloch points of random two-generator words")
    p.add_argument("--count", type=int, default=10_000)
    p.add_argument("--max-len", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)

    p = add("synth-x", cmd_synth_x, help="approximate Pauli X by repetition")
    p.add_argument("--ma", type=int, default=0)
    p.add_argument("--mb", type=int, default=1)
    p.add_argument("--max-reps", type=int, default=200)

    p = add("dicke", cmd_dicke, help="holonomic symmetric-state preparation")
    p.add_argument("--ma", type=int, default=-24)
    p.add_argument("--mb", type=int, default=1)
    p.add_argument("--theta1", type=_angle, default=0.669)
    p.add_argument("--g", type=float, default=20.0)

    p = add("sweep", cmd_sweep, help="fidelity-vs-coupling sweep")
    p.add_argument("--g-list", default="5,10,20,40")
    p.add_argument("--ma", type=int, default=-24)
    p.add_argument("--mb", type=int, default=1)
    p.add_argument("--theta1", type=_angle, default=0.669)
    p.add_argument("--t-scale", type=float, default=DEFAULT_T_SCALE)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (PathSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TransportError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())

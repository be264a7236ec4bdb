"""Command-line front end.

Subcommands: fig1..fig4 (figure presets), sweep (custom grid), point
(all amplitudes at one (x, z)).  A plain key=value config file provides
defaults; command-line flags override it.  Exit codes: 0 success,
2 validation failure, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import QuadratureError, SingularConfigError, UndefinedStateError
from .model import Kinematics, ModelParams
from .sweep import SweepSpec, emit_plot_script, preset, run_sweep, to_csv
from .twophoton import two_photon_point
from .vacuum import vacuum_concurrence, vacuum_point

CONFIG_KEYS = ("dipole_strength", "alpha", "nu_max", "z_max_factor", "points")


def read_config(path: str) -> dict:
    values: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        if key not in CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = int(val) if key == "points" else float(val)
    return values


def _build_params(args, config: dict) -> ModelParams:
    kwargs = {}
    for key in ("dipole_strength", "alpha", "nu_max", "z_max_factor"):
        if key in config:
            kwargs[key] = config[key]
    if getattr(args, "nu_max", None) is not None:
        kwargs["nu_max"] = args.nu_max
    return ModelParams(**kwargs)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", help="write CSV here (default: stdout)")
    sub.add_argument("--config", help="key=value config file")
    sub.add_argument("--nu-max", type=float, dest="nu_max", help="UV cutoff for mode integrals")
    sub.add_argument("--points", type=int, help="grid points per curve")
    sub.add_argument("--emit-plot", action="store_true", help="also write a gnuplot script next to the CSV")
    sub.add_argument("--workers", type=int, default=1, help="evaluation threads (output independent of this)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="atomcone", description="Two-atom concurrence near the light cone")
    subs = parser.add_subparsers(dest="command", required=True)

    for name in ("fig1", "fig2", "fig3", "fig4"):
        sub = subs.add_parser(name, help=f"reproduce the {name} sweep")
        _add_common(sub)

    sweep = subs.add_parser("sweep", help="custom sweep")
    _add_common(sweep)
    sweep.add_argument("--channel", required=True, choices=("vacuum", "two_photon"))
    sweep.add_argument("--var", required=True, choices=("x", "z"), help="swept variable")
    sweep.add_argument("--lo", type=float, required=True)
    sweep.add_argument("--hi", type=float, required=True)
    sweep.add_argument("--fixed", required=True, help="comma-separated fixed values (z for x sweeps, Omega*t for z sweeps)")
    sweep.add_argument("--refine-cone", action="store_true", help="add geometric ladders at the light cone")

    point = subs.add_parser("point", help="print all amplitudes at one (x, z)")
    point.add_argument("--x", type=float, required=True)
    point.add_argument("--z", type=float, required=True)
    point.add_argument("--config", help="key=value config file")
    point.add_argument("--nu-max", type=float, dest="nu_max")
    return parser


def _write_outputs(result, args) -> None:
    csv_text = to_csv(result)
    if args.out:
        Path(args.out).write_text(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.emit_plot:
        script = emit_plot_script(result)
        if args.out:
            Path(args.out).with_suffix(".gp").write_text(script)
        else:
            sys.stdout.write(script)


def _run_point(args) -> int:
    config = read_config(args.config) if args.config else {}
    params = _build_params(args, config)
    k = Kinematics(x=args.x, z=args.z)
    amp = vacuum_point(params, k)
    print(f"x = {args.x:.17g}")
    print(f"z = {args.z:.17g}")
    print(f"omega_t = {k.omega_t():.17g}")
    print(f"on_cone = {int(amp.on_cone)}")
    print(f"a = {amp.a.real:.17g} {amp.a.imag:+.17g}i")
    print(f"b = {amp.b.real:.17g} {amp.b.imag:+.17g}i")
    print(f"i_plus = {amp.i_plus.real:.17g} {amp.i_plus.imag:+.17g}i")
    print(f"i_minus = {amp.i_minus.real:.17g} {amp.i_minus.imag:+.17g}i")
    print(f"concurrence_vacuum = {vacuum_concurrence(params, k):.17g}")
    bl = two_photon_point(params, k, sensitivity=True)
    c2 = min(2.0 * abs(bl.fg) / (bl.f2 + bl.g2), 1.0)
    print(f"f2 = {bl.f2:.17g}")
    print(f"g2 = {bl.g2:.17g}")
    print(f"fg = {bl.fg.real:.17g} {bl.fg.imag:+.17g}i")
    print(f"concurrence_two_photon = {c2:.17g}")
    print(f"cutoff_sensitivity = {bl.cutoff_meta['concurrence_shift']:.17g}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "point":
            return _run_point(args)
        config = read_config(args.config) if args.config else {}
        params = _build_params(args, config)
        n_points = args.points if args.points is not None else config.get("points")
        if args.command == "sweep":
            fixed = tuple(float(v) for v in args.fixed.split(",") if v.strip())
            spec = SweepSpec(
                channel=args.channel,
                sweep_var=args.var,
                fixed_values=fixed,
                lo=args.lo,
                hi=args.hi,
                n_points=n_points if n_points is not None else 400,
                params=params,
                refine_cone=args.refine_cone,
            )
        else:
            spec = preset(args.command, params=params, n_points=n_points)
        result = run_sweep(spec, workers=max(1, args.workers))
        _write_outputs(result, args)
        return 0
    except (QuadratureError,) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except (SingularConfigError, UndefinedStateError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

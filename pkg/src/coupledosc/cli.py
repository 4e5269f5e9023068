"""Command-line front end: mode data, entanglement summaries, boosted fields,
parton marginals, parameter sweeps, and the self-verification report.

All numeric output is rendered at 15 significant digits (%.15g), CSV is
UTF-8 with LF line endings and a header row, and every command is
deterministic: the same invocation produces the same bytes.

Exit codes: 0 success, 1 domain or data error (bad physics parameters,
unreadable overlay, failed verification), 2 usage error.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import covariant, entanglement, oscillator, parton, verify
from .numerics import oracle_reduced_density, uniform_grid

_PROG = "coupledosc"


def _f(x):
    """Round-trip a float through %.15g so JSON and CSV agree on rendering."""
    return float(f"{float(x):.15g}")


def _emit_json(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_modes(args) -> int:
    params = oscillator.CoupledParams(m=args.m, A=args.A, C=args.C)
    modes = oscillator.normal_modes(params)
    _emit_json(
        {
            "m": _f(params.m),
            "A": _f(params.A),
            "C": _f(params.C),
            "K": _f(modes.K),
            "eta": _f(modes.eta),
            "omega": _f(modes.omega),
            "omega_plus": _f(modes.omega_plus),
            "omega_minus": _f(modes.omega_minus),
        },
        args.out,
    )
    return 0


def cmd_entangle(args) -> int:
    if args.kmax < 0:
        raise ValueError(f"--kmax must be nonnegative, got {args.kmax}")
    exp_ = entanglement.schmidt_coefficients(args.eta, k_max=args.kmax)
    rs = entanglement.reduced_state(args.eta, k_max=args.kmax)
    if args.eta == 0.0:
        x_val, temp = None, 0.0
    else:
        tm = entanglement.effective_temperature(args.eta, omega=args.omega)
        x_val, temp = _f(tm.x), _f(tm.temperature)
    _emit_json(
        {
            "eta": _f(args.eta),
            "k_max": args.kmax,
            "omega": _f(args.omega),
            "coeffs": [_f(c) for c in exp_.coefficients],
            "eigenvalues": [_f(p) for p in rs.eigenvalues],
            "tail": _f(rs.tail),
            "purity": _f(entanglement.purity(args.eta)),
            "entropy": _f(entanglement.entropy(args.eta)),
            "x": x_val,
            "T": temp,
        },
        args.out,
    )
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write("k,p_k\n")
            for k, p in enumerate(rs.eigenvalues):
                fh.write(f"{k},{p:.15g}\n")
    if args.kernel_csv:
        kern = oracle_reduced_density(args.eta, uniform_grid(args.grid, args.extent))
        kern.to_csv(args.kernel_csv)
    return 0


def cmd_boost(args) -> int:
    nodes = np.linspace(-args.extent, args.extent, args.grid)
    A, B = np.meshgrid(nodes, nodes, indexing="ij")
    psi = covariant.boosted_wavefunction(A, B, args.eta)
    phi = covariant.momentum_wavefunction(A, B, args.eta)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("z,t,psi,qz,q0,phi\n")
        for i in range(args.grid):
            for j in range(args.grid):
                fh.write(
                    f"{A[i, j]:.15g},{B[i, j]:.15g},{psi[i, j]:.15g},"
                    f"{A[i, j]:.15g},{B[i, j]:.15g},{phi[i, j]:.15g}\n"
                )
    return 0


def cmd_parton(args) -> int:
    if args.overlay:
        series = parton.ingest_overlay(args.overlay)
        shift, scale = args.rescale if args.rescale else (0.0, 1.0)
        coords = shift + scale * series.x
        dens = parton.model_density(args.eta, coords)
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write("coordinate,model_density,overlay_value\n")
            for xi, di, vi in zip(coords, dens, series.values):
                fh.write(f"{xi:.15g},{di:.15g},{vi:.15g}\n")
    else:
        parton.export_gaussian_pdf(args.eta, args.n, args.out)
    return 0


def _write_sweep(fh, start: float, stop: float, steps: int, k_max: int, omega: float) -> None:
    fh.write("eta,purity,entropy,T,width_z,width_qz\n")
    for eta in np.linspace(start, stop, steps):
        eta = float(eta)
        if eta == 0.0:
            temp = 0.0
        else:
            temp = entanglement.effective_temperature(eta, omega=omega).temperature
        w = parton.width(eta)
        fh.write(
            f"{eta:.15g},{entanglement.purity(eta):.15g},{entanglement.entropy(eta):.15g},"
            f"{temp:.15g},{w:.15g},{w:.15g}\n"
        )


def cmd_sweep(args) -> int:
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        _write_sweep(fh, args.start, args.stop, args.steps, args.kmax, args.omega)
    return 0


def cmd_verify(args) -> int:
    report = verify.run_all()
    for r in report.checks:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status} {r.name}: deviation {r.deviation:.3e} vs tolerance {r.tolerance:.3e}"
        if r.detail and not r.passed:
            line += f" ({r.detail})"
        print(line)
    n_pass = sum(1 for r in report.checks if r.passed)
    print(f"overall: {'PASS' if report.overall_pass else 'FAIL'} ({n_pass}/{len(report.checks)} checks)")
    if args.out:
        payload = {
            "checks": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "deviation": _f(r.deviation),
                    "tolerance": _f(r.tolerance),
                    "detail": r.detail,
                }
                for r in report.checks
            ],
            "overall_pass": report.overall_pass,
        }
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(json.dumps(payload, indent=2) + "\n")
    return 0 if report.overall_pass else 1


def _rescale_arg(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected shift,scale")
    try:
        shift, scale = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"could not parse {text!r} as shift,scale") from None
    if not (math.isfinite(shift) and math.isfinite(scale)) or scale <= 0.0:
        raise argparse.ArgumentTypeError("rescale needs finite shift and positive scale")
    return shift, scale


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=_PROG, description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("modes", help="normal-mode data for given couplings")
    p.add_argument("--m", type=float, required=True, help="mass")
    p.add_argument("--A", type=float, required=True, help="diagonal stiffness")
    p.add_argument("--C", type=float, required=True, help="cross coupling, |C| < A")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_modes)

    p = sub.add_parser("entangle", help="Schmidt data, purity, entropy, temperature")
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--kmax", type=int, default=64)
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.add_argument("--csv", help="also write (k, p_k) rows here")
    p.add_argument("--kernel-csv", dest="kernel_csv", help="dump the quadrature density kernel")
    p.add_argument("--grid", type=int, default=401, help="kernel grid nodes")
    p.add_argument("--extent", type=float, default=8.0, help="kernel grid half-width")
    p.set_defaults(func=cmd_entangle)

    p = sub.add_parser("boost", help="tabulate psi_eta and phi_eta on a mesh")
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--grid", type=int, default=401)
    p.add_argument("--extent", type=float, default=8.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_boost)

    p = sub.add_parser("parton", help="longitudinal marginal, optionally against an overlay")
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--var", choices=("z", "qz"), default="z",
                   help="marginal variable (the two coincide; kept for labeling)")
    p.add_argument("--n", type=int, default=101, help="points when exporting without overlay")
    p.add_argument("--overlay", help="reference CSV with header x,value")
    p.add_argument("--rescale", type=_rescale_arg, help="shift,scale applied to overlay x")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_parton)

    p = sub.add_parser("sweep", help="CSV of closed-form observables over an eta range")
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--kmax", type=int, default=64)
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run every consistency check and report")
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep":
        if args.steps < 1:
            parser.error("--steps must be at least 1")
        if args.start > args.stop:
            parser.error("--start must not exceed --stop")
    if args.command == "boost" and args.grid < 2:
        parser.error("--grid must be at least 2")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"{_PROG}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

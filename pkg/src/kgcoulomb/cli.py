"""
Command-line front end.

    kgcoulomb frequency   --mass 1 --coupling 1 --l 0 --n 1
    kgcoulomb spectrum    --mass 1 --coupling 1 --l 0 --n 2
    kgcoulomb wavefunction --mass 1 --coupling 1 --l 0 --n 1 --out r.csv
    kgcoulomb verify      --mass 1 --coupling -1 --l 2 --n 2

Output is CSV with a header line. Exit codes: 0 success, 1 empty or failed
result, 2 invalid input.
"""

import argparse
import sys

from . import oracle, wavefunction
from .errors import KGCoulombError
from .params import ModelParams, derive_gamma
from .quantization import allowed_frequencies, pure_oscillator_mode

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_INVALID = 2

# config key -> (type, default); defaults apply after flags and config file
OPTIONS = {
    "mass": (float, None),
    "coupling": (float, None),
    "l": (int, None),
    "n": (int, None),
    "omega": (float, None),
    "root_index": (int, None),
    "xi_max": (float, None),
    "points": (int, wavefunction.DEFAULT_POINTS),
    "out": (str, None),
    "grid_points": (int, oracle.DEFAULT_POINTS),
    "tol": (float, oracle.DEFAULT_TOL),
}


class UsageError(KGCoulombError):
    pass


def fmt(value):
    return f"{value:.15g}"


def read_config(path):
    """Parse ``key=value`` lines; ``#`` starts a comment. Dashes in keys map to underscores."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in OPTIONS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value
    return values


def resolve(args):
    """Merge command-line flags over config-file values over defaults."""
    config = read_config(args.config) if args.config else {}
    resolved = {}
    for key, (kind, default) in OPTIONS.items():
        value = getattr(args, key, None)
        if value is None and key in config:
            try:
                value = kind(config[key])
            except ValueError:
                raise UsageError(f"config value for {key!r} is not a valid {kind.__name__}")
        resolved[key] = default if value is None else value
    for key in ("mass", "coupling", "l", "n"):
        if resolved[key] is None:
            raise UsageError(f"missing required parameter {key!r} (flag or config)")
    return argparse.Namespace(**resolved)


def model_params(opts):
    return ModelParams(m=opts.mass, f=opts.coupling, l=opts.l, n=opts.n)


def quantized_modes(opts):
    params = model_params(opts)
    if params.f == 0:
        if opts.omega is None:
            raise UsageError("coupling 0 has no quantized frequency; pass --omega for the pure oscillator")
        return [pure_oscillator_mode(params, opts.omega)]
    return allowed_frequencies(params)


def cmd_frequency(opts, out):
    params = model_params(opts)
    modes = allowed_frequencies(params)
    gamma = derive_gamma(params.l, params.f)
    out.write("n,l,gamma,delta,omega\n")
    for mode in modes:
        out.write(f"{mode.n},{mode.l},{fmt(gamma)},{fmt(mode.delta_root)},{fmt(mode.omega)}\n")
    return EXIT_OK if modes else EXIT_EMPTY


def cmd_spectrum(opts, out):
    modes = allowed_frequencies(model_params(opts))
    out.write("n,l,omega,E_plus,E_minus\n")
    for mode in modes:
        out.write(
            f"{mode.n},{mode.l},{fmt(mode.omega)},"
            f"{fmt(mode.energy_plus)},{fmt(mode.energy_minus)}\n"
        )
    return EXIT_OK if modes else EXIT_EMPTY


def cmd_wavefunction(opts, out):
    modes = quantized_modes(opts)
    if not modes:
        print("no admissible mode", file=sys.stderr)
        return EXIT_EMPTY
    index = opts.root_index or 0
    if not 0 <= index < len(modes):
        raise UsageError(f"root index {index} out of range ({len(modes)} mode(s))")
    xi_max = opts.xi_max if opts.xi_max is not None else wavefunction.DEFAULT_XI_MAX
    wf = wavefunction.build_radial(modes[index], xi_max, opts.points)
    table = wavefunction.sample_to_table(wf, xi_max, opts.points)
    if opts.out is None:
        table.write_csv(out)
    else:
        try:
            with open(opts.out, "w", newline="") as fh:
                table.write_csv(fh)
        except OSError as exc:
            raise UsageError(f"cannot write {opts.out}: {exc}")
    return EXIT_OK


def cmd_verify(opts, out):
    modes = quantized_modes(opts)
    if not modes:
        print("no admissible mode", file=sys.stderr)
        return EXIT_EMPTY
    xi_max = opts.xi_max if opts.xi_max is not None else oracle.DEFAULT_XI_MAX
    grid = oracle.GridSpec(xi_max=xi_max, points=opts.grid_points)
    out.write("predicted_lambda,matched_lambda,relative_error,pass\n")
    ok = True
    for mode in modes:
        report = oracle.verify_mode(mode, grid, opts.tol)
        ok &= report.passed
        out.write(
            f"{fmt(report.predicted_lambda)},{fmt(report.matched_lambda)},"
            f"{fmt(report.relative_error)},{str(report.passed).lower()}\n"
        )
    return EXIT_OK if ok else EXIT_EMPTY


COMMANDS = {
    "frequency": cmd_frequency,
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "verify": cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kgcoulomb",
        description="Klein-Gordon oscillator with a Coulomb-type scalar potential",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--mass", type=float, help="rest mass m > 0")
    shared.add_argument("--coupling", type=float, help="Coulomb coupling f (signed)")
    shared.add_argument("--l", type=int, help="azimuthal quantum number")
    shared.add_argument("--n", type=int, help="radial quantum number")
    shared.add_argument("--config", help="file of key=value lines; flags take precedence")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("frequency", parents=[shared], help="allowed frequencies omega_{n,l}")
    sub.add_parser("spectrum", parents=[shared], help="energy levels of each allowed mode")

    wf = sub.add_parser("wavefunction", parents=[shared], help="normalized R(xi) as CSV")
    wf.add_argument("--xi-max", dest="xi_max", type=float, help="grid end (default 12)")
    wf.add_argument("--points", type=int, help="grid points (default 4001)")
    wf.add_argument("--out", help="output file (default stdout)")
    wf.add_argument("--root-index", dest="root_index", type=int, help="mode index, by descending omega")
    wf.add_argument("--omega", type=float, help="frequency for the f = 0 pure oscillator")

    ver = sub.add_parser("verify", parents=[shared], help="finite-difference eigenvalue check")
    ver.add_argument("--grid-points", dest="grid_points", type=int, help="default 4000")
    ver.add_argument("--xi-max", dest="xi_max", type=float, help="default 12")
    ver.add_argument("--tol", type=float, help="relative tolerance (default 1e-4)")
    ver.add_argument("--omega", type=float, help="frequency for the f = 0 pure oscillator")
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        opts = resolve(args)
        return COMMANDS[args.command](opts, out)
    except (KGCoulombError, OSError) as exc:
        print(f"kgcoulomb {args.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID

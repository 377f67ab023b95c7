"""Command-line front end.

Four subcommands: `point` evaluates one parameter point and emits JSON,
`sweep` writes a CSV curve, `optimize` locates the coordinate minimizing the
error bound, and `verify` runs the cross-route verification suites.

Exit codes are a stable contract: 0 success, 1 verification failure, 2 usage
error, 3 degenerate-parameter evaluation, 4 output I/O error.  All output is
deterministic for identical flags: every float is printed in shortest
round-trip form and manifests carry no timestamps.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field

from . import __version__
from .bogoliubov import ANALYTIC, FINITE_DIFFERENCE
from .cosmology import ModelParams
from .errors import CosmoQfiError
from .probe import probe, qfi_eps, state_entropy
from .sweeps import SweepSpec, optimize, sweep
from .verify import run_all

_DERIV_FLAGS = {"analytic": ANALYTIC, "fd": FINITE_DIFFERENCE}
_VAR_FLAGS = {"m": "m_tilde", "k": "k_tilde", "eps": "eps"}

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_IO = 4


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record embedded in every output file."""

    command: str
    params: dict
    tolerances: dict = field(default_factory=dict)
    tool_version: str = __version__
    output_path: str = ""

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "params": self.params,
                "tolerances": self.tolerances,
                "tool_version": self.tool_version,
                "output_path": self.output_path,
            }
        )


def _json_number(x: float):
    # JSON has no Infinity/NaN literals; the wire contract uses strings.
    if math.isinf(x):
        return "inf"
    if math.isnan(x):
        return "nan"
    return x


def _add_channel_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--eps", type=float, default=1.0, help="volume ratio (default 1)")
    sp.add_argument("--m", type=float, default=1.0, help="dimensionless mass (default 1)")
    sp.add_argument("--k", type=float, default=1.0, help="dimensionless wave number (default 1)")
    sp.add_argument(
        "--trials", type=float, default=1e11,
        help="measurement repetitions for the bound (default 1e11)",
    )
    sp.add_argument(
        "--deriv-method", choices=sorted(_DERIV_FLAGS), default="analytic",
        help="eps-derivative implementation (default analytic)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosmo-qfi",
        description=(
            "Quantum Fisher information and Cramer-Rao bounds for estimating "
            "the volume ratio of an expanding universe with a Dirac-field "
            "particle-creation probe."
        ),
        epilog=(
            "Environment: COSMO_QFI_THREADS caps internal parallelism "
            "(0 = auto); COSMO_QFI_PURE forces the pure-Python integrator "
            "backend."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("point", help="evaluate one parameter point, emit JSON")
    _add_channel_flags(sp)
    sp.set_defaults(func=_cmd_point)

    sp = sub.add_parser("sweep", help="evaluate a curve over one parameter, write CSV")
    _add_channel_flags(sp)
    sp.add_argument("--var", choices=sorted(_VAR_FLAGS), required=True,
                    help="swept parameter")
    sp.add_argument("--lo", type=float, default=0.1, help="sweep start (default 0.1)")
    sp.add_argument("--hi", type=float, default=10.0, help="sweep end (default 10)")
    sp.add_argument("--points", type=int, default=200, help="grid size (default 200)")
    sp.add_argument("--out", required=True, help="output CSV path")
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("optimize", help="minimize the error bound over one parameter")
    _add_channel_flags(sp)
    sp.add_argument("--var", choices=sorted(_VAR_FLAGS), required=True,
                    help="optimization variable")
    sp.add_argument("--lo", type=float, default=0.05, help="lower bound (default 0.05)")
    sp.add_argument("--hi", type=float, default=20.0, help="upper bound (default 20)")
    sp.set_defaults(func=_cmd_optimize)

    sp = sub.add_parser("verify", help="run the cross-route verification suites")
    sp.add_argument("--points", type=int, default=10,
                    help="grid resolution per axis for identity checks (default 10)")
    sp.add_argument("--ode-points", type=int, default=5,
                    help="number of mode-equation oracle comparisons (default 5)")
    sp.add_argument("--tol", type=float, default=1e-10,
                    help="relative tolerance for the identity checks (default 1e-10)")
    sp.set_defaults(func=_cmd_verify)

    return parser


def _params_from_flags(args: argparse.Namespace) -> ModelParams:
    return ModelParams(eps=args.eps, m_tilde=args.m, k_tilde=args.k)


def _check_trials(trials: float) -> None:
    if not trials >= 1:
        raise ValueError(f"--trials must be >= 1, got {trials}")


def _cmd_point(args: argparse.Namespace) -> int:
    _check_trials(args.trials)
    params = _params_from_flags(args)
    method = _DERIV_FLAGS[args.deriv_method]
    est = qfi_eps(params, trials=args.trials, deriv_method=method)
    st = probe(params, deriv_method=method)
    doc = {
        "eps": params.eps,
        "m_tilde": params.m_tilde,
        "k_tilde": params.k_tilde,
        "X": st.X,
        "p0": st.p0,
        "p1": st.p1,
        "qfi": est.qfi,
        "bound": _json_number(est.bound),
        "entropy": state_entropy(st),
        "derivative_method": est.derivative_method,
    }
    print(json.dumps(doc))
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    _check_trials(args.trials)
    variable = _VAR_FLAGS[args.var]
    # The swept coordinate in `fixed` is a placeholder; it is replaced at
    # every grid point.
    fixed_fields = {"eps": args.eps, "m_tilde": args.m, "k_tilde": args.k}
    fixed_fields[variable] = 1.0
    spec = SweepSpec(
        variable=variable,
        lo=args.lo,
        hi=args.hi,
        points=args.points,
        fixed=ModelParams(**fixed_fields),
        trials=args.trials,
    )
    rows = sweep(spec, deriv_method=_DERIV_FLAGS[args.deriv_method])
    manifest = RunManifest(
        command="sweep",
        params={
            "var": args.var,
            "lo": args.lo,
            "hi": args.hi,
            "points": args.points,
            "eps": args.eps,
            "m": args.m,
            "k": args.k,
            "trials": args.trials,
            "deriv_method": args.deriv_method,
        },
        output_path=args.out,
    )
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# manifest: {manifest.to_json()}\n")
        fh.write("value,qfi,bound,entropy,p1\n")
        for r in rows:
            fh.write(f"{r.value!r},{r.qfi!r},{r.bound!r},{r.entropy!r},{r.p1!r}\n")
    print(args.out)
    return EXIT_OK


def _cmd_optimize(args: argparse.Namespace) -> int:
    _check_trials(args.trials)
    variable = _VAR_FLAGS[args.var]
    fixed_fields = {"eps": args.eps, "m_tilde": args.m, "k_tilde": args.k}
    fixed_fields[variable] = 1.0
    result = optimize(
        variable,
        args.lo,
        args.hi,
        ModelParams(**fixed_fields),
        trials=args.trials,
        deriv_method=_DERIV_FLAGS[args.deriv_method],
    )
    doc = {
        "variable": args.var,
        "optimum": result.coordinate,
        "qfi": result.estimation.qfi,
        "bound": _json_number(result.estimation.bound),
        "boundary_warning": result.boundary_warning,
    }
    print(json.dumps(doc))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if not args.tol > 0:
        raise ValueError(f"--tol must be > 0, got {args.tol}")
    if args.points < 2:
        raise ValueError(f"--points must be >= 2, got {args.points}")
    if args.ode_points < 1:
        raise ValueError(f"--ode-points must be >= 1, got {args.ode_points}")
    results = run_all(args.points, args.ode_points, args.tol)
    width = max(len(r.name) for r in results)
    print(f"{'check':<{width}}  {'worst':>10}  {'tolerance':>10}  status")
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.name:<{width}}  {r.worst:>10.3e}  {r.tolerance:>10.1e}  {status}")
    failed = sum(not r.passed for r in results)
    if failed:
        print(f"{failed} check(s) failed")
        return EXIT_VERIFY_FAILED
    print("all checks passed")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CosmoQfiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

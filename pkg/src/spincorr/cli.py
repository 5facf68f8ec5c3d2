"""Command-line front end: ``spincorr analyze | sweep | reconcile``.

Exit codes: 0 success, 2 validation failure (or bad arguments), 3 state-file
parse failure, 4 I/O failure, 5 numerical failure.
"""

import argparse
import json
import sys

from . import families, reconcile as rec, sweep
from .errors import DomainError, NumericalError, ValidationError
from .measures import analyze
from .states import StateFileError, load_state, sample_random

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PARSE = 3
EXIT_IO = 4
EXIT_NUMERICAL = 5


def _add_family_params(p):
    p.add_argument("--x", type=float, help="Werner / rank-2 mixing parameter")
    p.add_argument("--theta", type=float, help="angle in radians")
    p.add_argument("--a", type=float, help="initial weight for the cavity family")
    p.add_argument("--t", dest="T", type=float, help="scaled time T")


def build_parser():
    parser = argparse.ArgumentParser(prog="spincorr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="indicator, concurrence and classification of one state")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--state", metavar="PATH", help="JSON state file")
    src.add_argument("--family", choices=sorted(families.FAMILY_PARAMS))
    src.add_argument("--seed", type=int, help="analyze a random two-qubit state")
    p.add_argument("--rank", type=int, default=4, help="rank of the random state (default 4)")
    _add_family_params(p)
    p.add_argument("--json", action="store_true", help="print JSON instead of text")

    p = sub.add_parser("sweep", help="sweep one family parameter and write CSV")
    p.add_argument("--family", required=True, choices=sweep.SWEEP_FAMILIES)
    p.add_argument("--param", help="parameter to sweep (default depends on the family)")
    p.add_argument("--t-min", "--min", dest="lo", type=float, help="lower end of the swept parameter")
    p.add_argument("--t-max", "--max", dest="hi", type=float, help="upper end of the swept parameter")
    p.add_argument("--steps", type=int, default=201)
    p.add_argument("--csv", default="-", metavar="PATH", help="output file ('-' for stdout)")
    p.add_argument("--seed", type=int, help="seed for the random ensemble")
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    _add_family_params(p)

    p = sub.add_parser("reconcile", help="published vs definitional values")
    p.add_argument("case", choices=rec.CASES)
    _add_family_params(p)
    p.add_argument("--json", action="store_true")
    return parser


def _params(args):
    return {k: getattr(args, k) for k in ("x", "theta", "a", "T")}


def _render(report):
    scm = report.scm
    lines = [f"indicator: {report.indicator:.12g}", f"n_nonzero: {scm.n_nonzero}", "spin_correlation_matrix:"]
    lines.append("      " + "".join(f"{c:>16}" for c in "xyz"))
    for label, row in zip("xyz", scm.raw):
        lines.append(f"    {label} " + "".join(f"{v:16.10g}" for v in row))
    lines.append(f"negative_elements: {scm.negative_count}")
    lines.append(f"concurrence: {report.concurrence:.12g}")
    lines.append("mu: " + ("n/a" if report.mu is None else f"{report.mu:.12g}"))
    lines.append(f"classification: {report.classification.value}")
    return "\n".join(lines)


def cmd_analyze(args, out):
    if args.state:
        rho, mu = load_state(args.state), None
    elif args.seed is not None:
        rho, mu = sample_random(2, args.rank, args.seed), None
    else:
        params = _params(args)
        rho = families.family_state(args.family, **params)
        mu = families.family_mu(args.family, **params)
    report = analyze(rho, mu=mu)
    out.write((json.dumps(report.as_dict()) if args.json else _render(report)) + "\n")


def cmd_sweep(args, out):
    param = args.param or sweep.DEFAULT_PARAM[args.family]
    if args.family == "random":
        lo, hi = 0, args.steps - 1
        fixed = {"seed": args.seed}
    else:
        lo, hi = sweep.DEFAULT_RANGE.get((args.family, param), (None, None))
        fixed = {k: v for k, v in _params(args).items() if v is not None}
    lo = args.lo if args.lo is not None else lo
    hi = args.hi if args.hi is not None else hi
    if lo is None or hi is None:
        raise DomainError(f"give --t-min and --t-max for sweeping {param!r}")
    spec = sweep.SweepSpec(args.family, param, lo, hi, args.steps, fixed, None if args.csv == "-" else args.csv)
    rows = sweep.run_sweep(spec, jobs=args.jobs)
    if spec.output_path is None:
        out.write(sweep.format_csv(spec, rows))
    else:
        sweep.write_csv(spec, rows)


def cmd_reconcile(args, out):
    report = rec.reconcile(args.case, **_params(args))
    out.write((json.dumps(report.as_dict()) if args.json else report.render()) + "\n")


COMMANDS = {"analyze": cmd_analyze, "sweep": cmd_sweep, "reconcile": cmd_reconcile}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args, out)
    except ValidationError as exc:
        err.write(f"validation failed: {exc.invariant} (magnitude {exc.magnitude:.6g}): {exc}\n")
        return EXIT_VALIDATION
    except StateFileError as exc:
        err.write(f"cannot parse state file: {exc}\n")
        return EXIT_PARSE
    except DomainError as exc:
        err.write(f"invalid arguments: {exc}\n")
        return EXIT_VALIDATION
    except NumericalError as exc:
        err.write(f"numerical failure: {exc}\n")
        return EXIT_NUMERICAL
    except OSError as exc:
        err.write(f"I/O error: {exc}\n")
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

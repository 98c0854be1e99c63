"""Command-line access to all queries and sweeps.

Exit codes: 0 success, 1 domain error, 2 verification failure, 64 usage.
JSON is the default output; --csv switches the tabular commands.  Floats are
printed with 12 significant digits; exact integers as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import extremal, oracle, partitions, spectrum
from .charpoly import char_poly_factored
from .errors import SqDistError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 64 instead of argparse's default 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _fmt(value: float) -> float:
    return float(f"{value:.12g}")


def _json_default(obj):
    raise TypeError(f"not JSON serializable: {obj!r}")


def _emit(payload) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload + "\n")
    else:
        sys.stdout.write(json.dumps(payload, default=_json_default) + "\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="sqdist")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, partition_args=0):
        cmd = sub.add_parser(name, help=help_)
        for i in range(partition_args):
            cmd.add_argument(
                f"partition{i if partition_args > 1 else ''}",
                help="comma-separated part sizes, e.g. 5,2,2,1",
            )
        fmt = cmd.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", default=False)
        fmt.add_argument("--csv", action="store_true", default=False)
        return cmd

    add("spectrum", "full eigenvalue structure", 1)
    add("inertia", "signature (n+, n0, n-)", 1)
    add("energy", "squared distance energy", 1)
    radius = add("radius", "spectral radius with bracket", 1)
    radius.add_argument("--tol", type=float, default=None)
    add("charpoly", "factored characteristic polynomial", 1)

    scan_e = add("scan-energy", "energy scan over all partitions of (n,t)")
    scan_e.add_argument("n", type=int)
    scan_e.add_argument("t", type=int)
    scan_r = add("scan-radius", "radius scan over all partitions of (n,t)")
    scan_r.add_argument("n", type=int)
    scan_r.add_argument("t", type=int)
    scan_h = add("scan-h", "energy scan over the class with h singletons")
    scan_h.add_argument("n", type=int)
    scan_h.add_argument("t", type=int)
    scan_h.add_argument("--h", type=int, required=True, dest="h_count")

    chain = sub.add_parser("chain", help="verify monotonicity along a chain")
    chain.add_argument("upper", help="majorizing partition")
    chain.add_argument("lower", help="majorized partition")
    chain.add_argument("--json", action="store_true", default=False)

    verify = sub.add_parser("verify", help="oracle sweep up to n = nmax")
    verify.add_argument("--nmax", type=int, required=True)
    verify.add_argument("--tol", type=float, default=oracle.DEFAULT_TOL)
    verify.add_argument("--json", action="store_true", default=False)

    return parser


def _spectrum_csv(report) -> str:
    lines = ["value,multiplicity,lo,hi,kind"]
    for v, m in report.exact:
        lines.append(f"{float(v):.12g},{m},,,exact")
    for r in report.isolated:
        lines.append(f"{r.value:.12g},1,{r.lo:.12g},{r.hi:.12g},isolated")
    return "\n".join(lines)


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "spectrum":
            p = partitions.parse_partition(args.partition)
            report = spectrum.full_spectrum(p)
            _emit(_spectrum_csv(report) if args.csv else report.to_json())
        elif args.command == "inertia":
            p = partitions.parse_partition(args.partition)
            _emit(spectrum.inertia(p).to_json())
        elif args.command == "energy":
            p = partitions.parse_partition(args.partition)
            rep = spectrum.energy(p)
            _emit(
                {
                    "integer_part": str(rep.integer_part),
                    "theta": None if rep.theta is None else _fmt(rep.theta),
                    "value": _fmt(rep.value),
                }
            )
        elif args.command == "radius":
            p = partitions.parse_partition(args.partition)
            value, (lo, hi) = spectrum.spectral_radius(p)
            _emit({"value": _fmt(value), "lo": lo, "hi": hi})
        elif args.command == "charpoly":
            p = partitions.parse_partition(args.partition)
            _emit(char_poly_factored(p).to_json())
        elif args.command in ("scan-energy", "scan-radius", "scan-h"):
            if args.command == "scan-energy":
                report = extremal.scan_energy(args.n, args.t)
            elif args.command == "scan-radius":
                report = extremal.scan_radius(args.n, args.t)
            else:
                report = extremal.scan_energy_h(args.n, args.t, args.h_count)
            _emit(report.to_csv() if args.csv else report.to_json())
            if report.violated_claims:
                return EXIT_VERIFY
        elif args.command == "chain":
            upper = partitions.parse_partition(args.upper)
            lower = partitions.parse_partition(args.lower)
            report = extremal.verify_chain_monotone(upper, lower)
            _emit(report.to_json())
            if not report.ok:
                return EXIT_VERIFY
        elif args.command == "verify":
            summary = oracle.sweep(args.nmax, args.tol)
            out = summary.to_json_lines()
            if out:
                out += "\n"
            out += json.dumps(summary.to_json())
            _emit(out)
            sys.stderr.write(f"{summary.failure_count} failures\n")
            if summary.failure_count:
                return EXIT_VERIFY
        else:  # pragma: no cover
            return EXIT_USAGE
    except SqDistError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    return EXIT_OK


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

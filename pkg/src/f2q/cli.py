"""Command-line front end.

Subcommands:

* ``sets``         tabulate the parity/update/flip/remainder sets per index
* ``hamiltonian``  build a qubit Hamiltonian from an integral file
* ``count``        gate counts for product-formula circuits of an operator file
* ``sweep``        precision-versus-gates sweep to CSV, with optional figures

All data output is deterministic: identical inputs give byte-identical
files and stdout.  Progress/provenance notes go to stderr.  Exit codes: 0
success, 2 parse failure, 3 validation failure, 4 precondition failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import pauli
from .encodings import sets_table
from .fermions import normalize_encoding
from .gf2 import N_CAP
from .hamiltonian import (
    IntegralFormatError,
    TableValidationError,
    build_hamiltonian,
    load_integrals,
    partition_commuting,
)
from .circuits import suzuki_schedule, trotter_circuit
from .pauli import dump_sum, parse_sum
from .spectral import crossing_summary, precision_sweep, write_csv

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_PRECONDITION = 4

_ENCODING_CHOICES = ("jw", "parity", "bk")


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        print(f"wrote {out}", file=sys.stderr)


def _cmd_sets(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= N_CAP:
        print(f"error: n must be in [1, {N_CAP}]", file=sys.stderr)
        return EXIT_PRECONDITION
    _write_text(sets_table(args.n) + "\n", args.out)
    return EXIT_OK


def _cmd_hamiltonian(args: argparse.Namespace) -> int:
    try:
        with open(args.integrals) as fh:
            table = load_integrals(fh)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IntegralFormatError as exc:
        print(f"error: {args.integrals}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TableValidationError as exc:
        print(f"error: {args.integrals}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    h = build_hamiltonian(table, args.encoding)
    _write_text(dump_sum(h), args.out)
    return EXIT_OK


def _cmd_count(args: argparse.Namespace) -> int:
    try:
        text = Path(args.hamiltonian).read_text()
        h = parse_sum(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {args.hamiltonian}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        ph = partition_commuting(h)
        schedule = suzuki_schedule(args.order, args.steps, args.ordering)
        circuit = trotter_circuit(ph, schedule, args.time)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    lines = []
    for k, part in enumerate(ph.parts):
        step = trotter_circuit(
            partition_commuting(part), suzuki_schedule(1, 1), 1.0
        ).counts()
        lines.append(
            f"part {k} ({len(part)} terms): sqg {step.sqg} cnot {step.cnot} "
            f"total {step.total}"
        )
    total = circuit.counts()
    lines.append(
        f"circuit (order {args.order}, {args.steps} steps, {args.ordering}): "
        f"sqg {total.sqg} cnot {total.cnot} total {total.total}"
    )
    _write_text("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    try:
        with open(args.integrals) as fh:
            table = load_integrals(fh)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IntegralFormatError as exc:
        print(f"error: {args.integrals}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TableValidationError as exc:
        print(f"error: {args.integrals}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    if args.dense_cap is not None:
        pauli.DENSE_CAP = args.dense_cap

    encodings = [normalize_encoding(e) for e in args.encodings.split(",") if e]
    orders = sorted({int(o) for o in args.orders.split(",") if o})
    orderings = [o for o in args.orderings.split(",") if o]
    try:
        results = []
        for enc in encodings:
            ph = partition_commuting(build_hamiltonian(table, enc))
            results.extend(
                precision_sweep(
                    ph,
                    orders=orders,
                    steps=range(1, args.max_steps + 1),
                    orderings=orderings,
                    time=args.time,
                    encoding=enc,
                )
            )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION

    if args.out is None:
        write_csv(results, sys.stdout)
        summary_stream = sys.stderr
    else:
        with open(args.out, "w") as fh:
            write_csv(results, fh)
        print(f"wrote {args.out} ({len(results)} rows)", file=sys.stderr)
        summary_stream = sys.stdout
    for line in crossing_summary(results):
        print(line, file=summary_stream)

    if args.figures:
        if args.out is None:
            print("error: --figures requires --out", file=sys.stderr)
            return EXIT_PRECONDITION
        from .report import plot_error_vs_gates, plot_gate_savings

        stem = Path(args.out)
        err_path = stem.with_name(stem.stem + "_error_vs_gates.png")
        plot_error_vs_gates(results, str(err_path))
        print(f"wrote {err_path}", file=sys.stderr)
        if len(encodings) >= 2:
            sav_path = stem.with_name(stem.stem + "_gate_savings.png")
            plot_gate_savings(
                results, str(sav_path), encodings[0], encodings[1]
            )
            print(f"wrote {sav_path}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="f2q",
        description="Fermion-to-qubit compilation: encodings, circuits, gate costs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sets", help="tabulate parity/update/flip/remainder sets")
    p.add_argument("--n", type=int, required=True, help="orbital count")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=_cmd_sets)

    p = sub.add_parser("hamiltonian", help="build a qubit Hamiltonian from integrals")
    p.add_argument("--integrals", required=True, help="integral file path")
    p.add_argument("--encoding", choices=_ENCODING_CHOICES, default="bk")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_hamiltonian)

    p = sub.add_parser("count", help="gate counts for a serialized operator")
    p.add_argument("--hamiltonian", required=True, help="operator file path")
    p.add_argument("--order", type=int, default=1, choices=(1, 2, 3, 4))
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--ordering", choices=("naive", "interleaved"), default="naive")
    p.add_argument("--time", type=float, default=1.0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("sweep", help="precision-versus-gates sweep to CSV")
    p.add_argument("--integrals", required=True)
    p.add_argument("--encodings", default="jw,bk", help="comma list: jw,parity,bk")
    p.add_argument("--orders", default="1,2,3,4", help="comma list of orders 1..4")
    p.add_argument(
        "--orderings", default="naive,interleaved", help="comma list of orderings"
    )
    p.add_argument("--max-steps", type=int, default=25)
    p.add_argument("--time", type=float, default=1.0)
    p.add_argument("--out", default=None, help="CSV path (default stdout)")
    p.add_argument(
        "--figures",
        action="store_true",
        help="render PNG figures alongside the CSV (requires --out)",
    )
    p.add_argument("--dense-cap", type=int, default=None)
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    raise SystemExit(main())

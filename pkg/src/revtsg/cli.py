"""Command-line interface.

Exit codes: 0 success, 1 verification or report failure, 2 usage or parse
error.  Bit strings are written with input line 0 as the leftmost character.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize
from .builders import build_carry_skip, build_full_adder, build_ripple_carry
from .gates import GateError
from .metrics import comparison_report, metrics
from .netlist import NetlistError, classify_outputs
from .simulator import SimulationError, simulate, truth_table, verify_adder

ARCHES = ("full-adder", "ripple", "skip")


class UsageError(Exception):
    pass


def _bits(seq) -> str:
    return "".join(map(str, seq))


def _build(arch: str, width: int, block: int | None):
    try:
        if arch == "full-adder":
            return build_full_adder()
        if arch == "ripple":
            return build_ripple_carry(width)
        return build_carry_skip(width, 4 if block is None else block)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _load(args):
    try:
        return serialize.load(args.file, allow_custom_gates=args.allow_custom_gates)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    except (serialize.DocumentError, NetlistError, GateError) as exc:
        raise UsageError(f"{args.file}: {exc}") from exc


def cmd_build(args) -> int:
    netlist = _build(args.arch, args.width, args.block)
    serialize.save(netlist, args.out)
    print(f"wrote {args.out}: {len(netlist.instances)} gates")
    return 0


def cmd_sim(args) -> int:
    netlist = _load(args)
    text = args.inputs
    if len(text) != netlist.num_primary_inputs or set(text) - {"0", "1"}:
        raise UsageError(f"--inputs must be {netlist.num_primary_inputs} characters of 0/1")
    result = simulate(netlist, [int(c) for c in text])
    print(_bits(result.outputs))
    if args.verbose:
        for port in classify_outputs(netlist).garbage_ports():
            print(f"garbage {port.instance}.out{port.port}={result.ports[port]}")
    return 0


def cmd_table(args) -> int:
    netlist = _load(args)
    try:
        rows = truth_table(netlist)
    except SimulationError as exc:
        raise UsageError(str(exc)) from exc
    for inputs, outputs in rows:
        print(f"{_bits(inputs)} {_bits(outputs)}")
    return 0


def cmd_verify(args) -> int:
    netlist = _load(args)
    try:
        if args.random is not None:
            report = verify_adder(netlist, args.width, "random", trials=args.random, seed=args.seed)
        else:
            report = verify_adder(netlist, args.width, "exhaustive")
    except SimulationError as exc:
        raise UsageError(str(exc)) from exc
    print(report.summary())
    if not report.passed:
        inputs, expected, actual = report.failures[0]
        print(f"counterexample: inputs {inputs} expected {expected} got {actual}")
        return 1
    return 0


def cmd_metrics(args) -> int:
    m = metrics(_load(args))
    for name, value in vars(m).items():
        print(f"{name}: {value}")
    return 0


def cmd_report(args) -> int:
    kind = {"full-adder": "full_adder", "ripple": "ripple", "skip": "skip"}[args.arch]
    if args.netlist:
        args.file = args.netlist
        circuit = _load(args)
    else:
        circuit = _build(args.arch, args.width, args.block)
    report = comparison_report(kind, args.width, netlist=circuit)
    print(report.to_csv() if args.csv else report.render_text(), end="" if args.csv else "\n")
    if args.csv:
        for d in report.discrepancies:
            print(f"DISCREPANCY: {d}", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_export_dot(args) -> int:
    dot = serialize.to_dot(_load(args))
    if args.out:
        with open(args.out, "w") as f:
            f.write(dot)
    else:
        sys.stdout.write(dot)
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revtsg", description="TSG reversible adder toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(p):
        p.add_argument("file")
        p.add_argument("--allow-custom-gates", action="store_true",
                       help="accept gates defined by truth table inside the document")
        return p

    p = sub.add_parser("build", help="generate a netlist document")
    p.add_argument("--arch", choices=ARCHES, required=True)
    p.add_argument("--width", type=_positive, default=1)
    p.add_argument("--block", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build)

    p = with_file(sub.add_parser("sim", help="simulate one input assignment"))
    p.add_argument("--inputs", required=True, help="bit string, input line 0 leftmost")
    p.add_argument("--verbose", action="store_true", help="also print garbage outputs")
    p.set_defaults(func=cmd_sim)

    p = with_file(sub.add_parser("table", help="print the full truth table"))
    p.set_defaults(func=cmd_table)

    p = with_file(sub.add_parser("verify", help="check an adder against integer addition"))
    p.add_argument("--width", type=_positive, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", type=_positive, metavar="TRIALS")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)

    p = with_file(sub.add_parser("metrics", help="gate, garbage and constant counts"))
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("report", help="comparison table against published designs")
    p.add_argument("--arch", choices=ARCHES, required=True)
    p.add_argument("--width", type=_positive, default=1)
    p.add_argument("--block", type=int)
    p.add_argument("--netlist", help="measure this document instead of a fresh build")
    p.add_argument("--allow-custom-gates", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_report)

    p = with_file(sub.add_parser("export-dot", help="write a Graphviz description"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: build, run, verify, export-dot."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as C
from . import documents
from . import verification as V
from .engine import InputSequence, run

KINDS = ("mod2", "mod4", "fcsc-counter", "fcsc", "tsc", "unary-fixture")
SUITES = ("fcsc", "tsc", "firing-rules", "clean-state", "time0", "counter", "capture")


class CliError(Exception):
    pass


def build_network(kind: str, T: int | None = None, n: int | None = None):
    """Return (network, layout-or-None) for a CLI kind name."""
    if kind == "mod2":
        return C.build_mod2_base(), None
    if kind == "mod4":
        return C.build_mod4(), None
    if kind == "fcsc-counter":
        if n is None:
            raise CliError("fcsc-counter needs --n")
        return C.build_fcsc_counter(n), None
    if T is None:
        raise CliError(f"{kind} needs --T")
    if kind == "fcsc":
        return C.build_fcsc(T)
    if kind == "tsc":
        return C.build_tsc(T)
    if kind == "unary-fixture":
        return C.build_unary_time0_counter(T)
    raise CliError(f"unknown kind {kind!r}")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    net, layout = documents.loads(text)
    return net, (C.Layout.from_dict(layout, net) if layout else None)


def cmd_build(args) -> int:
    net, layout = build_network(args.kind, args.T, args.n)
    _write(args.out, documents.dumps(net, layout.to_dict() if layout else None))
    info = sys.stdout if args.out not in (None, "-") else sys.stderr
    print(f"neurons: {net.computing_count} excluding input x ({len(net)} in document)", file=info)
    print(f"outputs: {' '.join(net.output_labels)}", file=info)
    return 0


def _read_input(args) -> InputSequence:
    if args.input_file:
        text = Path(args.input_file).read_text()
    elif args.input is not None:
        text = args.input
    else:
        raise CliError("give --input BITS or --input-file PATH")
    return InputSequence.parse("".join(text.split()))


def cmd_run(args) -> int:
    net, layout = _load(args.net)
    bits = _read_input(args)
    horizon = args.horizon if args.horizon is not None else len(bits) + 2
    trace = run(net, bits, horizon)
    lines = documents.trace_lines(net, trace)
    if args.trace_out:
        Path(args.trace_out).write_text(lines)
    else:
        sys.stdout.write(lines)
    if layout is not None:
        final = trace.states[-1]
        try:
            value = C.decode(final, layout)
        except C.NotCleanError as exc:
            print(f"undecodable final state: {exc}")
            return 1
        print(f"L={value}" if layout.kind == "fcsc" else f"count={value}")
    return 0


def cmd_verify(args) -> int:
    suite, T = args.suite, args.T
    if suite in ("fcsc", "tsc"):
        report = V.exhaustive_verify(suite, T if T is not None else 8, settle=args.settle,
                                     bound=args.bound)
    elif suite == "firing-rules":
        report = V.verify_firing_rules(args.max_n, scope=args.scope)
    elif suite == "clean-state":
        report = V.verify_mod4_lemma()
        report.extend(V.verify_tsc_lemma(n=args.max_n))
    elif suite == "time0":
        report = V.verify_time0(T if T is not None else 8)
    elif suite == "counter":
        report = V.verify_binary_counter(args.max_n)
    elif suite == "capture":
        report = V.verify_capture(min(args.max_n, 3))
    else:
        raise CliError(f"unknown suite {suite!r}")
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        sys.stdout.write(report.to_text())
    return report.exit_code


def cmd_export_dot(args) -> int:
    net, _ = _load(args.net)
    name = Path(args.net).stem
    _write(args.out, documents.to_dot(net, name))
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spikecount", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a network document")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--T", type=int, help="input horizon (fcsc, tsc, unary-fixture)")
    p.add_argument("--n", type=int, help="highest digit index (fcsc-counter)")
    p.add_argument("--out", "-o", help="output path (default: stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("run", help="simulate a network document")
    p.add_argument("net")
    p.add_argument("--input", "-i", help="spike train as 0/1 characters, index 0 first")
    p.add_argument("--input-file", help="file holding the 0/1 spike train")
    p.add_argument("--horizon", type=int, help="last time step (default: len(input) + 2)")
    p.add_argument("--trace-out", help="write JSON-lines trace here instead of stdout")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--T", type=int)
    p.add_argument("--settle", type=int, default=2)
    p.add_argument("--bound", type=int, default=V.DEFAULT_BOUND, help="max T for exhaustive suites")
    p.add_argument("--max-n", type=int, default=4, help="largest digit index for rule/lemma suites")
    p.add_argument("--scope", choices=("free", "reachable"), default="free",
                   help="predecessor assignments for firing-rules")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="render a network document as Graphviz DOT")
    p.add_argument("net")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

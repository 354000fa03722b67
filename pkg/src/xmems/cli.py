"""Command-line front end.

Subcommands: ``sweep`` (Monte Carlo entanglement-entropy sweep to CSV),
``boundary`` (the analytic boundary curve), ``mems`` (one extremal state as
JSON), ``scr`` (critical entropy table with exact fractions), ``measure``
(measures of a state JSON file), and ``verify`` (the dense oracle suite as
JSON lines).

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 invalid state,
4 oracle failure.  Data goes to the output path (or stdout); diagnostics and
the sweep summary go to stderr.  All outputs are deterministic functions of
the flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import IO, Iterator

from .core import StateJsonError, XState, validate
from .measures import measure
from .mems import boundary_entropy, critical_entropy_fraction, mems_state
from .oracle import run_oracle_suite
from .sampling import (
    SWEEP_CSV_HEADER,
    SamplerConfig,
    format_sweep_record,
    sweep,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_INVALID_STATE = 3
EXIT_ORACLE_FAILURE = 4

#: Concurrence below this is treated as zero when checking the boundary.
ENTANGLED_EPS = 1e-12

#: Slack allowed on the boundary comparison.
BOUNDARY_SLACK = 1e-9


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; the contract reserves 2 for I/O
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


@contextmanager
def _open_output(path: str | None) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xmems", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("sweep", help="Monte Carlo entanglement-entropy sweep to CSV")
    p.add_argument("--n", type=int, required=True, help="number of qubits (>= 2)")
    p.add_argument("--count", type=int, required=True, help="number of samples (>= 1)")
    p.add_argument("--seed", type=int, required=True, help="unsigned 64-bit master seed")
    p.add_argument("--shards", type=int, default=1, help="generate in this many contiguous shards")
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("boundary", help="analytic boundary curve as (concurrence, entropy) rows")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, required=True, help="number of curve points (>= 2)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=_cmd_boundary)

    p = sub.add_parser("mems", help="one maximum-entropy state at fixed concurrence, as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--coherence",
        "--gamma",
        dest="coherence",
        type=float,
        required=True,
        help="corner coherence magnitude in [0, 1/2] (half the concurrence)",
    )
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=_cmd_mems)

    p = sub.add_parser("scr", help="critical entropy table with exact fractions")
    p.add_argument("--max-n", type=int, required=True, help="largest qubit count (2..30)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=_cmd_scr)

    p = sub.add_parser("measure", help="entropy and concurrence of a state JSON file")
    p.add_argument("input_path", help="path of a state JSON document")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("verify", help="run the dense oracle suite on a seeded corpus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--grid-points", type=int, default=2001)
    p.add_argument("--out", help="output path for the JSON-lines reports (default stdout)")
    p.set_defaults(func=_cmd_verify)

    return parser


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.shards < 1:
        raise _UsageError(f"--shards must be at least 1, got {args.shards}")
    try:
        config = SamplerConfig(n_qubits=args.n, count=args.count, master_seed=args.seed)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    violations = 0
    max_entangled_entropy: float | None = None
    with _open_output(args.out) as out:
        out.write(SWEEP_CSV_HEADER + "\n")
        for shard in range(args.shards):
            for record in sweep(config, shard=shard, n_shards=args.shards):
                out.write(format_sweep_record(record) + "\n")
                if record.concurrence > ENTANGLED_EPS:
                    if max_entangled_entropy is None or record.entropy > max_entangled_entropy:
                        max_entangled_entropy = record.entropy
                    ceiling = boundary_entropy(config.n_qubits, record.concurrence / 2.0)
                    if record.entropy > ceiling + BOUNDARY_SLACK:
                        violations += 1
    summary = {
        "count": config.count,
        "max_entropy_entangled": max_entangled_entropy,
        "boundary_violations": violations,
    }
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    return EXIT_OK


def _cmd_boundary(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise _UsageError(f"--n must be at least 2, got {args.n}")
    if args.grid < 2:
        raise _UsageError(f"--grid must be at least 2, got {args.grid}")
    points = []
    for k in range(args.grid):
        coherence = 0.5 * k / (args.grid - 1)
        points.append((2.0 * coherence, boundary_entropy(args.n, coherence)))
    with _open_output(args.out) as out:
        if args.format == "json":
            payload = [{"concurrence": c, "entropy": s} for c, s in points]
            out.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            out.write("concurrence,entropy\n")
            for c, s in points:
                out.write(f"{_fmt(c)},{_fmt(s)}\n")
    return EXIT_OK


def _cmd_mems(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise _UsageError(f"--n must be at least 2, got {args.n}")
    if not 0.0 <= args.coherence <= 0.5:
        raise _UsageError(f"--coherence must lie in [0, 1/2], got {args.coherence}")
    point = mems_state(args.n, args.coherence)
    payload = {
        "n_qubits": point.n_qubits,
        "coherence": abs(point.coherence),
        "corner_weight": point.corner_weight,
        "interior_weight": point.interior_weight,
        "concurrence": point.concurrence,
        "entropy": point.entropy,
        "state": point.state.to_dict(),
    }
    with _open_output(args.out) as out:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    return EXIT_OK


def _cmd_scr(args: argparse.Namespace) -> int:
    if not 2 <= args.max_n <= 30:
        raise _UsageError(f"--max-n must lie in [2, 30], got {args.max_n}")
    rows = []
    for n in range(2, args.max_n + 1):
        frac = critical_entropy_fraction(n)
        rows.append((n, f"{frac.numerator}/{frac.denominator}", float(frac)))
    with _open_output(args.out) as out:
        if args.format == "json":
            payload = [
                {"n_qubits": n, "fraction": text, "value": value} for n, text, value in rows
            ]
            out.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            out.write("n,critical_entropy_fraction,critical_entropy\n")
            for n, text, value in rows:
                out.write(f"{n},{text},{_fmt(value)}\n")
    return EXIT_OK


def _cmd_measure(args: argparse.Namespace) -> int:
    with open(args.input_path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        state = XState.from_json(text)
    except json.JSONDecodeError as exc:
        print(
            f"error: {args.input_path}: line {exc.lineno} column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    except StateJsonError as exc:
        print(f"error: {args.input_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = validate(state)
    if not report.ok:
        payload = {
            "valid": False,
            "violations": [
                {"condition": v.condition, "index": v.index, "magnitude": v.magnitude}
                for v in report.violations
            ],
        }
        print(json.dumps(payload, sort_keys=True))
        return EXIT_INVALID_STATE
    pair = measure(state)
    payload = {
        "valid": True,
        "entropy": pair.entropy,
        "concurrence": pair.concurrence,
        "argmax_index": pair.argmax_index,
    }
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise _UsageError(f"--count must be at least 1, got {args.count}")
    try:
        reports = run_oracle_suite(
            args.n, args.count, args.seed, grid_points=args.grid_points
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    with _open_output(args.out) as out:
        for report in reports:
            out.write(report.to_json() + "\n")
    if all(report.passed for report in reports):
        return EXIT_OK
    return EXIT_ORACLE_FAILURE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

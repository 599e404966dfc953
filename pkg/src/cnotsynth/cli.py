"""Command-line front end.

Payloads (matrices, circuits, CSV, numbers) go to stdout or ``--out``;
reports and diagnostics go to stderr. Exit codes: 0 success, 1 input or
parse error, 2 singular matrix, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys

from . import bench
from .circuit import CircuitParseError, eval_matrix, parse_circuit, serialize_circuit
from .gf2 import (
    DimensionError,
    MatrixParseError,
    count_linear_reversible,
    format_matrix,
    parse_matrix,
    random_invertible,
)
from .synth import (
    SingularMatrixError,
    SynthOptions,
    cnot_synth_pmh,
    default_section_size,
    gaussian_synth,
    lower_bound_gates,
    upper_bound_row_ops,
    verify,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SINGULAR = 2
EXIT_MISMATCH = 3


class _InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise _InputError(f"cannot write {path}: {exc.strerror}") from exc


def _load_matrix(path: str):
    try:
        return parse_matrix(_read(path))
    except MatrixParseError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _load_circuit(path: str):
    try:
        return parse_circuit(_read(path))
    except CircuitParseError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def cmd_synth(args) -> int:
    A = _load_matrix(args.matrix)
    circuit, report = cnot_synth_pmh(A, SynthOptions(m=args.m))
    _write(args.out, serialize_circuit(circuit))
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    print(report.to_json_line(), file=sys.stderr)
    return EXIT_OK


def cmd_gauss(args) -> int:
    A = _load_matrix(args.matrix)
    circuit, report = gaussian_synth(A)
    _write(args.out, serialize_circuit(circuit))
    print(report.to_json_line(), file=sys.stderr)
    return EXIT_OK


def cmd_eval(args) -> int:
    circuit = _load_circuit(args.circuit)
    _write(args.out, format_matrix(eval_matrix(circuit)))
    return EXIT_OK


def cmd_verify(args) -> int:
    A = _load_matrix(args.matrix)
    circuit = _load_circuit(args.circuit)
    try:
        ok = verify(A, circuit)
    except DimensionError as exc:
        raise _InputError(str(exc)) from exc
    print("match" if ok else "mismatch", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_gen(args) -> int:
    if args.n < 1:
        raise _InputError(f"n must be positive, got {args.n}")
    _write(args.out, format_matrix(random_invertible(args.n, args.seed)))
    return EXIT_OK


def cmd_bench(args) -> int:
    config = bench.BenchConfig(
        sizes=tuple(args.sizes), trials=args.trials, seed=args.seed, m_override=args.m
    )
    try:
        config.validate()
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    records = bench.run_benchmark(config)
    _write(args.out, bench.write_csv(records))
    return EXIT_OK


def cmd_bounds(args) -> int:
    n = args.n
    m = args.m if args.m is not None else default_section_size(max(n, 1))
    try:
        lower = lower_bound_gates(n)
        upper = upper_bound_row_ops(n, m)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    print(f"lower_bound_gates {lower:.6f}")
    print(f"upper_bound_row_ops {upper}")
    print(f"n={n} m={m}", file=sys.stderr)
    return EXIT_OK


def cmd_count(args) -> int:
    if args.n < 1:
        raise _InputError(f"n must be positive, got {args.n}")
    print(count_linear_reversible(args.n))
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cnotsynth", description="Synthesize CNOT circuits for invertible GF(2) matrices."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="sectioned synthesis of a matrix file")
    p.add_argument("matrix")
    p.add_argument("--m", type=int, default=None, help="section width (default round(log2(n)/2))")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("gauss", help="Gaussian-elimination synthesis of a matrix file")
    p.add_argument("matrix")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("eval", help="print the matrix a circuit computes")
    p.add_argument("circuit")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="exit 0 if the circuit computes the matrix, else 3")
    p.add_argument("matrix")
    p.add_argument("circuit")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="random invertible matrix")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="compare gate counts on random matrices, CSV output")
    p.add_argument("--sizes", type=_sizes, default=list(bench.DEFAULT_SIZES))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("bounds", help="lower and upper gate-count bounds")
    p.add_argument("n", type=int)
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("count", help="number of invertible n x n matrices over GF(2)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_count)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for singular matrices here
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SingularMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except bench.BenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())

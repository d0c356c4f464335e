"""Command line frontend.

Subcommands: classify, synth, verify, census, simulate.  Reports go to
stdout and are byte-stable for fixed inputs; timing and diagnostics go to
stderr.  Exit codes: 0 success, 1 usage or parse error, 2 verification
failure, 3 brute-force census beyond the supported line count, 4
non-classical simulation readout.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import census as census_mod
from .alternatives import build_ancilla_circuit, build_v_circuit
from .circuits import Circuit, CircuitParseError, parse_circuit, serialize_circuit
from .perm import Permutation, cycle_string, lines_for_degree, parse_permutation
from .simulate import (
    SimulationError,
    classical_readout,
    equivalent,
    equivalent_with_ancilla,
    simulate_classical,
    simulate_semiclassical,
)
from .synth import (
    IDENTITY,
    NOT_INVOLUTION,
    PALINDROMIC,
    Classification,
    build_palindrome,
    classify,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_CENSUS_RANGE = 3
EXIT_NONCLASSICAL = 4


class CliError(Exception):
    """Usage or input error; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _load_permutation(args) -> Permutation:
    degree = (1 << args.n) if getattr(args, "n", None) else None
    try:
        return parse_permutation(args.perm, degree=degree)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _load_circuit(path: str) -> Circuit:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    try:
        return parse_circuit(text)
    except CircuitParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def classification_text(c: Classification, n: int) -> str:
    if c.kind == NOT_INVOLUTION:
        return "not self-inverse; out of scope for palindromic synthesis"
    if c.kind == IDENTITY:
        return "identity; realized by the empty (even palindromic) circuit"
    if c.kind == PALINDROMIC:
        plural = "" if c.size == 1 else "s"
        return (
            f"involution with {c.size} transposition{plural}; "
            f"realizable as an odd palindromic circuit on {n} lines"
        )
    return (
        f"involution with {c.size} transpositions; transposition count is not "
        f"a power of two, so no odd palindromic circuit on {n} lines exists; "
        "alternative construction required"
    )


def _circuit_stats(c: Circuit) -> str:
    flag = "palindromic" if c.is_palindromic() else "not palindromic"
    return f"{len(c)} gates, {c.parity()}, {flag}"


def _cmd_classify(args) -> int:
    p = _load_permutation(args)
    n = lines_for_degree(p.degree)
    print("command: classify")
    print(f"permutation: {cycle_string(p)}")
    print(f"lines: {n}")
    print(f"classification: {classification_text(classify(p), n)}")
    return EXIT_OK


def _cmd_synth(args) -> int:
    p = _load_permutation(args)
    n = lines_for_degree(p.degree)
    c = classify(p)
    mode = args.mode
    if mode == "auto":
        if c.kind == NOT_INVOLUTION:
            raise CliError("cannot synthesize: the permutation is not self-inverse")
        mode = "palindrome" if c.kind in (IDENTITY, PALINDROMIC) else "ancilla"
    try:
        if mode == "palindrome":
            circuit = build_palindrome(p)
        elif mode == "ancilla":
            circuit = build_ancilla_circuit(p)
        else:
            circuit = build_v_circuit(p)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if circuit.ancilla is not None:
        ok = equivalent_with_ancilla(circuit, p)
    else:
        ok = equivalent(circuit, p)
    print("command: synth")
    print(f"permutation: {cycle_string(p)}")
    print(f"lines: {n}")
    print(f"classification: {classification_text(c, n)}")
    print(f"mode: {mode}")
    print(f"circuit: {_circuit_stats(circuit)}")
    print(f"verified: {'true' if ok else 'false'}")
    if not ok:
        print("synthesized circuit failed verification", file=sys.stderr)
        return EXIT_VERIFY
    text = serialize_circuit(circuit)
    if args.output:
        Path(args.output).write_text(text)
        print(f"written: {args.output}")
    else:
        print(text, end="")
    return EXIT_OK


def _cmd_verify(args) -> int:
    p = _load_permutation(args)
    circuit = _load_circuit(args.circuit)
    if args.ancilla:
        ok = equivalent_with_ancilla(circuit, p)
    else:
        if 1 << circuit.lines != p.degree:
            raise CliError(
                f"circuit on {circuit.lines} lines cannot match a permutation "
                f"of degree {p.degree}"
            )
        ok = equivalent(circuit, p)
    print("command: verify")
    print(f"circuit: {args.circuit}")
    print(f"permutation: {cycle_string(p)}")
    print(f"circuit-stats: {_circuit_stats(circuit)}")
    print(f"equivalent: {'true' if ok else 'false'}")
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_census(args) -> int:
    if args.brute_force:
        try:
            report = census_mod.brute_force_census(args.n)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_CENSUS_RANGE
    else:
        report = census_mod.formula_census(args.n)
    if args.json:
        print(report.as_json(), end="")
    else:
        print("command: census")
        print(report.as_text(), end="")
    return EXIT_OK


def _format_bits(value: int, lines: int) -> str:
    return "".join(str((value >> i) & 1) for i in range(lines))


def _parse_bits(text: str, lines: int) -> int:
    if len(text) != lines or any(ch not in "01" for ch in text):
        raise CliError(f"input must be {lines} bits of 0/1 (x1 first), got {text!r}")
    return sum(int(ch) << i for i, ch in enumerate(text))


def _cmd_simulate(args) -> int:
    circuit = _load_circuit(args.circuit)
    if args.input is not None:
        inputs = [_parse_bits(args.input, circuit.lines)]
    elif args.all:
        inputs = list(range(1 << circuit.lines))
    else:
        raise CliError("need --input BITS or --all")
    semi = args.semiclassical or circuit.has_quantum_gates()
    print("command: simulate")
    print(f"circuit: {args.circuit}")
    print(f"mode: {'semiclassical' if semi else 'classical'}")
    code = EXIT_OK
    for x in inputs:
        bits = _format_bits(x, circuit.lines)
        try:
            if semi:
                cells = simulate_semiclassical(circuit, x)
                out = classical_readout(cells)
            else:
                out = simulate_classical(circuit, x)
            print(f"{bits} -> {_format_bits(out, circuit.lines)}")
        except SimulationError as exc:
            print(f"{bits} -> non-classical")
            print(f"input {bits}: {exc}", file=sys.stderr)
            code = EXIT_NONCLASSICAL
    return code


def _build_parser() -> _Parser:
    parser = _Parser(prog="revpal", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_perm(p):
        p.add_argument("--perm", required=True, help="one-line or cycle notation")
        p.add_argument("--n", type=int, help="line count override (degree 2**n)")

    p = sub.add_parser("classify", help="report palindromic realizability")
    add_perm(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("synth", help="synthesize and verify a circuit")
    add_perm(p)
    p.add_argument(
        "--mode",
        choices=("auto", "palindrome", "ancilla", "vgate"),
        default="auto",
    )
    p.add_argument("-o", "--output", help="write the circuit file here")
    p.set_defaults(fn=_cmd_synth)

    p = sub.add_parser("verify", help="check a circuit against a permutation")
    add_perm(p)
    p.add_argument("--circuit", required=True, help="circuit file")
    p.add_argument(
        "--ancilla",
        action="store_true",
        help="treat the marked line as a zero-initialized ancilla",
    )
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("census", help="count the function classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--brute-force", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("simulate", help="run a circuit on inputs")
    p.add_argument("--circuit", required=True, help="circuit file")
    p.add_argument("--input", help="one input as bits, x1 first")
    p.add_argument("--all", action="store_true", help="run every input")
    p.add_argument("--semiclassical", action="store_true")
    p.set_defaults(fn=_cmd_simulate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    started = time.perf_counter()
    try:
        args = parser.parse_args(argv)
        code = args.fn(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"time: {time.perf_counter() - started:.4f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

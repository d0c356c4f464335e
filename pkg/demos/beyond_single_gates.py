"""Palindromes for the involutions no n-line palindrome can reach.

A size-3 involution has no power-of-two transposition count, so no odd
palindrome on its own lines exists.  Both remedies embed it into the
nearest larger gate: one cancels the surplus through a zero-initialized
ancilla line, the other through half-NOT gates.
"""

from revpal import (
    Permutation,
    build_ancilla_circuit,
    build_v_circuit,
    classify,
    cycle_string,
    decompose,
    equivalent,
    equivalent_with_ancilla,
    serialize_circuit,
    simulate_classical,
    simulate_semiclassical,
)

TARGET = Permutation.from_cycles([(0, 1), (3, 5), (2, 7)], 8)


def show_decomposition():
    print("=" * 64)
    print("EMBEDDING INTO A CONTAINER GATE")
    print("=" * 64)
    print(f"  target function: {cycle_string(TARGET)} ({classify(TARGET).kind})")
    d = decompose(TARGET)
    print(f"  container gate:  {d.gate}")
    print(f"    swaps {cycle_string(d.gate_perm)}")
    print(f"  kept core:       {cycle_string(d.inner)} (same cycle type as target)")
    print(f"  surplus to kill: {cycle_string(d.surplus)}")
    print(f"  relabeling:      {cycle_string(d.conjugator)}")


def ancilla_construction():
    print()
    print("=" * 64)
    print("REMEDY 1: ZERO-INITIALIZED ANCILLA LINE")
    print("=" * 64)
    circuit = build_ancilla_circuit(TARGET)
    print(f"  lines: {circuit.lines} (ancilla x{circuit.ancilla})")
    print(f"  gates: {len(circuit)}, {circuit.parity()}, palindromic:"
          f" {circuit.is_palindromic()}")
    print(f"  verified on all clean inputs: {equivalent_with_ancilla(circuit, TARGET)}")
    print()
    print("  traces (x4 is the ancilla, shown last):")
    for x in (0, 3, 5):
        out = simulate_classical(circuit, x)
        bits_in = "".join(str((x >> i) & 1) for i in range(4))
        bits_out = "".join(str((out >> i) & 1) for i in range(4))
        print(f"    {bits_in} -> {bits_out}   (data {x} -> {out & 7},"
              f" expected {TARGET(x)})")
    print()
    print("  circuit file:")
    for line in serialize_circuit(circuit).splitlines():
        print(f"    {line}")


def half_not_construction():
    print()
    print("=" * 64)
    print("REMEDY 2: HALF-NOT (SQUARE ROOT OF NOT) GATES")
    print("=" * 64)
    circuit = build_v_circuit(TARGET)
    print(f"  lines: {circuit.lines}, gates: {len(circuit)}, palindromic:"
          f" {circuit.is_palindromic()}")
    print(f"  verified semi-classically: {equivalent(circuit, TARGET)}")
    print()
    print("  the cancellation at work, input 0 (fires the surplus pair):")
    cells_before = simulate_semiclassical(circuit, 0)
    print(f"    final cells: {list(cells_before)} (0=|0>, 2=|1>)")
    print("    the container flip and the two half-flips add 1+2+1 = 4 = 0 mod 4")
    print()
    print("  circuit file:")
    for line in serialize_circuit(circuit).splitlines():
        print(f"    {line}")


def full_sweep():
    print()
    print("=" * 64)
    print("ALL 420 SIZE-3 INVOLUTIONS ON 3 LINES")
    print("=" * 64)
    from revpal import iter_involutions

    done = 0
    for p in iter_involutions(8):
        if p.size() == 3:
            assert equivalent_with_ancilla(build_ancilla_circuit(p), p)
            assert equivalent(build_v_circuit(p), p)
            done += 1
    print(f"  both constructions verified: {done}/420")


if __name__ == "__main__":
    show_decomposition()
    ancilla_construction()
    half_not_construction()
    full_sweep()

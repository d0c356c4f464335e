"""Build circuits that read the same forwards and backwards."""

from revpal import (
    Permutation,
    build_palindrome,
    classify,
    cycle_string,
    iter_involutions,
    serialize_circuit,
    synthesize_permutation,
    truth_table,
)


def classify_examples():
    print("=" * 64)
    print("CLASSIFICATION")
    print("=" * 64)
    examples = [
        Permutation.from_cycles([(0, 4), (1, 5), (2, 6), (3, 7)], 8),
        Permutation.transposition(8, 0, 7),
        Permutation.from_cycles([(0, 1), (3, 5), (2, 7)], 8),
        Permutation.from_cycles([(0, 1, 2)], 8),
        Permutation.identity(8),
    ]
    for p in examples:
        c = classify(p)
        print(f"  {cycle_string(p):<24} -> {c.kind}" + (f" (k={c.k})" if c.k else ""))


def synthesize_far_swap():
    print()
    print("=" * 64)
    print("AN ODD PALINDROME FOR t(0 7)")
    print("=" * 64)
    p = Permutation.transposition(8, 0, 7)
    circuit = build_palindrome(p)
    print(f"  gates: {len(circuit)}  parity: {circuit.parity()}")
    print(f"  palindromic: {circuit.is_palindromic()}")
    print(f"  computes t(0 7): {truth_table(circuit) == p}")
    middle = circuit.gates[len(circuit) // 2]
    print(f"  middle gate: {middle}")
    print()
    print("  circuit file:")
    for line in serialize_circuit(circuit).splitlines():
        print(f"    {line}")


def conjugator_flanks():
    print()
    print("=" * 64)
    print("THE FLANKS REALIZE AN ARBITRARY RELABELING")
    print("=" * 64)
    sigma = Permutation([4, 2, 6, 0, 3, 1, 5, 7])
    s = synthesize_permutation(sigma)
    print(f"  sigma = {cycle_string(sigma)} realized by {len(s)} Toffoli gates")
    print(f"  exact: {truth_table(s) == sigma}")
    undo = s.reversed()
    from revpal import Circuit

    roundtrip = Circuit(3, s.gates + undo.gates)
    print(f"  flank followed by its mirror is the identity: "
          f"{truth_table(roundtrip).is_identity()}")


def exhaustive_sweep():
    print()
    print("=" * 64)
    print("EVERY POWER-OF-TWO-SIZE INVOLUTION ON 3 LINES")
    print("=" * 64)
    done = 0
    longest = None
    for p in iter_involutions(8):
        s = p.size()
        if s >= 1 and s & (s - 1) == 0:
            c = build_palindrome(p)
            assert c.is_palindromic() and c.parity() == "odd"
            assert truth_table(c) == p
            done += 1
            if longest is None or len(c) > len(longest[1]):
                longest = (p, c)
    print(f"  synthesized and verified: {done}/343")
    p, c = longest
    print(f"  longest output: {len(c)} gates for {cycle_string(p)}")


if __name__ == "__main__":
    classify_examples()
    synthesize_far_swap()
    conjugator_flanks()
    exhaustive_sweep()

"""From transposition sets to Toffoli gates and back."""

from itertools import combinations

from revpal import (
    MpmctGate,
    enumerate_gates,
    hamming_one_transpositions,
    line_transpositions,
    recognize_mpmct,
    span_mask,
)


def show_pools():
    print("=" * 64)
    print("SINGLE-BIT-FLIP TRANSPOSITIONS ON 3 LINES")
    print("=" * 64)
    for i in (1, 2, 3):
        pairs = " ".join(f"t({a} {b})" for a, b in sorted(line_transpositions(3, i)))
        print(f"  line x{i}: {pairs}")
    print(f"  total: {len(hamming_one_transpositions(3))} = 3 * 2**2")


def show_gates_as_transpositions():
    print()
    print("=" * 64)
    print("GATES ARE SETS OF DISJOINT TRANSPOSITIONS")
    print("=" * 64)
    for gate in (
        MpmctGate(3, 3),                      # plain NOT on x3
        MpmctGate(3, 3, {1: True}),           # controlled by x1
        MpmctGate(3, 3, {1: False, 2: False}),  # fully negative-controlled
    ):
        pairs = " ".join(f"t({a} {b})" for a, b in sorted(gate.transpositions()))
        print(f"  {gate}: {pairs}")


def show_recognition():
    print()
    print("=" * 64)
    print("WHICH SUBSETS FORM A GATE?")
    print("=" * 64)
    for subset in ({(4, 5), (6, 7)}, {(2, 3), (4, 5)}, {(0, 4), (1, 5), (2, 6), (3, 7)}):
        mask = span_mask(subset)
        gate = recognize_mpmct(subset, 3)
        pairs = " ".join(f"t({a} {b})" for a, b in sorted(subset))
        verdict = gate if gate is not None else "no gate (endpoints vary in too many bits)"
        print(f"  {pairs}")
        print(f"    varying bits: {mask:03b} ({mask.bit_count()} positions) -> {verdict}")


def exhaustive_tally():
    print()
    print("=" * 64)
    print("TALLY OVER EVERY POWER-OF-TWO SUBSET")
    print("=" * 64)
    for n in (2, 3, 4):
        accepted = 0
        tried = 0
        for i in range(1, n + 1):
            pool = sorted(line_transpositions(n, i))
            size = 1
            while size <= len(pool):
                for subset in combinations(pool, size):
                    tried += 1
                    if recognize_mpmct(subset, n) is not None:
                        accepted += 1
                size *= 2
        print(
            f"  n={n}: {accepted} of {tried} subsets are gates"
            f" == {len(enumerate_gates(n))} enumerated gates"
        )


if __name__ == "__main__":
    show_pools()
    show_gates_as_transpositions()
    show_recognition()
    exhaustive_tally()

"""Palindromic constructions for involutions no n-line palindrome can reach.

When the transposition count s of an involution is not a power of two,
no single gate shares its cycle type.  Both constructions here embed the
function into the nearest larger gate instead: pick a container gate with
2**k transpositions (2**(k-1) < s < 2**k), keep s of its transpositions as
the conjugated core, and cancel the surplus ones.

* The ancilla construction evaluates "core fires" into an extra
  zero-initialized line, copies it onto the target with one CNOT, then
  uncomputes; every gate sits mirror-symmetrically around the CNOT.
* The square-root-of-NOT construction sandwiches the container gate
  between half-NOT ``v`` gates, one per surplus transposition, on the same
  target.  A surplus assignment fires the gate (+2) and its ``v`` twice
  (+1 each), totalling 0 mod 4, while core assignments fire only the gate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuits import Circuit, Gate
from .gates import MpmctGate, transposition_gate
from .perm import Permutation, find_conjugator, lines_for_degree
from .synth import NEEDS_ALTERNATIVE, classify, synthesize_permutation


@dataclass(frozen=True)
class TargetDecomposition:
    """How an involution embeds into a single container gate.

    ``inner`` has the input's cycle type and its transpositions are a
    subset of the gate's; ``surplus`` is the product of the remaining
    gate transpositions, so ``inner == gate_perm * surplus`` in either
    order.  ``conjugator`` relabels: input = conjugator . inner .
    conjugator^-1.  ``k`` satisfies 2**(k-1) < size(input) < 2**k, and the
    gate swaps exactly 2**k pairs.
    """

    gate: MpmctGate
    gate_perm: Permutation
    inner: Permutation
    surplus: Permutation
    conjugator: Permutation
    k: int


def container_gate(n: int, k: int) -> MpmctGate:
    """The fixed gate with ``2**k`` transpositions used as the container.

    Target xn, lines x1..xk free, lines x(k+1)..x(n-1) positively
    controlled.  Requires k <= n-1.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 1..{n - 1}")
    return MpmctGate(n, n, {line: True for line in range(k + 1, n)})


def decompose(p: Permutation) -> TargetDecomposition:
    """Split ``p`` into container gate, conjugated core, and surplus.

    Only defined for involutions whose transposition count is not a power
    of two.  Deterministic: the core keeps the lexicographically largest
    transpositions of the container gate, dropping the smallest ones.
    """
    c = classify(p)
    if c.kind != NEEDS_ALTERNATIVE:
        raise ValueError(
            f"decompose applies to involutions of non-power-of-two size, got {c.kind!r}"
        )
    n = lines_for_degree(p.degree)
    s = c.size
    k = s.bit_length()  # ceil(log2(s)) for non-powers of two
    gate = container_gate(n, k)
    gate_perm = gate.permutation()
    ts = sorted(gate.transpositions())
    inner = Permutation.from_transpositions(ts[-s:], p.degree)
    surplus = Permutation.from_transpositions(ts[: len(ts) - s], p.degree)
    sigma = find_conjugator(p, inner)
    return TargetDecomposition(gate, gate_perm, inner, surplus, sigma, k)


def _mirrored(flank: Circuit, middle: list[Gate], lines: int, ancilla=None) -> Circuit:
    gates = flank.gates[::-1] + tuple(middle) + flank.gates
    return Circuit(lines, gates, ancilla)


def build_ancilla_circuit(p: Permutation) -> Circuit:
    """A palindromic Toffoli circuit for ``p`` on n+1 lines, one ancilla.

    For every input with the ancilla at 0, the data lines map per ``p`` and
    the ancilla returns to 0.  The middle gate is the single CNOT from the
    ancilla onto the container gate's target; everything else mirrors
    around it, so the length is odd.
    """
    d = decompose(p)
    n = d.gate.lines
    anc = n + 1
    compute = [
        Gate("t", anc, transposition_gate(a, b, n).controls)
        for a, b in sorted(d.surplus.transpositions())
    ]
    compute.append(Gate("t", anc, d.gate.controls))
    cnot = Gate("t", d.gate.target, {anc: True})
    flank = synthesize_permutation(d.conjugator)
    middle = compute + [cnot] + compute[::-1]
    return _mirrored(flank, middle, n + 1, ancilla=anc)


def build_v_circuit(p: Permutation) -> Circuit:
    """A palindromic circuit for ``p`` on n lines using half-NOT gates.

    Each surplus transposition contributes one fully controlled ``v`` on
    each side of the container gate; the second block is emitted in reverse
    order (the gates share a target and commute) so the whole cascade is
    palindromic.  Semi-classically, every classical input maps to the
    classical output ``p(x)``.
    """
    d = decompose(p)
    n = d.gate.lines
    halves = [
        Gate("v", d.gate.target, transposition_gate(a, b, n).controls)
        for a, b in sorted(d.surplus.transpositions())
    ]
    flank = synthesize_permutation(d.conjugator)
    middle = halves + [d.gate.circuit_gate()] + halves[::-1]
    return _mirrored(flank, middle, n)

"""Classify self-inverse functions and build odd palindromic circuits.

An involution whose transposition count is a power of two is conjugate to
the permutation of a single Toffoli-family gate (both have the same cycle
type).  It can therefore be realized as a mirror-symmetric cascade of odd
length: a flank that undoes the conjugator, the gate in the middle, and the
flank replayed in reverse.  Involutions with any other transposition count
admit no such circuit on n lines; :mod:`revpal.alternatives` covers them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuits import Circuit, Gate
from .gates import MpmctGate, recognize_mpmct, transposition_gate
from .perm import Permutation, find_conjugator, lines_for_degree

NOT_INVOLUTION = "not-involution"
IDENTITY = "identity"
PALINDROMIC = "palindromic"
NEEDS_ALTERNATIVE = "needs-alternative"


@dataclass(frozen=True)
class Classification:
    """Where a permutation falls for palindromic realizability.

    kind is one of:

    * ``"not-involution"``: not self-inverse at all;
    * ``"identity"``: realizable only by even palindromes (empty included);
    * ``"palindromic"``: involution with ``2**(k-1)`` transpositions, so an
      odd palindromic circuit on n lines exists; ``k`` is set;
    * ``"needs-alternative"``: involution whose transposition count is not
      a power of two; use an ancilla or square-root-of-NOT construction.
    """

    kind: str
    size: int | None = None
    k: int | None = None


def classify(p: Permutation) -> Classification:
    """Classify ``p``; the degree must be a power of two (2**n inputs)."""
    lines_for_degree(p.degree)
    if not p.is_involution():
        return Classification(NOT_INVOLUTION)
    s = p.size()
    if s == 0:
        return Classification(IDENTITY, size=0)
    if s & (s - 1) == 0:
        return Classification(PALINDROMIC, size=s, k=s.bit_length())
    return Classification(NEEDS_ALTERNATIVE, size=s)


def canonical_gate(n: int, k: int) -> MpmctGate:
    """The fixed representative gate with ``2**(k-1)`` transpositions.

    Target x1, lines x2..xk free, lines x(k+1)..xn positively controlled.
    Used as the deterministic middle gate of synthesized palindromes.
    """
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    return MpmctGate(n, 1, {line: True for line in range(k + 1, n + 1)})


def transposition_chain(a: int, b: int, n: int) -> tuple[Gate, ...]:
    """Gates realizing the swap of words ``a`` and ``b``, everything else fixed.

    Walks a bit-flip path from a to b (differing bits flipped lowest line
    first) and conjugates the final step by the earlier ones; every gate is
    a fully controlled Toffoli, and the chain has 2d-1 gates for Hamming
    distance d.
    """
    if a == b:
        raise ValueError("transposition endpoints must differ")
    path = [a]
    v = a
    diff = a ^ b
    for i in range(n):
        if (diff >> i) & 1:
            v ^= 1 << i
            path.append(v)
    steps = [
        transposition_gate(u, w, n).circuit_gate() for u, w in zip(path, path[1:])
    ]
    return tuple(steps + steps[-2::-1])


def synthesize_permutation(p: Permutation) -> Circuit:
    """An exact Toffoli-family realization of an arbitrary permutation.

    Splits each cycle into adjacent transpositions and realizes each by a
    ``transposition_chain``; the output is deterministic but makes no
    attempt at minimality.
    """
    n = lines_for_degree(p.degree)
    gates: list[Gate] = []
    for cycle in p.cycles():
        # (i1 .. im) = t(i1 i2) . t(i2 i3) . ... applied right to left, so
        # the circuit emits the chains in reverse factor order.
        for j in range(len(cycle) - 1, 0, -1):
            gates.extend(transposition_chain(cycle[j - 1], cycle[j], n))
    return Circuit(n, gates)


def build_palindrome(p: Permutation) -> Circuit:
    """An odd palindromic circuit on n lines computing the involution ``p``.

    Requires ``classify(p).kind == "palindromic"``.  The middle gate is
    ``p`` itself when it is a single gate, otherwise the canonical gate of
    its class; the flanks realize the conjugator between the two.  The
    identity is accepted and returns the empty circuit, which is palindromic
    but even; the odd-length guarantee covers only non-identity inputs.
    """
    c = classify(p)
    n = lines_for_degree(p.degree)
    if c.kind == IDENTITY:
        return Circuit(n)
    if c.kind != PALINDROMIC:
        raise ValueError(
            f"no odd palindromic circuit on {n} lines exists for kind {c.kind!r}"
        )
    middle = recognize_mpmct(p.transpositions(), n)
    if middle is None:
        middle = canonical_gate(n, c.k)
    sigma = find_conjugator(p, middle.permutation())
    flank = synthesize_permutation(sigma)
    # Gates run left to right, so the mirror of the sigma-flank comes first:
    # the cascade computes sigma . middle . sigma^-1 = p.
    gates = flank.gates[::-1] + (middle.circuit_gate(),) + flank.gates
    return Circuit(n, gates)

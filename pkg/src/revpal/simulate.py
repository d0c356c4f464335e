"""Ground-truth circuit execution and equivalence checking.

Two models:

* classical: states are n-bit words; a Toffoli-family gate flips its target
  bit when all controls match.  Square-root-of-NOT gates are rejected here.
* semi-classical: each line carries a value mod 4 encoding 0 -> |0>,
  1 -> V|0>, 2 -> |1>, 3 -> V|1>.  A Toffoli adds 2 to the target cell, a
  ``v`` adds 1 and a ``v+`` adds 3, so two ``v`` in a row make a NOT.  A
  control may only be read while its cell is classical (0 or 2); reading a
  half-rotated cell would entangle lines, which this model cannot express,
  so it raises instead of approximating.
"""

from __future__ import annotations

from .circuits import Circuit, Gate
from .perm import Permutation


class SimulationError(ValueError):
    """A circuit left the domain the requested model can represent."""


_KIND_DELTA = {"t": 2, "v": 1, "v+": 3}


def _controls_satisfied_classical(gate: Gate, x: int) -> bool:
    return all((x >> (line - 1)) & 1 == pol for line, pol in gate.controls)


def simulate_classical(circuit: Circuit, x: int) -> int:
    """Run a Toffoli-only circuit on the input word ``x``, gates left to right."""
    if not 0 <= x < 1 << circuit.lines:
        raise ValueError(f"input {x} out of range for {circuit.lines} lines")
    for gate in circuit.gates:
        if gate.kind != "t":
            raise SimulationError(
                f"classical simulation cannot run a {gate.kind!r} gate"
            )
        if _controls_satisfied_classical(gate, x):
            x ^= 1 << (gate.target - 1)
    return x


def truth_table(circuit: Circuit) -> Permutation:
    """The permutation a Toffoli-only circuit computes over all inputs."""
    return Permutation(
        simulate_classical(circuit, x) for x in range(1 << circuit.lines)
    )


def simulate_semiclassical(circuit: Circuit, x: int) -> tuple[int, ...]:
    """Run any circuit on a classical input; returns the per-line cells mod 4."""
    if not 0 <= x < 1 << circuit.lines:
        raise ValueError(f"input {x} out of range for {circuit.lines} lines")
    cells = [2 * ((x >> i) & 1) for i in range(circuit.lines)]
    for gate in circuit.gates:
        fired = True
        for line, pol in gate.controls:
            cell = cells[line - 1]
            if cell not in (0, 2):
                raise SimulationError(
                    f"control on line x{line} read while non-classical (cell={cell})"
                )
            if (cell == 2) != pol:
                fired = False
        if fired:
            idx = gate.target - 1
            cells[idx] = (cells[idx] + _KIND_DELTA[gate.kind]) % 4
    return tuple(cells)


def is_classical(cells: tuple[int, ...]) -> bool:
    return all(c in (0, 2) for c in cells)


def classical_readout(cells: tuple[int, ...]) -> int:
    """Collapse an all-classical cell vector back to an n-bit word."""
    if not is_classical(cells):
        raise SimulationError(f"non-classical state, cells={list(cells)}")
    return sum((c // 2) << i for i, c in enumerate(cells))


def _run(circuit: Circuit, x: int) -> int:
    if circuit.has_quantum_gates():
        return classical_readout(simulate_semiclassical(circuit, x))
    return simulate_classical(circuit, x)


def equivalent(circuit: Circuit, p: Permutation) -> bool:
    """True iff the circuit maps every input x to p(x), with classical outputs.

    Simulation failures (entangling control reads, non-classical outputs)
    count as non-equivalence rather than propagating.
    """
    if 1 << circuit.lines != p.degree:
        raise ValueError(
            f"circuit on {circuit.lines} lines cannot match degree {p.degree}"
        )
    try:
        return all(_run(circuit, x) == p(x) for x in range(p.degree))
    except SimulationError:
        return False


def equivalent_with_ancilla(
    circuit: Circuit, p: Permutation, ancilla: int | None = None
) -> bool:
    """Equivalence on the data lines for every input with the ancilla at 0.

    The ancilla must also end at 0; inputs with the ancilla at 1 are
    unconstrained.  Defaults to the circuit's marked ancilla line.
    """
    if ancilla is None:
        ancilla = circuit.ancilla
    if ancilla is None:
        raise ValueError("no ancilla line given or marked on the circuit")
    if not 1 <= ancilla <= circuit.lines:
        raise ValueError(f"ancilla line x{ancilla} out of range")
    if 1 << (circuit.lines - 1) != p.degree:
        raise ValueError(
            f"circuit on {circuit.lines} lines with one ancilla cannot match degree {p.degree}"
        )
    anc_bit = 1 << (ancilla - 1)
    low_mask = anc_bit - 1
    try:
        for x in range(p.degree):
            # Insert a 0 bit at the ancilla position to form the full input.
            full = ((x & ~low_mask) << 1) | (x & low_mask)
            out = _run(circuit, full)
            if out & anc_bit:
                return False
            data = ((out >> 1) & ~low_mask) | (out & low_mask)
            if data != p(x):
                return False
    except SimulationError:
        return False
    return True

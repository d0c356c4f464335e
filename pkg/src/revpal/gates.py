"""The bridge between reversible gates and sets of transpositions.

A reversible gate flips at most one line per application, so its permutation
pairs inputs at Hamming distance 1.  This module generates those pairings
(``hamming_one_transpositions`` and its per-line slices), expands gates into
the transpositions they swap, and recognizes which transposition sets come
from a single Toffoli-family gate.

Recognition works because of a subcube argument: ``2**(k-1)`` disjoint
transpositions that all flip the same line and whose endpoints vary in
exactly k bit positions have ``2**k`` distinct endpoints inside a
k-dimensional subcube of the same size, so they fill it; the pairing across
the flipped bit is then forced, and the constant bits outside the subcube
are exactly the gate's controls.  Varying in fewer or more than k positions,
or being spread over several target lines, rules a set out.
"""

from __future__ import annotations

from collections.abc import Iterable

from .circuits import Gate, normalize_controls
from .perm import Permutation, Transposition


class MpmctGate:
    """A mixed-polarity multiple-control Toffoli gate on ``lines`` lines.

    Flips ``target`` iff every control line matches its polarity (True for
    positive: the line must carry 1; False for negative).  No controls means
    a plain NOT.  Lines that are neither target nor control are free.
    """

    __slots__ = ("_lines", "_target", "_controls")

    def __init__(self, lines: int, target: int, controls=()):
        if lines < 1:
            raise ValueError("a gate needs at least one line")
        if not 1 <= target <= lines:
            raise ValueError(f"target x{target} out of range 1..{lines}")
        ctrl = normalize_controls(controls)
        for line, _ in ctrl:
            if not 1 <= line <= lines:
                raise ValueError(f"control x{line} out of range 1..{lines}")
            if line == target:
                raise ValueError(f"target x{target} listed among controls")
        self._lines = lines
        self._target = target
        self._controls = ctrl

    @property
    def lines(self) -> int:
        return self._lines

    @property
    def target(self) -> int:
        return self._target

    @property
    def controls(self) -> tuple[tuple[int, bool], ...]:
        return self._controls

    @property
    def num_controls(self) -> int:
        return len(self._controls)

    def free_lines(self) -> tuple[int, ...]:
        taken = {self._target, *(line for line, _ in self._controls)}
        return tuple(i for i in range(1, self._lines + 1) if i not in taken)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MpmctGate):
            return NotImplemented
        return (self._lines, self._target, self._controls) == (
            other._lines,
            other._target,
            other._controls,
        )

    def __hash__(self) -> int:
        return hash((self._lines, self._target, self._controls))

    def __repr__(self) -> str:
        ctrl = ", ".join(
            ("x" if pol else "-x") + str(line) for line, pol in self._controls
        )
        return f"MpmctGate(lines={self._lines}, target=x{self._target}, controls=[{ctrl}])"

    def satisfied(self, x: int) -> bool:
        return all((x >> (line - 1)) & 1 == pol for line, pol in self._controls)

    def apply(self, x: int) -> int:
        return x ^ (1 << (self._target - 1)) if self.satisfied(x) else x

    def transpositions(self) -> frozenset[Transposition]:
        """The input pairs the gate swaps: one per satisfying free-line assignment."""
        bit = 1 << (self._target - 1)
        return frozenset(
            (x, x | bit)
            for x in range(1 << self._lines)
            if not x & bit and self.satisfied(x)
        )

    def permutation(self) -> Permutation:
        return Permutation(self.apply(x) for x in range(1 << self._lines))

    def circuit_gate(self) -> Gate:
        return Gate("t", self._target, self._controls)


class SingleTargetGate:
    """Gate flipping ``target`` iff a Boolean function of the other lines holds.

    The control function is a truth-table bitmask over the ``2**(n-1)``
    assignments of the non-target lines, packed in ascending line order
    (lowest non-target line = least significant index bit).
    """

    __slots__ = ("_lines", "_target", "_table")

    def __init__(self, lines: int, target: int, table: int):
        if lines < 1:
            raise ValueError("a gate needs at least one line")
        if not 1 <= target <= lines:
            raise ValueError(f"target x{target} out of range 1..{lines}")
        if not 0 <= table < 1 << (1 << (lines - 1)):
            raise ValueError(
                f"control table must fit in {1 << (lines - 1)} bits, got {table}"
            )
        self._lines = lines
        self._target = target
        self._table = table

    @property
    def lines(self) -> int:
        return self._lines

    @property
    def target(self) -> int:
        return self._target

    @property
    def table(self) -> int:
        return self._table

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SingleTargetGate):
            return NotImplemented
        return (self._lines, self._target, self._table) == (
            other._lines,
            other._target,
            other._table,
        )

    def __hash__(self) -> int:
        return hash((self._lines, self._target, self._table))

    def __repr__(self) -> str:
        return f"SingleTargetGate(lines={self._lines}, target=x{self._target}, table={self._table:#x})"

    def control_index(self, x: int) -> int:
        """Pack the non-target bits of ``x`` into a control-table index."""
        idx = 0
        shift = 0
        for line in range(1, self._lines + 1):
            if line == self._target:
                continue
            idx |= ((x >> (line - 1)) & 1) << shift
            shift += 1
        return idx

    def satisfied(self, x: int) -> bool:
        return bool((self._table >> self.control_index(x)) & 1)

    def apply(self, x: int) -> int:
        return x ^ (1 << (self._target - 1)) if self.satisfied(x) else x

    def transpositions(self) -> frozenset[Transposition]:
        bit = 1 << (self._target - 1)
        return frozenset(
            (x, x | bit)
            for x in range(1 << self._lines)
            if not x & bit and self.satisfied(x)
        )

    def permutation(self) -> Permutation:
        return Permutation(self.apply(x) for x in range(1 << self._lines))


def line_transpositions(n: int, i: int) -> frozenset[Transposition]:
    """All transpositions whose endpoints differ exactly in bit ``i-1``.

    These are the pairs a single gate with target line ``i`` can swap;
    there are ``2**(n-1)`` of them.
    """
    if not 1 <= i <= n:
        raise ValueError(f"line x{i} out of range 1..{n}")
    bit = 1 << (i - 1)
    return frozenset((a, a | bit) for a in range(1 << n) if not a & bit)


def hamming_one_transpositions(n: int) -> frozenset[Transposition]:
    """All transpositions of {0..2**n-1} with endpoints at Hamming distance 1.

    The disjoint union of ``line_transpositions(n, i)`` over the n lines,
    ``n * 2**(n-1)`` in total; each element corresponds to one fully
    controlled Toffoli gate.
    """
    out: set[Transposition] = set()
    for i in range(1, n + 1):
        out |= line_transpositions(n, i)
    return frozenset(out)


def transposition_gate(a: int, b: int, n: int) -> MpmctGate:
    """The fully controlled Toffoli swapping exactly ``a`` and ``b``.

    Requires Hamming distance 1: the differing bit names the target and the
    shared bits become controls with their constant values as polarities.
    """
    diff = a ^ b
    if diff == 0 or diff & (diff - 1):
        raise ValueError(f"{a} and {b} are not at Hamming distance 1")
    if not 0 <= a < 1 << n or not 0 <= b < 1 << n:
        raise ValueError(f"endpoints {a}, {b} out of range for {n} lines")
    target = diff.bit_length()
    controls = {
        line: bool((a >> (line - 1)) & 1)
        for line in range(1, n + 1)
        if line != target
    }
    return MpmctGate(n, target, controls)


def span_mask(transpositions: Iterable[Transposition]) -> int:
    """Bitmask of the positions in which the endpoints of a set vary.

    Computed as the OR of ``v XOR v0`` over all endpoints ``v`` for a fixed
    endpoint ``v0``; the result does not depend on the choice of ``v0``
    because a bit is set exactly when the endpoints disagree there.
    """
    endpoints = [v for ab in transpositions for v in ab]
    if not endpoints:
        raise ValueError("span of an empty transposition set is undefined")
    v0 = endpoints[0]
    mask = 0
    for v in endpoints:
        mask |= v ^ v0
    return mask


def recognize_mpmct(
    transpositions: Iterable[Transposition], n: int
) -> MpmctGate | None:
    """The unique Toffoli-family gate swapping exactly these pairs, if any.

    Returns None when the set is not realizable by one gate: endpoints on
    several target lines, a non-power-of-two count, or ``2**(k-1)`` pairs
    varying in other than k positions.  The input must be pairwise disjoint.
    """
    ts = set(transpositions)
    if not ts:
        return None
    endpoints = [v for ab in ts for v in ab]
    if len(set(endpoints)) != len(endpoints):
        raise ValueError("transpositions must be pairwise disjoint")
    if any(not 0 <= v < 1 << n for v in endpoints):
        raise ValueError(f"endpoint out of range for {n} lines")
    diffs = {a ^ b for a, b in ts}
    if len(diffs) != 1:
        return None
    diff = diffs.pop()
    if diff & (diff - 1):
        return None
    target = diff.bit_length()
    count = len(ts)
    if count & (count - 1):
        return None
    k = count.bit_length()
    span = span_mask(ts)
    if span.bit_count() != k:
        return None
    v0 = endpoints[0]
    controls = {
        line: bool((v0 >> (line - 1)) & 1)
        for line in range(1, n + 1)
        if not (span >> (line - 1)) & 1
    }
    return MpmctGate(n, target, controls)


def enumerate_gates(
    n: int, target: int | None = None, k: int | None = None
) -> list[MpmctGate]:
    """All Toffoli-family gates on n lines, in a fixed deterministic order.

    ``target`` restricts to one target line (``3**(n-1)`` gates each).
    ``k`` restricts to gates with ``n-k`` controls, i.e. ``k-1`` free lines
    and ``2**(k-1)`` transpositions; there are ``C(n-1, k-1) * 2**(n-k)``
    per target line.  Overall there are ``n * 3**(n-1)`` gates.
    """
    if target is not None and not 1 <= target <= n:
        raise ValueError(f"target x{target} out of range 1..{n}")
    if k is not None and not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    targets = [target] if target is not None else list(range(1, n + 1))
    out: list[MpmctGate] = []
    for t in targets:
        others = [line for line in range(1, n + 1) if line != t]
        for assignment in _control_assignments(others):
            gate = MpmctGate(n, t, assignment)
            if k is None or gate.num_controls == n - k:
                out.append(gate)
    return out


def enumerate_single_target_gates(n: int) -> list[SingleTargetGate]:
    """All ``n * 2**(2**(n-1))`` single-target gates on n lines."""
    out = []
    for target in range(1, n + 1):
        for table in range(1 << (1 << (n - 1))):
            out.append(SingleTargetGate(n, target, table))
    return out


def _control_assignments(lines: list[int]):
    if not lines:
        yield {}
        return
    first, rest = lines[0], lines[1:]
    for tail in _control_assignments(rest):
        yield tail
        yield {first: True, **tail}
        yield {first: False, **tail}

"""Exact arithmetic on permutations of {0, ..., N-1}.

Permutations are the semantic carrier for reversible functions: a circuit
on n lines computes a bijection on its 2**n input assignments.  Everything
here is exact and immutable: composition, inversion, cycle analysis,
involution structure, and conjugator construction.

Two conventions are fixed for the whole package:

* indices are 0-based, so the identity on N points maps x to x;
* ``compose(p, q)`` applies ``q`` first, i.e. ``compose(p, q)(x) == p(q(x))``.
"""

from __future__ import annotations

import re
from collections.abc import Iterable

MAX_DEGREE = 1 << 16

#: A 2-cycle, stored canonically as ``(a, b)`` with ``a < b``.
Transposition = tuple[int, int]


class Permutation:
    """A bijection on {0, ..., N-1} in one-line form: ``image[x]`` is p(x)."""

    __slots__ = ("_image",)

    def __init__(self, image: Iterable[int]):
        img = tuple(image)
        if not 1 <= len(img) <= MAX_DEGREE:
            raise ValueError(
                f"degree must be between 1 and {MAX_DEGREE}, got {len(img)}"
            )
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection on 0..{len(img) - 1}: {img!r}")
        self._image = img

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def transposition(cls, degree: int, a: int, b: int) -> "Permutation":
        """The permutation swapping ``a`` and ``b`` and fixing everything else."""
        if a == b:
            raise ValueError("transposition endpoints must differ")
        image = list(range(degree))
        image[a], image[b] = b, a
        return cls(image)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], degree: int) -> "Permutation":
        """Build a permutation from disjoint cycles; omitted elements are fixpoints."""
        image = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            cyc = list(cycle)
            for x in cyc:
                if not 0 <= x < degree:
                    raise ValueError(f"cycle element {x} out of range 0..{degree - 1}")
                if x in seen:
                    raise ValueError(f"element {x} appears in more than one cycle")
                seen.add(x)
            for i, x in enumerate(cyc):
                image[x] = cyc[(i + 1) % len(cyc)]
        return cls(image)

    @classmethod
    def from_transpositions(
        cls, transpositions: Iterable[tuple[int, int]], degree: int
    ) -> "Permutation":
        """Product of pairwise-disjoint transpositions (an involution)."""
        return cls.from_cycles(transpositions, degree)

    @property
    def image(self) -> tuple[int, ...]:
        return self._image

    @property
    def degree(self) -> int:
        return len(self._image)

    def __call__(self, x: int) -> int:
        return self._image[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._image == other._image

    def __hash__(self) -> int:
        return hash(self._image)

    def __repr__(self) -> str:
        return f"Permutation({list(self._image)})"

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``(p * q)(x) == p(q(x))``; q acts first."""
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self._image):
            inv[y] = x
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self._image))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycle decomposition in canonical form, fixpoints included.

        Each cycle starts at its minimum element; cycles are sorted by
        decreasing length, ties broken by increasing first element.
        """
        seen = [False] * self.degree
        out: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self._image[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self._image[x]
            out.append(tuple(cycle))
        out.sort(key=lambda c: (-len(c), c[0]))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths in non-increasing order: an integer partition of the degree."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def num_cycles(self) -> int:
        """Number of cycles, fixpoints included."""
        return len(self.cycles())

    def is_involution(self) -> bool:
        return all(self._image[y] == x for x, y in enumerate(self._image))

    def transpositions(self) -> frozenset[Transposition]:
        """The 2-cycles of an involution, as canonical ``(a, b)`` pairs with a < b."""
        if not self.is_involution():
            raise ValueError("transpositions() requires an involution")
        return frozenset(
            (x, y) for x, y in enumerate(self._image) if x < y
        )

    def size(self) -> int:
        """Number of transpositions of an involution."""
        return len(self.transpositions())


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation applying ``q`` first, then ``p``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    qi = q.image
    pi = p.image
    return Permutation(pi[qi[x]] for x in range(p.degree))


def conjugate(sigma: Permutation, p: Permutation) -> Permutation:
    """Relabel ``p`` by ``sigma``: returns sigma * p * sigma^-1.

    The result has the same cycle type as ``p``; each cycle (i1, i2, ...)
    becomes (sigma(i1), sigma(i2), ...).
    """
    if sigma.degree != p.degree:
        raise ValueError(f"degree mismatch: {sigma.degree} vs {p.degree}")
    si = sigma.image
    image = [0] * p.degree
    for x, y in enumerate(p.image):
        image[si[x]] = si[y]
    return Permutation(image)


def find_conjugator(p: Permutation, q: Permutation) -> Permutation:
    """A permutation ``sigma`` with ``conjugate(sigma, q) == p``.

    Exists iff the cycle types agree.  Deterministic: both operands are put
    in canonical cycle form and matched cycle by cycle, element by element,
    so ``find_conjugator(p, p)`` is the identity.
    """
    if p.cycle_type() != q.cycle_type():
        raise ValueError(
            f"cycle types differ: {p.cycle_type()} vs {q.cycle_type()}"
        )
    image = [0] * p.degree
    for pc, qc in zip(p.cycles(), q.cycles()):
        for px, qx in zip(pc, qc):
            image[qx] = px
    return Permutation(image)


def lines_for_degree(degree: int) -> int:
    """The line count n with 2**n == degree; rejects non-powers of two."""
    n = degree.bit_length() - 1
    if degree < 2 or degree != 1 << n:
        raise ValueError(f"degree {degree} is not a power of two >= 2")
    return n


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse a permutation from one-line or cycle notation.

    One-line form lists every image: ``"4 2 6 0 3 1 5 7"``.  Cycle form
    wraps each cycle in parentheses: ``"(0 4 3)(1 2 6 5)"``; elements not
    mentioned are fixpoints.  Separators are whitespace or commas.  For
    cycle form the degree defaults to the smallest power of two that
    contains all elements (at least 2); pass ``degree`` to override.
    """
    text = text.strip()
    if "(" in text or ")" in text:
        leftover = _CYCLE_RE.sub("", text)
        if leftover.strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            items = [tok for tok in re.split(r"[\s,]+", body.strip()) if tok]
            if items:
                cycles.append([_parse_int(tok, text) for tok in items])
        if degree is None:
            elements = [x for c in cycles for x in c]
            if not elements:
                raise ValueError("cannot infer degree from an empty cycle form")
            degree = max(2, _next_power_of_two(max(elements) + 1))
        return Permutation.from_cycles(cycles, degree)
    items = [tok for tok in re.split(r"[\s,]+", text) if tok]
    if not items:
        raise ValueError("empty permutation")
    image = [_parse_int(tok, text) for tok in items]
    if degree is not None and degree != len(image):
        raise ValueError(
            f"one-line form has {len(image)} entries but degree {degree} was requested"
        )
    return Permutation(image)


def one_line(p: Permutation) -> str:
    """One-line text form: the images separated by spaces."""
    return " ".join(str(x) for x in p.image)


def cycle_string(p: Permutation) -> str:
    """Cycle text form with fixpoints omitted; ``"()"`` for the identity."""
    parts = [
        "(" + " ".join(str(x) for x in c) + ")" for c in p.cycles() if len(c) > 1
    ]
    return "".join(parts) if parts else "()"


def _parse_int(token: str, context: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"bad integer {token!r} in permutation {context!r}") from None


def _next_power_of_two(m: int) -> int:
    return 1 if m <= 1 else 1 << (m - 1).bit_length()

"""Reversible gates as explicit permutations of bit patterns.

Bit numbering used throughout the package: line 0 is the first (topmost)
input of a gate, called ``A`` for the TSG gate, and it is stored as the
*least* significant bit of :attr:`BitPattern.value`.  Printed truth tables
follow the usual convention of showing line 0 as the leftmost column, so
``(A, B, C, D) = (0, 0, 1, 0)`` is the pattern with ``value == 0b0100``.
Use :func:`printed_rows` to list a gate in that printed order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

MAX_ARITY = 16


class GateError(ValueError):
    """Raised for malformed gate definitions or mismatched patterns."""


@dataclass(frozen=True)
class BitPattern:
    """A fixed-width bit vector; bit ``i`` of ``value`` is line ``i``."""

    width: int
    value: int

    def __post_init__(self):
        if not 1 <= self.width <= MAX_ARITY:
            raise GateError(f"width must be in 1..{MAX_ARITY}, got {self.width}")
        if not 0 <= self.value < (1 << self.width):
            raise GateError(f"value {self.value} does not fit in {self.width} bits")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitPattern":
        value = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise GateError(f"bit {i} is {b!r}, expected 0 or 1")
            value |= b << i
        return cls(len(bits), value)

    @classmethod
    def from_string(cls, text: str) -> "BitPattern":
        """Parse ``"0010"`` with the leftmost character as line 0."""
        return cls.from_bits([int(c) for c in text])

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.width))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class GateSpec:
    """A k-line gate given by its lookup table.

    ``table[x]`` is the output pattern (as an integer) for input pattern ``x``.
    Construction does not demand reversibility; use :func:`is_bijective`.
    """

    name: str
    arity: int
    table: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.arity <= MAX_ARITY:
            raise GateError(f"arity must be in 1..{MAX_ARITY}, got {self.arity}")
        size = 1 << self.arity
        if len(self.table) != size:
            raise GateError(f"{self.name}: table has {len(self.table)} rows, expected {size}")
        for x, y in enumerate(self.table):
            if not 0 <= y < size:
                raise GateError(f"{self.name}: row {x} maps to {y}, outside 0..{size - 1}")

    @cached_property
    def inverse_table(self) -> tuple[int, ...]:
        if not is_bijective(self):
            raise GateError(f"{self.name} is not bijective and has no inverse")
        inv = [0] * len(self.table)
        for x, y in enumerate(self.table):
            inv[y] = x
        return tuple(inv)

    def inverse(self) -> "GateSpec":
        return GateSpec(f"{self.name}^-1", self.arity, self.inverse_table)

    def __call__(self, *bits: int) -> tuple[int, ...]:
        """Evaluate on individual line values, e.g. ``TSG(1, 0, 1, 1)``."""
        return eval_gate(self, BitPattern.from_bits(bits)).bits


def gate_from_table(name: str, rows: Sequence[BitPattern | int]) -> GateSpec:
    """Build a gate from its output rows indexed by input value.

    Rows may be :class:`BitPattern` objects or plain integers.  Plain integers
    take the width implied by the number of rows.
    """
    n = len(rows)
    if n < 2 or n & (n - 1):
        raise GateError(f"{name}: row count {n} is not a power of two >= 2")
    arity = n.bit_length() - 1
    values = []
    for i, row in enumerate(rows):
        if isinstance(row, BitPattern):
            if row.width != arity:
                raise GateError(f"{name}: row {i} has width {row.width}, expected {arity}")
            values.append(row.value)
        else:
            values.append(int(row))
    return GateSpec(name, arity, tuple(values))


def eval_gate(gate: GateSpec, pattern: BitPattern) -> BitPattern:
    if pattern.width != gate.arity:
        raise GateError(
            f"{gate.name} takes {gate.arity} lines, got a {pattern.width}-bit pattern"
        )
    return BitPattern(gate.arity, gate.table[pattern.value])


def is_bijective(gate: GateSpec) -> bool:
    return len(set(gate.table)) == len(gate.table)


def printed_rows(gate: GateSpec) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield ``(inputs, outputs)`` bit tuples with line 0 leftmost, in the
    order a printed truth table lists them (line 0 is the slowest column)."""
    for bits in itertools.product((0, 1), repeat=gate.arity):
        yield bits, gate(*bits)


# Table I rows as printed: A B C D -> P Q R S.
_TSG_PRINTED = """
0000 0000
0001 0010
0010 0111
0011 0100
0100 0110
0101 0101
0110 0001
0111 0011
1000 1110
1001 1101
1010 1111
1011 1100
1100 1001
1101 1011
1110 1000
1111 1010
"""


def _from_printed(name: str, text: str) -> GateSpec:
    rows = [line.split() for line in text.strip().splitlines()]
    arity = len(rows[0][0])
    table = [0] * (1 << arity)
    for src, dst in rows:
        table[BitPattern.from_string(src).value] = BitPattern.from_string(dst).value
    return GateSpec(name, arity, tuple(table))


def tsg_table() -> GateSpec:
    """The 4x4 TSG gate; output lines are ordered (P, Q, R, S)."""
    return TSG


def fredkin_table() -> GateSpec:
    """Controlled swap: line 0 passes through and, when 1, swaps lines 1 and 2.

    With line 2 tied to 0 the third output is ``a AND b``; with control ``p``
    the second output is ``b`` when ``p == 0`` and ``c`` when ``p == 1``.
    """
    return FREDKIN


def _fredkin() -> GateSpec:
    table = []
    for x in range(8):
        a, b, c = x & 1, (x >> 1) & 1, (x >> 2) & 1
        if a:
            b, c = c, b
        table.append(a | (b << 1) | (c << 2))
    return GateSpec("FREDKIN", 3, tuple(table))


TSG = _from_printed("TSG", _TSG_PRINTED)
FREDKIN = _fredkin()

STANDARD_GATES = {"TSG": TSG, "FREDKIN": FREDKIN}

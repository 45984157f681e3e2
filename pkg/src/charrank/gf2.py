"""Dense GF(2) vectors and row-reduced spans backed by int bitsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class CoordVector:
    """A fixed-length coordinate vector over GF(2).

    Bit i of ``bits`` is the coordinate in slot i. Python ints already pack
    bits into machine words, so this is the dense representation.
    """

    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits out of range for length {self.length}")

    @classmethod
    def zero(cls, length: int) -> "CoordVector":
        return cls(length, 0)

    @classmethod
    def unit(cls, length: int, index: int) -> "CoordVector":
        if not 0 <= index < length:
            raise ValueError(f"index {index} out of range for length {length}")
        return cls(length, 1 << index)

    @classmethod
    def from_bits(cls, coords: Iterable[int]) -> "CoordVector":
        bits = 0
        n = 0
        for c in coords:
            if c & 1:
                bits |= 1 << n
            n += 1
        return cls(n, bits)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def bit(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise ValueError(f"index {index} out of range for length {self.length}")
        return (self.bits >> index) & 1

    def support(self) -> Iterator[int]:
        """Indices of the nonzero coordinates, ascending."""
        b = self.bits
        while b:
            low = b & -b
            yield low.bit_length() - 1
            b ^= low

    def to_bits(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def __xor__(self, other: "CoordVector") -> "CoordVector":
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")
        return CoordVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__


@dataclass(frozen=True)
class Span:
    """A GF(2) subspace in canonical reduced row echelon form.

    Rows are nonzero with strictly increasing pivots (lowest set bit), and
    every pivot is eliminated from all other rows, so equal subspaces have
    identical rows. Immutable; ``add_vector`` returns a new span.
    """

    ambient_length: int
    rows: tuple[CoordVector, ...] = ()

    @classmethod
    def empty(cls, ambient_length: int) -> "Span":
        return cls(ambient_length)

    @classmethod
    def from_vectors(cls, ambient_length: int, vectors: Iterable[CoordVector]) -> "Span":
        span = cls(ambient_length)
        for v in vectors:
            span = span.add_vector(v)
        return span

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _check_length(self, v: CoordVector) -> None:
        if v.length != self.ambient_length:
            raise ValueError(
                f"vector length {v.length} does not match ambient length {self.ambient_length}"
            )

    def _reduce_bits(self, bits: int) -> int:
        for row in self.rows:
            pivot = row.bits & -row.bits
            if bits & pivot:
                bits ^= row.bits
        return bits

    def add_vector(self, v: CoordVector) -> "Span":
        self._check_length(v)
        residue = self._reduce_bits(v.bits)
        if residue == 0:
            return self
        pivot = residue & -residue
        new_rows = [r.bits ^ residue if r.bits & pivot else r.bits for r in self.rows]
        new_rows.append(residue)
        new_rows.sort(key=lambda b: b & -b)
        return Span(
            self.ambient_length,
            tuple(CoordVector(self.ambient_length, b) for b in new_rows),
        )

    def contains(self, v: CoordVector) -> bool:
        self._check_length(v)
        return self._reduce_bits(v.bits) == 0

    def is_full(self) -> bool:
        return self.rank == self.ambient_length

"""Bit-set representation for subsets of a finite algebra's carrier."""
from __future__ import annotations

from typing import Iterable, Iterator


class ElementSet:
    """An immutable subset of {0, ..., size-1}, stored as an int bit mask.

    Bit i is set iff element i belongs to the set.  All filter machinery
    (order filters, implication filters, kernels, subordinates) is built
    on this type.
    """

    __slots__ = ("size", "bits")

    def __init__(self, size: int, bits: int = 0):
        if bits < 0 or bits >> size:
            raise ValueError(f"bits {bits:#x} out of range for size {size}")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("ElementSet is immutable")

    @classmethod
    def of(cls, size: int, elements: Iterable[int] = ()) -> "ElementSet":
        bits = 0
        for e in elements:
            if not 0 <= e < size:
                raise ValueError(f"element {e} out of range for size {size}")
            bits |= 1 << e
        return cls(size, bits)

    @classmethod
    def full(cls, size: int) -> "ElementSet":
        return cls(size, (1 << size) - 1)

    def __contains__(self, element: int) -> bool:
        return 0 <= element < self.size and (self.bits >> element) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        i = 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def __len__(self) -> int:
        return self.bits.bit_count() if hasattr(self.bits, "bit_count") else bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ElementSet)
            and self.size == other.size
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.size, self.bits))

    def __le__(self, other: "ElementSet") -> bool:
        """Subset test."""
        return self.bits | other.bits == other.bits

    def __lt__(self, other: "ElementSet") -> bool:
        return self.bits != other.bits and self <= other

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.size, self.bits & other.bits)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.size, self.bits | other.bits)

    def complement(self) -> "ElementSet":
        return ElementSet(self.size, ~self.bits & ((1 << self.size) - 1))

    def __repr__(self) -> str:
        return "{" + ",".join(str(i) for i in self) + "}"

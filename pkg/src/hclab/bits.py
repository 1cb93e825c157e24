"""Python-int bitsets over element indices."""

from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def to_list(bits: int) -> list[int]:
    return list(iter_bits(bits))


def from_indices(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << i
    return bits


def popcount(bits: int) -> int:
    return bits.bit_count()

"""Subsets of {0..n-1} as int bitmasks; the kernels live on these."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def as_set(mask: int) -> frozenset[int]:
    return frozenset(elements(mask))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def iter_masks(n: int) -> Iterator[int]:
    """All 2^n subsets of an n-element carrier."""
    return iter(range(1 << n))


def size(mask: int) -> int:
    return mask.bit_count()

"""Bitmask helpers for vertex sets.

Vertex sets are plain ints: bit ``i`` set means vertex ``i`` is a member.
Symmetric difference is ``^``, intersection ``&``, union ``|``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with one bit per vertex id."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def parity(mask: int) -> int:
    return mask.bit_count() & 1


def subsets(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, in canonical order.

    Canonical order: subsets are ranked by the integer whose bit ``j`` is the
    membership of the ``j``-th smallest vertex of ``mask``.  The empty set
    comes first.
    """
    positions = bit_list(mask)
    for k in range(1 << len(positions)):
        s = 0
        kk = k
        while kk:
            low = kk & -kk
            s |= 1 << positions[low.bit_length() - 1]
            kk ^= low
        yield s

"""Permutation helpers shared by the abacus and wreath modules.

Permutations act on {0, ..., n-1} and are stored as tuples of images;
``p[i]`` is the image of i.
"""

from __future__ import annotations

from itertools import permutations as _permutations
from typing import Iterator

from .partitions import Partition


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """p after q: (p * q)(i) = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycles(p: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Cycle decomposition in order of smallest element; fixed points included."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            seen[nxt] = True
            cyc.append(nxt)
            nxt = p[nxt]
        out.append(tuple(cyc))
    return out


def cycle_type_of(p: tuple[int, ...]) -> Partition:
    return Partition(sorted((len(c) for c in cycles(p)), reverse=True))


def parity(p: tuple[int, ...]) -> int:
    """The sign of the permutation: -1 to the number of even-length cycles."""
    return (-1) ** (len(p) - len(cycles(p)))


def with_cycle_type(parts, n: int) -> tuple[int, ...]:
    """A canonical permutation of {0..n-1} with the given cycle type."""
    parts = tuple(parts)
    if sum(parts) != n:
        raise ValueError(f"cycle type {parts} does not sum to {n}")
    img = list(range(n))
    start = 0
    for length in parts:
        for i in range(length):
            img[start + i] = start + (i + 1) % length
        start += length
    return tuple(img)


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return _permutations(range(n))


def cycle_notation(p: tuple[int, ...], one_based: bool = True) -> str:
    """Cycle notation with fixed points omitted; the identity prints as ()."""
    shift = 1 if one_based else 0
    parts = [
        "(" + " ".join(str(x + shift) for x in c) + ")"
        for c in cycles(p)
        if len(c) > 1
    ]
    return "".join(parts) if parts else "()"

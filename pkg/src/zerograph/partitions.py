"""Integer partitions and the diagram combinatorics used by the character engines.

Partitions are stored as weakly decreasing tuples of positive integers.  All
rim-hook machinery works on beta-sets (first-column hook lengths), so removing
an ``r``-hook is a single substitution ``b -> b - r`` inside a set of integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A partition of ``n``: a weakly decreasing tuple of positive integers.

    ``Partition(())`` is the unique partition of 0.  Instances are ordinary
    tuples, so comparisons, hashing and slicing behave as usual; the
    reverse-lexicographic order used throughout the package is plain
    descending tuple order.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    def multiplicities(self) -> dict[int, int]:
        """Map each distinct part to how often it occurs."""
        counts: dict[int, int] = {}
        for p in self:
            counts[p] = counts.get(p, 0) + 1
        return counts


@dataclass(frozen=True)
class RimHookRemoval:
    """One way of removing a rim hook from a partition.

    ``cell`` is the 1-based ``(row, column)`` of the diagram cell whose hook
    is the removed rim hook; ``height`` is its leg length.
    """

    result: Partition
    height: int
    cell: tuple[int, int]

    @property
    def sign(self) -> int:
        return -1 if self.height % 2 else 1


def format_partition(parts: Sequence[int]) -> str:
    """``(6, 2)`` -> ``"(6,2)"``; the empty partition is ``"()"``."""
    return "(" + ",".join(str(p) for p in parts) + ")"


def parse_partition(text: str) -> Partition:
    """Inverse of :func:`format_partition`."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"not a partition label: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return Partition(())
    return Partition(int(p) for p in body.split(","))


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def all_partitions(n: int) -> list[Partition]:
    """Every partition of ``n`` in reverse-lexicographic order.

    >>> [tuple(p) for p in all_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_all_partitions(n))


def conjugate(lam: Sequence[int]) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return Partition(())
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Matrix of hook lengths ``arm + leg + 1``, one row per row of ``lam``."""
    conj = conjugate(lam)
    return tuple(
        tuple(lam[i] - j + conj[j] - i - 1 for j in range(lam[i]))
        for i in range(len(lam))
    )


def hook_data(lam: Sequence[int]) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Hook-length matrix and the degree ``n! / prod(hooks)`` of ``chi^lam``."""
    hooks = hook_lengths(lam)
    n = sum(lam)
    denom = prod(h for row in hooks for h in row)
    degree, rem = divmod(factorial(n), denom)
    assert rem == 0
    return hooks, degree


def degree(lam: Sequence[int]) -> int:
    return hook_data(lam)[1]


def first_column_hooks(lam: Sequence[int]) -> tuple[int, ...]:
    """First-column hook lengths ``lam_i + len(lam) - i`` (a beta-set)."""
    ell = len(lam)
    return tuple(lam[i] + ell - 1 - i for i in range(ell))


def _removals(lam: tuple[int, ...], r: int) -> list[tuple[tuple[int, ...], int, int, int]]:
    # (result, height, row index, beta number) for each removable r-hook.
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    present = set(beta)
    out = []
    for i, b in enumerate(beta):
        c = b - r
        if c < 0 or c in present:
            continue
        height = sum(1 for x in beta if c < x < b)
        new = sorted((c if x == b else x for x in beta), reverse=True)
        parts = [x - (ell - 1 - k) for k, x in enumerate(new)]
        while parts and parts[-1] == 0:
            parts.pop()
        out.append((tuple(parts), height, i, b))
    return out


def rim_hook_removals(lam: Sequence[int], r: int) -> list[RimHookRemoval]:
    """All ways to strip an ``r``-rim-hook from ``lam``, in row order."""
    if r < 1:
        raise ValueError("rim hook length must be positive")
    lam = tuple(lam)
    removals = []
    for result, height, row, _ in _removals(lam, r):
        col = lam[row] - r + height + 1
        removals.append(RimHookRemoval(Partition(result), height, (row + 1, col)))
    return removals


def r_core(lam: Sequence[int], r: int) -> Partition:
    """Remove ``r``-rim-hooks until none is left."""
    if r < 2:
        raise ValueError("core requires r >= 2")
    current = tuple(lam)
    while True:
        removals = _removals(current, r)
        if not removals:
            return Partition(current)
        current = removals[0][0]


def diagonal_hooks(lam: Sequence[int]) -> tuple[bool, Partition]:
    """Whether ``lam`` is self-conjugate, and its diagonal hook lengths."""
    conj = conjugate(lam)
    hooks_ = [lam[i] - i - 1 + conj[i] - i for i in range(len(lam)) if lam[i] > i]
    self_conj = tuple(conj) == tuple(lam)
    diag = Partition(hooks_)
    if self_conj:
        assert all(h % 2 == 1 for h in diag) and len(set(diag)) == len(diag)
    return self_conj, diag


def partition_count(n: int) -> int:
    """Number of partitions of ``n`` by Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def hook_partition(n: int, legs: int) -> Partition:
    """The hook ``(n - legs, 1^legs)``."""
    return Partition((n - legs,) + (1,) * legs)

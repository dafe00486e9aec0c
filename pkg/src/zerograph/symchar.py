"""Exact irreducible characters of the symmetric group.

Values are computed with the Murnaghan-Nakayama rule: the largest part ``r``
of the cycle type is stripped off as an ``r``-rim-hook in every possible way
and the signed results are summed.  Because cycle types are processed in
decreasing order, the tails of different cycle types coincide often and a
shared memo over ``(shape, remaining cycle type)`` removes most of the work.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .partitions import (
    Partition,
    _removals,
    all_partitions,
    conjugate,
    format_partition,
    hook_data,
    parse_partition,
)

MAX_N = 14

CycleType = Partition


class ResourceLimitError(RuntimeError):
    """Requested table is larger than the configured maximum."""


class ClassData(NamedTuple):
    size: int
    sign: int
    in_an: bool
    splits_in_an: bool


def centralizer_order(mu: Sequence[int]) -> int:
    """``prod_i i^{m_i} m_i!`` over the distinct part sizes of ``mu``."""
    z = 1
    for part, mult in Partition(mu).multiplicities().items():
        z *= part**mult * math.factorial(mult)
    return z


def class_size(mu: Sequence[int]) -> int:
    return math.factorial(sum(mu)) // centralizer_order(mu)


def sign(mu: Sequence[int]) -> int:
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def element_order(mu: Sequence[int]) -> int:
    return math.lcm(*mu) if mu else 1


def class_data(mu: Sequence[int]) -> ClassData:
    s = sign(mu)
    splits = s == 1 and all(p % 2 for p in mu) and len(set(mu)) == len(mu)
    return ClassData(class_size(mu), s, s == 1, splits)


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1, ..., n}`` given by its image list.

    Products compose right to left: ``(a * b)(x) = a(b(x))``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise ValueError("permutations act on different sets")
        return Permutation(tuple(self.images[other.images[i] - 1] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cycle = []
            x = start
            while not seen[x - 1]:
                seen[x - 1] = True
                cycle.append(x)
                x = self.images[x - 1]
            out.append(tuple(cycle))
        return out


def cycle_type_of(pi: Permutation) -> CycleType:
    return Partition(sorted((len(c) for c in pi.cycles()), reverse=True))


def representative(mu: Sequence[int]) -> Permutation:
    """A permutation with cycle type ``mu`` built from consecutive blocks."""
    n = sum(mu)
    cycles = []
    start = 1
    for part in mu:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(n, *cycles)


def _mn(lam: tuple[int, ...], mu: tuple[int, ...], memo: dict) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    hit = memo.get(key)
    if hit is not None:
        return hit
    rest = mu[1:]
    total = 0
    for result, height, _, _ in _removals(lam, mu[0]):
        value = _mn(result, rest, memo)
        total += -value if height % 2 else value
    return memo.setdefault(key, total)


def mn_value(lam: Sequence[int], mu: Sequence[int], memo: dict | None = None) -> int:
    """``chi^lam`` evaluated on the class of cycle type ``mu``."""
    lam = tuple(Partition(lam))
    mu = tuple(Partition(mu))
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {format_partition(lam)} vs {format_partition(mu)}")
    return _mn(lam, mu, {} if memo is None else memo)


@dataclass(frozen=True)
class SnCharTable:
    """Character table of ``S_n``.

    Rows follow ``all_partitions(n)`` (reverse-lexicographic); columns are the
    same partitions read as cycle types in the opposite order, so the
    identity class comes first.
    """

    n: int
    partitions: tuple[Partition, ...]
    cycle_types: tuple[CycleType, ...]
    values: tuple[tuple[int, ...], ...]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row[0] for row in self.values)

    @cached_property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(class_size(mu) for mu in self.cycle_types)

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tuple(sign(mu) for mu in self.cycle_types)

    @cached_property
    def row_index(self) -> dict[Partition, int]:
        return {lam: i for i, lam in enumerate(self.partitions)}

    @cached_property
    def column_index(self) -> dict[CycleType, int]:
        return {mu: j for j, mu in enumerate(self.cycle_types)}

    def value(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        return self.values[self.row_index[Partition(lam)]][self.column_index[Partition(mu)]]

    def row(self, lam: Sequence[int]) -> tuple[int, ...]:
        return self.values[self.row_index[Partition(lam)]]

    @cached_property
    def table(self):
        """The same data as a generic :class:`~zerograph.tableio.CharTable`."""
        from .tableio import CharTable, ClassInfo, Character

        classes = tuple(
            ClassInfo(format_partition(mu), size, element_order(mu))
            for mu, size in zip(self.cycle_types, self.class_sizes)
        )
        characters = tuple(
            Character(format_partition(lam), row[0], row)
            for lam, row in zip(self.partitions, self.values)
        )
        return CharTable(
            name=f"S{self.n}",
            order=math.factorial(self.n),
            classes=classes,
            characters=characters,
            meta={"kind": "sn", "n": self.n},
        )

    @classmethod
    def from_char_table(cls, t) -> "SnCharTable":
        """Rebuild from a generic table with partition labels (e.g. a cache entry)."""
        partitions = tuple(parse_partition(c.label) for c in t.characters)
        cycle_types = tuple(parse_partition(k.label) for k in t.classes)
        n = t.meta.get("n", sum(partitions[0]) if partitions else 0)
        expected = tuple(all_partitions(n))
        if partitions != expected or cycle_types != expected[::-1]:
            raise ValueError("table labels are not the standard S_n ordering")
        values = tuple(tuple(int(v) for v in c.values) for c in t.characters)
        return cls(n, partitions, cycle_types, values)


def char_table_sn(n: int, *, max_n: int = MAX_N, threads: int | None = 1) -> SnCharTable:
    """Full character table of ``S_n`` by Murnaghan-Nakayama.

    ``threads`` caps the worker pool that fills rows; the memo is a shared
    dict written only through ``setdefault``, and the result does not depend
    on the number of workers.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_n:
        raise ResourceLimitError(f"S_{n} exceeds the configured maximum n={max_n}")
    partitions = tuple(all_partitions(n))
    cycle_types = partitions[::-1]
    memo: dict = {}
    mus = [tuple(mu) for mu in cycle_types]

    def fill(lam: Partition) -> tuple[int, ...]:
        lt = tuple(lam)
        return tuple(_mn(lt, mu, memo) for mu in mus)

    if threads == 1:
        rows = [fill(lam) for lam in partitions]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(fill, partitions))

    for lam, row in zip(partitions, rows):
        if row[0] != hook_data(lam)[1]:
            raise AssertionError(f"identity column disagrees with hook formula at {lam}")
    return SnCharTable(n, partitions, cycle_types, tuple(rows))


def sgn_twist(lam: Sequence[int]) -> Partition:
    """Label of ``sgn * chi^lam``."""
    return conjugate(lam)


def oracle_table(n: int) -> SnCharTable:
    """Character table from the Schur/power-sum transition matrix (n <= 6)."""
    from ._schur_oracle import transition_characters

    if n > 6:
        raise ValueError("the symmetric-function oracle is limited to n <= 6")
    labels, values = transition_characters(n)
    partitions = tuple(Partition(p) for p in labels)
    return SnCharTable(n, partitions, partitions[::-1], values)

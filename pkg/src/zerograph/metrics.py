"""Bi-invariant metrics induced by characters, and their distance-from-identity partitions.

``d_chi(a, b)^2 = 2 (chi(1) - Re chi(a b^-1))``.  Everything in the logic paths
works with this squared value, which is exact; square roots only appear in
:func:`display_distance` and in the interval-arithmetic triangle check.
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from mpmath import iv, mp, mpf

from .cyclo import ExactValue, exact_str, is_zero, real_part, simplify
from .partitions import Partition, format_partition
from .symchar import Permutation, SnCharTable, cycle_type_of
from .tableio import CharTable, VerificationReport


@dataclass(frozen=True)
class MetricPartition:
    """Classes grouped by ``chi(1) - Re chi(K)``; ``blocks[0]`` holds the identity class."""

    blocks: tuple[tuple[int, ...], ...]
    values: tuple[ExactValue, ...]

    def block_of(self) -> dict[int, int]:
        return {j: b for b, block in enumerate(self.blocks) for j in block}

    def as_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(b) for b in self.blocks)


def faithful_characters(t: CharTable) -> set[int]:
    """Characters whose kernel is the identity class only."""
    out = set()
    for i, c in enumerate(t.characters):
        kernel = [j for j, v in enumerate(c.values) if is_zero(v - c.degree)]
        if kernel == [0]:
            out.add(i)
    return out


def _row_index(t: SnCharTable, chi) -> int:
    if isinstance(chi, int):
        return chi
    return t.row_index[Partition(chi)]


def metric_distance(t: SnCharTable, chi, a: Permutation, b: Permutation) -> int:
    """Squared distance ``2 (chi(1) - chi(a b^-1))``; ``chi`` is a row index or a partition."""
    i = _row_index(t, chi)
    mu = cycle_type_of(a * b.inverse())
    return 2 * (t.degrees[i] - t.values[i][t.column_index[mu]])


def display_distance(squared, digits: int = 15) -> str:
    """``sqrt(squared)`` to ``digits`` significant digits, for display only."""
    q = Fraction(squared)
    with mp.workdps(digits + 5):
        return mp.nstr(mp.sqrt(mpf(q.numerator) / q.denominator), digits)


def metric_partition(t: CharTable, chi: int) -> MetricPartition:
    c = t.characters[chi]
    keys: list[ExactValue] = []
    blocks: list[list[int]] = []
    for j, v in enumerate(c.values):
        key = simplify(c.degree - real_part(v))
        for b, k in enumerate(keys):
            if is_zero(k - key):
                blocks[b].append(j)
                break
        else:
            keys.append(key)
            blocks.append([j])
    return MetricPartition(tuple(tuple(b) for b in blocks), tuple(keys))


def separating_pair(p: MetricPartition, q: MetricPartition) -> tuple[int, int] | None:
    """Two classes in one block of ``p`` but different blocks of ``q`` (or vice versa)."""
    bp, bq = p.block_of(), q.block_of()
    for x, y in combinations(sorted(bp), 2):
        if (bp[x] == bp[y]) != (bq[x] == bq[y]):
            return x, y
    return None


def lemma_pair_values(sn: SnCharTable) -> dict:
    """Values of ``(n-2,2)`` and ``(n-2,1,1)`` on ``(n-3,1,1,1)`` and ``(n-3,2,1)``."""
    n = sn.n
    s1, s2 = Partition((n - 3, 1, 1, 1)), Partition((n - 3, 2, 1))
    lam, mu = Partition((n - 2, 2)), Partition((n - 2, 1, 1))
    return {
        "classes": [format_partition(s1), format_partition(s2)],
        format_partition(lam): [sn.value(lam, s1), sn.value(lam, s2)],
        format_partition(mu): [sn.value(mu, s1), sn.value(mu, s2)],
    }


def verify_theorem_6_1(n: int, tables=None) -> VerificationReport:
    """Distinct faithful characters of ``S_n`` give distinct metric partitions."""
    from .theorems import _require, _tables

    _require(n, 3, "metrics")
    start = time.perf_counter()
    sn = _tables(tables).sn(n)
    t = sn.table
    faithful = sorted(faithful_characters(t))
    parts = {i: metric_partition(t, i) for i in faithful}
    witnesses = []
    for i, k in combinations(faithful, 2):
        if parts[i].as_sets() == parts[k].as_sets():
            witnesses.append({"pair": [t.characters[i].label, t.characters[k].label]})
    details: dict = {
        "faithful": [t.characters[i].label for i in faithful],
        "pairs_checked": len(faithful) * (len(faithful) - 1) // 2,
    }
    if n >= 5:
        lam, mu = t.character_index["(%d,2)" % (n - 2)], t.character_index["(%d,1,1)" % (n - 2)]
        if lam in parts and mu in parts:
            sep = separating_pair(parts[lam], parts[mu])
            details["first_separating_classes"] = None if sep is None else [t.classes[j].label for j in sep]
        details["lemma_pair"] = lemma_pair_values(sn)
    return VerificationReport(
        check="metrics",
        scope={"group": f"S{n}", "n": n},
        witnesses=witnesses,
        details=details,
        timings={"seconds": time.perf_counter() - start},
    )


def _sqrt_iv(x):
    q = Fraction(x)
    return iv.sqrt(iv.mpf(q.numerator) / q.denominator)


def triangle_holds(x, y, z, *, start_bits: int = 100, max_bits: int = 6400) -> tuple[bool, str]:
    """Decide ``sqrt(x) <= sqrt(y) + sqrt(z)`` for exact non-negative rationals.

    Interval arithmetic at increasing precision settles strict cases; when the
    intervals keep overlapping (equality, typically), the exact test
    ``x - y - z <= 0 or (x - y - z)^2 <= 4 y z`` decides.  Returns the verdict
    and the method (``"interval@<bits>"`` or ``"exact"``).
    """
    bits = start_bits
    saved = iv.prec
    try:
        while bits <= max_bits:
            iv.prec = bits
            lhs = _sqrt_iv(x)
            rhs = _sqrt_iv(y) + _sqrt_iv(z)
            if lhs.b < rhs.a:
                return True, f"interval@{bits}"
            if lhs.a > rhs.b:
                return False, f"interval@{bits}"
            bits *= 2
    finally:
        iv.prec = saved
    w = x - y - z
    return (w <= 0 or w * w <= 4 * y * z), "exact"


def random_permutation(n: int, rng: random.Random) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def triangle_check(sn: SnCharTable, samples: int = 200, seed: int = 0) -> VerificationReport:
    """Triangle inequality and bi-invariance on random triples, for every faithful character."""
    start = time.perf_counter()
    rng = random.Random(seed)
    t = sn.table
    faithful = sorted(faithful_characters(t))
    witnesses = []
    methods: dict[str, int] = {}
    for _ in range(samples):
        a, b, c = (random_permutation(sn.n, rng) for _ in range(3))
        for i in faithful:
            dab = metric_distance(sn, i, a, b)
            dac = metric_distance(sn, i, a, c)
            dcb = metric_distance(sn, i, c, b)
            ok, how = triangle_holds(dab, dac, dcb)
            kind = how.split("@")[0]
            methods[kind] = methods.get(kind, 0) + 1
            if not ok:
                witnesses.append({"character": t.characters[i].label, "squared": [dab, dac, dcb]})
            if metric_distance(sn, i, c * a, c * b) != dab or metric_distance(sn, i, a * c, b * c) != dab:
                witnesses.append({"character": t.characters[i].label, "bi_invariance": True})
    return VerificationReport(
        check="triangle",
        scope={"group": f"S{sn.n}", "samples": samples, "seed": seed},
        witnesses=witnesses,
        details={"decided_by": dict(sorted(methods.items())), "undecided": 0},
        timings={"seconds": time.perf_counter() - start},
    )


def partitions_csv(t: CharTable, chars: list[int] | None = None) -> str:
    """``character,class,block,value`` rows; ``value`` is ``chi(1) - Re chi(K)``."""
    if chars is None:
        chars = sorted(faithful_characters(t))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["character", "class", "block", "value"])
    for i in chars:
        p = metric_partition(t, i)
        blocks = p.block_of()
        for j, cls in enumerate(t.classes):
            w.writerow([t.characters[i].label, cls.label, blocks[j], exact_str(p.values[blocks[j]])])
    return buf.getvalue()

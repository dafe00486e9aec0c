"""Character tables of alternating groups, derived from the symmetric group.

Restriction from ``S_n`` to ``A_n``:

* if ``lam != lam'`` the characters ``chi^lam`` and ``chi^lam'`` restrict to the
  same irreducible character of ``A_n``;
* if ``lam == lam'`` the restriction splits into two conjugate characters.
  They take the value ``chi^lam(sigma)/2`` except on the two ``A_n``-classes of
  cycle type ``h`` = the diagonal hook lengths of ``lam``, where the values are
  ``(eps +- sqrt(eps * prod(h))) / 2`` with ``eps = (-1)^((n - len(h))/2)``.

Even classes whose cycle type has distinct odd parts split into two classes
of half the size.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .cyclo import ExactValue, QuadraticValue, is_zero, simplify
from .partitions import Partition, all_partitions, conjugate, diagonal_hooks, format_partition
from .symchar import MAX_N, SnCharTable, char_table_sn, class_data, element_order
from .tableio import Character, CharTable, ClassInfo, VerificationReport


@dataclass(frozen=True)
class AnCharacter:
    """``kind`` is ``"nonsplit"``, ``"plus"`` or ``"minus"``."""

    kind: str
    partition: Partition

    @property
    def label(self) -> str:
        suffix = {"nonsplit": "", "plus": "+", "minus": "-"}[self.kind]
        return format_partition(self.partition) + suffix


@dataclass(frozen=True)
class AnClass:
    """``kind`` is ``"whole"`` for a class of ``S_n`` that stays one class, else ``"a"``/``"b"``."""

    kind: str
    cycle_type: Partition

    @property
    def label(self) -> str:
        suffix = {"whole": "", "a": "a", "b": "b"}[self.kind]
        return format_partition(self.cycle_type) + suffix


def an_classes(n: int) -> list[AnClass]:
    if n < 2:
        raise ValueError("A_n needs n >= 2")
    out = []
    for mu in reversed(all_partitions(n)):
        data = class_data(mu)
        if not data.in_an:
            continue
        if data.splits_in_an:
            out += [AnClass("a", mu), AnClass("b", mu)]
        else:
            out.append(AnClass("whole", mu))
    return out


def an_characters(n: int) -> list[AnCharacter]:
    out = []
    for lam in all_partitions(n):
        conj = conjugate(lam)
        if conj == lam:
            out += [AnCharacter("plus", lam), AnCharacter("minus", lam)]
        elif lam > conj:
            out.append(AnCharacter("nonsplit", lam))
    return out


def split_values(lam: Partition) -> tuple[QuadraticValue, QuadraticValue]:
    """Values of the ``+`` character at the ``a`` and ``b`` classes of cycle type diag-hooks(lam)."""
    self_conj, hooks = diagonal_hooks(lam)
    if not self_conj:
        raise ValueError(f"{lam} is not self-conjugate")
    n = sum(lam)
    eps = -1 if ((n - len(hooks)) // 2) % 2 else 1
    root = QuadraticValue.sqrt(eps * math.prod(hooks))
    half = Fraction(1, 2)
    return (root + eps) * half, (-root + eps) * half


@dataclass(frozen=True)
class AnCharTable:
    n: int
    characters: tuple[AnCharacter, ...]
    classes: tuple[AnClass, ...]
    values: tuple[tuple[ExactValue, ...], ...]

    @cached_property
    def table(self) -> CharTable:
        order = math.factorial(self.n) // 2 if self.n > 1 else 1
        infos = []
        for cls in self.classes:
            size = class_data(cls.cycle_type).size
            if cls.kind != "whole":
                size //= 2
            infos.append(ClassInfo(cls.label, size, element_order(cls.cycle_type)))
        chars = tuple(
            Character(c.label, row[0], row) for c, row in zip(self.characters, self.values)
        )
        return CharTable(
            name=f"A{self.n}",
            order=order,
            classes=tuple(infos),
            characters=chars,
            meta={"kind": "an", "n": self.n},
        )


def char_table_an(
    n: int, sn: SnCharTable | None = None, *, max_n: int = MAX_N, threads: int | None = 1
) -> AnCharTable:
    if n < 2:
        raise ValueError("A_n needs n >= 2")
    if sn is None:
        sn = char_table_sn(n, max_n=max_n, threads=threads)
    classes = tuple(an_classes(n))
    characters = tuple(an_characters(n))
    rows = []
    for char in characters:
        srow = sn.row(char.partition)
        if char.kind == "nonsplit":
            rows.append(tuple(srow[sn.column_index[c.cycle_type]] for c in classes))
            continue
        _, hooks = diagonal_hooks(char.partition)
        at_a, at_b = split_values(char.partition)
        if char.kind == "minus":
            at_a, at_b = at_b, at_a
        row: list[ExactValue] = []
        for c in classes:
            if c.cycle_type == hooks:
                row.append(at_a if c.kind == "a" else at_b)
            else:
                v = srow[sn.column_index[c.cycle_type]]
                if v % 2:
                    raise ArithmeticError(f"odd value {v} of self-conjugate {char.partition}")
                row.append(v // 2)
        rows.append(tuple(row))
    return AnCharTable(n, characters, classes, tuple(rows))


def check_lemma_3_1(n: int, an: AnCharTable | None = None, sn: SnCharTable | None = None) -> VerificationReport:
    """Zeros of ``chi`` on ``A_n`` coincide with zeros of each constituent of its restriction."""
    start = time.perf_counter()
    if sn is None:
        sn = char_table_sn(n)
    if an is None:
        an = char_table_an(n, sn)
    by_partition: dict[Partition, list[int]] = {}
    for i, c in enumerate(an.characters):
        by_partition.setdefault(c.partition, []).append(i)
    witnesses = []
    checked = 0
    for lam in sn.partitions:
        key = lam if lam in by_partition else conjugate(lam)
        srow = sn.row(lam)
        for i in by_partition[key]:
            for j, cls in enumerate(an.classes):
                chi_zero = srow[sn.column_index[cls.cycle_type]] == 0
                psi_zero = is_zero(an.values[i][j])
                checked += 1
                if chi_zero != psi_zero:
                    witnesses.append(
                        {
                            "character": format_partition(lam),
                            "constituent": an.characters[i].label,
                            "class": cls.label,
                            "chi_value": srow[sn.column_index[cls.cycle_type]],
                            "psi_value": str(simplify(an.values[i][j])),
                        }
                    )
    return VerificationReport(
        check="lemma-3-1",
        scope={"group": f"A{n}", "n": n},
        witnesses=witnesses,
        details={"cells_checked": checked},
        timings={"seconds": time.perf_counter() - start},
    )

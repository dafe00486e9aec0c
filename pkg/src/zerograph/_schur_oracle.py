"""Character values from the change of basis between power sums and Schur functions.

Works entirely in the monomial basis of degree-``n`` symmetric polynomials:

* ``s_lam = sum_nu K[lam][nu] m_nu``, with Kostka numbers counted by
  enumerating semistandard tableaux;
* ``p_mu = sum_nu R[mu][nu] m_nu``, with ``R[mu][nu]`` the number of ways to
  distribute the parts of ``mu`` into boxes of sizes ``nu``.

Then ``p_mu = sum_lam chi^lam(mu) s_lam`` becomes the linear system
``R[mu] = chi(mu) K`` which is solved over ``Fraction``.  Nothing here touches
rim hooks, so the result is an independent check of the main engine.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(1, min(n, largest) + 1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return out


def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of ``shape`` with the given content."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling: dict[tuple[int, int], int] = {}
    remaining = list(content)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        count = 0
        for v in range(lo, len(content) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            filling[(i, j)] = v
            count += place(k + 1)
            remaining[v - 1] += 1
        filling.pop((i, j), None)
        return count

    return place(0)


def _power_sum_coefficient(mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    """Coefficient of ``m_nu`` in ``p_mu``: ordered fillings of boxes ``nu`` by parts of ``mu``."""

    @lru_cache(maxsize=None)
    def count(i: int, room: tuple[int, ...]) -> int:
        if i == len(mu):
            return 1 if not any(room) else 0
        total = 0
        for b, free in enumerate(room):
            if free >= mu[i]:
                total += count(i + 1, room[:b] + (free - mu[i],) + room[b + 1 :])
        return total

    return count(0, nu)


def _solve_left(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve ``x @ rows = rhs`` by Gauss-Jordan elimination on the transpose."""
    size = len(rows)
    a = [[rows[r][c] for r in range(size)] + [rhs[c]] for c in range(size)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][size] for r in range(size)]


def transition_characters(n: int) -> tuple[list[tuple[int, ...]], tuple[tuple[int, ...], ...]]:
    """Partition labels (reverse-lex) and the table ``values[lam][mu]``.

    Columns are the cycle types in increasing lexicographic order.
    """
    labels = sorted(_partitions(n), reverse=True)
    kostka = [[Fraction(_kostka(lam, nu)) for nu in labels] for lam in labels]
    columns = labels[::-1]
    by_column = []
    for mu in columns:
        rhs = [Fraction(_power_sum_coefficient(mu, nu)) for nu in labels]
        by_column.append(_solve_left(kostka, rhs))
    values = []
    for i in range(len(labels)):
        row = []
        for col in by_column:
            v = col[i]
            if v.denominator != 1:
                raise ArithmeticError(f"non-integral character value {v}")
            row.append(int(v))
        values.append(tuple(row))
    return labels, tuple(values)

"""Exact character values: rationals, quadratic irrationals and cyclotomic numbers.

An exact value is one of

* ``int`` / :class:`fractions.Fraction` -- rational values;
* :class:`QuadraticValue` -- ``a + b*sqrt(d)`` with ``d`` squarefree;
* :class:`CycloValue` -- a polynomial in a primitive ``m``-th root of unity,
  stored reduced modulo the cyclotomic polynomial ``Phi_m``.

Quadratic and cyclotomic values are never mixed in one operation; doing so
raises :class:`MixedFieldError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Rational = Union[int, Fraction]


class MixedFieldError(TypeError):
    """Arithmetic between a quadratic and a cyclotomic value."""


# -- integer polynomials (coefficient lists, lowest degree first) ------------


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Division of polynomials with rational (or integer) coefficients by a monic ``den``."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c == 0:
            continue
        if lead != 1:
            c = Fraction(c, lead)
        q[shift] = c
        for i, dc in enumerate(den):
            num[shift + i] -= c * dc
    rem = num[: len(den) - 1]
    return q, rem


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, list(_cyclotomic(d)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(int(c) for c in poly)


def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of ``Phi_m``, lowest degree first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if m < 1:
        raise ValueError("m must be positive")
    return _cyclotomic(m)


def totient(m: int) -> int:
    return len(_cyclotomic(m)) - 1


def _squarefree_split(d: int) -> tuple[int, int]:
    """``d = k^2 * s`` with ``s`` squarefree; returns ``(k, s)``."""
    sgn = -1 if d < 0 else 1
    rest = abs(d)
    k = 1
    p = 2
    while p * p <= rest:
        while rest % (p * p) == 0:
            rest //= p * p
            k *= p
        p += 1
    return k, sgn * rest


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


# -- quadratic irrationals ----------------------------------------------------


@dataclass(frozen=True)
class QuadraticValue:
    """``a + b*sqrt(d)`` with rational ``a, b`` and squarefree ``d != 0``.

    For ``d < 0`` the square root is ``i*sqrt(|d|)``.  A zero ``b`` is
    normalised to ``(a, 0, 1)``.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self) -> None:
        a, b, d = _rat(self.a), _rat(self.b), int(self.d)
        if d == 0:
            raise ValueError("d must be nonzero")
        k, s = _squarefree_split(d)
        b *= k
        if s == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            s = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", s)

    @classmethod
    def sqrt(cls, d: int) -> "QuadraticValue":
        return cls(Fraction(0), Fraction(1), d)

    def is_rational(self) -> bool:
        return self.b == 0

    def _coerce(self, other) -> "QuadraticValue | None":
        if isinstance(other, QuadraticValue):
            if other.b != 0 and self.b != 0 and other.d != self.d:
                raise ValueError(f"sqrt({self.d}) and sqrt({other.d}) in one operation")
            return other
        if _is_rational(other):
            return QuadraticValue(_rat(other), Fraction(0), 1)
        if isinstance(other, CycloValue):
            raise MixedFieldError("quadratic and cyclotomic values cannot be combined")
        return None

    def _field(self, other: "QuadraticValue") -> int:
        return self.d if self.b != 0 else other.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticValue(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self) -> "QuadraticValue":
        return QuadraticValue(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._field(o)
        return QuadraticValue(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_rational(other):
            return QuadraticValue(self.a / other, self.b / other, self.d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.a * o.a - o.b * o.b * o.d
        return self * QuadraticValue(o.a / norm, -o.b / norm, o.d)

    def __eq__(self, other) -> bool:
        if _is_rational(other):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadraticValue):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, CycloValue):
            raise MixedFieldError("quadratic and cyclotomic values cannot be compared")
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def conjugate(self) -> "QuadraticValue":
        if self.d < 0:
            return QuadraticValue(self.a, -self.b, self.d)
        return self

    def galois_conjugate(self) -> "QuadraticValue":
        """The image under ``sqrt(d) -> -sqrt(d)``."""
        return QuadraticValue(self.a, -self.b, self.d)

    def __complex__(self) -> complex:
        root = math.sqrt(abs(self.d))
        if self.d < 0:
            return complex(float(self.a), float(self.b) * root)
        return complex(float(self.a) + float(self.b) * root)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        surd = f"sqrt({self.d})" if abs(self.b) == 1 else f"{abs(self.b)}*sqrt({self.d})"
        sign = "-" if self.b < 0 else "+"
        if self.a == 0:
            return surd if sign == "+" else f"-{surd}"
        return f"{self.a}{sign}{surd}"


# -- cyclotomic numbers -------------------------------------------------------


def _reduce_coeffs(m: int, coeffs: Iterable) -> tuple[Fraction, ...]:
    phi = list(_cyclotomic(m))
    length = len(phi) - 1
    poly = [_rat(c) for c in coeffs]
    if len(poly) >= len(phi):
        _, poly = _poly_divmod(poly, phi)
    poly = [_rat(c) for c in poly] + [Fraction(0)] * (length - len(poly))
    return tuple(poly[:length])


@dataclass(frozen=True, eq=False)
class CycloValue:
    """``sum_k coeffs[k] * zeta_m^k`` reduced modulo ``Phi_m``.

    ``coeffs`` always has length ``phi(m)`` after construction, which makes the
    stored form canonical within a fixed ``m``.  Values with different ``m``
    are compared and combined in the field of order ``lcm``.
    """

    m: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be positive")
        object.__setattr__(self, "coeffs", _reduce_coeffs(self.m, self.coeffs))

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CycloValue":
        coeffs = [0] * m
        coeffs[k % m] = 1
        return cls(m, tuple(coeffs))

    @classmethod
    def rational(cls, m: int, value: Rational) -> "CycloValue":
        return cls(m, (value,))

    def lift(self, target: int) -> "CycloValue":
        """Re-express in ``Q(zeta_target)``; requires ``m | target``."""
        if target % self.m:
            raise ValueError(f"{self.m} does not divide {target}")
        if target == self.m:
            return self
        step = target // self.m
        coeffs = [Fraction(0)] * target
        for k, c in enumerate(self.coeffs):
            coeffs[k * step] += c
        return CycloValue(target, tuple(coeffs))

    def _coerce(self, other) -> "tuple[CycloValue, CycloValue] | None":
        if isinstance(other, CycloValue):
            m = math.lcm(self.m, other.m)
            return self.lift(m), other.lift(m)
        if _is_rational(other):
            return self, CycloValue.rational(self.m, other)
        if isinstance(other, QuadraticValue):
            raise MixedFieldError("quadratic and cyclotomic values cannot be combined")
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return CycloValue(x.m, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloValue":
        return CycloValue(self.m, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x + (-y)

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return y + (-x)

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        prod_ = [Fraction(0)] * (2 * len(x.coeffs))
        for i, a in enumerate(x.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(y.coeffs):
                if b:
                    prod_[i + j] += a * b
        return CycloValue(x.m, tuple(prod_))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_rational(other):
            return CycloValue(self.m, tuple(c / other for c in self.coeffs))
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is irrational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x.coeffs == y.coeffs

    # Equal values may live in different fields (zeta_3 == zeta_6**2), and a
    # field-independent canonical form is not maintained, so no hash.
    __hash__ = None

    def conjugate(self) -> "CycloValue":
        coeffs = [Fraction(0)] * self.m
        for k, c in enumerate(self.coeffs):
            coeffs[(-k) % self.m] += c
        return CycloValue(self.m, tuple(coeffs))

    def __complex__(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.m), math.sin(2 * math.pi / self.m))
        return sum((complex(float(c)) * z**k for k, c in enumerate(self.coeffs)), complex(0))

    def __str__(self) -> str:
        terms = [f"{c}*z{self.m}^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def reduce(v: CycloValue) -> CycloValue:
    """Canonical representative (construction already reduces; this re-runs it)."""
    return CycloValue(v.m, v.coeffs)


ExactValue = Union[int, Fraction, QuadraticValue, CycloValue]


# -- generic helpers on exact values -----------------------------------------


def is_zero(v: ExactValue) -> bool:
    if isinstance(v, CycloValue):
        return v.is_zero()
    if isinstance(v, QuadraticValue):
        return v.a == 0 and v.b == 0
    return v == 0


def simplify(v: ExactValue) -> ExactValue:
    """Demote to the smallest exact form: integral rationals become ``int``."""
    if isinstance(v, CycloValue):
        if not v.is_rational():
            return v
        v = v.to_rational()
    elif isinstance(v, QuadraticValue):
        if v.b != 0:
            return v
        v = v.a
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v.numerator)
    return v


def conj(v: ExactValue) -> ExactValue:
    if isinstance(v, (QuadraticValue, CycloValue)):
        return v.conjugate()
    return v


def real_part(v: ExactValue) -> ExactValue:
    if isinstance(v, CycloValue):
        return (v + v.conjugate()) / 2
    if isinstance(v, QuadraticValue):
        return QuadraticValue(v.a, Fraction(0), 1) if v.d < 0 else v
    return v


def conj_and_real(v: ExactValue) -> tuple[ExactValue, ExactValue]:
    c = conj(v)
    r = real_part(v)
    assert conj(r) == r
    return c, r


def is_integer(v: ExactValue) -> bool:
    s = simplify(v)
    return isinstance(s, int)


def to_complex(v: ExactValue) -> complex:
    return complex(v)


def exact_str(v: ExactValue) -> str:
    return str(simplify(v))


class ExactSum:
    """Running sum of exact values that may involve several square roots.

    Square roots of distinct squarefree integers are linearly independent
    over the rationals, so a sum is kept as one rational coefficient per
    ``sqrt(d)``.  Cyclotomic terms are summed in a single cyclotomic field;
    combining them with quadratic surds is refused because ``sqrt(d)`` may
    itself be cyclotomic.
    """

    def __init__(self) -> None:
        self.rational = Fraction(0)
        self.surds: dict[int, Fraction] = {}
        self.cyclo: CycloValue | None = None

    def add(self, v: ExactValue) -> None:
        if isinstance(v, QuadraticValue):
            if self.cyclo is not None and v.b != 0:
                raise MixedFieldError("sum mixes quadratic surds and cyclotomic values")
            self.rational += v.a
            if v.b != 0:
                self.surds[v.d] = self.surds.get(v.d, Fraction(0)) + v.b
        elif isinstance(v, CycloValue):
            if any(self.surds.values()):
                raise MixedFieldError("sum mixes quadratic surds and cyclotomic values")
            self.cyclo = v if self.cyclo is None else self.cyclo + v
        else:
            self.rational += v

    def value(self) -> ExactValue:
        """The sum as one exact value (needs at most one surd)."""
        live = {d: b for d, b in self.surds.items() if b != 0}
        if len(live) > 1:
            raise ValueError("sum involves several square roots")
        total: ExactValue = self.rational
        if live:
            ((d, b),) = live.items()
            total = QuadraticValue(self.rational, b, d)
        if self.cyclo is not None:
            total = self.cyclo + total
        return simplify(total)

    def equals(self, target: Rational) -> bool:
        if any(self.surds.values()):
            return False
        total = self.rational
        if self.cyclo is not None:
            c = self.cyclo + total
            return c == target
        return total == target

    def __str__(self) -> str:
        parts = [str(self.rational)]
        parts += [f"{b}*sqrt({d})" for d, b in sorted(self.surds.items()) if b != 0]
        if self.cyclo is not None and not self.cyclo.is_zero():
            parts.append(f"({self.cyclo})")
        return " + ".join(parts)

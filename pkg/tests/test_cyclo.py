import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from mpmath import mp, mpc, exp, pi

from zerograph.cyclo import (
    CycloValue,
    ExactSum,
    MixedFieldError,
    QuadraticValue,
    conj,
    conj_and_real,
    cyclotomic_polynomial,
    is_zero,
    real_part,
    reduce,
    simplify,
    totient,
)


def test_cyclotomic_polynomial_examples():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("m", range(1, 40))
def test_cyclotomic_degree_is_totient(m):
    phi = cyclotomic_polynomial(m)
    assert len(phi) - 1 == totient(m)
    assert phi[-1] == 1


def test_reduce_examples():
    assert CycloValue(3, (1, 1, 1)).is_zero()
    i2 = CycloValue.zeta(4, 2)
    assert i2.is_rational() and i2.to_rational() == -1
    g = CycloValue(5, (0, 1, 0, 0, 1))
    assert not g.is_zero()
    # zeta + zeta^{-1} satisfies x^2 + x - 1 = 0
    assert (g * g + g - 1).is_zero()
    assert abs(complex(g) - (-1 + 5**0.5) / 2) < 1e-12


def test_conj_and_real_examples():
    assert conj_and_real(5) == (5, 5)
    c, r = conj_and_real(QuadraticValue(0, 1, -11))
    assert c == QuadraticValue(0, -1, -11) and is_zero(r)
    z = CycloValue.zeta(5)
    c, r = conj_and_real(z)
    assert c == CycloValue.zeta(5, 4)
    assert r == (CycloValue.zeta(5) + CycloValue.zeta(5, 4)) / 2


def test_quadratic_normal_form():
    assert QuadraticValue(1, 2, 9) == 7
    q = QuadraticValue(0, 1, 12)
    assert (q.b, q.d) == (2, 3)
    assert QuadraticValue(3, 0, 5).d == 1
    assert hash(QuadraticValue(3, 0, 7)) == hash(3)
    s = QuadraticValue.sqrt(-3)
    assert s * s == -3
    with pytest.raises(ValueError):
        QuadraticValue(1, 1, 0)


def test_mixed_fields_rejected():
    with pytest.raises(MixedFieldError):
        CycloValue.zeta(3) + QuadraticValue.sqrt(5)
    acc = ExactSum()
    acc.add(QuadraticValue.sqrt(2))
    with pytest.raises(MixedFieldError):
        acc.add(CycloValue.zeta(8))


def test_exact_sum_keeps_independent_surds():
    acc = ExactSum()
    for v in (QuadraticValue.sqrt(2), QuadraticValue.sqrt(5), Fraction(1, 2), -QuadraticValue.sqrt(2)):
        acc.add(v)
    assert not acc.equals(Fraction(1, 2))
    acc.add(-QuadraticValue.sqrt(5))
    assert acc.equals(Fraction(1, 2))
    assert acc.value() == Fraction(1, 2)


def test_cyclo_values_with_different_orders_combine():
    a = CycloValue.zeta(3)
    b = CycloValue.zeta(6, 2)
    assert a == b
    assert (CycloValue.zeta(4) * CycloValue.zeta(3)).m == 12
    assert CycloValue.zeta(12, 3) == CycloValue.zeta(4)


small = st.integers(-3, 3)


@st.composite
def cyclo_values(draw, m=None):
    m = draw(st.sampled_from([1, 2, 3, 4, 5, 7, 8, 9, 12, 15])) if m is None else m
    coeffs = draw(st.lists(small, min_size=m, max_size=m))
    return CycloValue(m, tuple(coeffs))


@given(cyclo_values())
def test_reduce_idempotent(v):
    r = reduce(v)
    assert reduce(r).coeffs == r.coeffs
    assert r == v


@given(cyclo_values())
def test_conj_involution_and_real_part(v):
    assert conj(conj(v)) == v
    r = real_part(v)
    assert real_part(r) == r
    assert conj(r) == r


@given(st.sampled_from([3, 5, 8, 12]).flatmap(lambda m: st.tuples(cyclo_values(m), cyclo_values(m), cyclo_values(m))))
def test_field_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a - a).is_zero()
    assert conj(a * b) == conj(a) * conj(b)


@given(st.tuples(small, small, st.sampled_from([-11, -7, -3, -1, 2, 3, 5, 6])), st.tuples(small, small))
def test_quadratic_matches_floats(x, y):
    a, b, d = x
    p = QuadraticValue(a, b, d)
    q = QuadraticValue(y[0], y[1], d)
    assert abs(complex(p * q) - complex(p) * complex(q)) < 1e-9
    assert abs(complex(p + q) - (complex(p) + complex(q))) < 1e-9
    assert abs(complex(p.conjugate()) - complex(p).conjugate()) < 1e-9


def test_zero_test_agrees_with_200_bit_evaluation():
    rng = random.Random(20231014)
    mp.prec = 200
    try:
        agree = 0
        for trial in range(1000):
            m = rng.choice([3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20, 21, 24])
            if trial % 2:
                # a multiple of Phi_m, written out unreduced
                phi = cyclotomic_polynomial(m)
                mult = [rng.randint(-2, 2) for _ in range(rng.randint(1, 3))]
                coeffs = [0] * (len(phi) + len(mult) - 1)
                for i, u in enumerate(mult):
                    for j, w in enumerate(phi):
                        coeffs[i + j] += u * w
            else:
                coeffs = [rng.randint(-2, 2) for _ in range(rng.randint(1, m))]
            v = CycloValue(m, tuple(coeffs))
            zeta = exp(2j * pi / m)
            approx = sum(mpc(c) * zeta**k for k, c in enumerate(coeffs))
            numeric_zero = abs(approx) < mp.mpf(2) ** -100
            assert v.is_zero() == numeric_zero
            agree += 1
        assert agree == 1000
    finally:
        mp.prec = 53


def test_simplify():
    assert simplify(Fraction(4, 2)) == 2 and isinstance(simplify(Fraction(4, 2)), int)
    assert simplify(CycloValue.rational(5, 3)) == 3
    assert simplify(QuadraticValue(Fraction(1, 2), 0, 1)) == Fraction(1, 2)


def test_cyclo_is_unhashable():
    with pytest.raises(TypeError):
        hash(CycloValue.zeta(3))


def test_quadratic_text_form():
    half = Fraction(1, 2)
    assert str(QuadraticValue(half, -half, 5)) == "1/2-1/2*sqrt(5)"
    assert str(QuadraticValue(0, -1, -11)) == "-sqrt(-11)"
    assert str(QuadraticValue(-1, 2, 3)) == "-1+2*sqrt(3)"

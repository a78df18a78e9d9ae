from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from charkit.cyclotomic import CycNum, parse_cyc, euler_phi, cyclotomic_polynomial


def z(m, k=1):
    return CycNum.root_of_unity(m, k)


def test_phi_and_cyclotomic_polys():
    assert [euler_phi(m) for m in [1, 2, 3, 4, 6, 12, 60]] == [1, 1, 2, 2, 2, 4, 16]
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_conjugation_examples():
    # conj(z4) = -z4, rationals fixed, linearity
    assert z(4).conj() == -z(4)
    assert CycNum.from_rational(Fraction(3, 2)).conj() == CycNum.from_rational(Fraction(3, 2))
    assert (1 + z(4)).conj() == 1 - z(4)


def test_arithmetic_examples():
    assert z(4) * z(4) == CycNum.from_rational(-1)
    assert (1 + z(4)) * (1 - z(4)) == CycNum.from_rational(2)
    # z6^2 reduces to z6 - 1 in Q(z6); canonically both live in Q(z3)
    assert z(6) ** 2 == z(6) - 1
    assert z(6) == 1 + z(3)


def test_canonical_order_reduction():
    assert z(6).order == 3
    assert z(4).order == 4
    assert (z(8) + z(8, 7)).order == 8  # sqrt(2) needs Q(z8)
    assert (z(12, 3)).order == 4  # z12^3 = z4
    assert (z(5) + z(5, 2) + z(5, 3) + z(5, 4)).order == 1  # sums to -1


def test_inverse_and_division():
    a = 1 + z(4)
    assert a * a.inverse() == CycNum.from_rational(1)
    with pytest.raises(ZeroDivisionError):
        CycNum.from_rational(0).inverse()
    assert (z(3) / z(3)) == CycNum.from_rational(1)


def test_mixed_order_arithmetic():
    a = z(4) + z(3)
    assert a.order == 12
    b = a - z(3)
    assert b == z(4)
    assert b.order == 4


def test_rendering_and_parsing_roundtrip():
    samples = [
        CycNum.from_rational(0),
        CycNum.from_rational(Fraction(-3, 2)),
        z(4),
        -z(4),
        1 + z(4),
        Fraction(1, 2) * (z(3) - z(3, 2)),
        z(8) + 2 * z(8, 3),
    ]
    for a in samples:
        assert parse_cyc(str(a)) == a


small_rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


@st.composite
def cyc_numbers(draw):
    order = draw(st.sampled_from([1, 3, 4, 6, 12]))
    coeffs = draw(
        st.lists(small_rationals, min_size=euler_phi(order), max_size=euler_phi(order))
    )
    return CycNum(order, coeffs)


@settings(max_examples=300, deadline=None)
@given(cyc_numbers())
def test_conjugation_is_involutive(a):
    assert a.conj().conj() == a


def test_conjugation_involutive_bulk():
    import random
    rng = random.Random(42)
    orders = [1, 2, 3, 4, 6, 12]
    for _ in range(10_000):
        m = rng.choice(orders)
        a = CycNum(m, [Fraction(rng.randrange(-6, 7), rng.randrange(1, 5))
                       for _ in range(euler_phi(m))])
        assert a.conj().conj() == a


@settings(max_examples=150, deadline=None)
@given(cyc_numbers())
def test_inverse_property(a):
    if not a.is_zero():
        assert a * a.inverse() == CycNum.from_rational(1)


@settings(max_examples=150, deadline=None)
@given(cyc_numbers(), cyc_numbers(), cyc_numbers())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a

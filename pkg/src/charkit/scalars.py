"""Scalar coefficient helpers.

Laurent polynomial coefficients are ``int | Fraction | CycNum``.  Rational
values stay as plain numbers so the hot paths (integer polynomial matrices,
brute-force counting) never touch cyclotomic machinery; a CycNum appears
only once an actual root of unity enters a computation.
"""
from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycNum, parse_cyc

Scalar = "int | Fraction | CycNum"


def s_add(a, b):
    if isinstance(a, CycNum) or isinstance(b, CycNum):
        return _cyc(a) + _cyc(b)
    return a + b


def s_mul(a, b):
    if isinstance(a, CycNum) or isinstance(b, CycNum):
        return _cyc(a) * _cyc(b)
    return a * b


def s_neg(a):
    return -a


def s_conj(a):
    if isinstance(a, CycNum):
        return a.conj()
    return a


def s_inv(a):
    if isinstance(a, CycNum):
        return a.inverse()
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    return Fraction(1, 1) / Fraction(a)


def s_is_zero(a) -> bool:
    if isinstance(a, CycNum):
        return a.is_zero()
    return a == 0


def s_eq(a, b) -> bool:
    if isinstance(a, CycNum) or isinstance(b, CycNum):
        return _cyc(a) == _cyc(b)
    return a == b


def s_simplify(a):
    """Collapse rational-valued CycNums back to plain numbers."""
    if isinstance(a, CycNum) and a.is_rational():
        r = a.as_rational()
        return int(r) if r.denominator == 1 else r
    if isinstance(a, Fraction) and a.denominator == 1:
        return int(a)
    return a


def s_render(a) -> str:
    if isinstance(a, CycNum):
        return str(a)
    if isinstance(a, Fraction):
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
    return str(a)


def s_parse(text: str):
    return s_simplify(parse_cyc(text))


def _cyc(a) -> CycNum:
    if isinstance(a, CycNum):
        return a
    return CycNum.from_rational(a)

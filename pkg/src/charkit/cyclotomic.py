"""Exact arithmetic in cyclotomic fields.

A value is stored in the power basis of a fixed cyclotomic field Q(zm):
``order`` m together with phi(m) rational coefficients, reduced modulo the
m-th cyclotomic polynomial.  On construction every value is pushed down to
the smallest field containing it (with order never congruent to 2 mod 4),
so equality and hashing are plain tuple comparisons and rationals always
live at order 1.

All values are immutable; operations are pure and safe to share between
threads.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import re

MAX_ORDER = 60


def euler_phi(m: int) -> int:
    result, n, p = 1, m, 2
    while p * p <= n:
        if n % p == 0:
            result *= p - 1
            n //= p
            while n % p == 0:
                result *= p
                n //= p
        p += 1
    if n > 1:
        result *= n - 1
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial."""
    # x^m - 1 divided by the cyclotomic polynomials of the proper divisors.
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _exact_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact division")
        c //= den[-1]
        out[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("non-exact division")
    return out


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row k expresses zm^(phi(m)+k) in the power basis, k = 0..phi(m)-2."""
    d = euler_phi(m)
    cyc = cyclotomic_polynomial(m)
    lead = cyc[d]
    assert lead == 1
    rows: list[tuple[Fraction, ...]] = []
    # zm^d = -(lower part of the cyclotomic polynomial)
    cur = [Fraction(-c) for c in cyc[:d]]
    rows.append(tuple(cur))
    for _ in range(d - 2):
        # multiply previous row by zm
        nxt = [Fraction(0)] + cur[: d - 1]
        top = cur[d - 1]
        if top:
            first = rows[0]
            nxt = [a + top * b for a, b in zip(nxt, first)]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


def _reduce_power_list(m: int, coeffs: list[Fraction]) -> list[Fraction]:
    """Reduce a coefficient list over powers zm^0..zm^k to the power basis."""
    d = euler_phi(m)
    if len(coeffs) <= d:
        return coeffs + [Fraction(0)] * (d - len(coeffs))
    out = coeffs[:]
    while len(out) > d:
        top = out.pop()
        if not top:
            continue
        row = _power_in_basis(m, len(out))
        for i, b in enumerate(row):
            out[i] += top * b
    return out + [Fraction(0)] * (d - len(out))


@lru_cache(maxsize=None)
def _power_in_basis(m: int, e: int) -> tuple[Fraction, ...]:
    """zm^e written in the power basis of Q(zm)."""
    d = euler_phi(m)
    e %= m
    if e < d:
        row = [Fraction(0)] * d
        row[e] = Fraction(1)
        return tuple(row)
    rows = _reduction_rows(m)
    if e - d < len(rows):
        return rows[e - d]
    # e >= 2d-1: reduce recursively via zm^(e-1) * zm
    prev = _power_in_basis(m, e - 1)
    shifted = [Fraction(0)] + list(prev[: d - 1])
    top = prev[d - 1]
    if top:
        first = _reduction_rows(m)[0]
        shifted = [a + top * b for a, b in zip(shifted, first)]
    return tuple(shifted)


class CycNum:
    """An element of a cyclotomic field, in canonical (smallest-order) form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs, reduce: bool = True):
        if order < 1:
            raise ValueError("order must be positive")
        if order > MAX_ORDER:
            raise ValueError(f"cyclotomic order {order} exceeds supported bound {MAX_ORDER}")
        coeffs = [Fraction(c) for c in coeffs]
        d = euler_phi(order)
        if len(coeffs) > d:
            coeffs = _reduce_power_list(order, coeffs)
        elif len(coeffs) < d:
            coeffs = coeffs + [Fraction(0)] * (d - len(coeffs))
        if reduce:
            order, coeffs = _canonicalize(order, coeffs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *args):
        raise AttributeError("CycNum is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_rational(value) -> CycNum:
        return CycNum(1, [Fraction(value)], reduce=False)

    @staticmethod
    def root_of_unity(m: int, k: int = 1) -> CycNum:
        """zm^k as a canonical cyclotomic number."""
        k %= m
        coeffs = [Fraction(0)] * m
        coeffs[k] = Fraction(1)
        return CycNum(m, coeffs)

    # -- predicates ----------------------------------------------------
    def is_zero(self) -> bool:
        return self.order == 1 and not self.coeffs[0]

    def is_rational(self) -> bool:
        return self.order == 1

    def as_rational(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic ----------------------------------------------------
    def _lift(self, m: int) -> list[Fraction]:
        """Coefficients of self in the power basis of Q(zm), self.order | m."""
        if m == self.order:
            return list(self.coeffs)
        step = m // self.order
        out = [Fraction(0)] * euler_phi(m)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            row = _power_in_basis(m, (i * step) % m)
            for j, b in enumerate(row):
                out[j] += c * b
        return out

    def __add__(self, other) -> CycNum:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            return CycNum(1, [self.coeffs[0] + other.coeffs[0]], reduce=False)
        m = _lcm(self.order, other.order)
        a, b = self._lift(m), other._lift(m)
        return CycNum(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        out = CycNum.__new__(CycNum)
        object.__setattr__(out, "order", self.order)
        object.__setattr__(out, "coeffs", tuple(-c for c in self.coeffs))
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other) -> CycNum:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == 1:
            c = self.coeffs[0]
            return CycNum(other.order, [c * x for x in other.coeffs],
                          reduce=not c)
        if other.order == 1:
            c = other.coeffs[0]
            return CycNum(self.order, [c * x for x in self.coeffs],
                          reduce=not c)
        m = _lcm(self.order, other.order)
        a, b = self._lift(m), other._lift(m)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
        return CycNum(m, prod)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.order == 1:
            return CycNum(1, [1 / self.coeffs[0]], reduce=False)
        # extended Euclid of self against the cyclotomic polynomial
        m = self.order
        mod = [Fraction(c) for c in cyclotomic_polynomial(m)]
        a = list(self.coeffs)
        inv = _poly_modinv(a, mod)
        return CycNum(m, inv)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> CycNum:
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNum.from_rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> CycNum:
        """Field automorphism sending every root of unity to its inverse."""
        return self.galois(-1)

    def galois(self, k: int) -> CycNum:
        """Automorphism zm -> zm^k; k must be coprime to the order."""
        m = self.order
        if m == 1:
            return self
        k %= m
        if _gcd(k, m) != 1:
            raise ValueError(f"galois exponent {k} not coprime to order {m}")
        out = [Fraction(0)] * euler_phi(m)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            row = _power_in_basis(m, (i * k) % m)
            for j, b in enumerate(row):
                out[j] += c * b
        return CycNum(m, out)

    # -- comparisons, hashing, rendering -------------------------------
    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycNum({self})"

    def __str__(self):
        if self.order == 1:
            return _fmt_rational(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                term = _fmt_rational(abs(c))
            else:
                z = f"z{self.order}" if i == 1 else f"z{self.order}^{i}"
                term = z if abs(c) == 1 else f"{_fmt_rational(abs(c))}*{z}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"


def _fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


ZERO = CycNum.from_rational(0)
ONE = CycNum.from_rational(1)


def _coerce(value):
    if isinstance(value, CycNum):
        return value
    if isinstance(value, (int, Fraction)):
        return CycNum.from_rational(value)
    return NotImplemented


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _lcm(a: int, b: int) -> int:
    return a // _gcd(a, b) * b


def _canonicalize(m: int, coeffs: list[Fraction]):
    """Push an element of Q(zm) into the smallest cyclotomic field containing it."""
    if m == 1:
        return 1, coeffs
    if all(not c for c in coeffs[1:]):
        return 1, [coeffs[0]]
    best = m
    for d in sorted(_divisors(m)):
        if d == m:
            break
        if d % 4 == 2:
            continue
        if _fits_in_suborder(m, coeffs, d):
            best = d
            break
    if best == m:
        return m, coeffs
    down = _express_in_suborder(m, coeffs, best)
    assert down is not None
    return _canonicalize(best, down)


def _divisors(m: int) -> list[int]:
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out


def _fits_in_suborder(m: int, coeffs: list[Fraction], d: int) -> bool:
    """True iff the element is fixed by Gal(Q(zm)/Q(zd))."""
    for k in range(2, m):
        if _gcd(k, m) != 1 or (k - 1) % d != 0:
            continue
        out = [Fraction(0)] * euler_phi(m)
        for i, c in enumerate(coeffs):
            if not c:
                continue
            row = _power_in_basis(m, (i * k) % m)
            for j, b in enumerate(row):
                out[j] += c * b
        if out != coeffs:
            return False
    return True


def _express_in_suborder(m: int, coeffs: list[Fraction], d: int):
    """Solve for coefficients over the power basis of Q(zd), or None."""
    dd = euler_phi(d)
    dm = euler_phi(m)
    step = m // d
    cols = []
    for j in range(dd):
        cols.append(_power_in_basis(m, (j * step) % m))
    # solve sum_j x_j * cols[j] = coeffs  (dm equations, dd unknowns)
    aug = [[cols[j][i] for j in range(dd)] + [coeffs[i]] for i in range(dm)]
    sol = _solve_exact(aug, dd)
    return sol


def _solve_exact(aug: list[list[Fraction]], ncols: int):
    rows = len(aug)
    piv_cols = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, rows):
            if aug[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    # consistency
    for i in range(r, rows):
        if aug[i][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][ncols]
    return sol


def _poly_modinv(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo mod in Q[x], via extended Euclid."""

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    def divmod_poly(n, d):
        n = n[:]
        q = [Fraction(0)] * max(1, len(n) - len(d) + 1)
        while len(n) >= len(d) and any(n):
            if not n[-1]:
                n.pop()
                continue
            k = len(n) - len(d)
            f = n[-1] / d[-1]
            q[k] += f
            for i, c in enumerate(d):
                n[k + i] -= f * c
            n.pop()
        return trim(q), trim(n)

    r0, r1 = trim(mod[:]), trim(a[:])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = divmod_poly(r0, r1)
        # s = s0 - q*s1
        s = s0[:] + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
        for i, qc in enumerate(q):
            if not qc:
                continue
            for j, sc in enumerate(s1):
                s[i + j] -= qc * sc
        r0, r1 = r1, r
        s0, s1 = s1, trim(s)
    # r0 = gcd (a constant, since mod is irreducible over Q)
    if len(r0) != 1:
        raise ArithmeticError("modulus not coprime with argument")
    c = r0[0]
    return [x / c for x in s0]


_TERM_RE = re.compile(
    r"^\s*(?P<sign>[+-]?)\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?"
    r"(?:z(?P<order>\d+)(?:\^(?P<exp>\d+))?)?\s*$"
)


def parse_cyc(text: str) -> CycNum:
    """Parse the canonical rendering, e.g. ``"1/2 + 3*z4"`` or ``"-z4^3"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty cyclotomic literal")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))
    total = ZERO
    for t in terms:
        m = _TERM_RE.match(t)
        if not m or (m.group("coef") is None and m.group("order") is None):
            raise ValueError(f"cannot parse cyclotomic literal {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("order"):
            order = int(m.group("order"))
            exp = int(m.group("exp") or 1)
            val = CycNum.root_of_unity(order, exp) * (sign * coef)
        else:
            val = CycNum.from_rational(sign * coef)
        total = total + val
    return total

"""Sparse Laurent polynomials in the indeterminate v, with q = v**2.

Coefficients are exact scalars (int, Fraction or CycNum).  The square root
of q is the monomial v itself, so values like q^(7/2) are exact monomials.
Values are immutable and hashable; all operations are pure.
"""
from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycNum
from .scalars import (
    s_add, s_conj, s_eq, s_is_zero, s_mul, s_neg, s_parse, s_render, s_simplify,
)


class UnsupportedSpecialization(ValueError):
    """The requested exact specialization does not land in the target field."""


class LaurentPoly:
    """A finite map from integer exponents of v to nonzero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                c = s_simplify(c)
                if not s_is_zero(c):
                    cur = clean.get(e)
                    if cur is None:
                        clean[e] = c
                    else:
                        merged = s_add(cur, c)
                        if s_is_zero(merged):
                            del clean[e]
                        else:
                            clean[e] = merged
        object.__setattr__(self, "terms", dict(clean))

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ---------------------------------------------------
    @staticmethod
    def zero() -> LaurentPoly:
        return _ZERO

    @staticmethod
    def one() -> LaurentPoly:
        return _ONE

    @staticmethod
    def const(c) -> LaurentPoly:
        return LaurentPoly({0: c})

    @staticmethod
    def v(exp: int = 1, coeff=1) -> LaurentPoly:
        return LaurentPoly({exp: coeff})

    @staticmethod
    def q(exp: int = 1, coeff=1) -> LaurentPoly:
        """coeff * q**exp as a Laurent polynomial in v."""
        return LaurentPoly({2 * exp: coeff})

    # -- ring operations --------------------------------------------------
    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            if cur is None:
                out[e] = c
            else:
                s = s_add(cur, c)
                if s_is_zero(s):
                    del out[e]
                else:
                    out[e] = s
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return _raw({e: s_neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                p = s_mul(ca, cb)
                cur = out.get(e)
                if cur is None:
                    out[e] = p
                else:
                    s = s_add(cur, p)
                    if s_is_zero(s):
                        del out[e]
                    else:
                        out[e] = s
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            mono = self.as_monomial()
            if mono is None:
                raise ValueError("negative powers only supported for monomials")
            e, c = mono
            from .scalars import s_inv
            return LaurentPoly({-e: s_inv(c)}) ** (-n)
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj_coeffs(self) -> LaurentPoly:
        """Apply the root-of-unity conjugation to every coefficient."""
        return _raw({e: s_conj(c) for e, c in self.terms.items()})

    # -- queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Largest exponent of v; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def valuation(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self.terms)

    def coeff(self, e: int):
        return self.terms.get(e, 0)

    def as_monomial(self):
        """(exponent, coefficient) if the value is a single term, else None."""
        if len(self.terms) != 1:
            return None
        [(e, c)] = self.terms.items()
        return e, c

    def as_scalar(self):
        """The constant coefficient if the value is constant, else raises."""
        if not self.terms:
            return 0
        if set(self.terms) == {0}:
            return self.terms[0]
        raise ValueError(f"{self} is not a constant")

    # -- specializations ---------------------------------------------------
    def at_v_one(self):
        """Ring map v -> 1 onto exact scalars."""
        total = 0
        for c in self.terms.values():
            total = s_add(total, c)
        return s_simplify(total)

    def specialize_sqrt_q(self, p: int, fexp: int):
        """Substitute v -> sqrt(q) with q = p**fexp.

        Returns a pair (even_part, odd_coeff) of exact scalars meaning
        even_part + odd_coeff*sqrt(p).  When sqrt(q) is rational
        (fexp even) everything lands in even_part.
        """
        if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        if fexp < 1:
            raise ValueError("field exponent must be positive")
        even = 0
        odd = 0
        for e, c in self.terms.items():
            ef = e * fexp
            if ef % 2 == 0:
                val = Fraction(p) ** (ef // 2)
                even = s_add(even, s_mul(c, val))
            else:
                val = Fraction(p) ** ((ef - 1) // 2)
                odd = s_add(odd, s_mul(c, val))
        return s_simplify(even), s_simplify(odd)

    def specialize_exact(self, p: int, fexp: int):
        """Substitute v -> sqrt(p)**fexp, requiring the result to be cyclotomic.

        Raises UnsupportedSpecialization when an odd power of sqrt(p)
        survives, i.e. the value genuinely involves sqrt(p).
        """
        even, odd = self.specialize_sqrt_q(p, fexp)
        if not s_is_zero(odd):
            raise UnsupportedSpecialization(
                f"value {self} at q={p}^{fexp} involves sqrt({p})"
            )
        return even

    def divide_exact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ValueError when the remainder is nonzero."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError(f"{self} is not divisible by {other}")
        return q

    def divmod(self, other: LaurentPoly):
        """Quotient and remainder after shifting both sides to valuation 0."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return _ZERO, _ZERO
        from .scalars import s_inv
        sv, ov = self.valuation(), other.valuation()
        rem = {e - sv: c for e, c in self.terms.items()}
        den = {e - ov: c for e, c in other.terms.items()}
        dg = max(den)
        lead_inv = s_inv(den[dg])
        quo: dict = {}
        while rem and max(rem) >= dg:
            top = max(rem)
            f = s_mul(rem[top], lead_inv)
            e = top - dg
            quo[e] = s_add(quo.get(e, 0), f)
            for eo, co in den.items():
                k = e + eo
                s = s_add(rem.get(k, 0), s_neg(s_mul(f, co)))
                if s_is_zero(s):
                    rem.pop(k, None)
                else:
                    rem[k] = s
        return (
            _raw({e + sv - ov: c for e, c in quo.items()}),
            _raw({e + sv: c for e, c in rem.items()}),
        )

    # -- comparisons / rendering -----------------------------------------
    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(s_eq(c, other.terms[e]) for e, c in self.terms.items())

    def __hash__(self):
        return hash(frozenset((e, _hashable(c)) for e, c in self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentPoly('{self}')"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            cs = s_render(c)
            needs_wrap = ("+" in cs[1:]) or ("- " in cs) or (" " in cs)
            if e == 0:
                term = f"({cs})" if needs_wrap else cs
            else:
                ve = "v" if e == 1 else f"v^{e}"
                if needs_wrap:
                    term = f"({cs})*{ve}"
                elif cs == "1":
                    term = ve
                elif cs == "-1":
                    term = f"-{ve}"
                else:
                    term = f"{cs}*{ve}"
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append(f"- {term[1:]}")
            else:
                parts.append(f"+ {term}")
        return " ".join(parts)


def _hashable(c):
    if isinstance(c, CycNum):
        return c
    return Fraction(c)


def _raw(terms: dict) -> LaurentPoly:
    out = LaurentPoly.__new__(LaurentPoly)
    object.__setattr__(out, "terms", terms)
    return out


def _coerce(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction, CycNum)):
        return LaurentPoly({0: value}) if not s_is_zero(value) else _ZERO
    return NotImplemented


_ZERO = _raw({})
_ONE = _raw({0: 1})


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the canonical rendering produced by str()."""
    text = text.strip()
    if text == "0":
        return _ZERO
    out = {}
    for chunk in _split_terms(text):
        e, c = _parse_term(chunk)
        out[e] = s_add(out.get(e, 0), c)
    return LaurentPoly(out)


def _split_terms(text: str):
    # split on top-level + and - (not inside parentheses)
    terms, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and cur.strip() and not cur.rstrip().endswith(("*", "^", "(")):
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur.strip():
        terms.append(cur)
    return [t.replace(" ", "") for t in terms]


def _parse_term(chunk: str):
    sign = 1
    while chunk and chunk[0] in "+-":
        if chunk[0] == "-":
            sign = -sign
        chunk = chunk[1:]
    exp = 0
    coeff_text = chunk
    if "v" in chunk:
        head, _, tail = chunk.partition("v")
        coeff_text = head.rstrip("*")
        exp = int(tail[1:]) if tail.startswith("^") else (1 if not tail else int(tail))
    coeff_text = coeff_text.strip("()")
    coeff = s_parse(coeff_text) if coeff_text else 1
    return exp, s_mul(sign, coeff)

"""Generic Iwahori-Hecke algebras over Laurent polynomials in v (q = v^2).

Two layers:

* ``HeckeElement``: elements in the T-basis with the defining relations
  T_s T_w = T_{sw} when the length goes up, q T_{sw} + (q-1) T_w when it
  goes down.

* ``IrrepModel``: explicit matrix models used as a trace oracle.  Each
  generator acts as a sparse matrix P_i / D with polynomial P_i and one
  polynomial denominator D per model, so all identities (quadratic, braid)
  are checked exactly in the polynomial ring.  Covers the one-dimensional
  models, two-dimensional models for the rank-2 types, and the tableau
  (seminormal) models for A_{n-1}, n <= 6.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPoly
from .roots import RootSystem, WeylElement


class DatumMismatch(ValueError):
    pass


class UnsupportedLabel(KeyError):
    pass


_Q = LaurentPoly.q()
_ONE = LaurentPoly.one()


def _q_pow(k: int) -> LaurentPoly:
    return LaurentPoly.q(k)


def _q_minus_one() -> LaurentPoly:
    return _Q - 1


class HeckeElement:
    """A finite T-basis combination with LaurentPoly coefficients."""

    def __init__(self, rs: RootSystem, support=None):
        self.rs = rs
        self.support: dict[WeylElement, LaurentPoly] = {}
        if support:
            for w, c in (support.items() if isinstance(support, dict) else support):
                if not c.is_zero():
                    cur = self.support.get(w)
                    s = c if cur is None else cur + c
                    if s.is_zero():
                        self.support.pop(w, None)
                    else:
                        self.support[w] = s

    @staticmethod
    def basis(rs: RootSystem, w: WeylElement) -> HeckeElement:
        return HeckeElement(rs, {w: _ONE})

    @staticmethod
    def unit(rs: RootSystem) -> HeckeElement:
        return HeckeElement.basis(rs, rs.identity())

    def _check(self, other: HeckeElement):
        if self.rs is not other.rs:
            raise DatumMismatch("elements live over different data")

    def __add__(self, other: HeckeElement) -> HeckeElement:
        self._check(other)
        out = dict(self.support)
        for w, c in other.support.items():
            s = out.get(w, LaurentPoly.zero()) + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return HeckeElement(self.rs, out)

    def __neg__(self):
        return HeckeElement(self.rs, {w: -c for w, c in self.support.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, poly) -> HeckeElement:
        poly = poly if isinstance(poly, LaurentPoly) else LaurentPoly.const(poly)
        return HeckeElement(self.rs, {w: c * poly for w, c in self.support.items()})

    def gen_left(self, i: int) -> HeckeElement:
        """Multiply by T_{s_i} on the left."""
        out: dict[WeylElement, LaurentPoly] = {}
        qm1 = _q_minus_one()

        def put(w, c):
            s = out.get(w, LaurentPoly.zero()) + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s

        for w, c in self.support.items():
            sw = w.mul_gen_left(i)
            if sw.length > w.length:
                put(sw, c)
            else:
                put(sw, c * _Q)
                put(w, c * qm1)
        return HeckeElement(self.rs, out)

    def __mul__(self, other: HeckeElement) -> HeckeElement:
        self._check(other)
        total = HeckeElement(self.rs)
        for w, c in self.support.items():
            acc = other
            for i in reversed(w.reduced_word()):
                acc = acc.gen_left(i)
            total = total + acc.scale(c)
        return total

    def __eq__(self, other):
        if not isinstance(other, HeckeElement) or self.rs is not other.rs:
            return NotImplemented
        return self.support == other.support

    def __repr__(self):
        if not self.support:
            return "HeckeElement(0)"
        bits = []
        for w in sorted(self.support, key=lambda w: (w.length, w.perm)):
            word = "".join(str(i + 1) for i in w.reduced_word()) or "e"
            bits.append(f"({self.support[w]})*T_{word}")
        return " + ".join(bits)


# -- matrix models ----------------------------------------------------------

SparseMat = "tuple[dict[int, LaurentPoly], ...]"


@dataclass(frozen=True)
class IrrepModel:
    """Generator matrices P_i / den acting on column vectors."""
    type_label: str
    label: str
    dim: int
    numerators: tuple          # one sparse matrix (tuple of row dicts) per generator
    den: LaurentPoly           # common polynomial denominator

    def verify_quadratic(self) -> bool:
        """(T - q)(T + 1) = 0, i.e. (P - q den)(P + den) = 0."""
        for P in self.numerators:
            qd = _Q * self.den
            a = _mat_add_scalar(P, -qd, self.dim)
            b = _mat_add_scalar(P, self.den, self.dim)
            if not _mat_is_zero(_mat_mul(a, b)):
                return False
        return True

    def verify_braid(self, datum) -> bool:
        for i in range(len(self.numerators)):
            for j in range(i + 1, len(self.numerators)):
                m = datum.coxeter_m(i, j)
                a, b = self.numerators[i], self.numerators[j]
                lhs, rhs = a, b
                for k in range(m - 1):
                    lhs = _mat_mul(lhs, b if k % 2 == 0 else a)
                    rhs = _mat_mul(rhs, a if k % 2 == 0 else b)
                if not _mat_eq(lhs, rhs):
                    return False
        return True

    def trace_word(self, word) -> LaurentPoly:
        """Trace of T_{word} (word must be reduced), an exact Laurent polynomial."""
        word = list(word)
        if not word:
            return LaurentPoly.const(self.dim)
        acc = self.numerators[word[0]]
        for i in word[1:]:
            acc = _mat_mul(acc, self.numerators[i])
        tr = LaurentPoly.zero()
        for r in range(self.dim):
            tr = tr + acc[r].get(r, LaurentPoly.zero())
        return tr.divide_exact(self.den ** len(word))

    def trace(self, w: WeylElement) -> LaurentPoly:
        if w.rs.datum.type_label != self.type_label:
            raise DatumMismatch(
                f"model over {self.type_label}, element over {w.rs.datum.type_label}"
            )
        return self.trace_word(w.reduced_word())


def _mat_mul(a, b):
    dim = len(a)
    out = [dict() for _ in range(dim)]
    for i in range(dim):
        row = a[i]
        target = out[i]
        for k, cik in row.items():
            for j, ckj in b[k].items():
                prod = cik * ckj
                cur = target.get(j)
                s = prod if cur is None else cur + prod
                if s.is_zero():
                    target.pop(j, None)
                else:
                    target[j] = s
    return tuple(out)


def _mat_add_scalar(a, s: LaurentPoly, dim: int):
    out = []
    for i in range(dim):
        row = dict(a[i])
        cur = row.get(i, LaurentPoly.zero()) + s
        if cur.is_zero():
            row.pop(i, None)
        else:
            row[i] = cur
        out.append(row)
    return tuple(out)


def _mat_is_zero(a) -> bool:
    return all(not row for row in a)


def _mat_eq(a, b) -> bool:
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if set(ra) != set(rb):
            return False
        for k in ra:
            if ra[k] != rb[k]:
                return False
    return True


# -- model construction -----------------------------------------------------

def build_irrep_model(datum, label) -> IrrepModel:
    key = _label_key(label)
    return _build_model_cached(datum.type_label, datum.rank, key)


def _label_key(label) -> str:
    if isinstance(label, (tuple, list)):
        return "(" + ",".join(str(int(p)) for p in label) + ")"
    return str(label)


@lru_cache(maxsize=None)
def _build_model_cached(type_label: str, rank: int, label: str) -> IrrepModel:
    if label == "triv":
        return _one_dim(type_label, rank, label, [_Q] * rank)
    if label == "sign":
        return _one_dim(type_label, rank, label, [LaurentPoly.const(-1)] * rank)
    if type_label.startswith("A") and label.startswith("("):
        mu = tuple(int(t) for t in label.strip("()").split(",") if t)
        return _seminormal_model(type_label, rank, mu)
    if rank == 2 and label.startswith("dihedral_"):
        return _dihedral_model(type_label, int(label.split("_")[1]))
    if rank == 2 and label in ("mixed_1", "mixed_2"):
        m = {"A2": 3, "B2": 4, "C2": 4, "G2": 6}[type_label]
        if m % 2:
            raise UnsupportedLabel(
                f"mixed one-dimensional labels need an even bond ({type_label})"
            )
        vals = [_Q, LaurentPoly.const(-1)]
        if label == "mixed_2":
            vals.reverse()
        return _one_dim(type_label, 2, label, vals)
    raise UnsupportedLabel(f"no bundled model for {label!r} over {type_label}")


def _one_dim(type_label, rank, label, values) -> IrrepModel:
    mats = tuple(({0: val},) for val in values)
    return IrrepModel(type_label, label, 1, mats, _ONE)


def _dihedral_model(type_label: str, j: int) -> IrrepModel:
    """Two-dimensional model of the rank-2 algebra with bond m, 1 <= j < m/2."""
    m = {"A2": 3, "B2": 4, "C2": 4, "G2": 6}.get(type_label)
    if m is None or not 1 <= j <= (m - 1) // 2:
        raise UnsupportedLabel(f"dihedral_{j} not available over {type_label}")
    from .cyclotomic import CycNum
    c = CycNum.root_of_unity(2 * m, j) + CycNum.root_of_unity(2 * m, 2 * m - j)
    vc = LaurentPoly.v(1, c)
    minus_one = LaurentPoly.const(-1)
    t0 = ({0: minus_one, 1: vc}, {1: _Q})
    t1 = ({0: _Q}, {0: vc, 1: minus_one})
    return IrrepModel(type_label, f"dihedral_{j}", 2, (t0, t1), _ONE)


# seminormal tableau models ------------------------------------------------

def standard_tableaux(shape: tuple[int, ...]):
    """All standard Young tableaux of the shape, entries 1..n."""
    n = sum(shape)
    rows = len(shape)
    out = []

    def rec(rowlists, counts, k):
        if k > n:
            out.append(tuple(tuple(r) for r in rowlists))
            return
        for r in range(rows):
            if counts[r] < shape[r] and (r == 0 or counts[r] < counts[r - 1]):
                counts[r] += 1
                rowlists[r].append(k)
                rec(rowlists, counts, k + 1)
                rowlists[r].pop()
                counts[r] -= 1

    rec([[] for _ in range(rows)], [0] * rows, 1)
    return out


def _positions(tab):
    pos = {}
    for r, row in enumerate(tab):
        for c, val in enumerate(row):
            pos[val] = (r, c)
    return pos


def _seminormal_model(type_label: str, rank: int, shape: tuple[int, ...]) -> IrrepModel:
    n = rank + 1
    if sum(shape) != n:
        raise UnsupportedLabel(f"partition {shape} is not a partition of {n}")
    if any(a < b for a, b in zip(shape, shape[1:])) or any(p <= 0 for p in shape):
        raise UnsupportedLabel(f"{shape} is not a partition")
    tabs = standard_tableaux(shape)
    index = {t: i for i, t in enumerate(tabs)}
    dim = len(tabs)
    dmax = (shape[0] - 1) + (len(shape) - 1)
    den = _ONE
    for d in range(2, dmax + 1):
        den = den * (_q_pow(d) - 1) ** 2
    mats = []
    for k in range(rank):  # s_k swaps entries k+1, k+2
        rows = [dict() for _ in range(dim)]
        for t in tabs:
            pos = _positions(t)
            (ra, ca), (rb, cb) = pos[k + 1], pos[k + 2]
            d = (cb - rb) - (ca - ra)
            ti = index[t]
            if d == 1:
                rows[ti][ti] = _Q * den
            elif d == -1:
                rows[ti][ti] = -den
            elif d > 1:
                t2 = _swap_entries(t, k + 1, k + 2)
                tj = index[t2]
                rest = _ONE
                for e in range(2, dmax + 1):
                    if e != d:
                        rest = rest * (_q_pow(e) - 1) ** 2
                qd = _q_pow(d)
                qm1 = _q_minus_one()
                alpha = _q_pow(d) * qm1 * (qd - 1) * rest          # m(d) * den
                alpha2 = -(qm1 * (qd - 1) * rest)                  # m(-d) * den
                gamma = _Q * (_q_pow(d + 1) - 1) * (_q_pow(d - 1) - 1) * rest
                # columns: T(v_t) = m(d) v_t + v_t2 ; T(v_t2) = gamma/den v_t + m(-d) v_t2
                rows[ti][ti] = alpha
                rows[tj][ti] = den
                rows[ti][tj] = gamma
                rows[tj][tj] = alpha2
        mats.append(tuple(rows))
    return IrrepModel(type_label, _label_key(shape), dim, tuple(mats), den)


def _swap_entries(tab, a, b):
    out = []
    for row in tab:
        out.append(tuple(b if x == a else a if x == b else x for x in row))
    return tuple(out)


def supported_labels(datum) -> list[str]:
    """Labels with bundled models for this datum."""
    t = datum.type_label
    out = ["triv", "sign"]
    if t.startswith("A"):
        n = datum.rank + 1
        out.extend(_label_key(p) for p in _partitions(n))
    if datum.rank == 2:
        m = datum.coxeter_m(0, 1)
        out.extend(f"dihedral_{j}" for j in range(1, (m - 1) // 2 + 1))
        if m % 2 == 0:
            out.extend(["mixed_1", "mixed_2"])
    seen = []
    for lab in out:
        if lab not in seen:
            seen.append(lab)
    return seen


def _partitions(n: int, cap: int | None = None):
    cap = cap or n
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest

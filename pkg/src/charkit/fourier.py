"""Pairs (g, sigma), the nonabelian Fourier pairing and its matrix.

For a small finite group G the set of pairs consists of a conjugacy class
representative g together with an irreducible character of its centralizer,
up to simultaneous conjugation.  With one fixed representative per class the
equivalence is already rigid (twisting a centralizer character by an inner
automorphism fixes it), so the canonical pairs are exactly
(class index, character index), ordered lexicographically.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycNum
from .groups import FiniteGroup, group_from_text


class InvariantViolation(AssertionError):
    """A structural identity of the pairing matrix failed."""


@dataclass(frozen=True)
class MPair:
    class_index: int
    char_index: int
    canonical: bool = True

    def as_tuple(self):
        return (self.class_index, self.char_index)


class GroupPairData:
    """Caches centralizer tables and class-lookup maps for one group."""

    def __init__(self, G: FiniteGroup):
        self.G = G
        self.classes = G.conjugacy_classes()
        self.cent_groups = []
        self.cent_tables = []
        self.cent_class_of = []   # ambient element index -> centralizer class index
        for rep, cent in zip(self.classes.class_reps, self.classes.centralizers):
            sub = G.subgroup(cent)
            table = sub.character_table()
            lookup = {}
            for y in cent:
                sub_idx = sub.index[_pad(G.elements[y], sub.degree)]
                lookup[y] = table.classes.class_of[sub_idx]
            self.cent_groups.append(sub)
            self.cent_tables.append(table)
            self.cent_class_of.append(lookup)

    def m_set(self) -> list[MPair]:
        out = []
        for ci, table in enumerate(self.cent_tables):
            for chi in range(table.num_classes):
                out.append(MPair(ci, chi))
        return out


def _pad(perm, degree):
    return tuple(perm) + tuple(range(len(perm), degree))


def m_set(G: FiniteGroup) -> list[MPair]:
    return GroupPairData(G).m_set()


def pairing(G: FiniteGroup, x: MPair, y: MPair, data: GroupPairData | None = None) -> CycNum:
    data = data or GroupPairData(G)
    return _pairing_from_counts(data, _pair_counts(data, x.class_index, y.class_index),
                                x, y)


def _pair_counts(data: GroupPairData, ci: int, cj: int):
    """Histogram of (tau-argument class, sigma-argument class) over the x-sum.

    For g the representative of class ci and h of class cj, runs over all
    x in G with g commuting with xhx^-1 and counts the pair of classes of
    x^-1 g^-1 x   (inside C(h))   and   x h x^-1   (inside C(g)).
    """
    G = data.G
    g = data.classes.class_reps[ci]
    h = data.classes.class_reps[cj]
    ginv = G.inv(g)
    counts: dict[tuple[int, int], int] = {}
    lookup_h = data.cent_class_of[cj]
    lookup_g = data.cent_class_of[ci]
    for x in range(G.order):
        xhx = G.conj(h, x)
        if G.mult(g, xhx) != G.mult(xhx, g):
            continue
        y = G.conj(ginv, G.inv(x))
        key = (lookup_h[y], lookup_g[xhx])
        counts[key] = counts.get(key, 0) + 1
    return counts


def _pairing_from_counts(data, counts, x: MPair, y: MPair) -> CycNum:
    tau = data.cent_tables[y.class_index].rows[y.char_index]
    sigma = data.cent_tables[x.class_index].rows[x.char_index]
    total = CycNum.from_rational(0)
    for (a, b), n in counts.items():
        total = total + n * tau[a] * sigma[b]
    cg = len(data.classes.centralizers[x.class_index])
    ch = len(data.classes.centralizers[y.class_index])
    return total * CycNum.from_rational(Fraction(1, cg * ch))


@dataclass(frozen=True)
class FourierMatrix:
    group: FiniteGroup
    mpairs: tuple[MPair, ...]
    entries: tuple[tuple[CycNum, ...], ...]

    @property
    def size(self) -> int:
        return len(self.mpairs)

    def entry(self, x: MPair, y: MPair) -> CycNum:
        return self.entries[self.mpairs.index(x)][self.mpairs.index(y)]

    def is_hermitian(self) -> bool:
        n = self.size
        return all(
            self.entries[i][j] == self.entries[j][i].conj()
            for i in range(n) for j in range(i, n)
        )

    def is_involution(self) -> bool:
        n = self.size
        one = CycNum.from_rational(1)
        zero = CycNum.from_rational(0)
        for i in range(n):
            for j in range(i, n):
                total = zero
                for k in range(n):
                    total = total + self.entries[i][k] * self.entries[k][j]
                if total != (one if i == j else zero):
                    return False
        return True


def fourier_matrix(G: FiniteGroup, verify: bool = True) -> FourierMatrix:
    data = GroupPairData(G)
    pairs = data.m_set()
    n = len(pairs)
    # group pairs by class so each (class, class) histogram is computed once
    entries = [[None] * n for _ in range(n)]
    by_class: dict[int, list[int]] = {}
    for idx, p in enumerate(pairs):
        by_class.setdefault(p.class_index, []).append(idx)
    for ci, idxs_i in by_class.items():
        for cj, idxs_j in by_class.items():
            counts = _pair_counts(data, ci, cj)
            for ii in idxs_i:
                for jj in idxs_j:
                    entries[ii][jj] = _pairing_from_counts(
                        data, counts, pairs[ii], pairs[jj]
                    )
    fm = FourierMatrix(G, tuple(pairs), tuple(tuple(row) for row in entries))
    if verify:
        if not fm.is_hermitian():
            raise InvariantViolation("pairing matrix is not hermitian")
        if not fm.is_involution():
            raise InvariantViolation("pairing matrix squared is not the identity")
    return fm


class KeyMismatch(KeyError):
    pass


def almost_transform(fm: FourierMatrix, members, direction: str, values: dict) -> dict:
    """Signed Fourier transform between member values and almost-character values.

    ``members``: list of (key, mpair, delta).  In direction ``rho_to_R`` the
    input is keyed by member keys and the output by the mpairs of the full
    pair set; in direction ``R_to_rho`` the reverse.  Values may be any
    module over the cyclotomic scalars (Laurent polynomials in practice).
    """
    mem = [(k, MPair(*mp) if not isinstance(mp, MPair) else mp, d) for k, mp, d in members]
    index = {p: i for i, p in enumerate(fm.mpairs)}
    for _, mp, _ in mem:
        if mp not in index:
            raise KeyMismatch(f"{mp} is not a pair of the family group")
    if direction == "rho_to_R":
        if set(values) != {k for k, _, _ in mem}:
            raise KeyMismatch("values must be keyed by the family members")
        out = {}
        for x in fm.mpairs:
            total = None
            xi = index[x]
            for key, mp, delta in mem:
                coef = fm.entries[index[mp]][xi]
                if delta < 0:
                    coef = -coef
                term = values[key] * coef
                total = term if total is None else total + term
            out[x.as_tuple()] = total
        return out
    if direction == "R_to_rho":
        if set(values) != {p.as_tuple() for p in fm.mpairs}:
            raise KeyMismatch("values must be keyed by the full pair set")
        out = {}
        for key, mp, delta in mem:
            total = None
            mi = index[mp]
            for x in fm.mpairs:
                coef = fm.entries[mi][index[x]].conj()
                term = values[x.as_tuple()] * coef
                total = term if total is None else total + term
            if delta < 0:
                total = total * CycNum.from_rational(-1)
            out[key] = total
        return out
    raise ValueError(f"unknown direction {direction!r}")


def fourier_for_group_name(name: str) -> FourierMatrix:
    return fourier_matrix(group_from_text(name))

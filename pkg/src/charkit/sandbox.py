"""Brute-force GL_n(F_q) laboratories (n <= 3, q in {2, 3, 4}).

Everything is enumerated: elements, Borel double cosets, conjugacy classes,
fixed points on parabolic coset spaces.  This is the desk-scale ground truth
against which the Hecke-algebra identities are checked exhaustively.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .cartan import CartanDatum
from .hecke import build_irrep_model
from .laurent import LaurentPoly

SIZE_CAP = 20_000


class SizeCapExceeded(RuntimeError):
    pass


class NonIntegerCharacter(ArithmeticError):
    """A constituent extracted from permutation characters came out fractional."""


class Fq:
    """A tiny finite field; q = 4 is F_2[x]/(x^2+x+1) on symbols {0,1,2,3}."""

    def __init__(self, q: int):
        if q not in (2, 3, 4):
            raise ValueError("supported field sizes: 2, 3, 4")
        self.q = q
        if q in (2, 3):
            self.add = tuple(tuple((a + b) % q for b in range(q)) for a in range(q))
            self.mul = tuple(tuple((a * b) % q for b in range(q)) for a in range(q))
        else:
            # bit representation a = a0 + a1*x, product mod x^2 + x + 1
            def gf4_mul(a, b):
                a0, a1 = a & 1, a >> 1
                b0, b1 = b & 1, b >> 1
                c0 = (a0 & b0) ^ (a1 & b1)
                c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1)
                return c0 | (c1 << 1)

            self.add = tuple(tuple(a ^ b for b in range(4)) for a in range(4))
            self.mul = tuple(tuple(gf4_mul(a, b) for b in range(4)) for a in range(4))
        self.neg = tuple(next(b for b in range(q) if self.add[a][b] == 0)
                         for a in range(q))
        self.inv = tuple(0 if a == 0 else
                         next(b for b in range(1, q) if self.mul[a][b] == 1)
                         for a in range(q))


@dataclass(frozen=True)
class SandboxReport:
    check: str
    n: int
    q: int
    cases: int
    failures: tuple

    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"check": self.check, "n": self.n, "q": self.q,
                "cases": self.cases, "failures": list(self.failures)}


class LieGroupSandbox:
    def __init__(self, n: int, q: int, cap: int = SIZE_CAP):
        if n > 3:
            raise SizeCapExceeded("rank capped at n = 3")
        self.n = n
        self.q = q
        self.field = Fq(q)
        expected = 1
        for i in range(n):
            expected *= q ** n - q ** i
        if expected > cap:
            raise SizeCapExceeded(
                f"|GL_{n}(F_{q})| = {expected} exceeds cap {cap}"
            )
        self.elements: list[tuple[int, ...]] = [
            m for m in product(range(q), repeat=n * n) if self._invertible(m)
        ]
        assert len(self.elements) == expected
        self.index = {m: i for i, m in enumerate(self.elements)}
        self.identity = self.index[self._eye()]
        self.borel = frozenset(
            i for i, m in enumerate(self.elements) if self._is_upper(m)
        )
        self.torus = frozenset(
            i for i, m in enumerate(self.elements) if self._is_diagonal(m)
        )
        self.weyl_reps = {}
        for perm in permutations(range(n)):
            mat = [0] * (n * n)
            for j, i in enumerate(perm):
                mat[i * n + j] = 1
            self.weyl_reps[perm] = self.index[tuple(mat)]
        self.cell_of: list[tuple[int, ...]] = [
            self._bruhat_label(m) for m in self.elements
        ]
        self._conjugacy()

    # -- matrix helpers ------------------------------------------------
    def _eye(self):
        n = self.n
        return tuple(1 if i == j else 0 for i in range(n) for j in range(n))

    def mat_mul(self, a, b):
        n, F = self.n, self.field
        out = [0] * (n * n)
        for i in range(n):
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = F.add[acc][F.mul[a[i * n + k]][b[k * n + j]]]
                out[i * n + j] = acc
        return tuple(out)

    def mat_inv(self, a):
        n, F = self.n, self.field
        aug = [[a[i * n + j] for j in range(n)] + [1 if i == k else 0 for k in range(n)]
               for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col])
            aug[col], aug[piv] = aug[piv], aug[col]
            s = F.inv[aug[col][col]]
            aug[col] = [F.mul[x][s] for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [F.add[x][F.neg[F.mul[f][y]]]
                              for x, y in zip(aug[r], aug[col])]
        return tuple(aug[i][n + j] for i in range(n) for j in range(n))

    def _invertible(self, m) -> bool:
        n, F = self.n, self.field
        rows = [list(m[i * n:(i + 1) * n]) for i in range(n)]
        rank = 0
        for col in range(n):
            piv = next((r for r in range(rank, n) if rows[r][col]), None)
            if piv is None:
                return False
            rows[rank], rows[piv] = rows[piv], rows[rank]
            s = F.inv[rows[rank][col]]
            rows[rank] = [F.mul[x][s] for x in rows[rank]]
            for r in range(n):
                if r != rank and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [F.add[x][F.neg[F.mul[f][y]]]
                               for x, y in zip(rows[r], rows[rank])]
            rank += 1
        return True

    def _is_upper(self, m) -> bool:
        n = self.n
        return all(m[i * n + j] == 0 for i in range(n) for j in range(i))

    def _is_diagonal(self, m) -> bool:
        n = self.n
        return all(m[i * n + j] == 0 for i in range(n) for j in range(n) if i != j)

    def _bruhat_label(self, m) -> tuple[int, ...]:
        """The S_n label of the Borel double coset of m, via corner ranks."""
        n = self.n

        def corner_rank(i0, j1):
            # rank of rows i0..n-1, cols 0..j1
            rows = [list(m[i * n:i * n + j1 + 1]) for i in range(i0, n)]
            return self._rank(rows)

        R = [[corner_rank(i, j) for j in range(n)] for i in range(n)]

        def entry(i, j):
            a = R[i][j]
            b = R[i + 1][j] if i + 1 < n else 0
            c = R[i][j - 1] if j else 0
            d = R[i + 1][j - 1] if (i + 1 < n and j) else 0
            return a - b - c + d

        w = [None] * n
        for j in range(n):
            for i in range(n):
                if entry(i, j) == 1:
                    w[j] = i
                    break
        assert all(x is not None for x in w)
        return tuple(w)

    def _rank(self, rows) -> int:
        F = self.field
        if not rows:
            return 0
        cols = len(rows[0])
        rank = 0
        for col in range(cols):
            piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            s = F.inv[rows[rank][col]]
            rows[rank] = [F.mul[x][s] for x in rows[rank]]
            for r in range(len(rows)):
                if r != rank and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [F.add[x][F.neg[F.mul[f][y]]]
                               for x, y in zip(rows[r], rows[rank])]
            rank += 1
            if rank == len(rows):
                break
        return rank

    # -- group structure -------------------------------------------------
    def _conjugacy(self):
        gens = [self.elements[i] for i in self._generators()]
        gen_invs = [self.mat_inv(g) for g in gens]
        class_of = [-1] * len(self.elements)
        reps = []
        for i, m in enumerate(self.elements):
            if class_of[i] >= 0:
                continue
            cid = len(reps)
            reps.append(i)
            orbit = [m]
            class_of[i] = cid
            while orbit:
                x = orbit.pop()
                for g, gi in zip(gens, gen_invs):
                    y = self.mat_mul(g, self.mat_mul(x, gi))
                    yi = self.index[y]
                    if class_of[yi] < 0:
                        class_of[yi] = cid
                        orbit.append(y)
        self.class_of = class_of
        self.class_reps = reps
        sizes = [0] * len(reps)
        for c in class_of:
            sizes[c] += 1
        self.class_sizes = sizes

    def _generators(self):
        # a transvection and a Coxeter-ish monomial matrix generate GL_n(F_q)
        n, q = self.n, self.q
        gens = []
        m = list(self._eye())
        m[0 * n + 1] = 1
        gens.append(self.index[tuple(m)])
        # companion-style permutation with a primitive scalar in one slot
        prim = 2 if q > 2 else 1
        mat = [0] * (n * n)
        for j in range(1, n):
            mat[(j - 1) * n + j] = 1
        mat[(n - 1) * n + 0] = prim
        gens.append(self.index[tuple(mat)])
        if n == 1:
            gens = [self.index[(p,)] for p in range(1, q)]
        return gens

    def centralizer_order(self, element_index: int) -> int:
        return len(self.elements) // self.class_sizes[self.class_of[element_index]]

    def is_unipotent(self, element_index: int) -> bool:
        n, F = self.n, self.field
        m = self.elements[element_index]
        shifted = tuple(
            F.add[m[i * n + j]][F.neg[1] if i == j else 0]
            for i in range(n) for j in range(n)
        )
        power = shifted
        for _ in range(n - 1):
            power = self._mat_mul_raw(power, shifted)
        return all(x == 0 for x in power)

    def _mat_mul_raw(self, a, b):
        n, F = self.n, self.field
        out = [0] * (n * n)
        for i in range(n):
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = F.add[acc][F.mul[a[i * n + k]][b[k * n + j]]]
                out[i * n + j] = acc
        return tuple(out)

    # -- coset spaces ------------------------------------------------------
    @lru_cache(maxsize=None)
    def parabolic(self, J: frozenset) -> frozenset:
        """P_J as a set of element indices: union of cells over W_J."""
        members = set()
        wj = self._parabolic_weyl(J)
        for i, w in enumerate(self.cell_of):
            if w in wj:
                members.add(i)
        return frozenset(members)

    def _parabolic_weyl(self, J: frozenset):
        n = self.n
        idgen = tuple(range(n))
        seen = {idgen}
        frontier = [idgen]
        while frontier:
            w = frontier.pop()
            for k in J:
                u = list(w)
                u[k], u[k + 1] = u[k + 1], u[k]
                u = tuple(u)
                if u not in seen:
                    seen.add(u)
                    frontier.append(u)
        return seen

    @lru_cache(maxsize=None)
    def coset_ids(self, J: frozenset):
        """Map element index -> coset index in G/P_J, plus one rep per coset."""
        P = self.parabolic(J)
        coset_of = [-1] * len(self.elements)
        reps = []
        for i, m in enumerate(self.elements):
            if coset_of[i] >= 0:
                continue
            cid = len(reps)
            reps.append(i)
            for p in P:
                j = self.index[self.mat_mul(m, self.elements[p])]
                coset_of[j] = cid
        return coset_of, reps

    def fixed_cosets(self, element_index: int, J: frozenset) -> int:
        coset_of, reps = self.coset_ids(J)
        g = self.elements[element_index]
        count = 0
        for rep in reps:
            img = self.mat_mul(g, self.elements[rep])
            if coset_of[self.index[img]] == coset_of[rep]:
                count += 1
        return count


@lru_cache(maxsize=8)
def build_sandbox(n: int, q: int, cap: int = SIZE_CAP) -> LieGroupSandbox:
    return LieGroupSandbox(n, q, cap)


# -- checks ------------------------------------------------------------------

def _perm_length(w) -> int:
    return sum(1 for j in range(len(w)) for k in range(j + 1, len(w))
               if w[j] > w[k])


def _reduced_word(w) -> list[int]:
    w = list(w)
    collected = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                collected.append(i)
                break
        else:
            return collected[::-1]


def _all_reduced_words(w) -> list[list[int]]:
    if _perm_length(w) == 0:
        return [[]]
    out = []
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            u = list(w)
            u[i], u[i + 1] = u[i + 1], u[i]
            for rest in _all_reduced_words(tuple(u)):
                out.append(rest + [i])
    return out


def verify_cell_partition(sb: LieGroupSandbox) -> SandboxReport:
    """Cells partition the group and have the predicted sizes."""
    failures = []
    sizes: dict[tuple, int] = {}
    for w in sb.cell_of:
        sizes[w] = sizes.get(w, 0) + 1
    b = len(sb.borel)
    for w, size in sizes.items():
        want = b * sb.q ** _perm_length(w)
        if size != want:
            failures.append({"w": list(w), "size": size, "expected": want})
    if sum(sizes.values()) != len(sb.elements):
        failures.append({"partition": "cells do not cover the group"})
    if len(sizes) != len(sb.weyl_reps):
        failures.append({"partition": "missing cells"})
    for w, rep in sb.weyl_reps.items():
        if sb.cell_of[rep] != w:
            failures.append({"w": list(w), "label": "representative mislabeled"})
    return SandboxReport("cells", sb.n, sb.q, len(sizes), tuple(failures))


def verify_cell_products(sb: LieGroupSandbox) -> SandboxReport:
    """Products of generator cells along every reduced word give the cell."""
    n = sb.n
    cells: dict[tuple, set] = {}
    for i, w in enumerate(sb.cell_of):
        cells.setdefault(w, set()).add(i)
    failures = []
    cases = 0
    gen_perms = []
    for k in range(n - 1):
        p = list(range(n))
        p[k], p[k + 1] = p[k + 1], p[k]
        gen_perms.append(tuple(p))

    def cell_product(a: set, b: set) -> set:
        out = set()
        for x in a:
            mx = sb.elements[x]
            for y in b:
                out.add(sb.index[sb.mat_mul(mx, sb.elements[y])])
        return out

    for w in sb.weyl_reps:
        for word in _all_reduced_words(w):
            cases += 1
            if not word:
                continue
            acc = cells[gen_perms[word[0]]]
            for k in word[1:]:
                acc = cell_product(acc, cells[gen_perms[k]])
            if acc != cells[w]:
                failures.append({"w": list(w), "word": word})
    # the quadratic case: cell(s) * cell(s) = B union cell(s)
    for k, gp in enumerate(gen_perms):
        cases += 1
        got = cell_product(cells[gp], cells[gp])
        want = set(sb.borel) | cells[gp]
        if got != want:
            failures.append({"generator": k, "identity": "BsB*BsB != B u BsB"})
    return SandboxReport("cellproducts", sb.n, sb.q, cases, tuple(failures))


def verify_cells(sb: LieGroupSandbox) -> SandboxReport:
    """Partition, cell sizes and reduced-word products in one report."""
    part = verify_cell_partition(sb)
    prod = verify_cell_products(sb)
    return SandboxReport("cells", sb.n, sb.q, part.cases + prod.cases,
                         part.failures + prod.failures)


def convolution_hecke_check(sb: LieGroupSandbox) -> SandboxReport:
    """The double-coset convolution operators satisfy the T-basis relations."""
    coset_of, reps = sb.coset_ids(frozenset())
    nc = len(reps)
    mats: dict[tuple, list] = {}
    inv_reps = [sb.mat_inv(sb.elements[r]) for r in reps]
    for w in sb.weyl_reps:
        M = [[0] * nc for _ in range(nc)]
        for xi, xinv in enumerate(inv_reps):
            for yi, yrep in enumerate(reps):
                prod = sb.mat_mul(xinv, sb.elements[yrep])
                if sb.cell_of[sb.index[prod]] == w:
                    M[yi][xi] = 1
        mats[w] = M
    failures = []
    cases = 0

    def matmul(A, B):
        return [[sum(A[i][k] * B[k][j] for k in range(nc)) for j in range(nc)]
                for i in range(nc)]

    def add(A, B, ca=1, cb=1):
        return [[ca * A[i][j] + cb * B[i][j] for j in range(nc)] for i in range(nc)]

    ident = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
    e = tuple(range(sb.n))
    if mats[e] != ident:
        failures.append({"identity": "T_e is not the identity operator"})
    cases += 1
    gen_perms = []
    for k in range(sb.n - 1):
        p = list(range(sb.n))
        p[k], p[k + 1] = p[k + 1], p[k]
        gen_perms.append(tuple(p))
    for k, gp in enumerate(gen_perms):
        for w, Mw in mats.items():
            cases += 1
            sw = tuple(w[gp[i]] for i in range(sb.n))  # s_k * w as permutation
            lhs = matmul(mats[gp], Mw)
            if _perm_length(sw) > _perm_length(w):
                want = mats[sw]
            else:
                want = add(mats[sw], Mw, sb.q, sb.q - 1)
            if lhs != want:
                failures.append({"generator": k, "w": list(w)})
    # braid relations
    for a in range(len(gen_perms)):
        for b in range(a + 1, len(gen_perms)):
            cases += 1
            m = 3 if abs(a - b) == 1 else 2
            A, B = mats[gen_perms[a]], mats[gen_perms[b]]
            lhs, rhs = A, B
            for t in range(m - 1):
                lhs = matmul(lhs, B if t % 2 == 0 else A)
                rhs = matmul(rhs, A if t % 2 == 0 else B)
            if lhs != rhs:
                failures.append({"braid": [a, b]})
    return SandboxReport("hecke", sb.n, sb.q, cases, tuple(failures))


# -- unipotent principal series values ---------------------------------------

def _prime_power(q: int) -> tuple[int, int]:
    for p in (2, 3, 5, 7):
        f = 0
        m = q
        while m % p == 0:
            m //= p
            f += 1
        if m == 1 and f:
            return p, f
    raise ValueError(f"{q} is not a prime power")


class SandboxCharTable:
    """Values of the principal-series unipotent constituents, one per partition."""

    def __init__(self, sb: LieGroupSandbox):
        self.sb = sb
        n = sb.n
        subsets = [frozenset(s) for s in _all_subsets(range(n - 1))]
        fix = {}
        for J in subsets:
            fix[J] = [sb.fixed_cosets(rep, J) for rep in sb.class_reps]
        nclasses = len(sb.class_reps)
        pi_b = fix[frozenset()]
        steinberg = [0] * nclasses
        for J in subsets:
            sign = (-1) ** len(J)
            for k in range(nclasses):
                steinberg[k] += sign * fix[J][k]
        self.values: dict[tuple, list] = {}
        if n == 1:
            self.values[(1,)] = [1] * nclasses
        elif n == 2:
            self.values[(2,)] = [1] * nclasses
            self.values[(1, 1)] = steinberg
        else:
            self.values[(3,)] = [1] * nclasses
            self.values[(1, 1, 1)] = steinberg
            middle = []
            for k in range(nclasses):
                num = pi_b[k] - 1 - steinberg[k]
                if num % 2:
                    raise NonIntegerCharacter(
                        f"(pi - 1 - St)/2 fractional on class {k}"
                    )
                middle.append(num // 2)
            self.values[(2, 1)] = middle

    def value(self, partition: tuple, element_index: int):
        return self.values[partition][self.sb.class_of[element_index]]


def _all_subsets(items):
    items = list(items)
    out = [[]]
    for x in items:
        out += [s + [x] for s in out]
    return [frozenset(s) for s in out]


@lru_cache(maxsize=8)
def _char_table(n: int, q: int) -> SandboxCharTable:
    return SandboxCharTable(build_sandbox(n, q))


def _hecke_trace_value(n: int, q: int, partition: tuple, w) -> Fraction:
    if n == 1:
        return Fraction(1)
    datum = CartanDatum.from_label(f"A{n - 1}")
    model = build_irrep_model(datum, partition)
    poly = model.trace_word(_reduced_word(w)) if _perm_length(w) else \
        LaurentPoly.const(model.dim)
    p, f = _prime_power(q)
    val = poly.specialize_exact(p, f)
    return val if isinstance(val, (int, Fraction)) else val.as_rational()


def heckeuch_verify(sb: LieGroupSandbox, element_index: int, w) -> tuple:
    """Check the double-coset count identity at one (element, Weyl label) pair.

    Left side: |O_g meet BwB| * |C(g)| / |B| by exhaustive counting.
    Right side: sum over partitions of (principal series value) * (Hecke trace
    at the sandbox q).  Returns (lhs, rhs, equal).
    """
    w = tuple(w)
    cls = sb.class_of[element_index]
    count = sum(
        1 for i, cw in enumerate(sb.cell_of)
        if cw == w and sb.class_of[i] == cls
    )
    lhs = Fraction(count * sb.centralizer_order(element_index), len(sb.borel))
    table = _char_table(sb.n, sb.q)
    rhs = Fraction(0)
    for partition, values in table.values.items():
        rho = values[cls]
        rhs += rho * _hecke_trace_value(sb.n, sb.q, partition, w)
    return lhs, rhs, lhs == rhs


def heckeuch_report(sb: LieGroupSandbox) -> SandboxReport:
    """The identity over every conjugacy class and every Weyl label."""
    failures = []
    cases = 0
    # per-(class, cell) joint counts in one pass
    joint: dict[tuple[int, tuple], int] = {}
    for i, w in enumerate(sb.cell_of):
        key = (sb.class_of[i], w)
        joint[key] = joint.get(key, 0) + 1
    table = _char_table(sb.n, sb.q)
    for cls, rep in enumerate(sb.class_reps):
        cent = sb.centralizer_order(rep)
        for w in sb.weyl_reps:
            cases += 1
            lhs = Fraction(joint.get((cls, w), 0) * cent, len(sb.borel))
            rhs = Fraction(0)
            for partition, values in table.values.items():
                rhs += values[cls] * _hecke_trace_value(sb.n, sb.q, partition, w)
            if lhs != rhs:
                failures.append({"class": cls, "w": list(w),
                                 "lhs": str(lhs), "rhs": str(rhs)})
    return SandboxReport("heckeuch", sb.n, sb.q, cases, tuple(failures))

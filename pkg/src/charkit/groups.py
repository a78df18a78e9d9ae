"""Finite permutation groups with exact character tables.

Groups are fully enumerated (small orders only); character tables are
computed by the Dixon-Schneider method: class-sum structure constants are
simultaneously diagonalized over a prime field F_p with p = 1 (mod exponent),
and the character values are lifted exactly to cyclotomic integers via the
discrete Fourier inversion over the power map.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re

from .cyclotomic import CycNum

ORDER_CAP = 100_000


class OrderCapExceeded(RuntimeError):
    pass


def _compose(f, g):
    return tuple(f[x] for x in g)


def _invert(f):
    out = [0] * len(f)
    for i, x in enumerate(f):
        out[x] = i
    return tuple(out)


class FiniteGroup:
    """All elements of a permutation group, identity first, sorted order."""

    def __init__(self, generators, cap: int = ORDER_CAP):
        degree = max((len(g) for g in generators), default=1)
        gens = [tuple(g) + tuple(range(len(g), degree)) for g in generators]
        identity = tuple(range(degree))
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = _compose(g, x)
                    if y not in seen:
                        if len(seen) >= cap:
                            raise OrderCapExceeded(
                                f"group order exceeds cap {cap}"
                            )
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        self.degree = degree
        self.elements: list[tuple[int, ...]] = sorted(seen)
        assert self.elements[0] == identity
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.generators = [self.index[g] for g in gens]

    @property
    def order(self) -> int:
        return len(self.elements)

    def mult(self, i: int, j: int) -> int:
        return self.index[_compose(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return self.index[_invert(self.elements[i])]

    def conj(self, i: int, h: int) -> int:
        """h * i * h^-1 by element indices."""
        eh = self.elements[h]
        return self.index[_compose(eh, _compose(self.elements[i], _invert(eh)))]

    def element_order(self, i: int) -> int:
        n, x = 1, i
        while x != 0:
            x = self.mult(x, i)
            n += 1
        return n

    def exponent(self) -> int:
        m = 1
        for c in self.conjugacy_classes().class_reps:
            m = _lcm(m, self.element_order(c))
        return m

    def conjugacy_classes(self) -> ConjugacyData:
        if not hasattr(self, "_classes"):
            self._classes = _conjugacy_data(self)
        return self._classes

    def character_table(self) -> CharTable:
        if not hasattr(self, "_table"):
            self._table = dixon_character_table(self)
        return self._table

    def subgroup(self, element_indices) -> FiniteGroup:
        return FiniteGroup([self.elements[i] for i in element_indices])


@dataclass(frozen=True)
class ConjugacyData:
    class_reps: tuple[int, ...]          # one element index per class
    class_sizes: tuple[int, ...]
    class_of: tuple[int, ...]            # element index -> class index
    centralizers: tuple[tuple[int, ...], ...]  # element indices per class rep


def _conjugacy_data(G: FiniteGroup) -> ConjugacyData:
    n = G.order
    class_of = [-1] * n
    raw = []
    for i in range(n):
        if class_of[i] >= 0:
            continue
        orbit = {i}
        frontier = [i]
        while frontier:
            x = frontier.pop()
            for h in range(n):
                y = G.conj(x, h)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        for x in orbit:
            class_of[x] = len(raw)
        raw.append(sorted(orbit))
    # canonical ordering: by class size, then minimal element index
    order = sorted(range(len(raw)), key=lambda k: (len(raw[k]), raw[k][0]))
    relabel = {old: new for new, old in enumerate(order)}
    classes = [raw[k] for k in order]
    class_of = [relabel[c] for c in class_of]
    reps, sizes, cents = [], [], []
    for cls in classes:
        rep = cls[0]
        reps.append(rep)
        sizes.append(len(cls))
        cent = tuple(h for h in range(n) if G.conj(rep, h) == rep)
        assert len(cent) * len(cls) == n
        cents.append(cent)
    return ConjugacyData(tuple(reps), tuple(sizes), tuple(class_of), tuple(cents))


@dataclass(frozen=True)
class CharTable:
    group: FiniteGroup
    classes: ConjugacyData
    rows: tuple[tuple[CycNum, ...], ...]   # rows: irreducible characters

    @property
    def num_classes(self) -> int:
        return len(self.classes.class_reps)

    def degree(self, row: int) -> int:
        return int(self.rows[row][0].as_rational())

    def value(self, row: int, element_index: int) -> CycNum:
        return self.rows[row][self.classes.class_of[element_index]]

    def verify_orthogonality(self) -> bool:
        n = self.group.order
        sizes = self.classes.class_sizes
        r = self.num_classes
        one = CycNum.from_rational(1)
        zero = CycNum.from_rational(0)
        for a in range(r):
            for b in range(a, r):
                total = zero
                for k in range(r):
                    total = total + sizes[k] * self.rows[a][k] * self.rows[b][k].conj()
                want = CycNum.from_rational(n) if a == b else zero
                if total != want:
                    return False
        # column orthogonality
        for j in range(r):
            for k in range(j, r):
                total = zero
                for a in range(r):
                    total = total + self.rows[a][j] * self.rows[a][k].conj()
                want = (
                    CycNum.from_rational(Fraction(n, sizes[j])) if j == k else zero
                )
                if total != want:
                    return False
        return True


# -- Dixon-Schneider ------------------------------------------------------

def dixon_character_table(G: FiniteGroup) -> CharTable:
    data = G.conjugacy_classes()
    r = len(data.class_reps)
    n = G.order
    if r == 1:
        return CharTable(G, data, ((CycNum.from_rational(1),),))
    exponent = 1
    for rep in data.class_reps:
        exponent = _lcm(exponent, G.element_order(rep))
    p = _dixon_prime(n, exponent)
    mats = _class_matrices(G, data)
    vectors = _common_eigenvectors(mats, p)
    assert len(vectors) == r, "class matrices failed to split"
    rows = [_lift_character(G, data, v, p, exponent) for v in vectors]
    rows.sort(key=_row_sort_key)
    table = CharTable(G, data, tuple(tuple(row) for row in rows))
    return table


def _row_sort_key(row):
    """Canonical row order: by degree, trivial first among ties."""
    return (int(row[0].as_rational()), tuple(_value_sort_key(c) for c in row))


def _value_sort_key(c: CycNum):
    if c.is_rational():
        return (0, 1, -c.as_rational())
    return (1, c.order, tuple(-x for x in c.coeffs))


def _dixon_prime(order: int, exponent: int) -> int:
    bound = 1
    while bound * bound <= 4 * order:
        bound += 1
    p = exponent + 1
    while True:
        if p > bound and _is_prime(p) and (p - 1) % exponent == 0:
            return p
        p += exponent if exponent > 1 else 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _class_matrices(G: FiniteGroup, data: ConjugacyData) -> list[list[list[int]]]:
    """M_i with (M_i)[j][k] = #{(x,y) in C_i x C_j : xy = z_k}."""
    r = len(data.class_reps)
    classes = [[] for _ in range(r)]
    for e in range(G.order):
        classes[data.class_of[e]].append(e)
    mats = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i in range(r):
        for k, z in enumerate(data.class_reps):
            # a_ijk = #{x in C_i : x^-1 z in C_j}
            for x in classes[i]:
                j = data.class_of[G.mult(G.inv(x), z)]
                mats[i][j][k] += 1
    return mats


def _common_eigenvectors(mats, p: int):
    """Split F_p^r into common eigenvectors of the commuting class matrices."""
    r = len(mats)
    spaces = [[_unit(r, i, p) for i in range(r)]]  # list of bases
    for M in mats:
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            new_spaces.extend(_split_space(M, basis, p))
        spaces = new_spaces
        if all(len(b) == 1 for b in spaces):
            break
    return [b[0] for b in spaces]


def _unit(r, i, p):
    v = [0] * r
    v[i] = 1
    return v


def _split_space(M, basis, p):
    """Split span(basis) into eigenspaces of M (which stabilizes it)."""
    d = len(basis)
    r = len(M)
    # restriction R: M * basis[j] = sum_i R[i][j] basis[i]
    images = [_matvec(M, b, p) for b in basis]
    R = _solve_in_span(basis, images, p)
    out = []
    for lam in range(p):
        A = [[(R[i][j] - (lam if i == j else 0)) % p for j in range(d)] for i in range(d)]
        null = _nullspace(A, p)
        if not null:
            continue
        vecs = [
            [sum(c * basis[j][k] for j, c in enumerate(ns)) % p for k in range(r)]
            for ns in null
        ]
        out.append(vecs)
        if sum(len(v) for v in out) == d:
            break
    return out


def _matvec(M, v, p):
    r = len(M)
    return [sum(M[i][j] * v[j] for j in range(r)) % p for i in range(r)]


def _solve_in_span(basis, images, p):
    """Coordinates of each image in terms of the basis (all over F_p)."""
    d, r = len(basis), len(basis[0])
    aug = [[basis[j][k] for j in range(d)] + [img[k] for img in images]
           for k in range(r)]
    # gaussian elimination mod p
    piv = []
    row = 0
    for col in range(d):
        sel = next((i for i in range(row, r) if aug[i][col] % p), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = pow(aug[row][col], p - 2, p)
        aug[row] = [(x * inv) % p for x in aug[row]]
        for i in range(r):
            if i != row and aug[i][col] % p:
                f = aug[i][col]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[row])]
        piv.append(col)
        row += 1
    R = [[0] * d for _ in range(d)]
    for i, col in enumerate(piv):
        for j in range(d):
            R[col][j] = aug[i][d + j] % p
    return R


def _nullspace(A, p):
    rows = len(A)
    cols = len(A[0]) if rows else 0
    A = [row[:] for row in A]
    piv_of_col = {}
    row = 0
    for col in range(cols):
        sel = next((i for i in range(row, rows) if A[i][col] % p), None)
        if sel is None:
            continue
        A[row], A[sel] = A[sel], A[row]
        inv = pow(A[row][col], p - 2, p)
        A[row] = [(x * inv) % p for x in A[row]]
        for i in range(rows):
            if i != row and A[i][col] % p:
                f = A[i][col]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[row])]
        piv_of_col[col] = row
        row += 1
    free = [c for c in range(cols) if c not in piv_of_col]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for c, rw in piv_of_col.items():
            v[c] = (-A[rw][fc]) % p
        basis.append(v)
    return basis


def _lift_character(G: FiniteGroup, data: ConjugacyData, vec, p: int, exponent: int):
    """Exact character row from a common eigenvector of the class matrices."""
    r = len(data.class_reps)
    sizes = data.class_sizes
    inv_class = [data.class_of[G.inv(rep)] for rep in data.class_reps]
    # normalize so vec[identity class] = 1; identity class is index 0 (size 1)
    assert sizes[0] == 1 and data.class_reps[0] == 0
    v0 = vec[0] % p
    assert v0 != 0, "eigenvector vanishes on the identity class"
    inv0 = pow(v0, p - 2, p)
    omega = [(x * inv0) % p for x in vec]
    # degree: |G| / sum_k omega_k omega_{k^-1} / |C_k|  (all mod p)
    s = 0
    for k in range(r):
        s = (s + omega[k] * omega[inv_class[k]] * pow(sizes[k], p - 2, p)) % p
    n_mod = G.order % p
    d2 = (n_mod * pow(s, p - 2, p)) % p
    d = _sqrt_mod(d2, p)
    d = min(d, p - d)
    assert 0 < d * d <= 4 * G.order, "degree recovery failed"
    # theta(g_k) = d * omega_k / |C_k| mod p
    theta = [(d * omega[k] * pow(sizes[k], p - 2, p)) % p for k in range(r)]
    # lift each class value via DFT over the power map of the representative
    rows = []
    for k in range(r):
        rep = data.class_reps[k]
        m = G.element_order(rep)
        zp = _element_of_order(p, m)
        inv_m = pow(m, p - 2, p)
        powers = []
        x = 0
        for _ in range(m):
            powers.append(data.class_of[x])
            x = G.mult(x, rep)
        # n_j = (1/m) sum_t theta(rep^t) zp^(-jt), the multiplicity of zm^j
        value = CycNum.from_rational(0)
        for j in range(m):
            total = 0
            for t in range(m):
                total = (total + theta[powers[t]] * pow(zp, (-j * t) % (p - 1), p)) % p
            nj = (total * inv_m) % p
            if nj >= p // 2:
                raise AssertionError("multiplicity lift out of range")
            if nj:
                value = value + nj * CycNum.root_of_unity(m, j)
        rows.append(value)
    return rows


def _sqrt_mod(a: int, p: int) -> int:
    a %= p
    for x in range(p):
        if (x * x) % p == a:
            return x
    raise ArithmeticError("no square root mod p")


def _element_of_order(p: int, m: int) -> int:
    """An element of multiplicative order exactly m in F_p (m | p-1)."""
    assert (p - 1) % m == 0
    for g in range(2, p):
        x = pow(g, (p - 1) // m, p)
        # check exact order m
        ok = x != 1 or m == 1
        if not ok:
            continue
        good = True
        for q in _prime_factors(m):
            if pow(x, m // q, p) == 1:
                good = False
                break
        if good:
            return x
    raise ArithmeticError("no element of requested order")


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _lcm(a, b):
    from math import gcd
    return a // gcd(a, b) * b


# -- parsing and presets ---------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse cycle notation like "(1,2)(3,4)"; points are 1-based."""
    cycles = []
    rest = text.replace(" ", "")
    for m in _CYCLE_RE.finditer(rest):
        body = m.group(1)
        if body:
            pts = [int(t) for t in re.split(r"[,\s]+", body) if t]
            cycles.append(pts)
    size = max((max(c) for c in cycles), default=degree or 1)
    if degree is not None:
        size = max(size, degree)
    perm = list(range(size))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a - 1] = b - 1
    return tuple(perm)


def group_from_text(text: str) -> FiniteGroup:
    """Parse presets (Z1..Z9, S3..S5, D4, Q8) or "perm: (1,2)(3,4); (1,3)"."""
    text = text.strip()
    preset = text.upper()
    m = re.fullmatch(r"Z(\d+)", preset)
    if m:
        n = int(m.group(1))
        if n == 1:
            return FiniteGroup([(0,)])
        return FiniteGroup([tuple(list(range(1, n)) + [0])])
    m = re.fullmatch(r"S(\d+)", preset)
    if m:
        n = int(m.group(1))
        gens = [parse_permutation("(1,2)", n)]
        if n > 2:
            gens.append(parse_permutation(f"({','.join(str(i) for i in range(1, n + 1))})", n))
        return FiniteGroup(gens)
    if preset == "D4":
        return FiniteGroup([parse_permutation("(1,2,3,4)"), parse_permutation("(1,3)")])
    if preset == "Q8":
        # left-regular action on {1, i, -1, -i, j, k, -j, -k}
        i = parse_permutation("(1,2,3,4)(5,6,7,8)")
        j = parse_permutation("(1,5,3,7)(2,8,4,6)")
        return FiniteGroup([i, j])
    if text.lower().startswith("perm:"):
        body = text[5:]
        parts = [p for p in body.split(";") if p.strip()]
        perms = [parse_permutation(p) for p in parts]
        degree = max(len(p) for p in perms)
        return FiniteGroup([tuple(p) + tuple(range(len(p), degree)) for p in perms])
    raise ValueError(f"cannot parse group description {text!r}")

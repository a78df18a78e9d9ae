"""Cartan matrices of finite type, Bourbaki numbering.

For E7 the numbering matches the convention used throughout this package:
node 2 hangs off node 4, the remaining nodes form the chain 1-3-4-5-6-7.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re


class InvalidCartan(ValueError):
    """The matrix is not a generalized Cartan matrix of finite type."""


@dataclass(frozen=True)
class CartanDatum:
    type_label: str
    cartan: tuple[tuple[int, ...], ...]  # cartan[i][j] = <alpha_i^vee, alpha_j>

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def coxeter_m(self, i: int, j: int) -> int:
        """Order of s_i s_j, read off the Cartan integers."""
        if i == j:
            return 1
        prod = self.cartan[i][j] * self.cartan[j][i]
        return {0: 2, 1: 3, 2: 4, 3: 6}[prod]

    def edges(self) -> list[tuple[int, int]]:
        """Pairs (i, j), i < j, of nodes joined in the Coxeter graph."""
        n = self.rank
        return [(i, j) for i in range(n) for j in range(i + 1, n)
                if self.cartan[i][j] != 0]

    @staticmethod
    def from_label(label: str) -> CartanDatum:
        m = re.fullmatch(r"([A-G])\s*(\d+)", label.strip().upper())
        if not m:
            raise InvalidCartan(f"cannot parse Cartan type {label!r}")
        family, n = m.group(1), int(m.group(2))
        matrix = _build_matrix(family, n)
        datum = CartanDatum(f"{family}{n}", matrix)
        validate_cartan(matrix)
        return datum


def _chain(n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        c[i][i + 1] = -1
        c[i + 1][i] = -1
    return c


def _build_matrix(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    if n < 1:
        raise InvalidCartan("rank must be positive")
    if family == "A":
        c = _chain(n)
    elif family == "B":
        if n < 2:
            raise InvalidCartan("B requires rank >= 2")
        c = _chain(n)
        c[n - 1][n - 2] = -2  # alpha_n short
    elif family == "C":
        if n < 2:
            raise InvalidCartan("C requires rank >= 2")
        c = _chain(n)
        c[n - 2][n - 1] = -2
    elif family == "D":
        if n < 3:
            raise InvalidCartan("D requires rank >= 3")
        c = _chain(n - 1)
        for row in c:
            row.append(0)
        c.append([0] * n)
        c[n - 1][n - 1] = 2
        c[n - 1][n - 3] = -1
        c[n - 3][n - 1] = -1
        c[n - 1][n - 2] = 0
        c[n - 2][n - 1] = 0
    elif family == "E":
        if n not in (6, 7, 8):
            raise InvalidCartan("E requires rank 6, 7 or 8")
        # chain 1-3-4-5-...-n with node 2 attached to node 4 (Bourbaki)
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        chain = [0] + list(range(2, n))  # 0-indexed nodes 1,3,4,...,n
        for a, b in zip(chain, chain[1:]):
            c[a][b] = c[b][a] = -1
        c[1][3] = c[3][1] = -1  # node 2 - node 4
    elif family == "F":
        if n != 4:
            raise InvalidCartan("F requires rank 4")
        c = _chain(4)
        c[2][1] = -2  # alpha_3, alpha_4 short
    elif family == "G":
        if n != 2:
            raise InvalidCartan("G requires rank 2")
        c = [[2, -1], [-3, 2]]
    else:
        raise InvalidCartan(f"unknown family {family}")
    return tuple(tuple(row) for row in c)


def validate_cartan(cartan) -> None:
    """Check the generalized-Cartan axioms and finite type."""
    n = len(cartan)
    for i in range(n):
        if len(cartan[i]) != n:
            raise InvalidCartan("matrix is not square")
        if cartan[i][i] != 2:
            raise InvalidCartan("diagonal entries must equal 2")
        for j in range(n):
            if i != j:
                if cartan[i][j] > 0:
                    raise InvalidCartan("off-diagonal entries must be <= 0")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise InvalidCartan("zero pattern must be symmetric")
    # symmetrize: d_i c_ij = d_j c_ji with d_i > 0
    d = [Fraction(0)] * n
    for start in range(n):
        if d[start]:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0:
                    dj = d[i] * cartan[i][j] / cartan[j][i]
                    if d[j] == 0:
                        d[j] = dj
                        stack.append(j)
                    elif d[j] != dj:
                        raise InvalidCartan("matrix is not symmetrizable")
    sym = [[d[i] * cartan[i][j] for j in range(n)] for i in range(n)]
    # positive definiteness via leading principal minors
    mat = [row[:] for row in sym]
    for k in range(n):
        minor = _det([row[: k + 1] for row in mat[: k + 1]])
        if minor <= 0:
            raise InvalidCartan("symmetrization is not positive definite (not finite type)")


def _det(m) -> Fraction:
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det

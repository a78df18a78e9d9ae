import random
import time
from fractions import Fraction

import pytest

from charkit.cyclotomic import CycNum
from charkit.fourier import (
    KeyMismatch, MPair, almost_transform, fourier_matrix, m_set, pairing,
)
from charkit.groups import group_from_text
from charkit.laurent import LaurentPoly


def test_m_set_sizes():
    assert len(m_set(group_from_text("Z1"))) == 1
    assert len(m_set(group_from_text("Z2"))) == 4
    assert len(m_set(group_from_text("S3"))) == 8


def test_pairing_trivial_group():
    G = group_from_text("Z1")
    [p] = m_set(G)
    assert pairing(G, p, p) == CycNum.from_rational(1)


def test_pairing_s3_identity_pairs():
    G = group_from_text("S3")
    triv = MPair(0, 0)  # identity class, trivial character
    val = pairing(G, triv, triv)
    assert val == CycNum.from_rational(Fraction(1, 6))


def test_z2_fourier_matrix():
    fm = fourier_matrix(group_from_text("Z2"))
    assert fm.size == 4
    half = Fraction(1, 2)
    expected = [
        [half, half, half, half],
        [half, half, -half, -half],
        [half, -half, half, -half],
        [half, -half, -half, half],
    ]
    got = [[e.as_rational() for e in row] for row in fm.entries]
    assert got == expected


def test_s3_fourier_matrix_entries_and_involution():
    fm = fourier_matrix(group_from_text("S3"))
    assert fm.size == 8
    # e.g. the diagonal entry at a 3-cycle paired with a faithful character of
    # its Z3 centralizer sums six unit terms over |C|^2 = 9, giving 2/3
    allowed = {Fraction(0), Fraction(1, 6), Fraction(1, 3), Fraction(-1, 3),
               Fraction(1, 2), Fraction(-1, 2), Fraction(2, 3)}
    for row in fm.entries:
        for e in row:
            assert e.is_rational() and e.as_rational() in allowed
    assert fm.is_hermitian() and fm.is_involution()


def test_fourier_invariants_many_groups():
    start = time.time()
    for name in ["Z1", "Z2", "Z3", "Z4", "Z6", "S3", "S4", "S5"]:
        fm = fourier_matrix(group_from_text(name))  # raises on violation
        assert fm.is_hermitian()
    assert time.time() - start < 10


def test_pairing_symmetry_conjugate():
    for name in ["Z4", "S3", "S4"]:
        fm = fourier_matrix(group_from_text(name))
        n = fm.size
        for i in range(n):
            for j in range(n):
                assert fm.entries[i][j] == fm.entries[j][i].conj()


def test_almost_transform_round_trip():
    fm = fourier_matrix(group_from_text("Z2"))
    members = [(p.as_tuple(), p, 1 if k % 2 == 0 else -1)
               for k, p in enumerate(fm.mpairs)]
    rng = random.Random(9)
    values = {
        p.as_tuple(): LaurentPoly({rng.randrange(-3, 4): rng.randrange(-5, 6)})
        for p in fm.mpairs
    }
    forward = almost_transform(fm, members, "rho_to_R", values)
    back = almost_transform(fm, members, "R_to_rho", forward)
    assert back == values


def test_almost_transform_key_mismatch():
    fm = fourier_matrix(group_from_text("Z2"))
    members = [(p.as_tuple(), p, 1) for p in fm.mpairs]
    with pytest.raises(KeyMismatch):
        almost_transform(fm, members, "rho_to_R", {"bogus": LaurentPoly.one()})

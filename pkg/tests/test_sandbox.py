import os

import pytest

from charkit.sandbox import (
    Fq, LieGroupSandbox, SizeCapExceeded, build_sandbox,
    convolution_hecke_check, heckeuch_report, heckeuch_verify,
    verify_cell_partition, verify_cell_products,
)

CASES = [(2, 2), (2, 3), (2, 4), (3, 2)]


def test_field_f4():
    F = Fq(4)
    # x * x = x + 1, x * (x+1) = 1
    assert F.mul[2][2] == 3
    assert F.mul[2][3] == 1
    for a in range(1, 4):
        assert F.mul[a][F.inv[a]] == 1


def test_sizes():
    assert len(build_sandbox(2, 2).elements) == 6
    assert len(build_sandbox(3, 2).elements) == 168
    assert len(build_sandbox(2, 3).borel) == 12
    with pytest.raises(SizeCapExceeded):
        LieGroupSandbox(3, 4)


@pytest.mark.parametrize("n,q", CASES)
def test_bruhat_partition_and_sizes(n, q):
    rep = verify_cell_partition(build_sandbox(n, q))
    assert rep.ok(), rep.failures


@pytest.mark.parametrize("n,q", CASES)
def test_cell_products(n, q):
    rep = verify_cell_products(build_sandbox(n, q))
    assert rep.ok(), rep.failures


@pytest.mark.parametrize("n,q", CASES)
def test_convolution_hecke(n, q):
    rep = convolution_hecke_check(build_sandbox(n, q))
    assert rep.ok(), rep.failures


def test_convolution_example_gl2_f3():
    sb = build_sandbox(2, 3)
    rep = convolution_hecke_check(sb)
    assert rep.ok()


@pytest.mark.parametrize("n,q", CASES)
def test_heckeuch_all_classes_all_weyl(n, q):
    rep = heckeuch_report(build_sandbox(n, q))
    assert rep.ok(), rep.failures


def test_heckeuch_identity_at_identity_element():
    sb = build_sandbox(3, 2)
    e = tuple(range(3))
    lhs, rhs, equal = heckeuch_verify(sb, sb.identity, e)
    assert equal
    # both sides equal |G/B| at (1, e)
    assert lhs == len(sb.elements) // len(sb.borel)


def test_heckeuch_regular_unipotent_gl2_f3():
    sb = build_sandbox(2, 3)
    reg = next(
        i for i in range(len(sb.elements))
        if sb.is_unipotent(i) and i != sb.identity
    )
    lhs, rhs, equal = heckeuch_verify(sb, reg, (1, 0))
    assert equal and lhs == 3


def test_regular_unipotent_conjugate_to_inverse():
    for n, q in CASES:
        sb = build_sandbox(n, q)
        for i in range(len(sb.elements)):
            if not sb.is_unipotent(i):
                continue
            if sb.centralizer_order(i) != q ** (n - 1) * (q - 1):
                continue  # not regular
            inv = sb.index[sb.mat_inv(sb.elements[i])]
            assert sb.class_of[inv] == sb.class_of[i]


@pytest.mark.skipif(
    not os.environ.get("CHARKIT_EXTENDED"),
    reason="extended GL3(F3) run; set CHARKIT_EXTENDED=1 to enable",
)
def test_heckeuch_gl3_f3_extended():
    rep = heckeuch_report(build_sandbox(3, 3))
    assert rep.ok(), rep.failures

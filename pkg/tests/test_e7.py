import pytest

from charkit.cyclotomic import CycNum
from charkit.e7 import (
    AmbiguousSign, CLASS_LABELS, chi_cuspidal_table, cell_sum,
    empty_cell_backsolve, final_value_table, recover_characteristic_rows,
    regular_class_model, solve_signs,
)
from charkit.families import load_family_dataset
from charkit.laurent import LaurentPoly
from charkit.roots import build_root_system
from charkit.traces import load_coxeter_traces

ZETA = CycNum.root_of_unity(4)
V7 = LaurentPoly.v(7)
Q = LaurentPoly.q


@pytest.fixture(scope="module")
def traces():
    return load_coxeter_traces()


@pytest.fixture(scope="module")
def fam():
    return load_family_dataset()


@pytest.fixture(scope="module")
def model():
    return regular_class_model()


def test_regular_class_model(model):
    assert model.component_group.order == 4
    assert model.component_group.element_order(model.generator_index) == 4
    assert len(model.class_labels) == 4
    # reversal certificate verifies on the root system
    rs = build_root_system("E7")
    u = rs.from_word(model.reversal_certificate)
    src = rs.coxeter_element(list(range(7)))
    tgt = rs.coxeter_element(list(reversed(range(7))))
    assert u * src * u.inverse() == tgt


def test_chi_cuspidal_table(model):
    t = chi_cuspidal_table(model)
    assert t.entry("chi_A1", "elsewhere").is_zero()
    assert t.entry("chi_A2", "elsewhere").is_zero()
    assert t.entry("chi_A1", "u0") == V7
    assert t.entry("chi_A2", "u0") == V7
    assert t.entry("chi_A1", "u_a0") == V7 * ZETA
    assert t.entry("chi_A2", "u_a0") == -(V7 * ZETA)
    assert t.entry("chi_A1", "u_a0^2") == -V7
    assert t.entry("chi_A2", "u_a0^2") == -V7
    assert t.entry("chi_A1", "u_a0^3") == -(V7 * ZETA)
    assert t.entry("chi_A2", "u_a0^3") == V7 * ZETA


def test_chi_rows_norm_consistency(model):
    t = chi_cuspidal_table(model)
    for row in ("chi_A1", "chi_A2"):
        for col in CLASS_LABELS:
            e = t.entry(row, col)
            assert e * e.conj_coeffs() == Q(7)
        # the distinguished class is self-inverse, so the value there is real
        u0_val = t.entry(row, "u0")
        assert u0_val.conj_coeffs() == u0_val


def test_cell_sum_closed_form(traces, fam):
    for xi in (1, -1):
        for delta in (1, -1):
            assert cell_sum(traces, fam, xi, delta) == Q(7) * (1 + 2 * xi + delta)
    assert cell_sum(traces, fam, 1, 1) == 4 * Q(7)
    assert cell_sum(traces, fam, 1, -1) == 2 * Q(7)
    assert cell_sum(traces, fam, -1, 1).is_zero()


def test_solve_signs(traces, fam):
    sol = solve_signs(traces, fam)
    assert sol.xi == 1
    assert sol.admissible_delta == (-1, 1)
    assert any(a["name"] == "cell-count-positivity" for a in sol.audit)
    with pytest.raises(AmbiguousSign):
        solve_signs(traces, fam, positivity=False)


def test_final_value_table_16_entries(fam, model):
    t = final_value_table(1, fam=fam, model=model)
    z = LaurentPoly.zero()
    expected = {
        "phi_512_11": (V7, z, -V7, z),
        "phi_512_12": (-V7, z, V7, z),
        "E7[z4]": (z, -(V7 * ZETA), z, V7 * ZETA),
        "E7[-z4]": (z, V7 * ZETA, z, -(V7 * ZETA)),
    }
    for row, vals in expected.items():
        for col, want in zip(CLASS_LABELS, vals):
            assert t.entry(row, col) == want, (row, col)
    # the two principal rows are negatives of each other
    for col in CLASS_LABELS:
        assert (t.entry("phi_512_11", col) + t.entry("phi_512_12", col)).is_zero()


def test_round_trip_recovers_characteristic_rows(fam, model):
    t = final_value_table(1, fam=fam, model=model)
    chi = chi_cuspidal_table(model)
    rows = recover_characteristic_rows(t, fam)
    f512 = fam.family_of("phi_512_11")
    x1 = f512.member("E7[z4]").mpair
    x2 = f512.member("E7[-z4]").mpair
    p11 = f512.member("phi_512_11").mpair
    p12 = f512.member("phi_512_12").mpair
    for col in CLASS_LABELS:
        got = rows[col]
        assert got[x1] == chi.entry("chi_A1", col)
        assert got[x2] == chi.entry("chi_A2", col)
        assert got[p11].is_zero()
        assert got[p12].is_zero()


def test_empty_cell_backsolve(traces, fam):
    r = empty_cell_backsolve(traces, fam, xi=1)
    assert r == Q(2)
    # formal algebra only: with xi = -1 the equation forces -3q^2
    r2 = empty_cell_backsolve(traces, fam, xi=-1)
    assert r2 == -3 * Q(2)

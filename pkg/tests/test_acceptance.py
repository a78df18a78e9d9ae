"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  All equalities are exact; the only tolerances are the
stated runtime budgets.
"""
import itertools
import json
import random
import time

import pytest

from charkit.cartan import CartanDatum
from charkit.cyclotomic import CycNum
from charkit.e7 import (
    AmbiguousSign, CLASS_LABELS, chi_cuspidal_table, final_value_table,
    recover_characteristic_rows, regular_class_model, solve_signs,
)
from charkit.families import load_family_dataset
from charkit.fourier import fourier_matrix
from charkit.groups import FiniteGroup, group_from_text
from charkit.hecke import HeckeElement, build_irrep_model, supported_labels
from charkit.laurent import LaurentPoly
from charkit.roots import build_root_system, coxeter_conjugator
from charkit.sandbox import (
    build_sandbox, heckeuch_report, verify_cell_partition, verify_cell_products,
)
from charkit.traces import ConsistencyError, load_coxeter_traces

ZETA = CycNum.root_of_unity(4)
V7 = LaurentPoly.v(7)


def _report(num, text):
    print(f"ACCEPTANCE {num}: PASS - {text}")


def test_criterion_01_fourier_involution():
    start = time.time()
    for name in ["Z1", "Z2", "Z3", "Z4", "Z6", "S3", "S4", "S5"]:
        fm = fourier_matrix(group_from_text(name), verify=False)
        assert fm.is_hermitian(), name
        assert fm.is_involution(), name
    elapsed = time.time() - start
    assert elapsed < 10, f"criterion 1 budget exceeded: {elapsed:.1f}s"
    _report(1, f"pairing matrices hermitian and involutive for 8 groups "
               f"({elapsed:.1f}s)")


def test_criterion_02_character_tables():
    degrees = {
        "S3": [1, 1, 2],
        "S4": [1, 1, 2, 3, 3],
        "S5": [1, 1, 4, 4, 5, 5, 6],
    }
    hand_rows = {
        # sorted tuples of each character row, classes ordered by (size, rep)
        "S3": {(1, 1, 1), (1, 1, -1), (2, -1, 0)},
    }
    for name in ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "S3", "S4", "S5", "D4", "Q8"]:
        G = group_from_text(name)
        assert G.order <= 200
        t = G.character_table()
        assert t.verify_orthogonality(), name
        if name in degrees:
            assert sorted(t.degree(i) for i in range(t.num_classes)) == degrees[name]
    t3 = group_from_text("S3").character_table()
    got = {tuple(int(c.as_rational()) for c in row) for row in t3.rows}
    assert got == hand_rows["S3"]
    # spot-check integer values of S4 and S5 against hand tables
    t4 = group_from_text("S4").character_table()
    assert all(c.is_rational() for row in t4.rows for c in row)
    by_size4 = {s: k for k, s in enumerate(t4.classes.class_sizes)}
    row3 = next(r for r in t4.rows
                if r[0] == CycNum.from_rational(3)
                and r[by_size4[6]] == CycNum.from_rational(1))
    assert [int(row3[by_size4[s]].as_rational()) for s in (1, 3, 8, 6)] == \
        [3, -1, 0, 1]
    t5 = group_from_text("S5").character_table()
    assert all(c.is_rational() for row in t5.rows for c in row)
    assert sorted(int(r[0].as_rational()) for r in t5.rows) == degrees["S5"]
    _report(2, "exact row/column orthogonality for 11 groups; S3/S4/S5 match "
               "hand tables")


def test_criterion_03_hecke_relations():
    start = time.time()
    for label in ["A2", "A3", "A4", "A5", "B2", "G2"]:
        datum = CartanDatum.from_label(label)
        for lab in supported_labels(datum):
            model = build_irrep_model(datum, lab)
            assert model.verify_quadratic(), (label, lab)
            assert model.verify_braid(datum), (label, lab)
    rng = random.Random(0)
    count = 0
    for label, n_triples, maxlen in [("A2", 300, 6), ("B2", 200, 6),
                                     ("A3", 200, 5), ("B3", 150, 4),
                                     ("A4", 150, 4)]:
        rs = build_root_system(label)
        for _ in range(n_triples):
            x, y, z = (
                HeckeElement.basis(rs, rs.from_word(
                    [rng.randrange(rs.rank) for _ in range(rng.randrange(maxlen + 1))]
                ))
                for _ in range(3)
            )
            assert (x * y) * z == x * (y * z)
            count += 1
    assert count == 1000
    elapsed = time.time() - start
    assert elapsed < 60, f"criterion 3 budget exceeded: {elapsed:.1f}s"
    _report(3, f"quadratic/braid identities for all bundled models and exact "
               f"associativity on 1000 random triples ({elapsed:.1f}s)")


def test_criterion_04_tits_specialization():
    from charkit.roots import WeylElement
    for label in ["A2", "A3", "B2", "G2"]:
        rs = build_root_system(label)
        G = FiniteGroup(rs.reflections)
        table = G.character_table()
        reps = [G.elements[r] for r in table.classes.class_reps]
        table_rows = {tuple(r) for r in table.rows}
        for lab in supported_labels(rs.datum):
            model = build_irrep_model(rs.datum, lab)
            row = tuple(
                _cyc(model.trace(WeylElement(rs, perm)).at_v_one())
                for perm in reps
            )
            assert row in table_rows, (label, lab)
    _report(4, "v->1 of every bundled model matches an ordinary character row "
               "on all classes of S3, S4, W(B2), W(G2)")


def _cyc(x):
    return x if isinstance(x, CycNum) else CycNum.from_rational(x)


def test_criterion_05_sandbox_heckeuch():
    start = time.time()
    cases = 0
    for n, q in [(2, 2), (2, 3), (2, 4), (3, 2)]:
        report = heckeuch_report(build_sandbox(n, q))
        assert report.ok(), report.failures
        cases += report.cases
    elapsed = time.time() - start
    assert elapsed < 120, f"criterion 5 budget exceeded: {elapsed:.1f}s"
    _report(5, f"double-coset counting identity exhaustively verified, "
               f"{cases} (class, label) cases, zero failures ({elapsed:.1f}s)")


def test_criterion_06_bruhat_structure():
    for n, q in [(2, 2), (2, 3), (2, 4), (3, 2)]:
        sb = build_sandbox(n, q)
        part = verify_cell_partition(sb)
        prod = verify_cell_products(sb)
        assert part.ok(), part.failures
        assert prod.ok(), prod.failures
    _report(6, "cell partition, |BwB| = |B| q^l(w) and reduced-word cell "
               "products hold exhaustively in every sandbox")


def test_criterion_07_coxeter_conjugation_all_orderings():
    start = time.time()
    rs = build_root_system("E7")
    source = list(range(7))
    c_source = rs.coxeter_element(source)
    count = 0
    for perm in itertools.permutations(range(7)):
        word = coxeter_conjugator(rs, source, list(perm))
        u = rs.from_word(word)
        assert u * c_source * u.inverse() == rs.coxeter_element(list(perm))
        count += 1
    elapsed = time.time() - start
    assert count == 5040
    assert elapsed < 30, f"criterion 7 budget exceeded: {elapsed:.1f}s"
    _report(7, f"all 5040 conjugation certificates verified by root-permutation "
               f"equality ({elapsed:.1f}s)")


def test_criterion_08_e7_structure():
    rs = build_root_system("E7")
    assert rs.num_positive == 63
    assert rs.group_order() == 2903040
    w0 = rs.longest_element()
    assert w0.length == 63
    for si in rs.simple_indices:
        assert w0.perm[si] == si + rs.num_positive  # w0(alpha) = -alpha
    sigma = rs.relative_weyl_generators([1, 2, 3, 4])  # D4 subset
    assert len(sigma) == 3 and all((s * s).is_identity() for s in sigma)
    seen = {rs.identity().perm}
    frontier = [rs.identity()]
    while frontier:
        new = []
        for w in frontier:
            for g in sigma:
                u = g * w
                if u.perm not in seen:
                    seen.add(u.perm)
                    new.append(u)
        frontier = new
    assert len(seen) == 48
    _report(8, "63 positive roots, |W| = 2903040, l(w0) = 63, -w0 fixes the "
               "simple roots, relative Weyl group of the D4 subset has order 48")


def test_criterion_09_sign_determination():
    traces = load_coxeter_traces()
    fam = load_family_dataset()
    sol = solve_signs(traces, fam)
    assert sol.xi == 1
    assert sol.admissible_delta == (-1, 1)
    with pytest.raises(AmbiguousSign):
        solve_signs(traces, fam, positivity=False)
    _report(9, "xi = +1 uniquely, delta stays free in {-1, +1}; dropping the "
               "positivity axiom is detected as ambiguous")


def test_criterion_10_final_table():
    fam = load_family_dataset()
    model = regular_class_model()
    table = final_value_table(1, fam=fam, model=model)
    z = LaurentPoly.zero()
    expected = {
        "phi_512_11": (V7, z, -V7, z),
        "phi_512_12": (-V7, z, V7, z),
        "E7[z4]": (z, -(V7 * ZETA), z, V7 * ZETA),
        "E7[-z4]": (z, V7 * ZETA, z, -(V7 * ZETA)),
    }
    checked = 0
    for row, vals in expected.items():
        for col, want in zip(CLASS_LABELS, vals):
            assert table.entry(row, col) == want, (row, col)
            checked += 1
    assert checked == 16
    chi = chi_cuspidal_table(model)
    rows = recover_characteristic_rows(table, fam)
    f512 = fam.family_of("phi_512_11")
    for col in CLASS_LABELS:
        assert rows[col][f512.member("E7[z4]").mpair] == chi.entry("chi_A1", col)
        assert rows[col][f512.member("E7[-z4]").mpair] == chi.entry("chi_A2", col)
    _report(10, "all 16 final-table entries exact; transform round trip "
                "recovers both characteristic-function rows")


def test_criterion_11_trace_dataset_integrity(tmp_path):
    import charkit.families as fam_mod
    ds = load_coxeter_traces()
    assert (ds.trace("phi_56_3") - ds.trace("phi_35_4") - ds.trace("phi_21_6")
            == 2 * LaurentPoly.q(5))
    assert ds.trace("phi_512_11") - ds.trace("phi_512_12") == LaurentPoly.v(7, 2)
    base = json.loads(
        (fam_mod.default_data_dir() / "e7_coxeter_traces.json").read_text()
    )
    mutated = json.loads(json.dumps(base))
    mutated["traces"]["phi_35_4"] = {"10": "1"}
    mutated["coxeter_class_values"]["phi_35_4"] = 1
    path = tmp_path / "bad_traces.json"
    path.write_text(json.dumps(mutated))
    with pytest.raises(ConsistencyError):
        load_coxeter_traces(path)
    _report(11, "loader enforces the 2q^5 combination and the 2v^7 difference; "
                "mutated data is rejected")

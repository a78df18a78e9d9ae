import json

import pytest

from charkit.families import (
    E7_IRR_LABELS, PinningError, SchemaError, load_family_dataset,
)
from charkit.fourier import MPair
from charkit.laurent import LaurentPoly
from charkit.traces import ConsistencyError, load_coxeter_traces


def test_trace_dataset_loads_and_pins():
    ds = load_coxeter_traces()
    q = LaurentPoly.q
    assert ds.trace("phi_1_0") == q(7)
    combo = ds.trace("phi_56_3") - ds.trace("phi_35_4") - ds.trace("phi_21_6")
    assert combo == 2 * q(5)
    assert ds.trace("phi_512_11") - ds.trace("phi_512_12") == LaurentPoly.v(7, 2)
    nonzero = [l for l, p in ds.traces.items() if not p.is_zero()]
    assert len(nonzero) == 18


def test_trace_dataset_rejects_mutations(tmp_path):
    import charkit.families as fam
    base = json.loads((fam.default_data_dir() / "e7_coxeter_traces.json").read_text())

    def reject(mutate, exc=ConsistencyError):
        doc = json.loads(json.dumps(base))
        mutate(doc)
        p = tmp_path / "mutated.json"
        p.write_text(json.dumps(doc))
        with pytest.raises(exc):
            load_coxeter_traces(p)

    # flip the sign of one degree-512 trace
    reject(lambda d: d["traces"]["phi_512_12"].update({"7": "1"}))
    # corrupt the three-term combination
    reject(lambda d: d["traces"]["phi_56_3"].update({"10": "-1"}))
    # break the integer column cross-check
    reject(lambda d: d["coxeter_class_values"].update({"phi_7_1": 1}))
    # non-monomial value
    reject(lambda d: d["traces"]["phi_1_0"].update({"0": "1"}))
    # drop a label entirely
    def drop(d):
        del d["traces"]["phi_105_5"]
    reject(drop, SchemaError)


def test_family_dataset_structure():
    ds = load_family_dataset()
    assert ds.total_pairs == 76
    assert len(ds.families) == 35
    f512 = ds.family_of("phi_512_11")
    assert len(f512.members) == 4
    cuspidals = [m for m in f512.members if m.kind == "cuspidal"]
    assert {m.label for m in cuspidals} == {"E7[z4]", "E7[-z4]"}
    assert all(m.delta == -1 for m in cuspidals)
    lams = {m.label: str(m.lam) for m in cuspidals}
    assert lams == {"E7[z4]": "z4", "E7[-z4]": "-z4"}
    # degree completeness oracle
    assert sum(d * d for d, b in E7_IRR_LABELS) == 2903040


def test_family_dataset_x0_coefficients():
    ds = load_family_dataset()
    fam = ds.family_of("phi_56_3")
    x0 = next(m for m in fam.members if m.kind == "cuspidal")
    from fractions import Fraction
    vals = {}
    for lbl in ("phi_56_3", "phi_35_4", "phi_21_6"):
        m = fam.member(lbl)
        vals[lbl] = fam.fourier.entry(MPair(*m.mpair), MPair(*x0.mpair)).as_rational()
    assert vals == {
        "phi_56_3": Fraction(1, 2),
        "phi_35_4": Fraction(-1, 2),
        "phi_21_6": Fraction(-1, 2),
    }


def test_x0_family_transform_relation():
    """One nonzero slot value r spreads as (r/2, -r/2, -r/2) over the triple."""
    from charkit.fourier import almost_transform
    ds = load_family_dataset()
    fam = ds.family_of("phi_56_3")
    x0 = next(m for m in fam.members if m.kind == "cuspidal")
    r = LaurentPoly.q(2)  # any placeholder value
    values = {m.mpair: (r if m is x0 else LaurentPoly.zero())
              for m in fam.members}
    out = almost_transform(fam.fourier, fam.member_triples(), "R_to_rho", values)
    half_r = LaurentPoly.q(2, __import__("fractions").Fraction(1, 2))
    assert out["phi_56_3"] == half_r
    assert out["phi_35_4"] == -half_r
    assert out["phi_21_6"] == -half_r


def test_family_dataset_rejects_swapped_512_labels(tmp_path):
    import charkit.families as fam
    base = json.loads((fam.default_data_dir() / "e7_families.json").read_text())
    doc = json.loads(json.dumps(base))
    for f in doc["families"]:
        if f["id"] == "F_512":
            for m in f["members"]:
                if m["label"] == "phi_512_11":
                    m["label"] = "phi_512_12"
                elif m["label"] == "phi_512_12":
                    m["label"] = "phi_512_11"
    p = tmp_path / "swapped.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(PinningError):
        load_family_dataset(p)


def test_family_dataset_rejects_bad_schema(tmp_path):
    import charkit.families as fam
    base = json.loads((fam.default_data_dir() / "e7_families.json").read_text())
    doc = json.loads(json.dumps(base))
    doc["families"][0]["members"][0]["mpair"] = [9, 9]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(SchemaError):
        load_family_dataset(p)

    doc = json.loads(json.dumps(base))
    del doc["families"][-1]
    p2 = tmp_path / "missing.json"
    p2.write_text(json.dumps(doc))
    with pytest.raises(SchemaError):
        load_family_dataset(p2)


def test_lambda_rule_enforced(tmp_path):
    import charkit.families as fam
    base = json.loads((fam.default_data_dir() / "e7_families.json").read_text())
    doc = json.loads(json.dumps(base))
    for f in doc["families"]:
        if f["id"] == "F_512":
            for m in f["members"]:
                if m["label"] == "E7[z4]":
                    m["lambda"] = "-z4"
    p = tmp_path / "badlam.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(PinningError):
        load_family_dataset(p)

"""Bundled family data for E7: pair-set slots, signs and eigenvalue labels.

The loader rebuilds every family's pairing matrix from the groups module and
refuses data that fails the structural checks or the sign pinning of the
degree-512 family.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .cyclotomic import CycNum, parse_cyc
from .fourier import FourierMatrix, MPair, fourier_matrix
from .groups import FiniteGroup, group_from_text

DATA_ENV = "CHARKIT_DATA"

#: canonical labels of the irreducible characters of W(E7): (degree, b)
E7_IRR_LABELS: tuple[tuple[int, int], ...] = (
    (1, 0), (1, 63), (7, 1), (7, 46), (15, 7), (15, 28), (21, 3), (21, 36),
    (21, 6), (21, 33), (27, 2), (27, 37), (35, 4), (35, 31), (35, 13),
    (35, 22), (56, 3), (56, 30), (70, 9), (70, 18), (84, 12), (84, 15),
    (105, 5), (105, 26), (105, 6), (105, 21), (105, 12), (105, 15), (120, 4),
    (120, 25), (168, 6), (168, 21), (189, 10), (189, 17), (189, 5), (189, 22),
    (189, 7), (189, 20), (210, 6), (210, 21), (210, 10), (210, 13), (216, 9),
    (216, 16), (280, 9), (280, 18), (280, 8), (280, 17), (315, 7), (315, 16),
    (336, 11), (336, 14), (378, 9), (378, 14), (405, 8), (405, 15), (420, 10),
    (420, 13), (512, 11), (512, 12),
)


def label_name(d: int, b: int) -> str:
    return f"phi_{d}_{b}"


def parse_principal_label(label: str) -> tuple[int, int]:
    parts = label.split("_")
    if len(parts) != 3 or parts[0] != "phi":
        raise SchemaError(f"malformed principal label {label!r}")
    return int(parts[1]), int(parts[2])


class SchemaError(ValueError):
    pass


class PinningError(ValueError):
    """The sign conventions encoded in the data contradict the pinned checks."""


@dataclass(frozen=True)
class FamilyMember:
    kind: str            # "principal" | "cuspidal"
    label: str
    mpair: tuple[int, int]
    delta: int
    lam: CycNum


@dataclass(frozen=True)
class Family:
    id: str
    group_name: str
    members: tuple[FamilyMember, ...]
    group: FiniteGroup
    fourier: FourierMatrix

    def member(self, label: str) -> FamilyMember:
        for m in self.members:
            if m.label == label:
                return m
        raise KeyError(label)

    def member_triples(self):
        """(label, mpair, delta) rows for the transform helpers."""
        return [(m.label, m.mpair, m.delta) for m in self.members]


@dataclass(frozen=True)
class FamilyDataset:
    type_label: str
    families: tuple[Family, ...]
    provenance: dict

    def family_of(self, label: str) -> Family:
        for f in self.families:
            for m in f.members:
                if m.label == label:
                    return f
        raise KeyError(label)

    @property
    def total_pairs(self) -> int:
        return sum(len(f.fourier.mpairs) for f in self.families)


def default_data_dir() -> Path:
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


def load_family_dataset(path: str | Path | None = None) -> FamilyDataset:
    path = Path(path) if path else default_data_dir() / "e7_families.json"
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read family dataset: {exc}") from exc
    if doc.get("type") != "E7":
        raise SchemaError("family dataset must declare type E7")
    raw_families = doc.get("families")
    if not isinstance(raw_families, list) or not raw_families:
        raise SchemaError("family dataset must list families")

    groups_cache: dict[str, tuple[FiniteGroup, FourierMatrix]] = {}
    families = []
    for raw in raw_families:
        gname = raw.get("group")
        if gname not in ("Z1", "Z2", "S3"):
            raise SchemaError(f"unsupported family group {gname!r}")
        if gname not in groups_cache:
            G = group_from_text(gname)
            groups_cache[gname] = (G, fourier_matrix(G))
        G, fm = groups_cache[gname]
        members = []
        for m in raw.get("members", []):
            try:
                kind = m["kind"]
                label = m["label"]
                mpair = tuple(m["mpair"])
                delta = int(m["delta"])
                lam = parse_cyc(str(m["lambda"]))
                lam = lam if isinstance(lam, CycNum) else CycNum.from_rational(lam)
            except (KeyError, TypeError, ValueError) as exc:
                raise SchemaError(f"malformed member in family {raw.get('id')}: {exc}")
            if kind not in ("principal", "cuspidal"):
                raise SchemaError(f"unknown member kind {kind!r}")
            if delta not in (1, -1):
                raise SchemaError("delta must be +-1")
            if MPair(*mpair) not in fm.mpairs:
                raise SchemaError(
                    f"mpair {mpair} outside the pair set of {gname}"
                )
            members.append(FamilyMember(kind, label, mpair, delta, lam))
        if len({m.mpair for m in members}) != len(members):
            raise SchemaError(f"family {raw.get('id')} repeats a pair slot")
        if len(members) != len(fm.mpairs):
            raise SchemaError(
                f"family {raw.get('id')} must fill the pair set of {gname}"
            )
        families.append(Family(raw.get("id", "?"), gname, tuple(members), G, fm))

    ds = FamilyDataset("E7", tuple(families), doc.get("provenance", {}))
    _check_structure(ds)
    _check_lambda_rule(ds)
    _check_sign_pinning(ds)
    return ds


def _check_structure(ds: FamilyDataset) -> None:
    want = {label_name(d, b) for d, b in E7_IRR_LABELS}
    seen: list[str] = []
    for f in ds.families:
        for m in f.members:
            if m.kind == "principal":
                seen.append(m.label)
    if sorted(seen) != sorted(want):
        missing = want - set(seen)
        extra = set(seen) - want
        dup = {x for x in seen if seen.count(x) > 1}
        raise SchemaError(
            f"principal labels must partition Irr(W(E7)): missing={sorted(missing)[:4]} "
            f"extra={sorted(extra)[:4]} duplicated={sorted(dup)[:4]}"
        )
    total = sum(d * d for d, _ in E7_IRR_LABELS)
    if total != 2903040:
        raise SchemaError("degree square sum mismatch against |W(E7)|")
    if ds.total_pairs != sum(len(f.members) for f in ds.families):
        raise SchemaError("families must fill their pair sets exactly")
    if ds.total_pairs != 76:
        raise SchemaError(
            f"parameter set size {ds.total_pairs} != 76 unipotent labels"
        )


def _check_lambda_rule(ds: FamilyDataset) -> None:
    """lambda = sigma(g)/sigma(1), with the extra fourth root of unity on the
    non-principal slots of the degree-512 family."""
    f512 = ds.family_of("phi_512_11")
    zeta = CycNum.root_of_unity(4)
    for f in ds.families:
        data = f.group.conjugacy_classes()
        tables = _centralizer_tables(f.group)
        for m in f.members:
            ci, chi = m.mpair
            table = tables[ci]
            rep_sub, table_obj = table
            sigma_g = table_obj.rows[chi][rep_sub]
            sigma_1 = table_obj.rows[chi][0]
            lam = sigma_g * sigma_1.inverse()
            if f is f512 and m.kind == "cuspidal":
                lam = zeta * lam
            if lam != m.lam:
                raise PinningError(
                    f"lambda of {m.label} should be {lam}, dataset has {m.lam}"
                )


def _centralizer_tables(G: FiniteGroup):
    """Per class: (class index of the class rep inside its centralizer, table)."""
    data = G.conjugacy_classes()
    out = []
    for rep, cent in zip(data.class_reps, data.centralizers):
        sub = G.subgroup(cent)
        table = sub.character_table()
        rep_sub_class = table.classes.class_of[sub.index[G.elements[rep]]]
        out.append((rep_sub_class, table))
    return out


def _check_sign_pinning(ds: FamilyDataset) -> None:
    """The degree-512 assignment reproduces the (+1, -1) and (1/2, -1/2, -1/2)
    transform coefficients; otherwise the two 512 labels were swapped."""
    half = CycNum.from_rational(1) / 2
    f512 = ds.family_of("phi_512_11")
    x1 = f512.member("E7[z4]").mpair
    x2 = f512.member("E7[-z4]").mpair
    for label, want in (("phi_512_11", half + half), ("phi_512_12", -(half + half))):
        xm = f512.member(label).mpair
        got = f512.fourier.entry(MPair(*xm), MPair(*x1)) + \
            f512.fourier.entry(MPair(*xm), MPair(*x2))
        if got != want:
            raise PinningError(
                f"{label}: transform coefficient sum {got}, pinned value {want}"
            )
    for m in f512.members:
        want_delta = -1 if m.kind == "cuspidal" else 1
        if m.delta != want_delta:
            raise PinningError(f"delta of {m.label} must be {want_delta}")

    fam56 = ds.family_of("phi_56_3")
    x0 = next(m for m in fam56.members if m.kind == "cuspidal").mpair
    coeffs = {}
    for label in ("phi_56_3", "phi_35_4", "phi_21_6"):
        xm = fam56.member(label).mpair
        coeffs[label] = fam56.fourier.entry(MPair(*xm), MPair(*x0))
    if (coeffs["phi_56_3"] != half or coeffs["phi_35_4"] != -half
            or coeffs["phi_21_6"] != -half):
        raise PinningError(
            "pairing coefficients against the non-principal slot of the "
            f"phi_56_3 family must be (1/2, -1/2, -1/2), got {coeffs}"
        )

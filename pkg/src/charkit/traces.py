"""Bundled Coxeter-class trace data for the generic Hecke algebra of E7.

Every constraint that the downstream computation relies on is enforced when
the file is loaded, so corrupt data cannot silently pass: the Tits
specialization against the bundled integer column, the centralizer norm of
that column, the three-term combination worth 2q^5, the difference of the
two degree-512 traces worth 2v^7, and the duality symmetry of the nonzero
monomials.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .families import E7_IRR_LABELS, SchemaError, default_data_dir, label_name
from .laurent import LaurentPoly
from .scalars import s_parse


class ConsistencyError(ValueError):
    """A load-time cross-check failed; the message names the constraint."""


@dataclass(frozen=True)
class CoxeterTraceDataset:
    type_label: str
    coxeter_word: tuple[int, ...]       # 1-based generator indices
    traces: dict                         # label -> LaurentPoly
    class_values: dict                   # label -> int (value at v = 1)

    def trace(self, label: str) -> LaurentPoly:
        return self.traces[label]


def load_coxeter_traces(path: str | Path | None = None) -> CoxeterTraceDataset:
    path = Path(path) if path else default_data_dir() / "e7_coxeter_traces.json"
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read trace dataset: {exc}") from exc
    if doc.get("type") != "E7":
        raise SchemaError("trace dataset must declare type E7")
    word = tuple(doc.get("coxeter_word", ()))
    if sorted(word) != list(range(1, 8)):
        raise SchemaError("coxeter_word must list the seven generators once")
    raw = doc.get("traces")
    want = [label_name(d, b) for d, b in E7_IRR_LABELS]
    if not isinstance(raw, dict) or sorted(raw) != sorted(want):
        raise SchemaError("traces must be keyed by the sixty canonical labels")
    ints = doc.get("coxeter_class_values")
    if not isinstance(ints, dict) or sorted(ints) != sorted(want):
        raise SchemaError("coxeter_class_values must cover all labels")
    traces = {}
    for label, terms in raw.items():
        try:
            poly = LaurentPoly({int(e): s_parse(str(c)) for e, c in terms.items()})
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"malformed trace for {label}: {exc}") from exc
        traces[label] = poly
    values = {label: int(v) for label, v in ints.items()}
    ds = CoxeterTraceDataset("E7", word, traces, values)
    _check(ds)
    return ds


def _check(ds: CoxeterTraceDataset) -> None:
    q = LaurentPoly.q
    # Tits specialization against the bundled integer column
    for label, poly in ds.traces.items():
        got = poly.at_v_one()
        if got != ds.class_values[label]:
            raise ConsistencyError(
                f"tits-specialization: {label} gives {got} at v=1, "
                f"integer column has {ds.class_values[label]}"
            )
    # column norm: the Coxeter element generates its centralizer, order 18
    norm = sum(v * v for v in ds.class_values.values())
    if norm != 18:
        raise ConsistencyError(
            f"centralizer-norm: sum of squares of the class column is {norm}, not 18"
        )
    # orthogonality against the degree column
    dot = sum(d * ds.class_values[label_name(d, b)] for d, b in E7_IRR_LABELS)
    if dot != 0:
        raise ConsistencyError(
            f"degree-orthogonality: class column pairs to {dot} against degrees"
        )
    # the index character takes q^(word length)
    if ds.traces[label_name(1, 0)] != q(7):
        raise ConsistencyError("index-value: trace of the index character must be q^7")
    if ds.traces[label_name(1, 63)] != LaurentPoly.const(-1):
        raise ConsistencyError("sign-value: trace of the sign character must be -1")
    # the three-term combination worth 2q^5
    combo = (ds.traces["phi_56_3"] - ds.traces["phi_35_4"] - ds.traces["phi_21_6"])
    if combo != 2 * q(5):
        raise ConsistencyError(
            f"three-term-combination: expected 2q^5, dataset gives {combo}"
        )
    # the degree-512 difference worth 2v^7
    diff = ds.traces["phi_512_11"] - ds.traces["phi_512_12"]
    if diff != LaurentPoly.v(7, 2):
        raise ConsistencyError(
            f"exceptional-pair-difference: expected 2v^7, dataset gives {diff}"
        )
    # nonzero entries are signed monomials, symmetric under duality
    signed = []
    for label, poly in ds.traces.items():
        if poly.is_zero():
            continue
        mono = poly.as_monomial()
        if mono is None or mono[1] not in (1, -1):
            raise ConsistencyError(
                f"monomial-shape: nonzero trace of {label} must be a signed power"
            )
        signed.append(mono)
    if sorted(signed) != sorted((14 - e, -s) for e, s in signed):
        raise ConsistencyError(
            "duality-symmetry: the signed exponent multiset must be stable "
            "under (e, s) -> (14 - e, -s)"
        )
    if len(signed) != 18:
        raise ConsistencyError(
            f"support-size: {len(signed)} nonzero traces, expected 18"
        )

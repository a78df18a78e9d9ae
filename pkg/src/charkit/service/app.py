"""FastAPI service wrapping the exact-computation core.

Root systems, sandboxes and the bundled datasets are built once per process
(every core builder caches), so a long-running service answers repeated
queries without recomputation.  All numeric payloads are exact values
rendered in the canonical text form.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import e7 as e7mod
from ..cartan import InvalidCartan
from ..families import PinningError, SchemaError, load_family_dataset
from ..fourier import fourier_matrix
from ..groups import OrderCapExceeded, group_from_text
from ..laurent import UnsupportedSpecialization
from ..roots import build_root_system, coxeter_conjugator
from ..sandbox import (
    SizeCapExceeded, build_sandbox, convolution_hecke_check, heckeuch_report,
    verify_cell_partition, verify_cell_products, verify_cells,
)
from ..scalars import s_render
from ..traces import ConsistencyError, load_coxeter_traces
from .models import (
    CharTableRequest, CharTableResponse, ClassInfo, CoxeterConjRequest,
    CoxeterConjResponse, FourierRequest, FourierResponse, RootsRequest,
    RootsResponse, SandboxRequest, SandboxResponse, SignRequest, SignResponse,
    TableRequest, TableResponse,
)

app = FastAPI(
    title="charkit",
    description="Exact Weyl group, Hecke trace and Fourier-transform computations",
)

_BAD_REQUEST = (InvalidCartan, ValueError, KeyError, OrderCapExceeded,
                SizeCapExceeded, SchemaError)


@app.get("/healthz")
def healthz():
    return {"status": "ok"}


@app.post("/roots", response_model=RootsResponse)
def roots(req: RootsRequest) -> RootsResponse:
    try:
        rs = build_root_system(req.type)
    except _BAD_REQUEST as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    w0 = rs.longest_element()
    n = rs.num_positive
    fixes = all(w0.perm[si] == si + n for si in rs.simple_indices)
    return RootsResponse(
        type=rs.datum.type_label,
        rank=rs.rank,
        num_positive=n,
        longest_length=w0.length,
        group_order=rs.group_order(),
        minus_w0_fixes_simples=fixes,
        simple_roots=[list(rs.roots[i]) for i in rs.simple_indices],
        ok=w0.length == n,
    )


@app.post("/coxeter-conj", response_model=CoxeterConjResponse)
def coxeter_conj(req: CoxeterConjRequest) -> CoxeterConjResponse:
    try:
        rs = build_root_system(req.type)
        source = [i - 1 for i in req.source]
        target = [i - 1 for i in req.target]
        word = coxeter_conjugator(rs, source, target)
        u = rs.from_word(word)
        verified = (
            u * rs.coxeter_element(source) * u.inverse()
            == rs.coxeter_element(target)
        )
    except _BAD_REQUEST as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return CoxeterConjResponse(
        type=rs.datum.type_label, source=req.source, target=req.target,
        word=[i + 1 for i in word], verified=verified, ok=verified,
    )


@app.post("/chartable", response_model=CharTableResponse)
def chartable(req: CharTableRequest) -> CharTableResponse:
    try:
        G = group_from_text(req.group)
        table = G.character_table()
    except _BAD_REQUEST as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    orth = table.verify_orthogonality()
    classes = [
        ClassInfo(size=s, element_order=G.element_order(rep))
        for rep, s in zip(table.classes.class_reps, table.classes.class_sizes)
    ]
    return CharTableResponse(
        group=req.group, order=G.order, classes=classes,
        rows=[[str(c) for c in row] for row in table.rows],
        orthogonality_ok=orth, ok=orth,
    )


@app.post("/fourier", response_model=FourierResponse)
def fourier(req: FourierRequest) -> FourierResponse:
    try:
        G = group_from_text(req.group)
        fm = fourier_matrix(G, verify=False)
    except _BAD_REQUEST as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    herm = fm.is_hermitian()
    invo = fm.is_involution()
    return FourierResponse(
        group=req.group,
        mpairs=[list(p.as_tuple()) for p in fm.mpairs],
        matrix=[[str(e) for e in row] for row in fm.entries],
        hermitian=herm, involution=invo, ok=herm and invo,
    )


@app.post("/sandbox", response_model=SandboxResponse)
def sandbox(req: SandboxRequest) -> SandboxResponse:
    try:
        sb = build_sandbox(req.n, req.q)
        runner = {
            "heckeuch": heckeuch_report,
            "cells": verify_cells,
            "cellpartition": verify_cell_partition,
            "cellproducts": verify_cell_products,
            "hecke": convolution_hecke_check,
        }[req.check]
        report = runner(sb)
    except _BAD_REQUEST as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return SandboxResponse(**report.as_dict(), ok=report.ok())


@app.post("/e7/sign", response_model=SignResponse)
def e7_sign(req: SignRequest) -> SignResponse:
    try:
        traces = load_coxeter_traces(req.traces)
        fam = load_family_dataset(req.families)
        sol = e7mod.solve_signs(traces, fam, positivity=req.positivity)
    except (SchemaError, ConsistencyError, PinningError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except e7mod.AmbiguousSign as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    return SignResponse(**sol.as_dict(), ok=sol.xi == 1)


@app.post("/e7/table", response_model=TableResponse)
def e7_table(req: TableRequest) -> TableResponse:
    try:
        traces = load_coxeter_traces(req.traces)
        fam = load_family_dataset(req.families)
        sol = e7mod.solve_signs(traces, fam)
        table = e7mod.final_value_table(sol.xi, traces, fam)
        entries = {}
        for row in table.row_labels:
            entries[row] = {}
            for col in table.col_labels:
                poly = table.entry(row, col)
                entries[row][col] = (
                    _specialized(poly, req.q) if req.q else str(poly)
                )
        backsolved = e7mod.empty_cell_backsolve(traces, fam, sol.xi)
        x0_slot = {
            "u0": "delta*q^2 with delta in {-1, +1} (left open)",
            "u_a0": "unknown",
            "u_a0^2": _specialized(backsolved, req.q) if req.q else str(backsolved),
            "u_a0^3": "unknown",
        }
    except (SchemaError, ConsistencyError, PinningError,
            UnsupportedSpecialization, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return TableResponse(
        xi=sol.xi, rows=list(table.row_labels), cols=list(table.col_labels),
        entries=entries, x0_slot=x0_slot, q=req.q, ok=sol.xi == 1,
    )


def _specialized(poly, q: int) -> str:
    p, f = _prime_power(q)
    even, odd = poly.specialize_sqrt_q(p, f)
    from ..scalars import s_is_zero
    if s_is_zero(odd):
        return s_render(even)
    if s_is_zero(even):
        return f"{s_render(odd)}*sqrt({p})"
    return f"{s_render(even)} + {s_render(odd)}*sqrt({p})"


def _prime_power(q: int):
    for p in (2, 3, 5, 7, 11, 13):
        m, f = q, 0
        while m % p == 0:
            m //= p
            f += 1
        if m == 1 and f:
            return p, f
    raise ValueError(f"{q} is not a supported prime power")

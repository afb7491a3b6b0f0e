"""HTTP service exposing the series, matrix, and verification machinery.

The CLI talks to this app (in process by default, over the wire with
--server).  All payloads are JSON; series use the shared encoding of
:meth:`ajack.qseries.NomeSeries.to_json`, complex numbers go as
{"re": float, "im": float}.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .acceptance import run_acceptance, theta_law_residuals
from .errors import AjackError
from .jack import JackLabel, closed_form, heat_check, jack_series
from .modular import build_SJ, build_S_macdonald, build_S_product, \
    fixture_matrix, g_factor, selberg_B, sj_relations, verify_modular_numeric
from .qseries import Q

app = FastAPI(title="ajack", version=__version__)


def _cplx(v: complex) -> dict:
    return {"re": float(v.real), "im": float(v.imag)}


def _rat(v) -> str:
    v = Q(v)
    return f"{v.numerator}/{v.denominator}"


class JackRequest(BaseModel):
    K: int = Field(ge=0)
    k: int = Field(ge=1)
    l: int
    order: int = Field(ge=0)
    delta_shift: int = 0
    include_unnormalized: bool = False


class ClosedFormRequest(BaseModel):
    K: int
    k: int = Field(ge=1)
    l: int
    order: int = Field(ge=0)


class HeatCheckRequest(BaseModel):
    K: int
    k: int = Field(ge=1)
    order: int = Field(ge=0)


class LevelCheckRequest(BaseModel):
    k_max: int = Field(default=3, ge=1)
    order: int = Field(default=8, ge=2)


class SMatrixRequest(BaseModel):
    K: int = Field(ge=0)
    k: int = Field(ge=1)
    form: str = "product"


class CrossCheckRequest(BaseModel):
    K_max: int = Field(default=4, ge=0)
    k_max: int = Field(default=5, ge=1)
    tol: float = Field(default=1e-10, gt=0)


class VerifySRequest(BaseModel):
    K: int = Field(ge=0)
    k: int = Field(ge=1)
    z: str = "0.17,0"
    tau: str = "0,1.3"
    u: str = "0,0"
    order: int = Field(default=20, ge=1)
    tol: float = Field(default=1e-6, gt=0)


class SelbergRequest(BaseModel):
    n: int = Field(ge=0)
    alpha: float
    beta: float
    gamma: float
    mode: str = "closed"


class GFactorRequest(BaseModel):
    K: int = Field(ge=0)
    k: int = Field(ge=1)
    m: int
    mode: str = "ratio"


class ThetaLawsRequest(BaseModel):
    samples: int = Field(default=20, ge=1)
    tol: float = Field(default=1e-9, gt=0)
    seed: int = 7


class SuiteRequest(BaseModel):
    quick: bool = False
    only: list[str] | None = None


def _parse_complex(s: str) -> complex:
    try:
        re, im = (float(t) for t in s.split(","))
    except ValueError:
        raise HTTPException(422, f"complex value must be 're,im', got {s!r}")
    return complex(re, im)


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except AjackError as exc:
        raise HTTPException(422, str(exc))


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/jack/compute")
def jack_compute(req: JackRequest):
    label = _guard(JackLabel, req.K, req.k, req.l)
    res = _guard(jack_series, label, req.order, req.delta_shift)
    out = {
        "K": req.K, "k": req.k, "l": req.l,
        "alpha": _rat(res.alpha),
        "eigenvalue": _rat(res.eigenvalue),
        "series": res.normalized.to_json(),
    }
    if req.include_unnormalized:
        out["unnormalized"] = res.unnormalized.to_json()
    return out


@app.post("/jack/closed-form")
def jack_closed_form(req: ClosedFormRequest):
    series = _guard(closed_form, req.K, req.k, req.l, req.order)
    return {"K": req.K, "k": req.k, "l": req.l, "series": series.to_json()}


def _level_check(K: int, req: LevelCheckRequest):
    cases = []
    ok = True
    for k in range(1, req.k_max + 1):
        for j0 in range(0, K + 1):
            l = j0 + k
            r = jack_series(JackLabel(K, k, l), req.order)
            cf = closed_form(K, k, l, req.order)
            match = r.normalized.agrees_with(cf, through=Q(req.order - 2))
            ok = ok and match
            cases.append({"k": k, "l": l, "match": bool(match)})
    return {"K": K, "order": req.order, "pass": bool(ok), "cases": cases}


@app.post("/jack/check-level1")
def jack_check_level1(req: LevelCheckRequest):
    return _guard(_level_check, 1, req)


@app.post("/jack/check-level2")
def jack_check_level2(req: LevelCheckRequest):
    return _guard(_level_check, 2, req)


@app.post("/jack/heat-check")
def jack_heat_check(req: HeatCheckRequest):
    ok, msg = _guard(heat_check, req.K, req.k, req.order)
    return {"K": req.K, "k": req.k, "order": req.order,
            "pass": bool(ok), "detail": msg}


_BUILDERS = {"product": build_S_product, "macdonald": build_S_macdonald,
             "fixture": fixture_matrix}


@app.post("/smatrix/build")
def smatrix_build(req: SMatrixRequest):
    if req.form not in _BUILDERS:
        raise HTTPException(422, f"unknown form {req.form!r}")
    return _guard(_BUILDERS[req.form], req.K, req.k).to_json()


@app.post("/smatrix/cross-check")
def smatrix_cross_check(req: CrossCheckRequest):
    import numpy as np
    worst = 0.0
    cells = []
    for K in range(req.K_max + 1):
        for k in range(1, req.k_max + 1):
            a = _guard(build_S_product, K, k).entries
            b = _guard(build_S_macdonald, K, k).entries
            dev = float(np.max(np.abs(a - b)))
            if K <= 4:
                f = _guard(fixture_matrix, K, k).entries
                dev = max(dev, float(np.max(np.abs(a - f))))
            worst = max(worst, dev)
            cells.append({"K": K, "k": k, "deviation": dev})
    return {"pass": bool(worst < req.tol), "max_deviation": worst,
            "tol": req.tol, "cells": cells}


@app.post("/smatrix/sj")
def smatrix_sj(req: SMatrixRequest):
    if req.form not in _BUILDERS:
        raise HTTPException(422, f"unknown form {req.form!r}")
    M, weight = _guard(build_SJ, req.K, req.k, req.form)
    out = M.to_json()
    out["weight"] = _rat(weight)
    return out


@app.post("/smatrix/relations")
def smatrix_relations(req: SMatrixRequest):
    r = _guard(sj_relations, req.K, req.k)
    return {
        "K": req.K, "k": req.k,
        "s_squared_residual": r["s_squared_residual"],
        "s_squared_scalar": _cplx(r["s_squared_scalar"]),
        "braid_residual": r["braid_residual"],
        "braid_scalar": _cplx(r["braid_scalar"]),
        "pass": bool(max(r["s_squared_residual"], r["braid_residual"],
                         r["s_squared_unimodular"],
                         r["braid_unimodular"]) < 1e-8),
    }


@app.post("/modular/verify-s")
def modular_verify_s(req: VerifySRequest):
    rep = _guard(verify_modular_numeric, req.K, req.k,
                 _parse_complex(req.z), _parse_complex(req.tau),
                 order=req.order, tol=req.tol, u=_parse_complex(req.u))
    rep = dict(rep)
    rep["fitted_constant"] = _cplx(rep["fitted_constant"])
    return rep


@app.post("/selberg/eval")
def selberg_eval(req: SelbergRequest):
    value = _guard(selberg_B, req.n, req.alpha, req.beta, req.gamma, req.mode)
    return {"n": req.n, "mode": req.mode, "value": value}


@app.post("/gfactor")
def gfactor(req: GFactorRequest):
    value = _guard(g_factor, req.K, req.k, req.m, req.mode)
    return {"K": req.K, "k": req.k, "m": req.m, "mode": req.mode,
            "value": _cplx(complex(value))}


@app.post("/theta/check-laws")
def theta_check_laws(req: ThetaLawsRequest):
    res = _guard(theta_law_residuals, req.samples, req.seed)
    worst = max(res.values())
    return {"pass": bool(worst < req.tol), "max_residual": worst,
            "tol": req.tol, "residuals": res}


@app.post("/suite/acceptance")
def suite_acceptance(req: SuiteRequest):
    results = run_acceptance(quick=req.quick, only=req.only)
    return {"pass": all(r["pass"] for r in results), "results": results}

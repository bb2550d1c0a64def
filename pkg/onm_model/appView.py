from typing import Optional

from fastapi import Depends, FastAPI, HTTPException
from pydantic import BaseModel
from sqlalchemy.orm import Session

from onm_model.config import DEFAULT_DEPTH, DEFAULT_SEED, configure_logging
from onm_model.db import engine, get_db
from onm_model.models.base import Base
from onm_model.models.context import Context, OnmError
from onm_model.models.elements import equals, fourier
from onm_model.models.report import get_report_by_id, get_reports
# Controllers
from onm_model.controller.verify import parse_checks, run_verification, store_report
from onm_model.services.parser import parse_element, parse_groupword

app = FastAPI(title="O_{n,m} verifier")


class EvalRequest(BaseModel):
    expr: str
    n: int = 2
    m: int = 2
    equals: Optional[str] = None


class FourierRequest(BaseModel):
    expr: str
    at: str
    n: int = 2
    m: int = 2


class VerifyRequest(BaseModel):
    n: int = 2
    m: int = 2
    depth: int = DEFAULT_DEPTH
    seed: int = DEFAULT_SEED
    checks: Optional[str] = None
    store: bool = False


@app.on_event("startup")
def on_startup():
    configure_logging()
    Base.metadata.create_all(bind=engine)


@app.post("/eval")
def eval_view(body: EvalRequest):
    try:
        ctx = Context(body.n, body.m)
        x = parse_element(body.expr, ctx)
        result = {"n": ctx.n, "m": ctx.m, "result": str(x)}
        if body.equals is not None:
            verdict = equals(x, parse_element(body.equals, ctx))
            result["verdict"] = verdict.kind.value
            result["detail"] = str(verdict)
        return result
    except OnmError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/fourier")
def fourier_view(body: FourierRequest):
    try:
        ctx = Context(body.n, body.m)
        coefficient = fourier(parse_element(body.expr, ctx), parse_groupword(body.at, ctx))
        return {"at": body.at, "result": str(coefficient)}
    except OnmError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/verify")
def verify_view(body: VerifyRequest, db: Session = Depends(get_db)):
    try:
        ctx = Context(body.n, body.m)
        report = run_verification(ctx, body.depth, parse_checks(body.checks), body.seed)
    except OnmError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception:
        raise HTTPException(status_code=500, detail="Unexpected error during verification.")
    result = report.to_dict()
    if body.store:
        result["report_id"] = store_report(db, report).id
    return result


@app.get("/reports")
def reports_view(n: Optional[int] = None, m: Optional[int] = None, db: Session = Depends(get_db)):
    return [
        {"id": r.id, "n": r.n, "m": r.m, "depth": r.depth, "seed": r.seed,
         "pass": r.passed, "fail": r.failed, "unconfirmed": r.unconfirmed}
        for r in get_reports(db, n, m)
    ]


@app.get("/reports/{report_id}")
def report_view(report_id: int, db: Session = Depends(get_db)):
    record = get_report_by_id(db, report_id)
    if not record:
        raise HTTPException(status_code=404, detail="Report not found")
    return {"id": record.id, **record.to_report().to_dict()}

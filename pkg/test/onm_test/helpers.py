from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

from onm_model.models.base import Base
from onm_model.models.context import Context
from onm_model.models.report import FAIL, PASS, UNCONFIRMED, Report, ReportEntry
from onm_model.services.parser import parse_element

CTX_11 = Context(1, 1)
CTX_12 = Context(1, 2)
CTX_22 = Context(2, 2)
CTX_23 = Context(2, 3)
CTX_32 = Context(3, 2)

SMALL_CONTEXTS = (CTX_11, CTX_12, CTX_22, CTX_23, CTX_32)


def el(text, ctx=CTX_22):
    return parse_element(text, ctx)


def memory_session():
    """(engine, session) over a fresh in-memory SQLite database."""
    engine = create_engine("sqlite:///:memory:", connect_args={"check_same_thread": False})
    Base.metadata.create_all(bind=engine)
    SessionLocal = sessionmaker(bind=engine, autoflush=False, autocommit=False)
    return engine, SessionLocal()


def close_session(engine, db):
    db.close()
    Base.metadata.drop_all(bind=engine)
    engine.dispose()


def get_report_data():
    return Report("1.0.0", 2, 3, 3, 0, [
        ReportEntry("C1", "defining relations of O_{n,m}", "p q = 0", PASS, "", 1.5),
        ReportEntry("C11", "R is not a power partial isometry when n, m >= 2", "R^2 is not a partial isometry",
                    PASS, "fiber e: coefficient 1 on (p)", 12.0),
        ReportEntry("C21", "tameness: every word is a partial isometry",
                    "w w* w = w, reduced words of length 5", UNCONFIRMED, "fiber a1: refinement depth 7 exhausted", 40.25),
    ])


def get_failing_report_data():
    report = get_report_data()
    report.entries.append(ReportEntry("C5", "(V, H) is an interaction over A_p", "V(p) = p", FAIL, "error: boom", 0.5))
    return report

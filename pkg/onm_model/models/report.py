# models/report.py
import json
from dataclasses import dataclass, field
from datetime import datetime
from typing import List, Optional

from sqlalchemy import Column, DateTime, Float, ForeignKey, Integer, String, Text
from sqlalchemy.orm import Session, relationship

from onm_model.models.base import Base

PASS = "pass"
FAIL = "fail"
UNCONFIRMED = "unconfirmed"
VERDICTS = (PASS, FAIL, UNCONFIRMED)


@dataclass
class ReportEntry:
    id: str
    citation: str
    instance: str
    verdict: str
    witness: str = ""
    ms: float = 0.0

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}, got {self.verdict!r}")

    def check_number(self) -> int:
        return int(self.id.lstrip("C"))

    def sort_key(self):
        return (self.check_number(), self.instance)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "citation": self.citation,
            "instance": self.instance,
            "verdict": self.verdict,
            "witness": self.witness,
            "ms": self.ms,
        }


@dataclass
class Report:
    version: str
    n: int
    m: int
    depth: int
    seed: int
    entries: List[ReportEntry] = field(default_factory=list)

    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, UNCONFIRMED: 0}
        for entry in self.entries:
            counts[entry.verdict] += 1
        return counts

    def exit_code(self) -> int:
        counts = self.summary()
        if counts[FAIL]:
            return 1
        if counts[UNCONFIRMED]:
            return 2
        return 0

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "n": self.n,
            "m": self.m,
            "depth": self.depth,
            "seed": self.seed,
            "entries": [e.to_dict() for e in self.entries],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        report = cls(data["version"], data["n"], data["m"], data["depth"], data["seed"],
                     [ReportEntry(**e) for e in data.get("entries", [])])
        if "summary" in data and data["summary"] != report.summary():
            raise ValueError("report summary does not match its entries")
        return report

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"O_{{n,m}} verifier {self.version}  n={self.n} m={self.m} depth={self.depth} seed={self.seed}"]
        for e in self.entries:
            line = f"{e.id:<4} {e.verdict.upper():<12} {e.instance}  [{e.citation}]"
            if e.witness:
                line += f"\n       witness: {e.witness}"
            lines.append(line)
        counts = self.summary()
        lines.append(f"pass={counts[PASS]} fail={counts[FAIL]} unconfirmed={counts[UNCONFIRMED]}")
        return "\n".join(lines)


class ReportRecord(Base):
    """
    Model for reports table
    """
    __tablename__ = "reports"

    id = Column(Integer, primary_key=True, autoincrement=True)
    version = Column(String)
    n = Column(Integer)
    m = Column(Integer)
    depth = Column(Integer)
    seed = Column(Integer)
    created_at = Column(DateTime, default=datetime.utcnow)
    passed = Column(Integer)
    failed = Column(Integer)
    unconfirmed = Column(Integer)

    entries = relationship("ReportEntryRecord", back_populates="report", cascade="all, delete-orphan")

    def to_report(self) -> Report:
        return Report(self.version, self.n, self.m, self.depth, self.seed,
                      [e.to_entry() for e in sorted(self.entries, key=lambda r: r.id)])


class ReportEntryRecord(Base):
    __tablename__ = "report_entries"

    id = Column(Integer, primary_key=True, autoincrement=True)
    report_id = Column(Integer, ForeignKey("reports.id"))
    check_id = Column(String)
    citation = Column(String)
    instance = Column(String)
    verdict = Column(String)
    witness = Column(Text)
    ms = Column(Float)

    report = relationship("ReportRecord", back_populates="entries")

    def to_entry(self) -> ReportEntry:
        return ReportEntry(self.check_id, self.citation, self.instance, self.verdict, self.witness or "", self.ms or 0.0)


#---------------------------------CRUD-----------------------------------#
def create_report(db: Session, report: Report) -> ReportRecord:
    counts = report.summary()
    record = ReportRecord(
        version=report.version,
        n=report.n,
        m=report.m,
        depth=report.depth,
        seed=report.seed,
        passed=counts[PASS],
        failed=counts[FAIL],
        unconfirmed=counts[UNCONFIRMED],
    )
    for entry in report.entries:
        record.entries.append(ReportEntryRecord(
            check_id=entry.id,
            citation=entry.citation,
            instance=entry.instance,
            verdict=entry.verdict,
            witness=entry.witness,
            ms=entry.ms,
        ))
    db.add(record)
    db.commit()
    db.refresh(record)
    return record


def get_report_by_id(db: Session, report_id: int) -> Optional[ReportRecord]:
    return db.query(ReportRecord).filter(ReportRecord.id == report_id).first()


def get_reports(db: Session, n: Optional[int] = None, m: Optional[int] = None) -> List[ReportRecord]:
    query = db.query(ReportRecord)
    if n is not None:
        query = query.filter(ReportRecord.n == n)
    if m is not None:
        query = query.filter(ReportRecord.m == m)
    return query.order_by(ReportRecord.id).all()


def delete_report(db: Session, report_id: int) -> bool:
    record = get_report_by_id(db, report_id)
    if record:
        db.delete(record)
        db.commit()
        return True
    return False

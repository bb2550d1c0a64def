"""
Check plumbing: a Claim is one lazily evaluated instance of an identity;
running it yields a ReportEntry with verdict pass / fail / unconfirmed.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple

from onm_model.models.context import OnmError
from onm_model.models.elements import Element, Verdict, VerdictKind, equals
from onm_model.models.report import FAIL, PASS, UNCONFIRMED, ReportEntry

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Claim:
    check_id: str
    citation: str
    instance: str
    run: Callable[[], Verdict]
    expect: VerdictKind = VerdictKind.EQUAL


def claim_equal(check_id: str, citation: str, instance: str,
                lhs: Callable[[], Element], rhs: Callable[[], Element],
                refine_depth: Optional[int] = None) -> Claim:
    return Claim(check_id, citation, instance, lambda: equals(lhs(), rhs(), depth=refine_depth))


def claim_nonzero(check_id: str, citation: str, instance: str,
                  value: Callable[[], Element], refine_depth: Optional[int] = None) -> Claim:
    def run() -> Verdict:
        x = value()
        return equals(x, Element.zero(x.ctx), depth=refine_depth)

    return Claim(check_id, citation, instance, run, expect=VerdictKind.NOT_EQUAL)


def holds(ok: bool, detail: str = "") -> Verdict:
    if ok:
        return Verdict(VerdictKind.EQUAL, detail=detail)
    return Verdict(VerdictKind.NOT_EQUAL, detail=detail)


def claim_holds(check_id: str, citation: str, instance: str,
                predicate: Callable[[], Tuple[bool, str]]) -> Claim:
    return Claim(check_id, citation, instance, lambda: holds(*predicate()))


def evaluate(claim: Claim) -> ReportEntry:
    start = time.perf_counter()
    try:
        verdict = claim.run()
        if verdict.is_unconfirmed:
            status = UNCONFIRMED
        elif verdict.kind is claim.expect:
            status = PASS
        else:
            status = FAIL
        witness = str(verdict.witness) if verdict.witness is not None else verdict.detail
    except OnmError as exc:
        status = FAIL
        witness = f"error: {exc}"
    ms = round((time.perf_counter() - start) * 1000.0, 3)
    if status != PASS:
        logger.warning("%s %s: %s %s", claim.check_id, claim.instance, status, witness)
    return ReportEntry(claim.check_id, claim.citation, claim.instance, status, witness, ms)


def run_claims(claims: Iterable[Claim], workers: int = 1) -> List[ReportEntry]:
    claims = list(claims)
    if workers > 1 and len(claims) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(evaluate, claims))
    else:
        entries = [evaluate(c) for c in claims]
    return sorted(entries, key=ReportEntry.sort_key)

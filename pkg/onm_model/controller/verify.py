"""Assembles the verification corpus C1..C21 and runs it into a Report."""
import logging
import re
from typing import Callable, Dict, Iterable, List, Optional

from sqlalchemy.orm import Session

from onm_model.config import DEFAULT_SEED, DEFAULT_WORKERS, ENGINE_VERSION
from onm_model.controller import covariant, maps, matrep_checks, relations
from onm_model.controller.checks import Claim, run_claims
from onm_model.models.context import Context, OnmError
from onm_model.models.report import Report, ReportRecord, create_report
from onm_model.services import permrep
from onm_model.services.permrep import DAGGER_CITATION

logger = logging.getLogger(__name__)

ALL_CHECKS = tuple(f"C{k}" for k in range(1, 22))


class CheckSelectionError(OnmError):
    pass


# truncated balls grow exponentially with the word depth of the dagger projections
MAX_TRUNCATED_DAGGER_DEPTH = 2


def _dagger_claims(ctx: Context, depth: int, seed: int) -> List[Claim]:
    if ctx.n == ctx.m:
        model = permrep.build_exact_model(ctx.n, 3, seed)
        return permrep.check_dagger_formulas(model, depth)
    # projections of length <= 2 * word_depth, V adds four letters, the averages look two further
    word_depth = min(depth, MAX_TRUNCATED_DAGGER_DEPTH)
    model = permrep.build_truncated_model(ctx.n, ctx.m, 2 * word_depth + 7, seed)
    return permrep.check_dagger_formulas(model, word_depth)


def _builders(ctx: Context, depth: int, seed: int, refine_depth: Optional[int]) -> Dict[str, Callable[[], List[Claim]]]:
    rd = refine_depth
    return {
        "C1": lambda: relations.check_defining_relations(ctx, rd),
        "C2": lambda: relations.check_corner_form(ctx, rd),
        "C3": lambda: maps.check_homomorphisms(ctx, depth, rd),
        "C4": lambda: maps.check_transfer_identities(ctx, depth, rd),
        "C5": lambda: maps.check_interaction_axioms(ctx, depth, rd) + _dagger_claims(ctx, depth, seed),
        "C6": lambda: covariant.check_pisom_suite(ctx, rd),
        "C7": lambda: covariant.check_slmab(ctx, depth, rd),
        "C8": lambda: covariant.check_covariance(ctx, depth, rd),
        "C9": lambda: covariant.check_tro(ctx, depth, seed=seed, refine_depth=rd),
        "C10": lambda: covariant.check_redundancies(ctx, depth, rd),
        "C11": lambda: covariant.check_not_power_claims(ctx, rd),
        "C12": lambda: covariant.check_cancellation_sample(ctx, depth, rd),
        "C13": lambda: covariant.check_factorization(ctx, depth, rd),
        "C14": lambda: covariant.check_r_identities(ctx, rd),
        "C15": lambda: maps.check_assorted(ctx, depth, rd),
        "C16": lambda: covariant.check_r_relations(ctx, rd),
        "C17": lambda: matrep_checks.check_sigma_tau(ctx, rd),
        "C18": lambda: matrep_checks.check_gamma_lambda(ctx, rd),
        "C19": lambda: covariant.check_normalizer(ctx, depth, rd) + matrep_checks.check_round_trip(ctx, rd),
        "C20": lambda: covariant.check_fullness(ctx, rd),
        "C21": lambda: relations.check_tameness(ctx, 2 * depth, rd),
    }


def parse_checks(text: Optional[str]) -> List[str]:
    """'C1,C5-C7' style selection; None or empty means every check."""
    if not text:
        return list(ALL_CHECKS)
    selected = []
    for part in text.replace(" ", "").split(","):
        match = re.fullmatch(r"C?(\d+)(?:-C?(\d+))?", part, re.IGNORECASE)
        if match is None:
            raise CheckSelectionError(f"bad check selector {part!r}")
        lo = int(match.group(1))
        hi = int(match.group(2) or lo)
        for k in range(lo, hi + 1):
            check = f"C{k}"
            if check not in ALL_CHECKS:
                raise CheckSelectionError(f"unknown check {check}")
            if check not in selected:
                selected.append(check)
    return selected


def collect_claims(ctx: Context, depth: int, checks: Iterable[str], seed: int = DEFAULT_SEED,
                   refine_depth: Optional[int] = None) -> List[Claim]:
    if depth < 1:
        raise OnmError(f"depth must be >= 1, got {depth}")
    builders = _builders(ctx, depth, seed, refine_depth)
    claims = []
    for check in checks:
        if check not in builders:
            raise CheckSelectionError(f"unknown check {check}")
        claims += builders[check]()
    return claims


def run_verification(ctx: Context, depth: int, checks: Optional[Iterable[str]] = None, seed: int = DEFAULT_SEED,
                     refine_depth: Optional[int] = None, workers: int = DEFAULT_WORKERS) -> Report:
    checks = list(checks) if checks is not None else list(ALL_CHECKS)
    claims = collect_claims(ctx, depth, checks, seed, refine_depth)
    logger.info("running %d claims for %s at depth %d", len(claims), ctx, depth)
    entries = run_claims(claims, workers)
    report = Report(ENGINE_VERSION, ctx.n, ctx.m, depth, seed, entries)
    logger.info("verification summary %s", report.summary())
    return report


def store_report(db: Session, report: Report) -> ReportRecord:
    record = create_report(db, report)
    logger.info("stored report %s", record.id)
    return record

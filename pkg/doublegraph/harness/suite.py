"""
Suite runner: sweep a corpus, evaluate checks, merge a deterministic report.

Corpus entries are cut into batches. With jobs > 1 the batches go to a
process pool with a bounded number in flight, and results are consumed in
submission order, so the report does not depend on the worker count.
"""

from __future__ import annotations

import itertools
import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..core.graph import GraphError
from ..core.instrumentation import track_failed, track_passed, track_start, track_underway
from .checks import (
    ALL_CHECKS,
    FAIL,
    PASS,
    REGISTRY,
    CheckId,
    CorpusSubject,
    Outcome,
    evaluate,
    layers_for,
)
from .corpus import CorpusEntry, CorpusSpec, iter_corpus
from .report import AuditRow, CheckReport, Counterexample, ProbeReport, ProbeRow, SuiteReport

logger = logging.getLogger(__name__)

BATCH_SIZE = 64
PROGRESS_EVERY = 2000

# a failure of either of the first two on a graph must come with a failure of the third
CONSISTENCY_TRIPLE = (CheckId.PROP_2_1, CheckId.PROP_2_2, CheckId.THM_2_3)


class BadLayerCount(GraphError):
    """Layer counts for a sweep must be integers >= 2."""


@dataclass(frozen=True)
class EntryResult:
    index: int
    label: str
    elt: str
    outcomes: Tuple[Tuple[str, Optional[int], Outcome], ...]


def evaluate_entry(
    entry: CorpusEntry, check_ids: Sequence[CheckId], n_values: Sequence[int]
) -> EntryResult:
    subject = CorpusSubject(entry.label, entry.graph)
    outcomes = []
    for check_id in check_ids:
        for n in layers_for(REGISTRY[check_id], list(n_values)):
            outcomes.append((check_id.value, n, evaluate(check_id, subject, n)))
    return EntryResult(entry.index, entry.label, subject.elt, tuple(outcomes))


def _evaluate_batch(
    batch: List[CorpusEntry], check_ids: Sequence[CheckId], n_values: Sequence[int]
) -> List[EntryResult]:
    return [evaluate_entry(entry, check_ids, n_values) for entry in batch]


def _batches(entries: Iterable[CorpusEntry], size: int) -> Iterator[List[CorpusEntry]]:
    it = iter(entries)
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def _results(
    corpus: CorpusSpec, check_ids: Sequence[CheckId], n_values: Sequence[int], jobs: int
) -> Iterator[EntryResult]:
    batches = _batches(iter_corpus(corpus), BATCH_SIZE)
    if jobs <= 1:
        for batch in batches:
            yield from _evaluate_batch(batch, check_ids, n_values)
        return
    window = 2 * jobs
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = deque()
        for batch in batches:
            pending.append(pool.submit(_evaluate_batch, batch, check_ids, n_values))
            if len(pending) >= window:
                yield from pending.popleft().result()
        while pending:
            yield from pending.popleft().result()


def _check_layers(n_values: Iterable[int]) -> List[int]:
    values = sorted(set(n_values))
    if not values or any(n < 2 for n in values):
        raise BadLayerCount(f"layer counts must be integers >= 2, got {values}")
    return values


def run_suite(
    corpus: CorpusSpec,
    checks: Optional[Iterable[CheckId]] = None,
    n_values: Iterable[int] = (2, 3),
    jobs: int = 1,
) -> SuiteReport:
    """
    Evaluate every selected check on every corpus graph.

    Theorem checks record their first counterexample and keep scanning.
    Audit checks only accumulate rows.
    """
    wanted = set(checks) if checks is not None else set(ALL_CHECKS)
    check_ids = [c for c in ALL_CHECKS if c in wanted]
    layers = _check_layers(n_values)
    reports: Dict[str, CheckReport] = {
        c.value: CheckReport(check=c.value, kind=REGISTRY[c].kind) for c in check_ids
    }
    triple_active = all(c in wanted for c in CONSISTENCY_TRIPLE)
    consistency: List[str] = []
    graphs = 0

    operation = "run_suite"
    track_start(operation, f"mode={corpus.mode} p={corpus.p_min}..{corpus.p_max} "
                           f"checks={len(check_ids)} n={layers} jobs={jobs}")
    for result in _results(corpus, check_ids, layers, jobs):
        graphs += 1
        failed_here = set()
        for check, n, outcome in result.outcomes:
            rep = reports[check]
            if outcome.status == PASS:
                rep.tested += 1
                rep.passed += 1
            elif outcome.status == FAIL:
                rep.tested += 1
                rep.failed += 1
                failed_here.add(check)
                if rep.counterexample is None:
                    rep.counterexample = Counterexample(
                        label=result.label, n=n, elt=result.elt, detail=outcome.detail
                    )
            else:
                rep.skipped += 1
            if outcome.row is not None:
                rep.audit_rows.append(
                    AuditRow(label=result.label, n=n, elt=result.elt, values=outcome.row)
                )
        if triple_active:
            first, second, whole = (c.value for c in CONSISTENCY_TRIPLE)
            if (first in failed_here or second in failed_here) and whole not in failed_here:
                consistency.append(result.label)
        if graphs % PROGRESS_EVERY == 0:
            track_underway(operation, f"{graphs} graphs")

    report = SuiteReport(
        corpus=corpus.model_dump(),
        n_values=layers,
        graphs=graphs,
        checks=[reports[c.value] for c in check_ids],
        consistency=consistency,
    )
    summary = ", ".join(f"{c.check}={c.failed}" for c in report.checks if c.failed)
    if report.failed:
        track_failed(operation, f"{graphs} graphs; failures: {summary or 'consistency'}")
    else:
        track_passed(operation, f"{graphs} graphs")
    return report


def probe_midband_max_lambda(corpus: CorpusSpec, jobs: int = 1) -> ProbeReport:
    """Exact max-lambda status of D[G] for every MidBand graph in the corpus."""
    suite = run_suite(corpus, [CheckId.OPEN_QUESTION_PROBE], [2], jobs)
    rows = [
        ProbeRow(
            label=row.label,
            elt=row.elt,
            lam=row.values["lambda"],
            delta=row.values["delta"],
            lambda_double=row.values["lambda_double"],
            floor_avg_double=row.values["floor_avg_double"],
            max_lambda_double=row.values["max_lambda_double"],
        )
        for row in suite.check(CheckId.OPEN_QUESTION_PROBE.value).audit_rows
    ]
    return ProbeReport(corpus=corpus.model_dump(), graphs=suite.graphs, rows=rows)

"""
Report models and their table rendering.

Reports are pydantic models serialized with model_dump_json(by_alias=True);
the top-level key "schema" carries the format version. Reports hold no
timestamps or host data, so identical runs produce identical bytes.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, computed_field
from tabulate import tabulate

SCHEMA_VERSION = 1

Scalar = Union[bool, int, str, None]


class _Versioned(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class Counterexample(BaseModel):
    label: str
    n: Optional[int] = None
    elt: str
    detail: str


class AuditRow(BaseModel):
    label: str
    n: Optional[int] = None
    elt: str
    values: Dict[str, Scalar] = Field(default_factory=dict)


class CheckReport(BaseModel):
    check: str
    kind: str
    tested: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexample: Optional[Counterexample] = None
    audit_rows: List[AuditRow] = Field(default_factory=list)

    @computed_field
    @property
    def status(self) -> str:
        if self.kind == "audit":
            return "AUDIT"
        if self.failed:
            return "FAIL"
        return "PASS" if self.tested else "EMPTY"


class SuiteReport(_Versioned):
    corpus: Dict[str, Any]
    n_values: List[int]
    graphs: int = 0
    checks: List[CheckReport] = Field(default_factory=list)
    consistency: List[str] = Field(default_factory=list)

    @computed_field
    @property
    def failed(self) -> bool:
        """True iff a theorem check failed or the consistency triple broke."""
        return bool(self.consistency) or any(
            c.failed for c in self.checks if c.kind == "theorem"
        )

    def check(self, check_id: str) -> CheckReport:
        for c in self.checks:
            if c.check == check_id:
                return c
        raise KeyError(check_id)


class ProbeRow(BaseModel):
    label: str
    elt: str
    lam: int = Field(alias="lambda")
    delta: int
    lambda_double: int
    floor_avg_double: int
    max_lambda_double: bool

    model_config = ConfigDict(populate_by_name=True)


class ProbeReport(_Versioned):
    corpus: Dict[str, Any]
    graphs: int = 0
    rows: List[ProbeRow] = Field(default_factory=list)


class Prediction(BaseModel):
    n: int
    window: str
    kappa_double_n: int
    max_kappa_double_n: bool
    max_lambda_double_n: bool
    lambda_double_n_as_stated: Optional[int] = None
    conjectured_lambda_double_n: Optional[int] = None
    floor_avg_double_n: int
    exact_kappa_double_n: Optional[int] = None
    exact_lambda_double_n: Optional[int] = None
    exact_max_kappa_double_n: Optional[bool] = None
    exact_max_lambda_double_n: Optional[bool] = None


class AnalyzeReport(_Versioned):
    model_config = ConfigDict(populate_by_name=True)

    input: str
    p: int
    q: int
    degrees: List[int]
    delta: int
    max_degree: int
    connected: bool
    kappa: int
    kappa_witness: Optional[List[int]] = None
    kappa_witness_absent_reason: Optional[str] = None
    lam: int = Field(alias="lambda")
    lambda_witness: Optional[List[Tuple[int, int]]] = None
    lambda_witness_absent_reason: Optional[str] = None
    floor_avg: int
    t: int
    t0: int
    max_kappa: bool
    max_lambda: bool
    regime: Optional[str] = None
    lambda_double: Optional[int] = None
    predictions: List[Prediction] = Field(default_factory=list)


def render_suite(report: SuiteReport, color=None) -> str:
    """Summary table, then counterexamples, then audit rows per check."""
    paint = color or (lambda status, text: text)
    rows = [
        [c.check, c.kind, c.tested, c.passed, c.failed, c.skipped, paint(c.status, c.status)]
        for c in report.checks
    ]
    parts = [
        f"corpus: {report.graphs} graphs, n in {report.n_values}",
        tabulate(
            rows,
            headers=["check", "kind", "tested", "passed", "failed", "skipped", "status"],
            tablefmt="simple",
        ),
    ]
    for c in report.checks:
        if c.counterexample is not None:
            cx = c.counterexample
            where = f" n={cx.n}" if cx.n is not None else ""
            parts.append(f"\n{c.check} counterexample {cx.label}{where}: {cx.detail}\n{cx.elt}")
    for c in report.checks:
        if c.audit_rows:
            parts.append(f"\n{c.check}: {len(c.audit_rows)} row(s)")
            parts.append(render_audit_rows(c.audit_rows))
    if report.consistency:
        parts.append("\nconsistency violations: " + ", ".join(report.consistency))
    return "\n".join(parts)


def render_audit_rows(rows: List[AuditRow]) -> str:
    keys: List[str] = []
    for row in rows:
        for k in row.values:
            if k not in keys:
                keys.append(k)
    body = [[row.label, row.n if row.n is not None else ""] + [row.values.get(k, "") for k in keys]
            for row in rows]
    return tabulate(body, headers=["graph", "n"] + keys, tablefmt="simple")


def render_probe(report: ProbeReport) -> str:
    rows = [
        [r.label, r.lam, r.delta, r.lambda_double, r.floor_avg_double, r.max_lambda_double]
        for r in report.rows
    ]
    return "\n".join([
        f"probe: {report.graphs} graphs scanned, {len(report.rows)} in the MidBand regime",
        tabulate(
            rows,
            headers=["graph", "lambda", "delta", "lambda(D)", "floor avg(D)", "max-lambda(D)"],
            tablefmt="simple",
        ),
    ])


def render_analyze(report: AnalyzeReport) -> str:
    fields = [
        ["p", report.p],
        ["q", report.q],
        ["degrees", " ".join(map(str, report.degrees))],
        ["delta", report.delta],
        ["kappa", report.kappa],
        ["kappa witness", _witness_text(report.kappa_witness, report.kappa_witness_absent_reason)],
        ["lambda", report.lam],
        ["lambda witness",
         _witness_text(report.lambda_witness, report.lambda_witness_absent_reason)],
        ["floor(2q/p)", report.floor_avg],
        ["t, t0", f"{report.t}, {report.t0}"],
        ["max-kappa", report.max_kappa],
        ["max-lambda", report.max_lambda],
        ["regime", report.regime or "-"],
        ["lambda(D[G]) predicted", report.lambda_double if report.lambda_double is not None else "-"],
    ]
    parts = [f"{report.input}", tabulate(fields, tablefmt="plain")]
    if report.predictions:
        dumped = [pr.model_dump(exclude_none=True) for pr in report.predictions]
        headers = list(dumped[0].keys())
        for d in dumped[1:]:
            headers += [k for k in d if k not in headers]
        parts.append(tabulate([[d.get(h, "") for h in headers] for d in dumped],
                              headers=headers, tablefmt="simple"))
    return "\n".join(parts)


def _witness_text(witness: Optional[list], reason: Optional[str]) -> str:
    if witness is None:
        return f"(absent: {reason})" if reason else "-"
    if not witness:
        return "{}"
    return " ".join(str(tuple(w)) if isinstance(w, (list, tuple)) else str(w) for w in witness)

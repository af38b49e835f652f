"""
Registry of machine-checkable claims about D_n[G].

Each check evaluates one corpus graph (and one layer count n where the claim
depends on it) and returns an Outcome. Theorem checks can fail; audit checks
only collect rows (known inconsistencies, vacuous premises, open questions)
and never fail a run.

Eligibility follows each claim's hypotheses: a graph that does not meet them
is skipped with a reason, and skips are counted per check.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable, Dict, List, Optional

from ..core.classify import (
    GraphProfile,
    LambdaRegime,
    conjectured_lambda_double_n,
    floor_avg_degree_law,
    is_max_kappa,
    is_max_lambda,
    lambda_regime,
    predict_lambda_double,
    predict_lambda_double_n_as_stated,
    predict_max_kappa_double_n,
    predict_max_lambda_double_n,
    window_class,
)
from ..core.connectivity import vertices_share_cycle
from ..core.formats import emit_elt, parse_elt
from ..core.graph import (
    Graph,
    GraphError,
    cut_vertices_and_bridges,
    has_leaf,
    is_bipartite,
    is_connected,
    is_eulerian,
)
from ..core.hamilton import (
    CycleSeq,
    TooShortForLift,
    find_cycle_through_edge,
    hamiltonian_cycle,
    lift_hamiltonian,
    validate_spanning_cycle,
)
from ..core.product import (
    LayeredGraph,
    cross_layer_subgraph,
    double_n,
    kronecker,
    layer_subgraph,
    total_graph,
)
from .report import Scalar

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


class CheckId(str, Enum):
    LEMMA_1_2 = "lemma_1_2"
    PROP_1_1 = "prop_1_1"
    PROP_1_3_1 = "prop_1_3_1"
    PROP_1_3_2 = "prop_1_3_2"
    PROP_1_3_3 = "prop_1_3_3"
    PROP_1_3_4 = "prop_1_3_4"
    PROP_1_3_5 = "prop_1_3_5"
    PROP_1_4 = "prop_1_4"
    PROP_1_5_1 = "prop_1_5_1"
    PROP_1_5_2 = "prop_1_5_2"
    PROP_1_6 = "prop_1_6"
    PROP_2_1 = "prop_2_1"
    PROP_2_2 = "prop_2_2"
    THM_2_3 = "thm_2_3"
    THM_2_4 = "thm_2_4"
    FACT_1 = "fact_1"
    FACT_2 = "fact_2"
    PROP_3_1 = "prop_3_1"
    COR_3_2 = "cor_3_2"
    PROP_3_3 = "prop_3_3"
    THM_3_4 = "thm_3_4"
    PROP_3_5 = "prop_3_5"
    PROP_3_6_VACUITY_AUDIT = "prop_3_6_vacuity_audit"
    PROP_3_7 = "prop_3_7"
    THM_3_8 = "thm_3_8"
    THM_3_9_AUDIT = "thm_3_9_audit"
    THM_3_10 = "thm_3_10"
    OPEN_QUESTION_PROBE = "open_question_probe"


class UnknownCheck(GraphError):
    """A check id that is not registered."""


@dataclass(frozen=True)
class Outcome:
    status: str
    detail: str = ""
    row: Optional[Dict[str, Scalar]] = None


def _pass(row: Optional[Dict[str, Scalar]] = None) -> Outcome:
    return Outcome(PASS, row=row)


def _fail(detail: str) -> Outcome:
    return Outcome(FAIL, detail)


def _skip(reason: str, row: Optional[Dict[str, Scalar]] = None) -> Outcome:
    return Outcome(SKIP, reason, row)


def _expect(ok: bool, detail: str) -> Outcome:
    return _pass() if ok else _fail(detail)


class CorpusSubject:
    """One corpus graph plus lazily built D_n[G] data shared by all checks."""

    def __init__(self, label: str, graph: Graph):
        self.label = label
        self.graph = graph
        self.profile = GraphProfile(graph)
        self._layered: Dict[int, LayeredGraph] = {}
        self._dprofiles: Dict[int, GraphProfile] = {}

    def layered(self, n: int) -> LayeredGraph:
        if n not in self._layered:
            self._layered[n] = double_n(self.graph, n)
        return self._layered[n]

    def double(self, n: int) -> Graph:
        return self.layered(n).graph

    def dprofile(self, n: int) -> GraphProfile:
        if n not in self._dprofiles:
            self._dprofiles[n] = GraphProfile(self.double(n))
        return self._dprofiles[n]

    @cached_property
    def elt(self) -> str:
        return emit_elt(self.graph)

    @cached_property
    def hamiltonian(self) -> Optional[CycleSeq]:
        return hamiltonian_cycle(self.graph)

    def ineligible(self) -> Optional[Outcome]:
        """Skip outcome unless the graph is connected with p >= 2."""
        if self.graph.p < 2:
            return _skip("G is K1 or null")
        if not self.profile.connected:
            return _skip("G is disconnected")
        return None


Evaluator = Callable[[CorpusSubject, int], Outcome]


@dataclass(frozen=True)
class CheckSpec:
    id: CheckId
    kind: str
    layers: str
    evaluate: Evaluator
    summary: str
    max_p: Optional[int] = None

    @property
    def is_audit(self) -> bool:
        return self.kind == "audit"


REGISTRY: Dict[CheckId, CheckSpec] = {}


def _register(check_id: CheckId, layers: str, summary: str, kind: str = "theorem",
              max_p: Optional[int] = None):
    def wrap(fn: Evaluator) -> Evaluator:
        REGISTRY[check_id] = CheckSpec(check_id, kind, layers, fn, summary, max_p)
        return fn

    return wrap


# -- construction and structure


@_register(CheckId.LEMMA_1_2, "each", "p, q and degree laws; layered build equals G x T_n")
def _lemma_1_2(s: CorpusSubject, n: int) -> Outcome:
    g, d = s.graph, s.layered(n)
    h = d.graph
    if h.p != n * g.p:
        return _fail(f"p(D)={h.p}, expected {n * g.p}")
    if h.q != n * n * g.q:
        return _fail(f"q(D)={h.q}, expected {n * n * g.q}")
    for u in range(g.p):
        for i in range(n):
            if h.degree(d.vertex_id(u, i)) != n * g.degree(u):
                return _fail(f"deg({u},{i}) = {h.degree(d.vertex_id(u, i))}")
    if h != kronecker(g, total_graph(n)):
        return _fail("layered construction differs from kronecker(G, T_n)")
    for i in range(n):
        if layer_subgraph(d, i) != g:
            return _fail(f"layer {i} is not a copy of G")
    if n == 2:
        r = cross_layer_subgraph(d)
        if r.q != 2 * g.q or not r.edges <= h.edges:
            return _fail(f"cross-layer subgraph has {r.q} edges, expected {2 * g.q}")
    return _pass()


@_register(CheckId.PROP_1_1, "double", "kappa(D[G]) = 2 kappa(G)")
def _prop_1_1(s: CorpusSubject, n: int) -> Outcome:
    return _kappa_law(s, 2)


@_register(CheckId.PROP_1_6, "each", "kappa(D_n[G]) = n kappa(G)")
def _prop_1_6(s: CorpusSubject, n: int) -> Outcome:
    return _kappa_law(s, n)


def _kappa_law(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    got, want = s.dprofile(n).kappa, n * s.profile.kappa
    return _expect(got == want, f"kappa(D_{n})={got}, n*kappa(G)={want}")


@_register(CheckId.PROP_1_3_1, "each", "D_n[G] connected iff G connected (G != K1)")
def _prop_1_3_1(s: CorpusSubject, n: int) -> Outcome:
    if s.graph.p < 2:
        return _skip("G is K1 or null")
    got, want = is_connected(s.double(n)), s.profile.connected
    return _expect(got == want, f"connected(D_{n})={got}, connected(G)={want}")


@_register(CheckId.PROP_1_3_2, "each", "every two vertices of D_n[G] share a cycle", max_p=5)
def _prop_1_3_2(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    h = s.double(n)
    for x, y in itertools.combinations(range(h.p), 2):
        if not vertices_share_cycle(h, x, y):
            return _fail(f"vertices {x} and {y} of D_{n} lie on no common cycle")
    return _pass()


@_register(CheckId.PROP_1_3_3, "each", "every edge of D_n[G] lies on a 2n-cycle", max_p=5)
def _prop_1_3_3(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    h = s.double(n)
    for x, y in h.sorted_edges():
        if find_cycle_through_edge(h, x, y, 2 * n) is None:
            return _fail(f"edge {x} {y} of D_{n} is on no {2 * n}-cycle")
    return _pass()


@_register(CheckId.PROP_1_3_4, "each", "D_n[G] has no cut vertex and no cut edge")
def _prop_1_3_4(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    cut, bridges = cut_vertices_and_bridges(s.double(n))
    return _expect(not cut and not bridges, f"cut vertices {cut}, bridges {bridges}")


@_register(CheckId.PROP_1_3_5, "each", "D_n[G] is a block")
def _prop_1_3_5(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    h = s.double(n)
    cut, _ = cut_vertices_and_bridges(h)
    return _expect(is_connected(h) and not cut and h.p >= 3, f"D_{n} is not 2-connected")


@_register(CheckId.PROP_1_4, "each", "D_n[G] bipartite iff G bipartite")
def _prop_1_4(s: CorpusSubject, n: int) -> Outcome:
    if s.graph.p < 2:
        return _skip("G is K1 or null")
    got, want = is_bipartite(s.double(n)), is_bipartite(s.graph)
    return _expect(got == want, f"bipartite(D_{n})={got}, bipartite(G)={want}")


@_register(CheckId.PROP_1_5_1, "each", "D_n[G] eulerian iff G eulerian or n even")
def _prop_1_5_1(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    got = is_eulerian(s.double(n))
    want = is_eulerian(s.graph) or n % 2 == 0
    return _expect(got == want, f"eulerian(D_{n})={got}, expected {want}")


@_register(CheckId.PROP_1_5_2, "each", "a Hamiltonian cycle of G lifts to D_n[G]")
def _prop_1_5_2(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    gamma = s.hamiltonian
    if gamma is None:
        return _skip("G is not Hamiltonian")
    h = s.double(n)
    if n >= 3 and len(gamma) < 4:
        try:
            lift_hamiltonian(s.graph, gamma, n)
        except TooShortForLift:
            found = hamiltonian_cycle(h)
            return _expect(found is not None, f"D_{n} has no spanning cycle")
        return _fail("lift of a 3-cycle did not report TooShortForLift")
    cycle = lift_hamiltonian(s.graph, gamma, n)
    ok = len(cycle) == n * s.graph.p and validate_spanning_cycle(h, cycle)
    return _expect(ok, f"lifted cycle of length {len(cycle)} does not span D_{n}")


# -- max-kappa


@_register(CheckId.PROP_2_1, "double", "G max-kappa inside the t0 window => D[G] max-kappa")
def _prop_2_1(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    if not predict_max_kappa_double_n(s.profile, 2):
        return _skip("premise: G not max-kappa in the window")
    d = s.dprofile(2)
    if d.floor_avg != floor_avg_degree_law(s.profile, 2):
        return _fail("floor(2q/p) of D[G] disagrees with floor(4q/p)")
    return _expect(is_max_kappa(d), f"kappa(D)={d.kappa}, floor avg {d.floor_avg}")


@_register(CheckId.PROP_2_2, "double", "G not max-kappa => D[G] not max-kappa")
def _prop_2_2(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    if is_max_kappa(s.profile):
        return _skip("premise: G is max-kappa")
    d = s.dprofile(2)
    return _expect(not is_max_kappa(d), f"D[G] is max-kappa (kappa={d.kappa})")


@_register(CheckId.THM_2_3, "double", "D[G] max-kappa iff G max-kappa inside the t0 window")
def _thm_2_3(s: CorpusSubject, n: int) -> Outcome:
    return _max_kappa_iff(s, 2)


@_register(CheckId.THM_2_4, "each", "D_n[G] max-kappa iff G max-kappa inside the t0 window")
def _thm_2_4(s: CorpusSubject, n: int) -> Outcome:
    return _max_kappa_iff(s, n)


def _max_kappa_iff(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    got = is_max_kappa(s.dprofile(n))
    want = predict_max_kappa_double_n(s.profile, n)
    return _expect(
        got == want,
        f"max-kappa(D_{n})={got}, predicted {want} (window {window_class(s.profile, n).value})",
    )


# -- max-lambda


@_register(CheckId.FACT_1, "double", "D[G] has no cut edge, so lambda(D[G]) >= 2")
def _fact_1(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    _, bridges = cut_vertices_and_bridges(s.double(2))
    lam = s.dprofile(2).lam
    return _expect(not bridges and lam >= 2, f"lambda(D)={lam}, bridges {bridges}")


@_register(CheckId.FACT_2, "double", "G with a leaf => lambda(D[G]) = 2")
def _fact_2(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    if not has_leaf(s.graph):
        return _skip("premise: no vertex of degree 1")
    lam = s.dprofile(2).lam
    return _expect(lam == 2, f"lambda(D)={lam}")


@_register(CheckId.PROP_3_1, "double", "lambda(D[G]) >= 2 lambda(G)")
def _prop_3_1(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    lam_d, lam = s.dprofile(2).lam, s.profile.lam
    return _expect(lam_d >= 2 * lam, f"lambda(D)={lam_d} < 2*{lam}")


@_register(CheckId.COR_3_2, "double", "lambda(G) = delta(G) => lambda(D[G]) = 2 lambda(G)")
def _cor_3_2(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    if s.profile.lam != s.profile.delta:
        return _skip("premise: lambda < delta")
    lam_d = s.dprofile(2).lam
    return _expect(lam_d == 2 * s.profile.lam, f"lambda(D)={lam_d}")


@_register(CheckId.PROP_3_3, "double", "lambda(D[G]) is 4 lambda (LowHalf) or 2 delta (MidBand)")
def _prop_3_3(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    regime = lambda_regime(s.profile)
    if regime == LambdaRegime.EQUAL:
        return _skip("premise: lambda = delta")
    want = 4 * s.profile.lam if regime == LambdaRegime.LOW_HALF else 2 * s.profile.delta
    got = s.dprofile(2).lam
    return _expect(got == want, f"{regime.value}: lambda(D)={got}, expected {want}")


@_register(CheckId.THM_3_4, "double", "lambda(D[G]) by regime, equal to min(2 delta, 4 lambda)")
def _thm_3_4(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    exact = s.dprofile(2).lam
    piecewise = predict_lambda_double(s.profile)
    closed = min(2 * s.profile.delta, 4 * s.profile.lam)
    return _expect(
        exact == piecewise == closed,
        f"exact {exact}, piecewise {piecewise}, min form {closed}",
    )


@_register(CheckId.PROP_3_5, "double",
           "G max-lambda in the window and lambda(D)=2 lambda => D[G] max-lambda")
def _prop_3_5(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    d = s.dprofile(2)
    if not predict_max_lambda_double_n(s.profile, 2) or d.lam != 2 * s.profile.lam:
        return _skip("premise not met")
    return _expect(is_max_lambda(d), f"lambda(D)={d.lam}, floor avg {d.floor_avg}")


@_register(CheckId.PROP_3_6_VACUITY_AUDIT, "double",
           "premise of 'max-lambda with lambda(D)=4 lambda' is empty", kind="audit")
def _prop_3_6_vacuity(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    prof = s.profile
    if not is_max_lambda(prof):
        return _pass()
    lam_d = s.dprofile(2).lam
    low_half = 2 * prof.lam <= prof.delta
    if low_half or lam_d == 4 * prof.lam or prof.lam != prof.delta:
        return _pass(row={
            "lambda": prof.lam,
            "delta": prof.delta,
            "lambda_double": lam_d,
            "low_half": low_half,
        })
    return _pass()


@_register(CheckId.PROP_3_7, "double", "G not max-lambda => D[G] not max-lambda")
def _prop_3_7(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    if is_max_lambda(s.profile):
        return _skip("premise: G is max-lambda")
    d = s.dprofile(2)
    return _expect(
        not is_max_lambda(d),
        f"D[G] is max-lambda: lambda(D)={d.lam} = floor avg {d.floor_avg} "
        f"while lambda(G)={s.profile.lam} < {s.profile.floor_avg}",
    )


@_register(CheckId.THM_3_8, "double",
           "where lambda(D)=2 lambda: D[G] max-lambda iff G max-lambda in the window")
def _thm_3_8(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    d = s.dprofile(2)
    if d.lam != 2 * s.profile.lam:
        return _skip("lambda(D) != 2 lambda(G)")
    got, want = is_max_lambda(d), predict_max_lambda_double_n(s.profile, 2)
    return _expect(got == want, f"max-lambda(D)={got}, predicted {want}")


@_register(CheckId.THM_3_9_AUDIT, "each",
           "literal general-n lambda formula vs min(n delta, n^2 lambda) vs exact", kind="audit")
def _thm_3_9_audit(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    exact = s.dprofile(n).lam
    as_stated = predict_lambda_double_n_as_stated(s.profile, n)
    conjectured = conjectured_lambda_double_n(s.profile, n)
    if as_stated == exact and conjectured == exact:
        return _pass()
    return _pass(row={
        "regime": lambda_regime(s.profile).value,
        "lambda": s.profile.lam,
        "delta": s.profile.delta,
        "as_stated": as_stated,
        "conjectured": conjectured,
        "exact": exact,
    })


@_register(CheckId.THM_3_10, "each",
           "where lambda(D_n)=n lambda: D_n[G] max-lambda iff G max-lambda in the window")
def _thm_3_10(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    d = s.dprofile(n)
    got, want = is_max_lambda(d), predict_max_lambda_double_n(s.profile, n)
    if d.lam == n * s.profile.lam:
        return _expect(got == want, f"max-lambda(D_{n})={got}, predicted {want}")
    if got != want:
        return _skip("lambda(D_n) != n lambda(G)", row={
            "reading": "unqualified",
            "lambda": s.profile.lam,
            "lambda_double_n": d.lam,
            "max_lambda_double_n": got,
            "predicted": want,
        })
    return _skip("lambda(D_n) != n lambda(G)")


@_register(CheckId.OPEN_QUESTION_PROBE, "double",
           "is D[G] max-lambda when delta/2 < lambda < delta?", kind="audit")
def _open_question_probe(s: CorpusSubject, n: int) -> Outcome:
    skip = s.ineligible()
    if skip:
        return skip
    if lambda_regime(s.profile) != LambdaRegime.MID_BAND:
        return _skip("not MidBand")
    d = s.dprofile(2)
    return _pass(row={
        "lambda": s.profile.lam,
        "delta": s.profile.delta,
        "lambda_double": d.lam,
        "floor_avg_double": d.floor_avg,
        "max_lambda_double": is_max_lambda(d),
    })


ALL_CHECKS: List[CheckId] = list(CheckId)
DEFAULT_N = 2


def parse_check_ids(names: List[str]) -> List[CheckId]:
    """Registry order, duplicates removed."""
    wanted = set()
    for name in names:
        try:
            wanted.add(CheckId(name.strip()))
        except ValueError:
            raise UnknownCheck(f"unknown check {name!r}") from None
    return [c for c in ALL_CHECKS if c in wanted]


def layers_for(spec: CheckSpec, n_values: List[int]) -> List[Optional[int]]:
    if spec.layers == "double":
        return [DEFAULT_N]
    return list(n_values)


def evaluate(check_id: CheckId, subject: CorpusSubject, n: Optional[int]) -> Outcome:
    """
    Run one check on one subject. A GraphError inside a theorem check is a
    failure of that check; inside an audit it becomes a skip.
    """
    spec = REGISTRY[check_id]
    if spec.max_p is not None and subject.graph.p > spec.max_p:
        return _skip(f"p > {spec.max_p}")
    try:
        return spec.evaluate(subject, n if n is not None else DEFAULT_N)
    except GraphError as e:
        logger.debug("[checks] %s on %s raised %s", check_id.value, subject.label, e)
        if spec.is_audit:
            return _skip(f"{type(e).__name__}: {e}")
        return _fail(f"{type(e).__name__}: {e}")


def replay_counterexample(check_id: CheckId, elt_text: str, n: Optional[int] = None) -> Outcome:
    """Re-evaluate a check on a self-contained ELT counterexample."""
    subject = CorpusSubject("replay", parse_elt(elt_text))
    return evaluate(CheckId(check_id), subject, n)

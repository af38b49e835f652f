"""
Average-degree arithmetic and the predictions made for D_n[G].

Conventions:
- The bracket in "kappa(G) = [2q/p]" is floor, computed by integer division.
- q = t*p + t0 with 0 <= t0 <= p-1.
- Window tests are cross-multiplied integer comparisons; no fractions.

Every operation accepts either a Graph or a GraphProfile. A profile caches
kappa, lambda and the degree data so the harness can evaluate many claims
on one graph while running each solver once.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Tuple, Union

from .connectivity import ConnectivityResult, connectivity_profile
from .graph import (
    BasicMetrics,
    DisconnectedInput,
    EmptyGraph,
    Graph,
    TrivialGraph,
    basic_metrics,
    is_connected,
)


class WindowClass(str, Enum):
    LOW = "LowWindow"
    MID = "MidWindow"
    OUTSIDE = "Outside"


class LambdaRegime(str, Enum):
    EQUAL = "Equal"
    LOW_HALF = "LowHalf"
    MID_BAND = "MidBand"


@dataclass(frozen=True)
class QDecomposition:
    t: int
    t0: int


class GraphProfile:
    """Lazily computed per-graph quantities shared across classify operations."""

    def __init__(self, graph: Graph):
        self.graph = graph

    @cached_property
    def metrics(self) -> BasicMetrics:
        return basic_metrics(self.graph)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def _connectivity(self) -> Tuple[ConnectivityResult, ConnectivityResult]:
        # asserts kappa <= lambda <= delta for connected graphs
        return connectivity_profile(self.graph)

    @property
    def kappa_result(self) -> ConnectivityResult:
        return self._connectivity[0]

    @property
    def lambda_result(self) -> ConnectivityResult:
        return self._connectivity[1]

    @property
    def p(self) -> int:
        return self.graph.p

    @property
    def q(self) -> int:
        return self.graph.q

    @property
    def delta(self) -> int:
        return self.metrics.delta

    @property
    def kappa(self) -> int:
        return self.kappa_result.value

    @property
    def lam(self) -> int:
        return self.lambda_result.value

    @cached_property
    def floor_avg(self) -> int:
        if self.p < 1:
            raise EmptyGraph("average degree of the null graph")
        return (2 * self.q) // self.p

    @cached_property
    def decomposition(self) -> QDecomposition:
        if self.p < 1:
            raise EmptyGraph("q decomposition of the null graph")
        t, t0 = divmod(self.q, self.p)
        return QDecomposition(t, t0)

    def __repr__(self) -> str:
        return f"GraphProfile({self.graph!r})"


GraphLike = Union[Graph, GraphProfile]


def as_profile(g: GraphLike) -> GraphProfile:
    return g if isinstance(g, GraphProfile) else GraphProfile(g)


def _require_connected(prof: GraphProfile, nontrivial: bool = True) -> None:
    if prof.p < 1:
        raise EmptyGraph("operation needs at least one vertex")
    if nontrivial and prof.p == 1:
        raise TrivialGraph("operation needs G != K1")
    if not prof.connected:
        raise DisconnectedInput(f"{prof.graph!r} is disconnected")


def floor_avg_degree(g: GraphLike) -> int:
    """floor(2q / p)."""
    return as_profile(g).floor_avg


def floor_avg_degree_law(g: GraphLike, n: int) -> int:
    """floor(2q / p) of D_n[G] from the base graph alone: floor(2nq / p)."""
    prof = as_profile(g)
    if prof.p < 1:
        raise EmptyGraph("average degree of the null graph")
    return (2 * n * prof.q) // prof.p


def q_decompose(g: GraphLike) -> QDecomposition:
    return as_profile(g).decomposition


def is_max_kappa(g: GraphLike) -> bool:
    prof = as_profile(g)
    return prof.kappa == prof.floor_avg


def is_max_lambda(g: GraphLike) -> bool:
    prof = as_profile(g)
    return prof.lam == prof.floor_avg


def window_class(g: GraphLike, n: int) -> WindowClass:
    """LowWindow iff 2n*t0 < p; MidWindow iff 2*t0 >= p and 2n*t0 < (n+1)*p."""
    prof = as_profile(g)
    t0 = prof.decomposition.t0
    p = prof.p
    if 2 * n * t0 < p:
        return WindowClass.LOW
    if 2 * t0 >= p and 2 * n * t0 < (n + 1) * p:
        return WindowClass.MID
    return WindowClass.OUTSIDE


def predict_kappa_double_n(g: GraphLike, n: int) -> int:
    return n * as_profile(g).kappa


def predict_max_kappa_double_n(g: GraphLike, n: int) -> bool:
    prof = as_profile(g)
    return is_max_kappa(prof) and window_class(prof, n) != WindowClass.OUTSIDE


def lambda_regime(g: GraphLike) -> LambdaRegime:
    prof = as_profile(g)
    _require_connected(prof)
    lam, delta = prof.lam, prof.delta
    if lam == delta:
        return LambdaRegime.EQUAL
    if 2 * lam <= delta:
        return LambdaRegime.LOW_HALF
    return LambdaRegime.MID_BAND


def predict_lambda_double(g: GraphLike) -> int:
    """lambda(D[G]) per regime: Equal 2*lambda, LowHalf 4*lambda, MidBand 2*delta."""
    prof = as_profile(g)
    regime = lambda_regime(prof)
    if regime == LambdaRegime.EQUAL:
        return 2 * prof.lam
    if regime == LambdaRegime.LOW_HALF:
        return 4 * prof.lam
    return 2 * prof.delta


def predict_lambda_double_n_as_stated(g: GraphLike, n: int) -> int:
    """
    The general-n regime formula taken literally: Equal n*lambda, LowHalf
    n^2*lambda, MidBand 2n*delta. Kept as an audit comparator only; it
    disagrees with predict_lambda_double at n = 2 in the MidBand regime.
    """
    prof = as_profile(g)
    regime = lambda_regime(prof)
    if regime == LambdaRegime.EQUAL:
        return n * prof.lam
    if regime == LambdaRegime.LOW_HALF:
        return n * n * prof.lam
    return 2 * n * prof.delta


def conjectured_lambda_double_n(g: GraphLike, n: int) -> int:
    """min(n*delta, n^2*lambda)."""
    prof = as_profile(g)
    _require_connected(prof, nontrivial=False)
    return min(n * prof.delta, n * n * prof.lam)


def predict_max_lambda_double_n(g: GraphLike, n: int) -> bool:
    """
    max-lambda G inside a t0 window. Only meaningful where
    lambda(D_n[G]) = n*lambda(G); the harness checks that separately.
    """
    prof = as_profile(g)
    return is_max_lambda(prof) and window_class(prof, n) != WindowClass.OUTSIDE

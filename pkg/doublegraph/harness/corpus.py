"""
Graph corpora for the verification suite.

Three sources, all deterministic:
- exhaustive: every labeled graph on p vertices, in edge-mask order
- random: m-edge graphs drawn from a seeded generator
- named: fixed families and figure graphs (see FIXTURES)

Named fixtures listed in a CorpusSpec are appended after the main corpus
whatever the mode, so "p <= 5 plus fig2" is a single spec.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Literal, Tuple

from pydantic import BaseModel, Field, field_validator

from ..core.config import P_HARD_CAP
from ..core.graph import Edge, Graph, GraphError, complete_graph, is_connected

SEED_MASK = (1 << 64) - 1


class CorpusError(GraphError):
    """Base class for corpus construction errors."""


class PTooLarge(CorpusError):
    """Exhaustive enumeration requested beyond the hard cap."""


class TooManyEdges(CorpusError):
    """More edges requested than the vertex count allows."""


class UnknownFixture(CorpusError):
    """No named fixture with that id."""


def vertex_pairs(p: int) -> List[Edge]:
    """All pairs (u, v), u < v, in lexicographic order; bit i of a mask is pair i."""
    return list(itertools.combinations(range(p), 2))


def enumerate_labeled_graphs(p: int, connected_only: bool = False) -> Iterator[Graph]:
    """All 2^(p(p-1)/2) labeled graphs on p vertices, by ascending edge mask."""
    if p > P_HARD_CAP:
        raise PTooLarge(f"exhaustive enumeration is capped at p = {P_HARD_CAP}, got {p}")
    if p < 1:
        raise CorpusError(f"enumeration needs p >= 1, got {p}")
    pairs = vertex_pairs(p)
    for mask in range(1 << len(pairs)):
        edges = frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        g = Graph(p, edges)
        if connected_only and not is_connected(g):
            continue
        yield g


def edge_mask(g: Graph) -> int:
    index = {pair: i for i, pair in enumerate(vertex_pairs(g.p))}
    return sum(1 << index[e] for e in g.edges)


def random_graph(p: int, m: int, seed: int) -> Graph:
    """Uniform m-subset of the possible edges; identical arguments give identical graphs."""
    pairs = vertex_pairs(p)
    if m < 0 or m > len(pairs):
        raise TooManyEdges(f"{m} edges requested, p = {p} allows at most {len(pairs)}")
    rng = random.Random(seed & SEED_MASK)
    return Graph(p, frozenset(rng.sample(pairs, m)))


def _path(k: int) -> Graph:
    return Graph(k, frozenset((i, i + 1) for i in range(k - 1)))


def _cycle(k: int) -> Graph:
    if k < 3:
        raise UnknownFixture(f"cycle_{k}: cycles need k >= 3")
    return Graph(k, frozenset((i, i + 1) for i in range(k - 1)) | {(0, k - 1)})


def _star(k: int) -> Graph:
    """K_{1,k-1} centred at 0."""
    return Graph(k, frozenset((0, i) for i in range(1, k)))


def _union(*parts: Tuple[int, Graph], extra: Tuple[Edge, ...] = ()) -> Graph:
    edges = set(extra)
    p = 0
    for offset, g in parts:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        p = max(p, offset + g.p)
    return Graph(p, frozenset(edges))


def _fig2() -> Graph:
    k3 = complete_graph(3)
    return _union((0, k3), (3, k3), extra=((2, 3),))


def _fig3() -> Graph:
    k4 = complete_graph(4)
    return _union((0, k4), (4, k4), extra=((3, 4),))


def _fig4() -> Graph:
    k5 = complete_graph(5)
    return _union((0, k5), (5, k5), extra=((0, 5), (1, 6), (2, 7)))


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, frozenset(tuple(sorted(e)) for e in outer + inner + spokes))


def _cubic_pair() -> Graph:
    """Two copies of K4 - e; the degree-2 vertices are joined across (3-regular, lambda = 2)."""
    k4e = Graph(4, complete_graph(4).edges - {(0, 1)})
    return _union((0, k4e), (4, k4e), extra=((0, 4), (1, 5)))


FIXTURES: Dict[str, Callable[[], Graph]] = {
    "fig2": _fig2,
    "fig3": _fig3,
    "fig4": _fig4,
    "petersen": _petersen,
    "cubic_pair": _cubic_pair,
}

_FAMILIES: Dict[str, Callable[[int], Graph]] = {
    "path": _path,
    "cycle": _cycle,
    "star": _star,
    "complete": complete_graph,
}

_FAMILY_RE = re.compile(r"^(path|cycle|star|complete)_(\d+)$")


def named_fixture(fixture_id: str) -> Graph:
    """
    fig2, fig3, fig4, petersen, cubic_pair, or a family member
    path_k, cycle_k, star_k, complete_k (k >= 1; cycles need k >= 3).
    """
    if fixture_id in FIXTURES:
        return FIXTURES[fixture_id]()
    m = _FAMILY_RE.match(fixture_id)
    if m and int(m.group(2)) >= 1:
        return _FAMILIES[m.group(1)](int(m.group(2)))
    raise UnknownFixture(f"unknown fixture {fixture_id!r}")


class CorpusSpec(BaseModel):
    """What to sweep. p_max above the hard cap raises PTooLarge."""

    mode: Literal["exhaustive", "random", "named"] = "exhaustive"
    p_min: int = Field(default=2, ge=1)
    p_max: int = Field(default=5, ge=0)
    connected_only: bool = True
    random_count: int = Field(default=0, ge=0)
    random_p: int = Field(default=6, ge=1)
    random_m: int = Field(default=7, ge=0)
    seed: int = 0
    fixtures: List[str] = Field(default_factory=list)

    @field_validator("p_max")
    @classmethod
    def cap_p_max(cls, v: int) -> int:
        if v > P_HARD_CAP:
            raise PTooLarge(f"p_max is capped at {P_HARD_CAP}, got {v}")
        return v

    @field_validator("seed")
    @classmethod
    def mask_seed(cls, v: int) -> int:
        return v & SEED_MASK

    @field_validator("fixtures")
    @classmethod
    def known_fixtures(cls, v: List[str]) -> List[str]:
        for fixture_id in v:
            named_fixture(fixture_id)
        return v


@dataclass(frozen=True)
class CorpusEntry:
    index: int
    label: str
    graph: Graph


def _main_corpus(spec: CorpusSpec) -> Iterator[Tuple[str, Graph]]:
    if spec.mode == "exhaustive":
        for p in range(spec.p_min, spec.p_max + 1):
            for g in enumerate_labeled_graphs(p, spec.connected_only):
                yield f"p{p}-m{edge_mask(g)}", g
    elif spec.mode == "random":
        master = random.Random(spec.seed)
        for i in range(spec.random_count):
            child = master.getrandbits(64)
            g = random_graph(spec.random_p, spec.random_m, child)
            if spec.connected_only and not is_connected(g):
                continue
            yield f"random-{i}", g


def iter_corpus(spec: CorpusSpec) -> Iterator[CorpusEntry]:
    """Lazily yield the corpus with dense indices; fixtures come last."""
    sources = itertools.chain(
        _main_corpus(spec),
        ((fixture_id, named_fixture(fixture_id)) for fixture_id in spec.fixtures),
    )
    for index, (label, g) in enumerate(sources):
        yield CorpusEntry(index, label, g)

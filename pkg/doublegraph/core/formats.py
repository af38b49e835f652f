"""
Graph text formats.

ELT v1 (read and write):
    line 1      "p q"
    q lines     "u v"   (emitted with u < v in ascending order)
    "#" starts a comment line; blank lines are ignored.

graph6 (read only) is decoded with networkx. DOT (write only) is for
visualization; vertex and edge order are deterministic.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import List, Optional, Tuple, Union

import networkx as nx

from .graph import Graph, GraphError, graph_from_edge_list
from .product import LayeredGraph


class ParseError(GraphError):
    """Malformed graph text."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _ints(text: str, line_no: int, expected: int) -> List[int]:
    fields = text.split()
    if len(fields) != expected:
        raise ParseError(f"expected {expected} integers, got {text!r}", line_no)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"non-integer field in {text!r}", line_no) from None


def parse_elt(text: str) -> Graph:
    """Parse ELT v1. Pairs may come in any order and either orientation."""
    rows: List[Tuple[int, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((line_no, stripped))
    if not rows:
        raise ParseError("missing 'p q' header")

    header_line, header = rows[0]
    p, q = _ints(header, header_line, 2)
    if p < 0 or q < 0:
        raise ParseError("p and q must be nonnegative", header_line)
    body = rows[1:]
    if len(body) != q:
        raise ParseError(f"header declares {q} edges, found {len(body)}", header_line)

    pairs = [tuple(_ints(text, line_no, 2)) for line_no, text in body]
    return graph_from_edge_list(p, pairs)


def emit_elt(g: Graph) -> str:
    out = io.StringIO()
    out.write(f"{g.p} {g.q}\n")
    for u, v in g.sorted_edges():
        out.write(f"{u} {v}\n")
    return out.getvalue()


def parse_graph6(text: str) -> Graph:
    """First non-empty line of graph6 text; a >>graph6<< header is tolerated."""
    line = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise ParseError("empty graph6 input")
    try:
        nxg = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        raise ParseError(f"invalid graph6: {e}") from None
    return graph_from_edge_list(nxg.number_of_nodes(), nxg.edges())


def read_graph(path: Union[str, Path], graph6: bool = False) -> Graph:
    text = Path(path).read_text(encoding="utf-8")
    return parse_graph6(text) if graph6 else parse_elt(text)


def emit_dot(g: Graph, layered: Optional[LayeredGraph] = None, name: str = "G") -> str:
    """
    Undirected DOT text. With `layered`, g must be layered.graph; each layer
    becomes a cluster and vertices are labeled "u,i".
    """
    out = io.StringIO()
    out.write(f"graph {name} {{\n")
    out.write("  node [shape=circle];\n")
    if layered is None:
        for x in range(g.p):
            out.write(f"  {x};\n")
    else:
        p = layered.base.p
        for i in range(layered.n):
            out.write(f"  subgraph cluster_{i} {{\n")
            out.write(f'    label="layer {i}";\n')
            for x in range(i * p, (i + 1) * p):
                u, layer = layered.coordinates(x)
                out.write(f'    {x} [label="{u},{layer}"];\n')
            out.write("  }\n")
    for u, v in g.sorted_edges():
        out.write(f"  {u} -- {v};\n")
    out.write("}\n")
    return out.getvalue()

"""
Text formats for graphs and colorings.

Graph files hold one edge per line as two decimal vertex ids separated by
whitespace. Lines starting with '#' are comments and an optional header
``v <n>`` declares the vertices 0..n-1 so isolated vertices survive a
round trip. Colorings are JSON documents.
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from src.core.exceptions import ContractViolation, MalformedInputError
from src.core.graph import Graph, build_graph
from src.core.incidence import IncidenceColoring, coloring_from_pairs

logger = logging.getLogger(__name__)


class ColorEntry(BaseModel):
    """Color of the incidence (tail, tail-head)."""
    tail: int = Field(..., ge=0)
    head: int = Field(..., ge=0)
    color: int


class ColoringMeta(BaseModel):
    delta: int = Field(..., ge=0, description="Maximum degree of the colored graph")
    seed: Optional[int] = Field(default=None, description="Generator seed when the graph was generated")
    generator: Optional[str] = Field(default=None, description="Generator algorithm identifier")


class ColoringDocument(BaseModel):
    k: int = Field(..., ge=1, description="Palette size")
    l: Optional[int] = Field(default=2, ge=1, description="Bound on incoming colors, null for unbounded")
    colors: List[ColorEntry] = Field(default_factory=list)
    meta: Optional[ColoringMeta] = None


def _is_vertex_id(token: str) -> bool:
    return token.isascii() and token.isdigit()


def parse_edge_list(text: str) -> Graph:
    """Parse a graph file.

    Raises:
        MalformedInputError: With the offending line number on bad lines and self-loops.
    """
    edges = []
    declared: range = range(0)
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "v":
            if len(tokens) != 2 or not _is_vertex_id(tokens[1]):
                raise MalformedInputError(f"bad vertex header {line!r}", line_number)
            declared = range(int(tokens[1]))
            continue
        if len(tokens) != 2 or not all(_is_vertex_id(token) for token in tokens):
            raise MalformedInputError(f"expected two vertex ids, got {line!r}", line_number)
        a, b = int(tokens[0]), int(tokens[1])
        if a == b:
            raise MalformedInputError(f"self-loop at vertex {a}", line_number)
        edges.append((a, b))

    graph = build_graph(edges, vertices=declared)
    logger.debug(f"Parsed graph with n={graph.vertex_count}, m={graph.edge_count}")
    return graph


def _read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise MalformedInputError(f"{path} is not UTF-8 text (byte {e.start})") from e


def read_graph(path: Union[str, Path]) -> Graph:
    """Read and parse a graph file."""
    return parse_edge_list(_read_text(path))


def emit_graph(g: Graph) -> str:
    """Serialize g as an edge list.

    Isolated vertices are kept through a ``v <n>`` header, which needs the
    vertex ids to be exactly 0..n-1.

    Raises:
        ContractViolation: If g has isolated vertices and ids outside 0..n-1.
    """
    lines = []
    if any(g.degree(v) == 0 for v in g):
        if g.vertices[-1] != g.vertex_count - 1:
            raise ContractViolation("isolated vertices can only be written when the ids are 0..n-1")
        lines.append(f"v {g.vertex_count}")
    lines.extend(f"{a} {b}" for a, b in g.edges())
    return "".join(f"{line}\n" for line in lines)


def emit_coloring(g: Graph, k: int, c: IncidenceColoring,
                  seed: Optional[int] = None, generator: Optional[str] = None) -> str:
    """Serialize a coloring of g as a JSON document.

    Entries are sorted by (tail, head), so equal colorings always give
    byte-identical output.
    """
    document = ColoringDocument(
        k=k,
        l=c.l,
        colors=[ColorEntry(tail=inc.tail, head=inc.head, color=color) for inc, color in c.items()],
        meta=ColoringMeta(delta=g.max_degree, seed=seed, generator=generator),
    )
    return document.model_dump_json(indent=2) + "\n"


def parse_coloring(text: str) -> IncidenceColoring:
    """Parse a coloring document.

    Colors are not checked against the palette here; the verifier reports
    out-of-palette colors as violations.

    Raises:
        MalformedInputError: If the document does not have the coloring shape.
    """
    try:
        document = ColoringDocument.model_validate_json(text)
    except ValidationError as e:
        raise MalformedInputError(f"invalid coloring document: {e.errors()[0]['msg']}") from e
    return coloring_from_pairs(
        document.k,
        document.l,
        ((entry.tail, entry.head, entry.color) for entry in document.colors),
        validate=False,
    )


def read_coloring(path: Union[str, Path]) -> IncidenceColoring:
    """Read and parse a coloring file."""
    return parse_coloring(_read_text(path))

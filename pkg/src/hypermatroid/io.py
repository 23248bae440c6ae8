"""Hypergraph input formats and deterministic serialization.

Text format: one edge per line of whitespace-separated vertex labels, an
optional leading ``vertices:`` header fixing label order and isolated
vertices, and ``#`` comments.  Structured format: a JSON object with a
``vertices`` list (optional) and an ``edges`` list of label lists.
"""

from __future__ import annotations

import hashlib
import json

from .core import Hypergraph, HypermatroidError, make_hypergraph


class ParseError(HypermatroidError):
    """Malformed input, with a line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + where)
        self.line = line
        self.column = column


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse either input format, detected by a leading brace."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def _parse_json(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(doc, dict) or "edges" not in doc:
        raise ParseError("expected an object with an 'edges' list")
    vertices = doc.get("vertices")
    if vertices is not None and not (
        isinstance(vertices, list) and all(isinstance(v, str) for v in vertices)
    ):
        raise ParseError("'vertices' must be a list of strings")
    edges = doc["edges"]
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and all(isinstance(v, str) for v in e) for e in edges
    ):
        raise ParseError("'edges' must be a list of lists of strings")
    return make_hypergraph(vertices, edges)


def _parse_text(text: str) -> Hypergraph:
    labels = None
    edges: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if labels is not None:
                raise ParseError("duplicate vertices header", line=lineno)
            if edges:
                raise ParseError("vertices header must come before the edges", line=lineno)
            labels = line[len("vertices:") :].split()
            continue
        edges.append(line.split())
    return make_hypergraph(labels, edges)


def to_json_obj(h: Hypergraph) -> dict:
    return {"vertices": list(h.ground.labels), "edges": h.edge_labels()}


def format_json(h: Hypergraph) -> str:
    return json.dumps(to_json_obj(h), sort_keys=True) + "\n"


def format_text(h: Hypergraph) -> str:
    lines = ["vertices: " + " ".join(h.ground.labels)]
    for edge in h.edges:
        lines.append(" ".join(edge.labels()))
    return "\n".join(lines) + "\n"


def input_digest(h: Hypergraph) -> str:
    """Content hash of the canonical serialization."""
    return hashlib.sha256(format_json(h).encode("utf-8")).hexdigest()

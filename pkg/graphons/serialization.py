"""
JSON documents for step graphons and multigraphs.

Rationals travel as strings ("p/q" or "p"); plain JSON integers are accepted too.
"""
import json
from typing import Any, Dict, Union

from utils.rationals import format_rational
from .exceptions import MalformedDocument
from .structures import MultiGraph, StepGraphon, as_rational, graph_to_step_graphon


def _load(text: Union[str, bytes, Dict[str, Any]]) -> Dict[str, Any]:
    if isinstance(text, dict):
        return text
    if isinstance(text, bytes):
        text = text.decode('utf-8')
    if not isinstance(text, str):
        raise MalformedDocument("Expected a JSON object at the top level")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"Invalid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise MalformedDocument("Expected a JSON object at the top level")
    return document


def _rational(value):
    if isinstance(value, float):
        raise MalformedDocument(f"Floating point literal {value!r} is not exact; use a \"p/q\" string")
    return as_rational(value)


def parse_step_graphon(text) -> StepGraphon:
    """Parse a {"masses": [...], "weights": [[...]...]} document"""
    document = _load(text)
    if 'masses' not in document or 'weights' not in document:
        raise MalformedDocument("Step graphon documents need 'masses' and 'weights'")
    masses = document['masses']
    weights = document['weights']
    if not isinstance(masses, list) or not isinstance(weights, list) or not all(isinstance(row, list) for row in weights):
        raise MalformedDocument("'masses' must be a list and 'weights' a list of lists")
    return StepGraphon(
        tuple(_rational(m) for m in masses),
        tuple(tuple(_rational(w) for w in row) for row in weights),
    )


def step_graphon_to_dict(graphon: StepGraphon) -> Dict[str, Any]:
    return {
        'masses': [format_rational(m) for m in graphon.masses],
        'weights': [[format_rational(w) for w in row] for row in graphon.weights],
    }


def serialize_step_graphon(graphon: StepGraphon) -> str:
    return json.dumps(step_graphon_to_dict(graphon))


def _is_integer(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_edges(document: Dict[str, Any]):
    edges = document.get('edges', [])
    if not isinstance(edges, list):
        raise MalformedDocument("'edges' must be a list")
    parsed = []
    for edge in edges:
        if not isinstance(edge, list) or len(edge) not in (2, 3) or not all(map(_is_integer, edge)):
            raise MalformedDocument(f"Edge entries must be [u, v] or [u, v, mult] integer lists, got {edge!r}")
        parsed.append(tuple(edge))
    return tuple(parsed)


def parse_multigraph(text) -> MultiGraph:
    """Parse a {"n": int, "edges": [[u, v, mult]...]} document"""
    document = _load(text)
    n = document.get('n')
    if not _is_integer(n):
        raise MalformedDocument("Multigraph documents need an integer 'n'")
    return MultiGraph(n, _parse_edges(document))


def multigraph_to_dict(graph: MultiGraph) -> Dict[str, Any]:
    return {'n': graph.vertex_count, 'edges': [[u, v, m] for u, v, m in graph.edges]}


def serialize_multigraph(graph: MultiGraph) -> str:
    return json.dumps(multigraph_to_dict(graph))


def parse_graph_or_graphon(text):
    """Accept either document kind; used by commands taking both"""
    document = _load(text)
    if 'masses' in document:
        return parse_step_graphon(document)
    return parse_multigraph(document)


def parse_as_graphon(text) -> StepGraphon:
    """Graph documents become their uniform step graphon"""
    parsed = parse_graph_or_graphon(text)
    if isinstance(parsed, MultiGraph):
        return graph_to_step_graphon(parsed)
    return parsed

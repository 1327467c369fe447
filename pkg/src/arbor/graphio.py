"""Reading and writing graph documents.

A document is a JSON object::

    {"vertices": ["v1", "v2", "v3"],
     "edges": [{"from": "v1", "to": "v2", "weight": "3/2"}, ...]}

``vertices`` is optional; without it vertices are taken from edge endpoints
in order of first appearance.  ``weight`` is optional (default 1) and is a
string ``"a"`` or ``"a/b"`` with unsigned integers, or a JSON integer.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import GraphError, ParseError
from .graph import Digraph, build_digraph

_WEIGHT = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


@dataclass(frozen=True)
class EdgeRecord:
    source: str
    target: str
    weight: Optional[Fraction] = None


@dataclass(frozen=True)
class GraphDocument:
    vertices: Optional[tuple[str, ...]]
    edges: tuple[EdgeRecord, ...]

    def labels(self) -> list[str]:
        if self.vertices is not None:
            return list(self.vertices)
        seen: dict[str, None] = {}
        for e in self.edges:
            seen.setdefault(e.source)
            seen.setdefault(e.target)
        return list(seen)

    @property
    def weighted(self) -> bool:
        return any(e.weight is not None for e in self.edges)


def parse_weight(raw, where: str) -> Fraction:
    if isinstance(raw, bool):
        raise ParseError(f"{where}: expected a rational string, got {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if not isinstance(raw, str):
        raise ParseError(f"{where}: expected a rational string, got {raw!r}")
    m = _WEIGHT.match(raw)
    if not m:
        raise ParseError(f"{where}: {raw!r} is not of the form a or a/b")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ParseError(f"{where}: zero denominator in {raw!r}")
    return Fraction(num, den)


def _label(raw, where: str) -> str:
    if not isinstance(raw, str) or not raw:
        raise ParseError(f"{where}: vertex label must be a nonempty string, got {raw!r}")
    return raw


def parse_document(text: Union[str, bytes]) -> GraphDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object with 'edges' (and optionally 'vertices')")
    unknown = set(obj) - {"vertices", "edges"}
    if unknown:
        raise ParseError(f"unknown top-level field(s): {', '.join(sorted(unknown))}")

    vertices = None
    if "vertices" in obj:
        if not isinstance(obj["vertices"], list):
            raise ParseError("vertices: expected an array of strings")
        vertices = tuple(_label(v, f"vertices[{i}]") for i, v in enumerate(obj["vertices"]))

    raw_edges = obj.get("edges")
    if not isinstance(raw_edges, list):
        raise ParseError("edges: expected an array of {from, to, weight?} objects")
    edges = []
    for k, rec in enumerate(raw_edges):
        where = f"edges[{k}]"
        if not isinstance(rec, dict):
            raise ParseError(f"{where}: expected an object")
        extra = set(rec) - {"from", "to", "weight"}
        if extra:
            raise ParseError(f"{where}: unknown field(s) {', '.join(sorted(extra))}")
        for key in ("from", "to"):
            if key not in rec:
                raise ParseError(f"{where}: missing '{key}'")
        w = parse_weight(rec["weight"], f"{where}.weight") if "weight" in rec else None
        edges.append(EdgeRecord(_label(rec["from"], f"{where}.from"), _label(rec["to"], f"{where}.to"), w))
    return GraphDocument(vertices, tuple(edges))


def document_to_graph(doc: GraphDocument) -> Digraph:
    labels = doc.labels()
    if not labels:
        raise ParseError("graph has no vertices")
    specs = [(e.source, e.target, 1 if e.weight is None else e.weight) for e in doc.edges]
    try:
        return build_digraph(labels, specs, weighted=doc.weighted)
    except (GraphError, ValueError) as exc:
        raise type(exc)(f"in graph document: {exc}") from None


def parse_graph(text: Union[str, bytes]) -> Digraph:
    return document_to_graph(parse_document(text))


def graph_to_document(g: Digraph) -> GraphDocument:
    edges = tuple(
        EdgeRecord(g.vertices[e.source].label, g.vertices[e.target].label, e.weight if g.weighted else None)
        for e in g.edges
    )
    return GraphDocument(tuple(g.labels), edges)


def serialize(g: Union[Digraph, GraphDocument]) -> str:
    doc = graph_to_document(g) if isinstance(g, Digraph) else g
    out: dict = {}
    if doc.vertices is not None:
        out["vertices"] = list(doc.vertices)
    out["edges"] = []
    for e in doc.edges:
        rec = {"from": e.source, "to": e.target}
        if e.weight is not None:
            rec["weight"] = str(e.weight)
        out["edges"].append(rec)
    return json.dumps(out, indent=2) + "\n"

"""Weighted digraphs, degrees, cycles and the spanning-tree predicate.

A :class:`Digraph` is the single source of truth for every matrix built in
this package.  Vertices and edges keep their input order; edge ``k`` (0-based)
is shown to users as ``e{k+1}``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    DuplicateLabel,
    InvalidEdgeSubset,
    NonPositiveWeight,
    ParallelEdge,
    SelfLoop,
    UnknownEndpoint,
    WrongSubsetSize,
)
from .linalg import as_rational


class Mode(str, enum.Enum):
    """Orientation of a spanning tree: away from the root or toward it."""

    OUTGOING = "outgoing"
    INCOMING = "incoming"


class Direction(str, enum.Enum):
    IN = "in"
    OUT = "out"


@dataclass(frozen=True)
class Vertex:
    index: int
    label: str

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Edge:
    id: int
    source: int
    target: int
    weight: Fraction = Fraction(1)

    @property
    def name(self) -> str:
        return f"e{self.id + 1}"


VertexRef = Union[Vertex, str, int]


@dataclass(frozen=True)
class EdgeSubset:
    """A sorted set of 0-based edge ids."""

    edges: tuple[int, ...]

    def __init__(self, edges: Iterable[int] = ()):
        ids = tuple(sorted(edges))
        if len(set(ids)) != len(ids):
            raise InvalidEdgeSubset(f"repeated edge id in {list(ids)}")
        object.__setattr__(self, "edges", ids)

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, k) -> bool:
        return k in self.edges

    def names(self) -> list[str]:
        return [f"e{k + 1}" for k in self.edges]

    def __str__(self) -> str:
        return "{" + ",".join(self.names()) + "}"


@dataclass(frozen=True)
class Digraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    weighted: bool = False
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v.label: v.index for v in self.vertices})

    @property
    def p(self) -> int:
        return len(self.vertices)

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def labels(self) -> list[str]:
        return [v.label for v in self.vertices]

    def vertex(self, ref: VertexRef) -> Vertex:
        """Resolve a Vertex, label or 0-based index to the graph's Vertex."""
        if isinstance(ref, Vertex):
            if ref.index >= self.p or self.vertices[ref.index] != ref:
                raise UnknownEndpoint(f"vertex {ref.label!r} is not in this graph")
            return ref
        if isinstance(ref, str):
            try:
                return self.vertices[self._index[ref]]
            except KeyError:
                raise UnknownEndpoint(f"no vertex labelled {ref!r}") from None
        if isinstance(ref, int) and not isinstance(ref, bool):
            if not 0 <= ref < self.p:
                raise UnknownEndpoint(f"vertex index {ref} outside 0..{self.p - 1}")
            return self.vertices[ref]
        raise TypeError(f"cannot resolve {ref!r} to a vertex")

    def index(self, ref: VertexRef) -> int:
        return self.vertex(ref).index

    def subset(self, ids: Union[EdgeSubset, Iterable[int]]) -> EdgeSubset:
        s = ids if isinstance(ids, EdgeSubset) else EdgeSubset(ids)
        for k in s:
            if not 0 <= k < self.q:
                raise InvalidEdgeSubset(f"edge id {k} outside 0..{self.q - 1}")
        return s

    def edge_between(self, source: VertexRef, target: VertexRef) -> Optional[Edge]:
        i, j = self.index(source), self.index(target)
        for e in self.edges:
            if e.source == i and e.target == j:
                return e
        return None

    def reverse(self) -> "Digraph":
        edges = tuple(Edge(e.id, e.target, e.source, e.weight) for e in self.edges)
        return Digraph(self.vertices, edges, self.weighted)

    def with_weights(self, weights: Sequence) -> "Digraph":
        if len(weights) != self.q:
            raise ValueError(f"expected {self.q} weights, got {len(weights)}")
        edges = tuple(Edge(e.id, e.source, e.target, _positive(w, e.name)) for e, w in zip(self.edges, weights))
        return Digraph(self.vertices, edges, True)

    def unweighted(self) -> "Digraph":
        edges = tuple(Edge(e.id, e.source, e.target) for e in self.edges)
        return Digraph(self.vertices, edges, False)

    def weight_of(self, s: Iterable[int]) -> Fraction:
        """Product of the weights of the given edges (1 for the empty set)."""
        w = Fraction(1)
        for k in s:
            w *= self.edges[k].weight
        return w


def _positive(w, where: str) -> Fraction:
    try:
        w = as_rational(w)
    except (TypeError, ValueError) as exc:
        raise NonPositiveWeight(f"{where}: weight {w!r} is not an exact rational") from exc
    if w <= 0:
        raise NonPositiveWeight(f"{where}: weight {w} is not positive")
    return w


def build_digraph(labels: Sequence[str], edge_specs: Iterable[Sequence], weighted: Optional[bool] = None) -> Digraph:
    """Build a digraph from vertex labels and ``(from, to[, weight])`` specs.

    ``weighted`` defaults to whether any weight differs from 1.
    """
    labels = list(labels)
    if not labels:
        raise ValueError("a digraph needs at least one vertex")
    index: dict[str, int] = {}
    for i, label in enumerate(labels):
        if not isinstance(label, str) or not label:
            raise ValueError(f"vertex label {label!r} must be a nonempty string")
        if label in index:
            raise DuplicateLabel(f"vertex label {label!r} appears twice")
        index[label] = i

    edges = []
    seen: dict[tuple[int, int], int] = {}
    for k, spec in enumerate(edge_specs):
        if len(spec) == 2:
            (a, b), w = spec, 1
        elif len(spec) == 3:
            a, b, w = spec
        else:
            raise ValueError(f"edge spec {spec!r} must be (from, to) or (from, to, weight)")
        name = f"e{k + 1}"
        for end in (a, b):
            if end not in index:
                raise UnknownEndpoint(f"{name}: unknown vertex {end!r}")
        i, j = index[a], index[b]
        if i == j:
            raise SelfLoop(f"{name}: self-loop at {a!r}")
        if (i, j) in seen:
            raise ParallelEdge(f"{name}: duplicates e{seen[(i, j)] + 1} ({a!r} -> {b!r})")
        seen[(i, j)] = k
        edges.append(Edge(k, i, j, _positive(w, name)))

    if weighted is None:
        weighted = any(e.weight != 1 for e in edges)
    vertices = tuple(Vertex(i, label) for i, label in enumerate(labels))
    return Digraph(vertices, tuple(edges), bool(weighted))


def degree(g: Digraph, v: VertexRef, direction: Union[Direction, str], restrict: Optional[Iterable[int]] = None) -> int:
    """Number of edges (optionally within ``restrict``) into or out of ``v``."""
    i = g.index(v)
    direction = Direction(direction)
    edges = g.edges if restrict is None else [g.edges[k] for k in g.subset(restrict)]
    if direction is Direction.IN:
        return sum(1 for e in edges if e.target == i)
    return sum(1 for e in edges if e.source == i)


_WHITE, _GREY, _BLACK = 0, 1, 2


def _has_cycle(p: int, arcs: Iterable[tuple[int, int]]) -> bool:
    succ: list[list[int]] = [[] for _ in range(p)]
    for a, b in arcs:
        succ[a].append(b)
    colour = [_WHITE] * p
    for start in range(p):
        if colour[start] != _WHITE:
            continue
        colour[start] = _GREY
        stack = [(start, iter(succ[start]))]
        while stack:
            node, it = stack[-1]
            for nxt in it:
                if colour[nxt] == _GREY:
                    return True
                if colour[nxt] == _WHITE:
                    colour[nxt] = _GREY
                    stack.append((nxt, iter(succ[nxt])))
                    break
            else:
                colour[node] = _BLACK
                stack.pop()
    return False


def has_directed_cycle(g: Digraph, restrict: Optional[Iterable[int]] = None) -> bool:
    """Whether the spanning subgraph with edges ``restrict`` has a directed cycle."""
    edges = g.edges if restrict is None else [g.edges[k] for k in g.subset(restrict)]
    return _has_cycle(g.p, ((e.source, e.target) for e in edges))


class Outcome(str, enum.Enum):
    TREE = "Tree"
    BAD_NON_ROOT_DEGREE = "BadNonRootDegree"
    ROOT_HAS_WRONG_DEGREE = "RootHasWrongDegree"
    CONTAINS_CYCLE = "ContainsCycle"


@dataclass(frozen=True)
class TreeClassification:
    outcome: Outcome
    vertex: Optional[int] = None  # offending vertex for BadNonRootDegree

    @property
    def is_tree(self) -> bool:
        return self.outcome is Outcome.TREE

    def describe(self, g: Optional[Digraph] = None) -> str:
        if self.outcome is Outcome.BAD_NON_ROOT_DEGREE:
            who = g.vertices[self.vertex].label if g is not None else str(self.vertex)
            return f"{self.outcome.value}({who})"
        return self.outcome.value


TREE = TreeClassification(Outcome.TREE)
_ROOT_WRONG = TreeClassification(Outcome.ROOT_HAS_WRONG_DEGREE)
_CYCLE = TreeClassification(Outcome.CONTAINS_CYCLE)


class _Classifier:
    """Precomputed edge endpoints so brute-force loops stay cheap."""

    def __init__(self, g: Digraph, root: int, mode: Mode):
        self.p = g.p
        self.root = root
        self.sources = [e.source for e in g.edges]
        self.targets = [e.target for e in g.edges]
        # the endpoint whose degree must be 1 at non-root vertices
        self.heads = self.targets if mode is Mode.OUTGOING else self.sources

    def __call__(self, s: Sequence[int]) -> TreeClassification:
        counts = [0] * self.p
        heads = self.heads
        for k in s:
            counts[heads[k]] += 1
        root = self.root
        for v, c in enumerate(counts):
            if v != root and c != 1:
                return TreeClassification(Outcome.BAD_NON_ROOT_DEGREE, v)
        if counts[root] != 0:
            return _ROOT_WRONG
        src, tgt = self.sources, self.targets
        if _has_cycle(self.p, ((src[k], tgt[k]) for k in s)):
            return _CYCLE
        return TREE


def classify_spanning_tree(g: Digraph, s: Iterable[int], root: VertexRef, mode: Union[Mode, str]) -> TreeClassification:
    """Check the three defining conditions of a rooted spanning tree.

    Outgoing trees need in-degree 1 at every non-root vertex and 0 at the
    root; incoming trees use out-degrees.  Failures are reported in the order
    non-root degree, root degree, cycle.
    """
    s = g.subset(s)
    if len(s) != g.p - 1:
        raise WrongSubsetSize(f"a spanning tree on {g.p} vertices has {g.p - 1} edges, got {len(s)}")
    return _Classifier(g, g.index(root), Mode(mode))(s.edges)


def _reachable(p: int, succ: list[list[int]], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        for nxt in succ[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def is_strongly_connected(g: Digraph) -> bool:
    fwd: list[list[int]] = [[] for _ in range(g.p)]
    back: list[list[int]] = [[] for _ in range(g.p)]
    for e in g.edges:
        fwd[e.source].append(e.target)
        back[e.target].append(e.source)
    return len(_reachable(g.p, fwd, 0)) == g.p and len(_reachable(g.p, back, 0)) == g.p


def random_digraph(
    p: int,
    density: float,
    rng: random.Random,
    weighted: bool = False,
    max_weight_part: int = 100,
) -> Digraph:
    """Random simple digraph: each ordered pair becomes an edge with probability ``density``.

    Weighted graphs get independent rational weights ``a/b`` with
    ``1 <= a, b <= max_weight_part``.
    """
    labels = [f"v{i + 1}" for i in range(p)]
    specs = []
    for i in range(p):
        for j in range(p):
            if i != j and rng.random() < density:
                if weighted:
                    w = Fraction(rng.randint(1, max_weight_part), rng.randint(1, max_weight_part))
                    specs.append((labels[i], labels[j], w))
                else:
                    specs.append((labels[i], labels[j]))
    rng.shuffle(specs)
    return build_digraph(labels, specs, weighted=weighted)

"""Counting rooted spanning trees three ways.

* :func:`count_trees` takes the determinant of the reduced Laplacian.
* :func:`enumerate_trees` is the brute-force oracle: it classifies every
  edge subset of size ``p - 1``.
* :func:`binet_cauchy_expansion` splits the reduced Laplacian into its two
  incidence factors and evaluates the Binet-Cauchy sum term by term, so each
  subset's contribution can be compared with its classification.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .errors import CapExceeded, NotATree
from .graph import (
    Digraph,
    EdgeSubset,
    Mode,
    TreeClassification,
    Vertex,
    VertexRef,
    _Classifier,
    classify_spanning_tree,
)
from .laplacian import EdgeScaledMatrix, incidence_in, incidence_out, laplacians, reduced_laplacian
from .linalg import Matrix, det, det_integer_rows, det_rows, power_is_zero

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class TreeSum:
    root: Vertex
    mode: Mode
    value: Fraction


@dataclass(frozen=True)
class TreeReport:
    root: Vertex
    mode: Mode
    trees: tuple[EdgeSubset, ...]
    total_weight: Fraction
    subsets_examined: int


@dataclass(frozen=True)
class BinetCauchyTerm:
    subset: EdgeSubset
    classification: TreeClassification
    term_value: Fraction
    # separate factor determinants; only rational (and only filled) when every weight is 1
    det_b: Optional[Fraction] = None
    det_c: Optional[Fraction] = None


@dataclass(frozen=True)
class BinetCauchyExpansion:
    root: Vertex
    mode: Mode
    terms: tuple[BinetCauchyTerm, ...]
    total: Fraction


def count_trees(g: Digraph, root: VertexRef, mode: Union[Mode, str] = Mode.OUTGOING) -> TreeSum:
    """Total weight of spanning trees at ``root`` as a reduced Laplacian determinant.

    For an unweighted graph this is the number of trees.
    """
    mode = Mode(mode)
    v = g.vertex(root)
    value = det(reduced_laplacian(laplacians(g), mode, v.index))
    return TreeSum(v, mode, value)


def check_cap(g: Digraph, cap: int) -> int:
    n = math.comb(g.q, g.p - 1)
    if n > cap:
        raise CapExceeded(n, cap)
    return n


def _subsets(g: Digraph) -> Iterator[tuple[int, ...]]:
    return itertools.combinations(range(g.q), g.p - 1)


def enumerate_trees(
    g: Digraph, root: VertexRef, mode: Union[Mode, str] = Mode.OUTGOING, cap: int = DEFAULT_CAP
) -> TreeReport:
    """Classify every ``(p-1)``-edge subset and keep the spanning trees."""
    mode = Mode(mode)
    v = g.vertex(root)
    n = check_cap(g, cap)
    classify = _Classifier(g, v.index, mode)
    trees = []
    total = Fraction(0)
    for s in _subsets(g):
        if classify(s).is_tree:
            trees.append(EdgeSubset(s))
            total += g.weight_of(s)
    return TreeReport(v, mode, tuple(trees), total, n)


class _ProductAssembler:
    """Builds ``B[S] C[S]`` edge by edge.

    Outgoing trees use ``B = (N_in^r)^T - M_out^r`` and ``C = N_in^r``;
    incoming trees use ``B = M_out^r - (N_in^r)^T`` and ``C = (M_out^r)^T``.
    Rows and columns are the non-root vertices in ascending order.  Edge
    ``k`` adds ``w_k * b_k c_k^T``, where ``b_k`` is a column with at most two
    entries of opposite sign and ``c_k`` a row with at most one entry 1.
    """

    def __init__(self, g: Digraph, root: int, mode: Mode):
        pos = {}
        for i in range(g.p):
            if i != root:
                pos[i] = len(pos)
        self.n = g.p - 1
        self.b_cols = []
        self.c_rows = []
        weights = [e.weight for e in g.edges]
        self.unit = all(w == 1 for w in weights)
        # integer weights w_k * scale; det(B[S] C[S]) = det(scaled product) / scale**n
        self.scale = math.lcm(*(w.denominator for w in weights)) if weights else 1
        self.int_weights = [int(w * self.scale) for w in weights]
        for e in g.edges:
            head, tail = (e.target, e.source) if mode is Mode.OUTGOING else (e.source, e.target)
            col = []
            if head in pos:
                col.append((pos[head], 1))
            if tail in pos:
                col.append((pos[tail], -1))
            self.b_cols.append(col)
            self.c_rows.append(pos.get(head))

    def scaled_product(self, s) -> list[list[int]]:
        """``scale * B[S] C[S]`` as integer rows."""
        n = self.n
        rows = [[0] * n for _ in range(n)]
        weights = self.int_weights
        for k in s:
            j = self.c_rows[k]
            if j is None:
                continue
            w = weights[k]
            for i, sign in self.b_cols[k]:
                rows[i][j] += sign * w
        return rows

    def term(self, s) -> Fraction:
        return Fraction(det_integer_rows(self.scaled_product(s)), self.scale**self.n)

    def product(self, s) -> Matrix:
        return Matrix(self.scaled_product(s), cols=self.n) * Fraction(1, self.scale)

    def factors(self, s) -> tuple[list[list[int]], list[list[int]]]:
        """Square ``B[S]`` and ``C[S]`` as integer rows (unit weights only)."""
        n = self.n
        b = [[0] * n for _ in range(n)]
        c = [[0] * n for _ in range(n)]
        for col, k in enumerate(s):
            for i, sign in self.b_cols[k]:
                b[i][col] = sign
            j = self.c_rows[k]
            if j is not None:
                c[col][j] = 1
        return b, c


def binet_cauchy_expansion(
    g: Digraph,
    root: VertexRef,
    mode: Union[Mode, str] = Mode.OUTGOING,
    cap: int = DEFAULT_CAP,
    factors: Optional[bool] = None,
) -> BinetCauchyExpansion:
    """Every Binet-Cauchy term ``det(B[S] C[S])`` of the reduced Laplacian.

    ``factors`` also records ``det(B[S])`` and ``det(C[S])`` separately; it
    defaults to on when every weight is 1 and is refused otherwise, since
    the separate factors involve square roots of the weights.
    """
    mode = Mode(mode)
    v = g.vertex(root)
    check_cap(g, cap)
    classify = _Classifier(g, v.index, mode)
    asm = _ProductAssembler(g, v.index, mode)
    if factors is None:
        factors = asm.unit
    elif factors and not asm.unit:
        raise ValueError("separate factor determinants are irrational for weighted graphs")
    terms = []
    total = Fraction(0)
    for s in _subsets(g):
        value = asm.term(s)
        db = dc = None
        if factors:
            b, c = asm.factors(s)
            db, dc = det_rows(b), det_rows(c)
        terms.append(BinetCauchyTerm(EdgeSubset(s), classify(s), value, db, dc))
        total += value
    return BinetCauchyExpansion(v, mode, tuple(terms), total)


def binet_cauchy_factors(g: Digraph, root: VertexRef, mode: Union[Mode, str] = Mode.OUTGOING) -> tuple[EdgeScaledMatrix, EdgeScaledMatrix]:
    """The factors ``(B, C)`` with ``B @ C`` equal to the reduced Laplacian."""
    r = g.index(root)
    Nr = incidence_in(g).delete_vertex(r)
    Mr = incidence_out(g).delete_vertex(r)
    if Mode(mode) is Mode.OUTGOING:
        return Nr.T - Mr, Nr
    return Mr - Nr.T, Mr.T


def tree_internal_adjacency(
    g: Digraph, tree, root: VertexRef, mode: Union[Mode, str] = Mode.OUTGOING
) -> Matrix:
    """The nilpotent part ``D`` of ``B[S] C[S]`` for a spanning tree ``S``.

    Outgoing: ``D = M_out^r[S] N_in^r[S]``, so ``D[i, j]`` is the weight of a
    tree edge from the i-th to the j-th non-root vertex.  Incoming uses
    ``D = (N_in^r[S])^T (M_out^r[S])^T``, the transposed pattern.
    """
    mode = Mode(mode)
    s = g.subset(tree)
    r = g.index(root)
    if not classify_spanning_tree(g, s, r, mode).is_tree:
        raise NotATree(f"{s} is not an {mode.value} spanning tree rooted at {g.vertices[r].label}")
    Nr = incidence_in(g).delete_vertex(r).select_edges(s.edges)
    Mr = incidence_out(g).delete_vertex(r).select_edges(s.edges)
    if mode is Mode.OUTGOING:
        return Mr @ Nr
    return Nr.T @ Mr.T


def check_nilpotency(g: Digraph, tree, root: VertexRef, mode: Union[Mode, str] = Mode.OUTGOING) -> bool:
    """Whether ``D**(p-1)`` vanishes for the tree's internal adjacency."""
    d = tree_internal_adjacency(g, tree, root, mode)
    if d.rows == 0:
        return True
    return power_is_zero(d, g.p - 1)

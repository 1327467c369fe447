"""Incidence matrices, degree and adjacency matrices, and both Laplacians.

For a weighted graph the incidence matrices carry ``sqrt(w_k)`` on edge
``k``.  Those entries are irrational in general, so they are never stored.
An :class:`EdgeScaledMatrix` keeps an exact integer pattern plus the edge
weights, and a product that contracts over the edge axis of two such matrices
pairs ``sqrt(w_k)`` with ``sqrt(w_k)``, which is just ``w_k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import ShapeMismatch
from .graph import Digraph, Mode, Vertex, VertexRef
from .linalg import Matrix, delete_row_col, select


@dataclass(frozen=True)
class EdgeScaledMatrix:
    """``pattern`` with every slice along ``edge_axis`` scaled by ``sqrt(weight)``.

    ``edge_axis`` is 0 when rows are edges (q x p) and 1 when columns are
    edges (p x q).
    """

    pattern: Matrix
    weights: tuple[Fraction, ...]
    edge_axis: int

    def __post_init__(self):
        n_edges = self.pattern.shape[self.edge_axis]
        if n_edges != len(self.weights):
            raise ShapeMismatch(f"{n_edges} edges in pattern but {len(self.weights)} weights")

    @property
    def shape(self) -> tuple[int, int]:
        return self.pattern.shape

    @property
    def T(self) -> "EdgeScaledMatrix":
        return EdgeScaledMatrix(self.pattern.T, self.weights, 1 - self.edge_axis)

    def _compatible(self, other: "EdgeScaledMatrix") -> None:
        if self.edge_axis != other.edge_axis or self.weights != other.weights:
            raise ShapeMismatch("edge-scaled matrices disagree on their edge scaling")

    def __sub__(self, other: "EdgeScaledMatrix") -> "EdgeScaledMatrix":
        self._compatible(other)
        return EdgeScaledMatrix(self.pattern - other.pattern, self.weights, self.edge_axis)

    def __add__(self, other: "EdgeScaledMatrix") -> "EdgeScaledMatrix":
        self._compatible(other)
        return EdgeScaledMatrix(self.pattern + other.pattern, self.weights, self.edge_axis)

    def __matmul__(self, other: "EdgeScaledMatrix") -> Matrix:
        return paired_product(self, other)

    def delete_vertex(self, r: int) -> "EdgeScaledMatrix":
        """Drop the vertex slice ``r`` (the non-edge axis)."""
        if self.edge_axis == 0:
            cols = [j for j in range(self.pattern.cols) if j != r]
            if len(cols) == self.pattern.cols:
                raise ShapeMismatch(f"vertex {r} not in pattern")
            return EdgeScaledMatrix(select(self.pattern, cols=cols), self.weights, 0)
        rows = [i for i in range(self.pattern.rows) if i != r]
        if len(rows) == self.pattern.rows:
            raise ShapeMismatch(f"vertex {r} not in pattern")
        return EdgeScaledMatrix(select(self.pattern, rows=rows), self.weights, 1)

    def select_edges(self, ids: Sequence[int]) -> "EdgeScaledMatrix":
        ids = list(ids)
        w = tuple(self.weights[k] for k in ids)
        if self.edge_axis == 0:
            return EdgeScaledMatrix(select(self.pattern, rows=ids), w, 0)
        return EdgeScaledMatrix(select(self.pattern, cols=ids), w, 1)

    def approx(self) -> list[list[float]]:
        """Floating-point rendering for display only."""
        roots = [math.sqrt(w) for w in self.weights]
        m = self.pattern
        if self.edge_axis == 0:
            return [[float(m[i, j]) * roots[i] for j in range(m.cols)] for i in range(m.rows)]
        return [[float(m[i, j]) * roots[j] for j in range(m.cols)] for i in range(m.rows)]


def paired_product(left: EdgeScaledMatrix, right: EdgeScaledMatrix) -> Matrix:
    """Exact ``left @ right`` contracting over the shared edge axis.

    Term ``k`` of the sum carries ``sqrt(w_k) * sqrt(w_k) = w_k``.
    """
    if left.edge_axis != 1 or right.edge_axis != 0:
        raise ShapeMismatch("paired product must contract over the edge axis of both factors")
    if left.weights != right.weights:
        raise ShapeMismatch("factors are scaled by different edge weights")
    a, b, w = left.pattern, right.pattern, left.weights
    zero = Fraction(0)
    data = []
    for i in range(a.rows):
        ra = a.row(i)
        row = []
        for j in range(b.cols):
            acc = zero
            for k, x in enumerate(ra):
                if x:
                    y = b[k, j]
                    if y:
                        acc += x * y * w[k]
            row.append(acc)
        data.append(row)
    return Matrix(data, cols=b.cols)


def _weights(g: Digraph) -> tuple[Fraction, ...]:
    return tuple(e.weight for e in g.edges)


def incidence_in(g: Digraph) -> EdgeScaledMatrix:
    """q x p: row k has its nonzero in the column of edge k's head."""
    rows = [[1 if e.target == i else 0 for i in range(g.p)] for e in g.edges]
    return EdgeScaledMatrix(Matrix(rows, cols=g.p), _weights(g), 0)


def incidence_out(g: Digraph) -> EdgeScaledMatrix:
    """p x q: column k has its nonzero in the row of edge k's tail."""
    rows = [[1 if e.source == i else 0 for e in g.edges] for i in range(g.p)]
    return EdgeScaledMatrix(Matrix(rows, cols=g.q), _weights(g), 1)


def gram_products(g: Digraph) -> tuple[Matrix, Matrix, Matrix]:
    """``(D_in, A_v, D_out)`` computed directly from the edge list."""
    d_in = [Fraction(0)] * g.p
    d_out = [Fraction(0)] * g.p
    adj = [[Fraction(0)] * g.p for _ in range(g.p)]
    for e in g.edges:
        d_in[e.target] += e.weight
        d_out[e.source] += e.weight
        adj[e.source][e.target] = e.weight
    return Matrix.diag(d_in), Matrix(adj, cols=g.p), Matrix.diag(d_out)


@dataclass(frozen=True)
class LaplacianPair:
    L1: Matrix
    L2: Matrix
    D_in: Matrix
    D_out: Matrix
    A_v: Matrix

    def for_mode(self, mode: Union[Mode, str]) -> Matrix:
        return self.L1 if Mode(mode) is Mode.OUTGOING else self.L2


def laplacians(g: Digraph) -> LaplacianPair:
    """``L1 = D_in - A_v`` and ``L2 = D_out - A_v^T``."""
    d_in, adj, d_out = gram_products(g)
    return LaplacianPair(L1=d_in - adj, L2=d_out - adj.T, D_in=d_in, D_out=d_out, A_v=adj)


def _which(which: Union[int, Mode, str]) -> int:
    if which in (1, 2):
        return which
    return 1 if Mode(which) is Mode.OUTGOING else 2


def reduced_laplacian(lp: LaplacianPair, which: Union[int, Mode, str], root: Union[Vertex, int]) -> Matrix:
    """Laplacian 1 or 2 with the root's row and column deleted."""
    r = root.index if isinstance(root, Vertex) else root
    L = lp.L1 if _which(which) == 1 else lp.L2
    return delete_row_col(L, r)


def factorization_checks(g: Digraph, root: Optional[VertexRef] = None) -> dict[str, bool]:
    """Each factorization identity, evaluated with edge-paired products.

    Keys name the identity; reduced identities are checked at ``root`` or,
    when omitted, at every vertex.
    """
    lp = laplacians(g)
    N = incidence_in(g)
    M = incidence_out(g)
    checks = {
        "D_in = N_in^T N_in": lp.D_in == N.T @ N,
        "A_v = M_out N_in": lp.A_v == M @ N,
        "D_out = M_out M_out^T": lp.D_out == M @ M.T,
        "L1 = (N_in^T - M_out) N_in": lp.L1 == (N.T - M) @ N,
        "L2 = (M_out - N_in^T) M_out^T": lp.L2 == (M - N.T) @ M.T,
    }
    if all(w == 1 for w in N.weights):
        # all weights are 1: the literal 0/1 matrix products must agree too
        Np, Mp = N.pattern, M.pattern
        checks["literal 0/1 products"] = (
            lp.D_in == Np.T @ Np and lp.A_v == Mp @ Np and lp.D_out == Mp @ Mp.T
        )
    roots = range(g.p) if root is None else [g.index(root)]
    for r in roots:
        Nr = N.delete_vertex(r)
        Mr = M.delete_vertex(r)
        label = g.vertices[r].label
        checks[f"L1^r = ((N_in^r)^T - M_out^r) N_in^r at {label}"] = (
            reduced_laplacian(lp, 1, r) == (Nr.T - Mr) @ Nr
        )
        checks[f"L2^r = (M_out^r - (N_in^r)^T) (M_out^r)^T at {label}"] = (
            reduced_laplacian(lp, 2, r) == (Mr - Nr.T) @ Mr.T
        )
    return checks


def verify_factorization(g: Digraph, root: Optional[VertexRef] = None) -> bool:
    return all(factorization_checks(g, root).values())

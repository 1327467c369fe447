"""Kernel vectors of the Laplacians built from per-root tree sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ColumnSumsNonzero, NotSquare, ZeroVector
from .graph import Digraph, Mode
from .laplacian import laplacians, reduced_laplacian
from .linalg import Matrix, cofactor, det


@dataclass(frozen=True)
class TreeVector:
    mode: Mode
    entries: tuple[Fraction, ...]

    @property
    def all_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


@dataclass(frozen=True)
class StationaryVector:
    mode: Mode
    entries: tuple[Fraction, ...]
    normalization: str = "sum-to-one"


def tree_vector(g: Digraph, mode: Union[Mode, str]) -> TreeVector:
    """Entry i is the tree sum at root i (``x`` for outgoing, ``y`` for incoming)."""
    mode = Mode(mode)
    lp = laplacians(g)
    return TreeVector(mode, tuple(det(reduced_laplacian(lp, mode, i)) for i in range(g.p)))


def verify_kernel(g: Digraph) -> bool:
    lp = laplacians(g)
    x = tree_vector(g, Mode.OUTGOING).entries
    y = tree_vector(g, Mode.INCOMING).entries
    return all(v == 0 for v in lp.L1.apply(x)) and all(v == 0 for v in lp.L2.apply(y))


def cofactor_table(L: Matrix) -> list[list[Fraction]]:
    """All cofactors ``C[i][j]``; requires zero column sums."""
    if not L.is_square:
        raise NotSquare(f"cofactors of a {L.rows}x{L.cols} matrix")
    sums = L.column_sums()
    if any(sums):
        raise ColumnSumsNonzero(f"column sums {[str(s) for s in sums]} are not all zero")
    return [[cofactor(L, i, j) for j in range(L.cols)] for i in range(L.rows)]


def verify_cofactor_constancy(L: Matrix) -> bool:
    """Whether cofactors agree down every column."""
    table = cofactor_table(L)
    return all(len({row[j] for row in table}) <= 1 for j in range(L.cols))


def stationary(g: Digraph, mode: Union[Mode, str]) -> StationaryVector:
    """The tree vector scaled to sum to one."""
    tv = tree_vector(g, mode)
    if tv.all_zero:
        raise ZeroVector(f"no {tv.mode.value} spanning tree exists at any root")
    total = sum(tv.entries, Fraction(0))
    return StationaryVector(tv.mode, tuple(x / total for x in tv.entries))

"""Invariant battery: every checkable identity, run on one graph."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Digraph, Mode, is_strongly_connected
from .laplacian import factorization_checks, incidence_in, incidence_out, laplacians
from .spectral import tree_vector, verify_cofactor_constancy
from .trees import (
    DEFAULT_CAP,
    binet_cauchy_expansion,
    check_cap,
    check_nilpotency,
    count_trees,
    enumerate_trees,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _factorizations(g: Digraph) -> CheckResult:
    failed = [name for name, ok in factorization_checks(g).items() if not ok]
    return CheckResult("factorization identities", not failed, "; ".join(failed))


def _column_sums(g: Digraph) -> CheckResult:
    lp = laplacians(g)
    # (1,...,1)(N_in^T - M_out) = 0: every edge column holds one +1 and one -1
    signed = incidence_in(g).pattern.T - incidence_out(g).pattern
    ok = not any(lp.L1.column_sums()) and not any(lp.L2.column_sums()) and not any(signed.column_sums())
    return CheckResult("zero column sums", ok)


def _oracle(g: Digraph, cap: int) -> tuple[CheckResult, CheckResult]:
    bad, bad_nil = [], []
    for v in g.vertices:
        for mode in Mode:
            det_value = count_trees(g, v, mode).value
            report = enumerate_trees(g, v, mode, cap)
            if det_value != report.total_weight:
                bad.append(f"{v.label}/{mode.value}: det {det_value} vs trees {report.total_weight}")
            for t in report.trees:
                if not check_nilpotency(g, t, v, mode):
                    bad_nil.append(f"{t} at {v.label}/{mode.value}")
    return (
        CheckResult("determinant equals enumerated tree weight", not bad, "; ".join(bad)),
        CheckResult("tree adjacency nilpotent", not bad_nil, "; ".join(bad_nil)),
    )


def _dichotomy(g: Digraph, cap: int) -> tuple[CheckResult, CheckResult]:
    bad_terms, bad_sums = [], []
    for v in g.vertices:
        for mode in Mode:
            exp = binet_cauchy_expansion(g, v, mode, cap)
            for t in exp.terms:
                expected = g.weight_of(t.subset) if t.classification.is_tree else Fraction(0)
                if t.term_value != expected:
                    bad_terms.append(f"{t.subset} at {v.label}/{mode.value}: {t.term_value}")
                elif t.det_b is not None and t.det_b * t.det_c != t.term_value:
                    bad_terms.append(f"{t.subset} at {v.label}/{mode.value}: factor product")
            det_value = count_trees(g, v, mode).value
            if exp.total != det_value:
                bad_sums.append(f"{v.label}/{mode.value}: {exp.total} vs {det_value}")
    return (
        CheckResult("Binet-Cauchy term dichotomy", not bad_terms, "; ".join(bad_terms[:5])),
        CheckResult("Binet-Cauchy sum equals determinant", not bad_sums, "; ".join(bad_sums)),
    )


def _kernel(g: Digraph) -> tuple[CheckResult, CheckResult]:
    lp = laplacians(g)
    x = tree_vector(g, Mode.OUTGOING)
    y = tree_vector(g, Mode.INCOMING)
    ok = not any(lp.L1.apply(x.entries)) and not any(lp.L2.apply(y.entries))
    kernel = CheckResult("L1 x = 0 and L2 y = 0", ok)
    if is_strongly_connected(g):
        pos = all(e > 0 for e in x.entries + y.entries)
        positivity = CheckResult("positive tree vectors (strongly connected)", pos)
    else:
        positivity = CheckResult("positive tree vectors (strongly connected)", True, "not strongly connected; skipped")
    return kernel, positivity


def _cofactors(g: Digraph) -> CheckResult:
    lp = laplacians(g)
    ok = verify_cofactor_constancy(lp.L1) and verify_cofactor_constancy(lp.L2)
    return CheckResult("cofactor constancy down columns", ok)


def _reversal(g: Digraph) -> CheckResult:
    rev = g.reverse()
    ok = all(
        count_trees(g, v, Mode.OUTGOING).value == count_trees(rev, v, Mode.INCOMING).value
        for v in g.vertices
    )
    return CheckResult("edge reversal swaps orientations", ok)


def run_checks(g: Digraph, cap: int = DEFAULT_CAP) -> list[CheckResult]:
    """All checks in a fixed order.  Raises CapExceeded up front if brute force is too large."""
    check_cap(g, cap)
    results = [_factorizations(g), _column_sums(g)]
    results.extend(_oracle(g, cap))
    results.extend(_dichotomy(g, cap))
    results.extend(_kernel(g))
    results.append(_cofactors(g))
    results.append(_reversal(g))
    return results

"""Command line front end.

Exit codes: 0 success, 1 bad input, 2 enumeration cap exceeded,
3 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import ArborError, CapExceeded
from .graph import Digraph, Direction, Mode, degree, is_strongly_connected
from .graphio import parse_graph
from .laplacian import incidence_in, incidence_out, laplacians, reduced_laplacian
from .linalg import Matrix
from .spectral import stationary, tree_vector
from .trees import DEFAULT_CAP, binet_cauchy_expansion, count_trees, enumerate_trees
from .verify import run_checks

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for the cap
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _matrix(m: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.tolist()]


def _approx_matrix(m: Matrix) -> list[list[float]]:
    return [[float(x) for x in row] for row in m.tolist()]


def _need_root(g: Digraph, args) -> int:
    if args.root is None:
        raise ArborError(f"{args.command} needs --root")
    return g.index(args.root)


def _info(g: Digraph, args) -> dict:
    return {
        "vertices": [
            {
                "label": v.label,
                "in_degree": degree(g, v, Direction.IN),
                "out_degree": degree(g, v, Direction.OUT),
            }
            for v in g.vertices
        ],
        "edges": [
            {"name": e.name, "from": g.vertices[e.source].label, "to": g.vertices[e.target].label, "weight": str(e.weight)}
            for e in g.edges
        ],
        "strongly_connected": is_strongly_connected(g),
    }


def _laplacian(g: Digraph, args) -> dict:
    lp = laplacians(g)
    mats = {"D_in": lp.D_in, "D_out": lp.D_out, "A_v": lp.A_v, "L1": lp.L1, "L2": lp.L2}
    if args.root is not None:
        r = g.index(args.root)
        mats["L1^r"] = reduced_laplacian(lp, 1, r)
        mats["L2^r"] = reduced_laplacian(lp, 2, r)
    out: dict = {name: _matrix(m) for name, m in mats.items()}
    N, M = incidence_in(g), incidence_out(g)
    if g.weighted:
        out["incidence_note"] = "weighted incidence entries are sqrt(w_k); shown as 0/1 patterns"
    out["N_in"] = _matrix(N.pattern)
    out["M_out"] = _matrix(M.pattern)
    if args.approx:
        approx = {name: _approx_matrix(m) for name, m in mats.items()}
        approx["N_in"] = N.approx()
        approx["M_out"] = M.approx()
        out["approx"] = approx
    return out


def _count(g: Digraph, args) -> dict:
    r = _need_root(g, args)
    ts = count_trees(g, r, args.mode)
    out = {"root": ts.root.label, "mode": ts.mode.value, "value": str(ts.value)}
    if args.approx:
        out["approx"] = float(ts.value)
    return out


def _enumerate(g: Digraph, args) -> dict:
    r = _need_root(g, args)
    rep = enumerate_trees(g, r, args.mode, args.cap)
    return {
        "root": rep.root.label,
        "mode": rep.mode.value,
        "trees": [{"edges": t.names(), "weight": str(g.weight_of(t))} for t in rep.trees],
        "total_weight": str(rep.total_weight),
        "subsets_examined": rep.subsets_examined,
    }


def _expand(g: Digraph, args) -> dict:
    r = _need_root(g, args)
    exp = binet_cauchy_expansion(g, r, args.mode, args.cap)
    terms = []
    for t in exp.terms:
        row = {
            "subset": t.subset.names(),
            "classification": t.classification.describe(g),
            "term": str(t.term_value),
        }
        if t.det_b is not None:
            row["det_B"] = str(t.det_b)
            row["det_C"] = str(t.det_c)
        terms.append(row)
    return {
        "root": exp.root.label,
        "mode": exp.mode.value,
        "terms": terms,
        "sum": str(exp.total),
        "determinant": str(count_trees(g, r, args.mode).value),
    }


def _eigenvector(g: Digraph, args) -> dict:
    tv = tree_vector(g, args.mode)
    out = {
        "mode": tv.mode.value,
        "vector": "x" if tv.mode is Mode.OUTGOING else "y",
        "entries": {v.label: str(x) for v, x in zip(g.vertices, tv.entries)},
        "all_zero": tv.all_zero,
    }
    if args.stationary:
        st = stationary(g, args.mode)
        out["stationary"] = {v.label: str(x) for v, x in zip(g.vertices, st.entries)}
        out["normalization"] = st.normalization
        if args.approx:
            out["stationary_approx"] = {v.label: float(x) for v, x in zip(g.vertices, st.entries)}
    return out


def _verify(g: Digraph, args) -> dict:
    results = run_checks(g, args.cap)
    return {
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in results],
        "all_passed": all(c.passed for c in results),
    }


COMMANDS = {
    "info": _info,
    "laplacian": _laplacian,
    "count": _count,
    "enumerate": _enumerate,
    "expand": _expand,
    "eigenvector": _eigenvector,
    "verify": _verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arbor", description="Exact rooted spanning tree counts for weighted digraphs.")
    parser.add_argument("command", choices=list(COMMANDS))
    parser.add_argument("graph", help="graph document (JSON); '-' reads stdin")
    parser.add_argument("--root", help="root vertex label")
    parser.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.OUTGOING.value)
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max edge subsets to brute force")
    parser.add_argument("--format", choices=["table", "json"], default="table")
    parser.add_argument("--approx", action="store_true", help="add decimal approximations for display")
    parser.add_argument("--stationary", action="store_true", help="eigenvector: also normalize to sum one")
    return parser


def _render_table(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    gs = report["graph"]
    lines.append(f"graph: p={gs['p']} q={gs['q']} weighted={str(gs['weighted']).lower()}")
    _render_value(report["result"], lines, 0)
    return "\n".join(lines) + "\n"


def _is_matrix(value) -> bool:
    return isinstance(value, list) and bool(value) and all(isinstance(r, list) for r in value)


def _render_value(value, lines: list[str], indent: int) -> None:
    pad = "  " * indent
    for key, item in value.items():
        if _is_matrix(item):
            lines.append(f"{pad}{key}:")
            cells = [[str(x) for x in row] for row in item]
            width = max((len(c) for row in cells for c in row), default=1)
            for row in cells:
                lines.append(pad + "  [ " + " ".join(c.rjust(width) for c in row) + " ]")
        elif isinstance(item, dict):
            lines.append(f"{pad}{key}:")
            _render_value(item, lines, indent + 1)
        elif isinstance(item, list) and item and all(isinstance(x, dict) for x in item):
            lines.append(f"{pad}{key}:")
            for rec in item:
                parts = []
                for k, v in rec.items():
                    if isinstance(v, list):
                        v = "{" + ",".join(str(x) for x in v) + "}"
                    elif k == "passed":
                        v = "pass" if v else "FAIL"
                    elif isinstance(v, bool):
                        v = str(v).lower()
                    if v == "":
                        continue
                    parts.append(f"{k}={v}")
                lines.append(pad + "  - " + "  ".join(parts))
        elif isinstance(item, bool):
            lines.append(f"{pad}{key}: {str(item).lower()}")
        elif isinstance(item, list):
            lines.append(f"{pad}{key}: [" + ", ".join(str(x) for x in item) + "]")
        else:
            lines.append(f"{pad}{key}: {item}")


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.graph == "-":
            text = sys.stdin.buffer.read()
        else:
            with open(args.graph, "rb") as fh:
                text = fh.read()
        g = parse_graph(text)
        result = COMMANDS[args.command](g, args)
    except CapExceeded as exc:
        print(f"arbor: {exc}", file=stderr)
        return EXIT_CAP
    except (ArborError, OSError) as exc:
        print(f"arbor: {exc}", file=stderr)
        return EXIT_INPUT

    report = {
        "command": " ".join([args.command] + _echo_flags(args)),
        "graph": {"p": g.p, "q": g.q, "weighted": g.weighted},
        "result": result,
    }
    if args.format == "json":
        stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        stdout.write(_render_table(report))
    if args.command == "verify" and not result["all_passed"]:
        return EXIT_VERIFY
    return EXIT_OK


def _echo_flags(args) -> list[str]:
    flags = []
    if args.root is not None:
        flags += ["--root", args.root]
    if args.command in ("count", "enumerate", "expand", "eigenvector"):
        flags += ["--mode", args.mode]
    if args.command in ("enumerate", "expand", "verify") and args.cap != DEFAULT_CAP:
        flags += ["--cap", str(args.cap)]
    if args.stationary:
        flags.append("--stationary")
    if args.approx:
        flags.append("--approx")
    return flags


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

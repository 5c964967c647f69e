"""Command-line entry point ``cbdet``.

Every command builds a report ``{command, inputs, results, verdicts,
duration_ms}``. Exact scalars are written as strings (``"17"``, ``"-5/3"``)
so nothing passes through floating point. The exit status is 1 when any
verdict is ``fail``, 2 on bad input, 0 otherwise.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import generators
from .charpoly import Polynomial, char_poly, pseudo_det, spectral_count
from .errors import BudgetExceeded, GraphError, ParseError, ShapeError
from .exact import rank
from .graphs import (
    betti_numbers,
    brute_force_rooted_forest_count,
    brute_force_tree_count,
    clique_complex,
    dirac_operator,
    euler_characteristic_check,
    format_graph,
    hodge_kernel_dim,
    parse_graph,
    rooted_forest_count,
    simplex_graph,
    spanning_tree_count,
)
from .io import parse_matrix
from .minors import DEFAULT_BUDGET, exterior_power, minor_pair_sum
from .selftest import FAIL, PASS, SKIP, run_selftest

ORACLE_EDGE_LIMIT = 16
DEFAULT_SIMPLEX_CAP = 100_000


def _s(x: Fraction | int) -> str:
    return str(Fraction(x))


def _poly(p: Polynomial) -> list[str]:
    return [_s(c) for c in p.coeffs]


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def _input(path: str) -> tuple[dict, str]:
    data = Path(path).read_bytes()
    return {"path": path, "sha256": hashlib.sha256(data).hexdigest()}, data.decode()


# -- commands ------------------------------------------------------------------


def cmd_pdet(args) -> tuple[dict, dict, dict]:
    info, text = _input(args.matrix)
    a = parse_matrix(text)
    if not a.is_square:
        raise ShapeError(f"pdet needs a square matrix, got {a.rows}x{a.cols}")
    p = char_poly(a)
    results = {
        "shape": [a.rows, a.cols],
        "char_poly": _poly(p),
        "pseudo_det": _s(pseudo_det(a)),
        "spectral_count": spectral_count(a),
        "rank": rank(a),
    }
    return {"matrix": info}, results, {}


def cmd_charpoly(args):
    inputs, results, verdicts = cmd_pdet(args)
    return inputs, {"char_poly": results["char_poly"]}, verdicts


def cmd_cauchy_binet(args):
    fi, ft = _input(args.F)
    gi, gt = _input(args.G)
    f, g = parse_matrix(ft), parse_matrix(gt)
    if f.shape != g.shape:
        raise ShapeError(f"F is {f.rows}x{f.cols} but G is {g.rows}x{g.cols}")
    budget = DEFAULT_BUDGET if args.budget is None else args.budget
    ftg, fgt = f.T @ g, f @ g.T
    p = char_poly(ftg)
    k_star = spectral_count(ftg)
    det_ftg, det_fgt = pseudo_det(ftg), pseudo_det(fgt)
    results = {
        "shape": [f.rows, f.cols],
        "char_poly_FtG": _poly(p),
        "per_k": [],
        "leading_order": {"k": k_star, "pseudo_det": _s(det_ftg), "minor_sum": None},
        "duality": {"Det(F^T G)": _s(det_ftg), "Det(F G^T)": _s(det_fgt)},
    }
    verdicts = {}
    all_ok, skipped = True, False
    for k in range(f.cols + 1):
        row = {"k": k, "p_k": _s(p.signed(k))}
        try:
            s = minor_pair_sum(f, g, k, budget)
        except BudgetExceeded:
            row["minor_sum"] = None
            skipped = True
        else:
            row["minor_sum"] = _s(s)
            all_ok = all_ok and s == p.signed(k)
            if k == k_star:
                results["leading_order"]["minor_sum"] = _s(s)
        results["per_k"].append(row)
    verdicts["all_orders"] = FAIL if not all_ok else (SKIP if skipped else PASS)
    t1 = results["leading_order"]["minor_sum"]
    verdicts["leading_order"] = SKIP if t1 is None else _verdict(t1 == _s(det_ftg))
    verdicts["duality"] = _verdict(det_ftg == det_fgt)
    return {"F": fi, "G": gi}, results, verdicts


def cmd_exterior(args):
    info, text = _input(args.matrix)
    f = parse_matrix(text)
    budget = DEFAULT_BUDGET if args.budget is None else args.budget
    w = exterior_power(f, args.k, budget)
    results = {
        "k": args.k,
        "shape": [w.rows, w.cols],
        "matrix": [[_s(x) for x in row] for row in w],
    }
    return {"matrix": info}, results, {}


def cmd_graph(args):
    info, text = _input(args.edges)
    g = parse_graph(text)
    results: dict = {"vertices": g.n, "edges": len(g.edges)}
    verdicts = {}
    small = len(g.edges) <= ORACLE_EDGE_LIMIT
    cap = DEFAULT_SIMPLEX_CAP if args.budget is None else args.budget

    if args.analysis == "trees":
        trees = spanning_tree_count(g)
        results["spanning_trees"] = _s(trees)
        results["oracle"] = brute_force_tree_count(g) if small else None
        verdicts["kirchhoff_oracle"] = _verdict(trees == results["oracle"]) if small else SKIP
    elif args.analysis == "forests":
        forests = rooted_forest_count(g)
        results["rooted_forests"] = _s(forests)
        results["oracle"] = brute_force_rooted_forest_count(g) if small else None
        verdicts["forest_oracle"] = _verdict(forests == results["oracle"]) if small else SKIP
    elif args.analysis in ("betti", "dirac"):
        try:
            c = clique_complex(g, cap)
        except BudgetExceeded:
            verdicts["hodge"] = verdicts["euler"] = SKIP
            return {"edges": info}, results, verdicts
        b = betti_numbers(c)
        chi_b, chi_v = euler_characteristic_check(c)
        kernel = hodge_kernel_dim(c)
        results.update(
            simplex_counts=list(c.counts),
            betti=b,
            kernel_dim=kernel,
            euler={"betti": chi_b, "simplices": chi_v},
        )
        verdicts["hodge"] = _verdict(sum(b) == kernel)
        verdicts["euler"] = _verdict(chi_b == chi_v)
        if args.analysis == "dirac":
            D = dirac_operator(c)
            d = pseudo_det(D)
            results["pseudo_det_D"] = _s(d)
            results["pseudo_det_D2"] = _s(pseudo_det(D @ D))
            if g.is_connected():
                verdicts["vertex_divisibility"] = _verdict((d / g.n).denominator == 1)
    elif args.analysis == "simplexgraph":
        sg = simplex_graph(g, cap)
        results["simplex_graph"] = {"n": sg.n, "edges": [list(e) for e in sg.edges]}
        results["edge_list"] = format_graph(sg)
    return {"edges": info}, results, verdicts


def cmd_selftest(args):
    budget = DEFAULT_BUDGET if args.budget is None else args.budget
    suite = run_selftest(args.seed, args.trials, budget)
    results = {
        o.name: {
            "passed": o.passed,
            "failed": o.failed,
            "skipped": o.skipped,
            **({"first_failure": o.first_failure} if o.first_failure else {}),
        }
        for o in suite.outcomes
    }
    verdicts = {o.name: o.verdict for o in suite.outcomes}
    inputs = {"seed": args.seed, "trials": args.trials, "budget": budget}
    return inputs, results, verdicts


def cmd_random(args):
    """Write a random integer matrix (handy for feeding ``cauchy-binet``)."""
    import random

    rng = random.Random(args.seed)
    a = generators.int_matrix(rng, args.rows, args.cols)
    sys.stdout.write("".join(" ".join(_s(x) for x in r) + "\n" for r in a))
    return None


# -- plumbing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, default=None,
                        help="cap on minor patterns (simplices for graph analyses)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--no-timing", action="store_true",
                        help="report duration_ms as 0 so output is reproducible")

    p = argparse.ArgumentParser(prog="cbdet", description="Pseudo-determinants and Cauchy-Binet identities.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pdet", parents=[common], help="characteristic polynomial and pseudo-determinant")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_pdet)

    s = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial det(A - x)")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_charpoly)

    s = sub.add_parser("cauchy-binet", parents=[common], help="verify the minor-sum identities for F, G")
    s.add_argument("F")
    s.add_argument("G")
    s.set_defaults(func=cmd_cauchy_binet)

    s = sub.add_parser("exterior", parents=[common], help="k-th compound matrix")
    s.add_argument("matrix")
    s.add_argument("-k", type=int, required=True)
    s.set_defaults(func=cmd_exterior)

    s = sub.add_parser("graph", parents=[common], help="graph invariants from an edge list")
    s.add_argument("edges")
    s.add_argument("analysis", choices=("trees", "forests", "betti", "dirac", "simplexgraph"))
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("selftest", parents=[common], help="run the seeded property suite")
    s.add_argument("--trials", type=int, default=10)
    s.set_defaults(func=cmd_selftest)

    s = sub.add_parser("random", parents=[common], help="print a random integer matrix")
    s.add_argument("rows", type=int)
    s.add_argument("cols", type=int)
    s.set_defaults(func=cmd_random)
    return p


def render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]

    def walk(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}{k}.", v)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, v in enumerate(value):
                walk(f"{prefix}{i}.", v)
        elif isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{prefix[:-1]}:")
            lines.extend("  " + " ".join(map(str, row)) for row in value)
        elif isinstance(value, list):
            lines.append(f"{prefix[:-1]}: [{', '.join(map(str, value))}]")
        elif isinstance(value, str) and "\n" in value:
            lines.append(f"{prefix[:-1]}:")
            lines.extend("  " + ln for ln in value.splitlines())
        else:
            lines.append(f"{prefix[:-1]}: {value}")

    walk("inputs.", report["inputs"])
    walk("", report["results"])
    for name, v in report["verdicts"].items():
        lines.append(f"[{v.upper()}] {name}")
    lines.append(f"duration_ms: {report['duration_ms']}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        out = args.func(args)
    except (ParseError, ShapeError, GraphError, BudgetExceeded, OSError, ValueError) as exc:
        print(f"cbdet {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if out is None:
        return 0
    inputs, results, verdicts = out
    elapsed = 0 if args.no_timing else round((time.perf_counter() - start) * 1000)
    report = {
        "command": args.command,
        "inputs": inputs,
        "results": results,
        "verdicts": verdicts,
        "duration_ms": elapsed,
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(report))
    return 1 if FAIL in verdicts.values() else 0


if __name__ == "__main__":
    sys.exit(main())

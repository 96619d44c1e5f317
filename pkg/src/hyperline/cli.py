"""Command-line interface.

Subcommands: info, line, spectrum, check, power, collar, generate.
Exit codes: 0 on success (all checks passing), 1 when a check fails,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import run_all_checks
from .core import (
    degree_profile,
    is_connected,
    is_uniform,
    rank_corank,
    zagreb_index,
)
from .generate import generate_hypergraph
from .io import HypergraphParseError, emit, parse_path
from .line import line_multigraph
from .matrices import adjacency_matrix, incidence_matrix, matrix_vector, signless_laplacian
from .power import PowerParams, power_hypergraph
from .spectra import DEFAULT_TOLERANCE, eigenvalues_symmetric
from .structure import find_collar_subhypergraph, is_collar, regularity_report
from .matrices import RationalVector


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperline",
        description="Line multigraphs of general hypergraphs: structure and spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="structural summary of a hypergraph file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("line", help="emit the line multigraph")
    p.add_argument("file")
    p.add_argument(
        "--format", choices=("edgelist", "matrix", "json"), default="edgelist"
    )

    p = sub.add_parser("spectrum", help="eigenvalues of an associated matrix")
    p.add_argument("file")
    p.add_argument(
        "--matrix",
        choices=("line-adjacency", "signless-laplacian"),
        default="line-adjacency",
    )
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)

    p = sub.add_parser("check", help="run every applicable consistency check")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("power", help="construct a general power hypergraph")
    p.add_argument("file")
    p.add_argument("-t", type=int, required=True, help="vertex expansion factor")
    p.add_argument("-k", type=int, required=True, help="target rank (k >= r*t)")
    p.add_argument("--spectrum", choices=("formula", "direct", "both"))
    p.add_argument(
        "--uniform-pad",
        action="store_true",
        help="pad each edge to exactly k vertices instead of by k - r*t",
    )
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)

    p = sub.add_parser("collar", help="recognize or search for a collar")
    p.add_argument("file")
    p.add_argument("--search", action="store_true", help="search edge subsets")
    p.add_argument("--max-edges", type=int, default=20)

    p = sub.add_parser("generate", help="seeded random simple connected hypergraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-card", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _cmd_info(args) -> int:
    h = parse_path(args.file)
    prof = degree_profile(h)
    r, s = rank_corank(h)
    reg = regularity_report(h)
    data = {
        "n": h.n,
        "m": h.m,
        "rank": r,
        "corank": s,
        "degrees": list(prof.degrees),
        "max_degree": prof.max,
        "min_degree": prof.min,
        "average_degree": prof.average,
        "zagreb_index": zagreb_index(h),
        "connected": is_connected(h),
        "uniform": is_uniform(h),
        "linear": reg.linear,
        "regular": reg.regular,
        "edge_regular": reg.edge_regular,
        "skew_edge_regular": reg.skew_edge_regular,
        "collar": is_collar(h) is not None,
    }
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        for key, value in data.items():
            print(f"{key}: {value}")
        if not data["connected"]:
            print("warning: disconnected input; structural results assume connectivity")
    return 0


def _cmd_line(args) -> int:
    h = parse_path(args.file)
    lm = line_multigraph(h)
    if args.format == "edgelist":
        for i, j, mult in lm.graph.pairs():
            print(f"{i} {j} {mult}")
    elif args.format == "matrix":
        sys.stdout.write(adjacency_matrix(lm.graph).to_text())
    else:
        data = {
            "order": lm.graph.order,
            "vertices": [
                {"index": i, "edge": list(labels)}
                for i, labels in enumerate(lm.edge_labels or ())
            ],
            "edges": [
                {"u": i, "v": j, "multiplicity": mult}
                for i, j, mult in lm.graph.pairs()
            ],
        }
        print(json.dumps(data, indent=2))
    return 0


def _cmd_spectrum(args) -> int:
    h = parse_path(args.file)
    if args.matrix == "line-adjacency":
        mat = adjacency_matrix(line_multigraph(h).graph)
    else:
        mat = signless_laplacian(h)
    spec = eigenvalues_symmetric(mat, args.tol)
    print(json.dumps(spec.to_json_dict(), indent=2))
    return 0


def _cmd_check(args) -> int:
    h = parse_path(args.file)
    report = run_all_checks(h, args.tol)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        for line in report.summary_lines():
            print(line)
    return 0 if report.passed else 1


def _cmd_power(args) -> int:
    h = parse_path(args.file)
    params = PowerParams(t=args.t, k=args.k)
    try:
        powered = power_hypergraph(h, params, uniform_pad=args.uniform_pad)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.spectrum is None:
        sys.stdout.write(emit(powered))
        return 0
    from .spectra import power_spectrum_formula

    out = {}
    if args.spectrum in ("formula", "both"):
        out["formula"] = power_spectrum_formula(h, args.t, args.k, args.tol).to_json_dict()
    if args.spectrum in ("direct", "both"):
        out["direct"] = eigenvalues_symmetric(
            signless_laplacian(powered), args.tol
        ).to_json_dict()
    print(json.dumps(out, indent=2))
    return 0


def _cmd_collar(args) -> int:
    h = parse_path(args.file)
    if args.search:
        witness = find_collar_subhypergraph(h, max_edges=args.max_edges)
    else:
        witness = is_collar(h)
    if witness is None:
        print("none")
        return 0
    vec = RationalVector(witness.signed_entry(i) for i in range(h.m))
    if not matrix_vector(incidence_matrix(h), vec).is_zero():
        raise AssertionError("collar witness failed exact kernel verification")
    data = {
        "edges": list(witness.edge_indices),
        "coloring": {str(i): c for i, c in sorted(witness.coloring.items())},
        "certificate": [int(x) for x in vec.entries],
        "connected": witness.connected,
    }
    print(json.dumps(data, indent=2))
    return 0


def _cmd_generate(args) -> int:
    h = generate_hypergraph(args.n, args.m, args.max_card, args.seed)
    sys.stdout.write(emit(h))
    return 0


_HANDLERS = {
    "info": _cmd_info,
    "line": _cmd_line,
    "spectrum": _cmd_spectrum,
    "check": _cmd_check,
    "power": _cmd_power,
    "collar": _cmd_collar,
    "generate": _cmd_generate,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except (HypergraphParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end.

Exit status: 0 when everything passed, 1 when a verification failed, 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import planar
from .chromatic import chromatic_polynomial
from .errors import GraphPolyError
from .flows import flow_polynomial
from .graphfile import GraphFile, read_graph_file, render_graph
from .identity import Verdict, verify_eq10, verify_theorem, w_function
from .multigraph import Multigraph, check_edge_cap
from .polyring import IntPoly, to_coeffs, to_pretty

PLANAR_IDENTITIES = ("eq4", "eq5", "eq6", "cor2", "cor3", "duality")
GENERAL_IDENTITIES = ("eq1", "eq10")
IDENTITIES = ("eq1", "eq4", "eq5", "eq6", "eq10", "cor2", "cor3", "duality")


@dataclass
class VerificationReport:
    identity: str
    graph: str
    passed: bool
    lhs: Any = None
    rhs: Any = None
    detail: dict = field(default_factory=dict)
    duration: float = 0.0


def _fmt(value, fmt):
    if isinstance(value, IntPoly):
        return to_pretty(value) if fmt == "pretty" else to_coeffs(value)
    return str(value)


def _jsonable(value):
    if isinstance(value, IntPoly):
        return list(value.coeffs)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def render_report(r: VerificationReport, fmt: str, as_json: bool, timings: bool) -> str:
    if as_json:
        rec = {"identity": r.identity, "graph": r.graph, "verdict": "pass" if r.passed else "fail"}
        if r.detail:
            rec["detail"] = _jsonable(r.detail)
        if not r.passed:
            rec["counterexample"] = {"lhs": _jsonable(r.lhs), "rhs": _jsonable(r.rhs)}
        if timings:
            rec["duration_s"] = round(r.duration, 6)
        return json.dumps(rec, sort_keys=True)
    head = f"{'PASS' if r.passed else 'FAIL'} {r.identity} {r.graph}"
    if "k" in r.detail:
        head += f" k={r.detail['k']}"
    if r.identity == "cor3":
        head += " (hypothesis holds)" if r.detail.get("hypothesis") else " (hypothesis false, vacuous)"
    if timings:
        head += f" [{r.duration:.3f}s]"
    if r.passed:
        return head
    return f"{head}\n  lhs: {_fmt(r.lhs, fmt)}\n  rhs: {_fmt(r.rhs, fmt)}"


def _timed(name: str, label: str, fn: Callable[[], Verdict]) -> VerificationReport:
    start = time.perf_counter()
    v = fn()
    return VerificationReport(name, label, v.passed, v.lhs, v.rhs, v.detail, time.perf_counter() - start)


def run_identity(name: str, gf: GraphFile, label: str, k: int) -> VerificationReport:
    G, PG = gf.graph, gf.plane
    if name in PLANAR_IDENTITIES and PG is None:
        raise GraphPolyError(f"{name} needs a graph file with an embedding section")
    table = {
        "eq1": lambda: verify_theorem(G),
        "eq10": lambda: verify_eq10(G, k),
        "eq4": lambda: planar.verify_eq4(PG),
        "eq5": lambda: planar.verify_eq5(PG),
        "eq6": lambda: planar.verify_eq6(PG),
        "cor2": lambda: planar.verify_cor2(PG),
        "cor3": lambda: planar.check_cor3(PG),
        "duality": lambda: planar.verify_duality_correspondence(PG, k),
    }
    return _timed(name, label, table[name])


def identities_for(selected: list[str], gf: GraphFile) -> list[str]:
    """Expand 'all' into the identities that apply to this graph."""
    out = []
    for name in selected:
        if name != "all":
            out.append(name)
            continue
        out.extend(GENERAL_IDENTITIES)
        if gf.plane is not None:
            out.extend(n for n in PLANAR_IDENTITIES if n != "cor2" or gf.graph.m() > 1)
    return list(dict.fromkeys(out))


# -- fuzzing ----------------------------------------------------------------------


def random_multigraph(rng: random.Random, max_edges: int) -> Multigraph:
    m = rng.randint(0, max_edges)
    n = rng.randint(1, max_edges + 1)
    return Multigraph(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])


def describe(G: Multigraph) -> str:
    return f"n={G.n()} edges=" + (",".join(f"{t}-{h}" for t, h in G.edges) or "none")


def fuzz(max_edges: int, trials: int, seed: int, identities: list[str], k: int = 2) -> list[VerificationReport]:
    """Seeded random verification.

    Random numbers come from ``random.Random(seed)`` (MT19937), so a seed
    reproduces the same graphs on every run.  General identities run on
    unconstrained multigraphs with loops and parallel edges; planar ones on
    randomly grown plane multigraphs.
    """
    check_edge_cap(max_edges)
    names = []
    for name in identities:
        names.extend(IDENTITIES if name == "all" else [name])
    names = list(dict.fromkeys(names))
    rng = random.Random(seed)
    reports = []
    for trial in range(trials):
        gf_general = gf_plane = None
        if any(n in GENERAL_IDENTITIES for n in names):
            G = random_multigraph(rng, max_edges)
            gf_general = GraphFile(G)
        if any(n in PLANAR_IDENTITIES for n in names):
            PG = planar.random_plane_graph(rng, rng.randint(0, max_edges))
            gf_plane = GraphFile(PG.graph, PG)
        for name in names:
            gf = gf_plane if name in PLANAR_IDENTITIES else gf_general
            if name == "cor2" and gf.graph.m() <= 1:
                continue
            label = f"trial={trial} {describe(gf.graph)}"
            if gf.plane is not None:
                label += " rot=" + "|".join(" ".join(map(str, r)) for r in gf.plane.rotation)
            reports.append(run_identity(name, gf, label, k))
    return reports


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphpoly", description="Chromatic and flow polynomials of multigraphs.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def poly_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.add_argument("--format", choices=("pretty", "coeffs"), default="pretty")
        return sp

    poly_cmd("chromatic", "print the chromatic polynomial")
    poly_cmd("flow", "print the flow polynomial")
    poly_cmd("w", "print w as f and k_shift (w = k^k_shift * f)")
    sp = sub.add_parser("dual", help="print the geometric dual of an embedded graph")
    sp.add_argument("file")

    def report_flags(sp):
        sp.add_argument("--format", choices=("pretty", "coeffs"), default="pretty")
        sp.add_argument("--json", action="store_true", help="one JSON record per verification")
        sp.add_argument("--timings", action="store_true", help="include wall-clock durations")
        sp.add_argument("--k", type=int, default=2, help="modulus for eq10 and duality (default 2)")

    sp = sub.add_parser("verify", help="check identities on graph files")
    sp.add_argument("--identity", action="append", choices=IDENTITIES + ("all",), required=True)
    sp.add_argument("files", nargs="+", metavar="FILE")
    report_flags(sp)

    sp = sub.add_parser("fuzz", help="check identities on seeded random graphs")
    sp.add_argument("--max-edges", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--identity", action="append", choices=IDENTITIES + ("all",), required=True)
    report_flags(sp)
    return p


def _run(args, out) -> int:
    if args.command in ("chromatic", "flow", "w", "dual"):
        gf = read_graph_file(args.file)
        if args.command == "chromatic":
            out.write(_fmt(chromatic_polynomial(gf.graph), args.format) + "\n")
        elif args.command == "flow":
            out.write(_fmt(flow_polynomial(gf.graph), args.format) + "\n")
        elif args.command == "w":
            w = w_function(gf.graph)
            out.write(f"f: {_fmt(w.f, args.format)}\nk_shift: {w.k_shift}\n")
        else:
            if gf.plane is None:
                raise GraphPolyError("dual needs a graph file with an embedding section")
            d = planar.geometric_dual(gf.plane)
            out.write(render_graph(d.graph, d))
        return 0

    if args.k < 1:
        raise GraphPolyError("--k must be at least 1")
    if args.command == "verify":
        reports = []
        for path in args.files:
            gf = read_graph_file(path)
            for name in identities_for(args.identity, gf):
                reports.append(run_identity(name, gf, path, args.k))
    else:
        if args.trials < 0 or args.max_edges < 0:
            raise GraphPolyError("--trials and --max-edges must be non-negative")
        reports = fuzz(args.max_edges, args.trials, args.seed, args.identity, args.k)
    for r in reports:
        out.write(render_report(r, args.format, args.json, args.timings) + "\n")
    failed = sum(not r.passed for r in reports)
    if not args.json:
        out.write(f"{len(reports)} checks, {len(reports) - failed} passed, {failed} failed\n")
    return 1 if failed else 0


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out)
    except (GraphPolyError, OSError) as exc:
        err.write(f"graphpoly: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

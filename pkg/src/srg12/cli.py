"""Command-line interface.

Commands: construct, verify, census, spectral, check, params.
Exit codes: 0 success / all checks pass, 1 identity or verification failure,
2 usage or input errors.  Machine-readable JSON goes to --json / --out paths
or stdout; progress for long censuses goes to stderr, at most once a second.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import census as cn
from . import graph6
from .constructions import BUILTIN_GRAPHS, feasible_parameters
from .errors import (
    CountingInconsistencyError,
    FamilyViolationError,
    Graph6Error,
    InfeasibleParametersError,
    SizeLimitError,
)
from .graph import Graph, SrgParams, check_condition_one, check_condition_two, verify_srg
from .identities import IdentityReport, jsonable, run_all_checks
from .spectral import (
    adjacency_traces,
    c6_binomial_sum,
    c6_closed_form,
    charpoly_prefix,
    srg_spectrum,
)

USAGE_ERROR = 2
CHECK_FAILURE = 1


class UsageError(Exception):
    pass


class _Progress:
    """Time-gated progress writer; stderr only, >= 1s between lines."""

    def __init__(self, label: str, enabled: bool = True):
        self.label = label
        self.enabled = enabled and (
            sys.stderr.isatty() or os.environ.get("SRG12_PROGRESS") == "1"
        )
        self.last = time.monotonic()

    def stage(self, name: str) -> None:
        if not self.enabled:
            return
        now = time.monotonic()
        if now - self.last >= 1.0:
            print(f"{self.label}: finished {name}", file=sys.stderr)
            self.last = now

    def tick(self, done: int, total: int) -> None:
        if not self.enabled:
            return
        now = time.monotonic()
        if now - self.last >= 1.0:
            print(f"{self.label}: {done}/{total}", file=sys.stderr)
            self.last = now


def _resolve_workers(args) -> int:
    if getattr(args, "workers", None):
        return max(1, args.workers)
    env = os.environ.get("SRG12_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"invalid SRG12_WORKERS value: {env!r}")
    return max(1, os.cpu_count() or 1)


def _load_graph(source: str) -> Graph:
    builder = BUILTIN_GRAPHS.get(source.lower())
    if builder is not None:
        return builder()
    return graph6.load_file(source)


def _fingerprint(g: Graph) -> str:
    """Content-derived identity for reports, stable across graph sources."""
    encoded = graph6.encode(g)
    if len(encoded) <= 48:
        return encoded.decode("ascii")
    return "sha256:" + hashlib.sha256(encoded).hexdigest()[:16]


def _normalize(obj):
    if isinstance(obj, dict):
        return {k: _normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_normalize(v) for v in obj]
    return jsonable(obj)


def _emit_json(payload, path) -> None:
    text = json.dumps(_normalize(payload), indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------


def _cmd_construct(args) -> int:
    g = BUILTIN_GRAPHS[args.graph]()
    if args.out:
        graph6.save_file(args.out, g)
        print(f"wrote {args.graph}: n={g.order}, |E|={g.num_edges} -> {args.out}")
    else:
        sys.stdout.write(graph6.encode(g).decode("ascii") + "\n")
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    if args.params:
        n, k, lam, mu = args.params
        expected = SrgParams(n, k, lam, mu)
    else:
        k = g.degree(0) if g.order else 0
        expected = SrgParams(max(g.order, 1), k, 1, 2)
    report = verify_srg(g, expected)
    cond1 = check_condition_one(g)
    cond2 = check_condition_two(g)
    rows = [
        ("regular", report.regular,
         f"degree {report.degree}" if report.regular else str(report.degree_witness)),
        ("lambda uniform", report.lambda_ok,
         "" if report.lambda_ok else str(report.lambda_witness)),
        ("mu uniform", report.mu_ok,
         "vacuous (no non-edges)" if report.mu_vacuous else
         ("" if report.mu_ok else str(report.mu_witness))),
        ("params match", report.params_match,
         f"expected ({expected.n},{expected.k},{expected.lam},{expected.mu})"),
        ("order relation k(k-2)=2(n-k-1)", report.order_relation_ok, ""),
        ("condition I (edge triangles)", cond1.ok,
         "" if cond1.ok else str(cond1.violation)),
        ("condition II (non-edge quadrilaterals)", cond2.ok,
         "" if cond2.ok else str(cond2.violation)),
    ]
    width = max(len(r[0]) for r in rows)
    for name, ok, detail in rows:
        mark = "pass" if ok else "FAIL"
        line = f"  {name:<{width}}  {mark}"
        if detail:
            line += f"  {detail}"
        print(line)
    ok = report.passed and cond1.ok and cond2.ok
    print("verified" if ok else "verification failed")
    return 0 if ok else CHECK_FAILURE


def _cmd_census(args) -> int:
    g = _load_graph(args.graph)
    workers = _resolve_workers(args)
    progress = _Progress("census")
    payload = {"graph_meta": {"n": g.order, "edges": g.num_edges,
                              "source": _fingerprint(g)}}
    what = args.what
    if what in ("cycles", "all"):
        cc = cn.cycle_census(g, workers=workers, progress=progress.tick)
        payload["cycles"] = {"p3": cc.p3, "p4": cc.p4, "p5": cc.p5, "p6": cc.p6}
    if what in ("triples", "all"):
        et = cn.edge_triple_census(g)
        payload["edge_triples"] = {"e4": et.e4, "e5": et.e5, "e6": et.e6}
    if what in ("types", "all"):
        try:
            tc = cn.type_census(g, workers=workers)
        except FamilyViolationError as exc:
            if what == "types":
                raise
            payload["types"] = None
            payload["types_error"] = str(exc)
        else:
            payload["types"] = {
                name: getattr(tc, name)
                for name in (
                    "n1", "n2", "n3", "n4", "n5", "n8", "n9", "n12", "n13",
                    "n14", "n6_7_10_11", "e4", "e5", "e6",
                )
            }
    if args.exhaustive:
        classes = cn.exhaustive_six_census(g, limit=args.exhaustive_limit)
        payload["exhaustive_six_census"] = [
            {
                "certificate": cls.certificate,
                "edges": cls.edge_count,
                "count": stats.count,
                "det": stats.det,
                "cover_count": stats.cover_count,
            }
            for cls, stats in sorted(
                classes.items(), key=lambda kv: (-kv[1].count, kv[0].certificate)
            )
        ]
    payload["residuals"] = _census_residuals(g, payload)
    _emit_json(payload, args.json)
    bad = [k for k, v in payload["residuals"].items() if v != 0]
    if bad:
        print(f"nonzero residuals: {', '.join(sorted(bad))}", file=sys.stderr)
        return CHECK_FAILURE
    return 0


def _census_residuals(g: Graph, payload) -> dict:
    """Census counts minus their family closed forms (family graphs only)."""
    from . import identities as idn

    residuals = {}
    try:
        n, k = cn.require_family(g)
    except FamilyViolationError:
        return residuals
    cycles = payload.get("cycles")
    if cycles:
        residuals["p3"] = cycles["p3"] - idn.expected_p3(n, k)
        residuals["p4"] = cycles["p4"] - idn.expected_p4(n, k)
        residuals["p5"] = cycles["p5"] - idn.expected_p5(n, k)
        residuals["p6_minus_bound"] = cycles["p6"] - idn.hexagon_bound(n, k)
    triples = payload.get("edge_triples")
    if triples:
        residuals["e4"] = triples["e4"] - idn.expected_e4(n, k)
        residuals["e5"] = triples["e5"] - idn.expected_e5(n, k)
    types = payload.get("types")
    if types:
        residuals["n2"] = types["n2"] - idn.expected_n2(n, k)
        residuals["n4_minus_2n3"] = types["n4"] - 2 * types["n3"]
        residuals["eq8"] = (
            types["n1"] + types["n3"] + types["n5"] + types["n14"]
            - idn.expected_triangle_pairs(n, k)
        )
    if types and cycles:
        residuals["hexagon_identity"] = (
            types["n12"] - types["n3"] - idn.hexagon_bound(n, k)
        )
    return residuals


def _cmd_spectral(args) -> int:
    method = args.method
    payload = {"method": method, "intermediate": {}}
    params = None
    if args.params:
        n, k = args.params
        params = SrgParams(n, k, 1, 2)
    elif method in ("closed", "sum"):
        raise UsageError("spectral --method closed|sum needs --params n,k")

    spec = None
    if method == "closed":
        payload["c6"] = c6_closed_form(params.n, params.k)
        try:
            spec = srg_spectrum(params)
        except InfeasibleParametersError:
            spec = None
    elif method == "sum":
        spec = srg_spectrum(params)
        payload["c6"] = c6_binomial_sum(spec)
    else:  # trace
        if not args.graph:
            raise UsageError("spectral --method trace needs --graph FILE.g6")
        g = _load_graph(args.graph)
        if g.order < 6:
            raise UsageError(
                f"c6 needs at least 6 vertices, graph has {g.order}"
            )
        payload["c6"] = charpoly_prefix(g, 6).c6
        payload["intermediate"]["traces"] = list(adjacency_traces(g, 6))
        if params is not None:
            try:
                spec = srg_spectrum(params)
            except InfeasibleParametersError:
                spec = None
    if spec is not None:
        payload["intermediate"].update(
            lambda1=spec.lambda1, lambda2=spec.lambda2, r1=spec.r1, r2=spec.r2
        )
    print(f"c6 = {payload['c6']}")
    if args.json:
        _emit_json(payload, args.json)
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args.graph)
    workers = _resolve_workers(args)
    progress = _Progress("check")
    report: IdentityReport = run_all_checks(
        g, workers=workers, source=_fingerprint(g), progress=progress.stage
    )
    width = max(len(e.name) for e in report.entries)
    marks = {"pass": "pass", "fail": "FAIL", "skip": "skip", "info": "info"}
    for e in report.entries:
        line = f"  {e.name:<{width}}  {marks[e.status]:<4}"
        if e.status in ("pass", "fail", "info"):
            line += f"  expected={e.expected} actual={e.actual}"
        if e.detail:
            line += f"  ({e.detail})"
        print(line)
    failed = [e for e in report.entries if e.status == "fail"]
    print(
        f"{len(report.entries)} checks: "
        f"{sum(e.status == 'pass' for e in report.entries)} pass, "
        f"{len(failed)} fail, "
        f"{sum(e.status == 'skip' for e in report.entries)} skipped, "
        f"{sum(e.status == 'info' for e in report.entries)} informational"
    )
    if args.json:
        _emit_json(report.to_json_dict(), args.json)
    return CHECK_FAILURE if failed else 0


def _cmd_params(args) -> int:
    rows = feasible_parameters(args.max_k, include_degenerate=args.include_degenerate)
    print(f"{'k':>5} {'n':>8} {'lambda1':>8} {'lambda2':>8} {'r1':>8} {'r2':>8}  known graph")
    for fp in rows:
        print(
            f"{fp.k:>5} {fp.n:>8} {fp.lambda1:>8} {fp.lambda2:>8} "
            f"{fp.r1:>8} {fp.r2:>8}  {fp.known_graph or '-'}"
        )
    if args.json:
        _emit_json(
            [
                {
                    "k": fp.k, "n": fp.n,
                    "lambda1": fp.lambda1, "lambda2": fp.lambda2,
                    "r1": fp.r1, "r2": fp.r2,
                    "known_graph": fp.known_graph,
                }
                for fp in rows
            ],
            args.json,
        )
    return 0


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srg12",
        description=(
            "Constructions, censuses and identity checks for strongly "
            "regular graphs with lambda=1, mu=2"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a known family member")
    p.add_argument("--graph", required=True, choices=sorted(BUILTIN_GRAPHS))
    p.add_argument("--out", help="write graph6 to this path (default stdout)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="srg and condition checks")
    p.add_argument("--graph", required=True,
                   help="builtin name (k3|paley9|bvls243) or graph6 file")
    p.add_argument("--params", type=_params_type,
                   help="expected n,k,lambda,mu (default: n,deg,1,2)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("census", help="cycle/edge-triple/type censuses")
    p.add_argument("--graph", required=True)
    p.add_argument("--what", choices=("cycles", "triples", "types", "all"),
                   default="all")
    p.add_argument("--exhaustive", action="store_true",
                   help="include the 6-subset census (guarded by --exhaustive-limit)")
    p.add_argument("--exhaustive-limit", type=int, default=cn.EXHAUSTIVE_MAX_VERTICES,
                   help="largest order the exhaustive census accepts")
    p.add_argument("--json", help="write JSON here instead of stdout")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("spectral", help="exact c6 by closed form, sum or traces")
    p.add_argument("--params", type=_pair_type, help="n,k")
    p.add_argument("--method", choices=("closed", "sum", "trace"),
                   default="closed")
    p.add_argument("--graph", help="graph6 file or builtin (trace method)")
    p.add_argument("--json")
    p.set_defaults(func=_cmd_spectral)

    p = sub.add_parser("check", help="run the full identity ledger")
    p.add_argument("--graph", required=True)
    p.add_argument("--json", help="write the report as JSON")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("params", help="feasible family parameter sets")
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--include-degenerate", action="store_true")
    p.add_argument("--json")
    p.set_defaults(func=_cmd_params)
    return parser


def _pair_type(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected n,k")
    return int(parts[0]), int(parts[1])


def _params_type(text: str):
    parts = [int(p) for p in text.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected n,k,lambda,mu")
    return tuple(parts)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FamilyViolationError, CountingInconsistencyError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return CHECK_FAILURE
    except (Graph6Error, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (UsageError, InfeasibleParametersError, SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front-end: analyze | generate | verify.

Exit codes: 0 success, 1 at least one claim failed, 2 usage or parse error,
3 the floating and exact main-eigenvalue counts disagreed confidently.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from typing import Any, Iterable, Sequence

from . import sweeps, theorems
from .analysis import GraphAnalysis, RouteDisagreementError, analyze_graph
from .graph6 import EdgeListError, Graph6Error, parse_edgelist, parse_graph6, serialize_graph6
from .graphs import (
    MAX_ENUM_ORDER,
    FamilySpec,
    Graph,
    ParameterError,
    build_family,
    is_bipartite,
)
from .spectra import ConvergenceError, SpectralInvariantError
from .theorems import (
    ALL_IDS,
    CLAIMS,
    FAILS,
    GRAPH_CHECKERS,
    PATH_CHECKERS,
    TheoremReport,
    check_complement_second_eigenvalue,
    check_double_star_profile,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DISAGREE = 3

_MAX_FAIL_DETAIL = 20  # failing witnesses printed per claim in table mode


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat()


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def _read_input(raw: str) -> tuple[str, str]:
    """Resolve the INPUT argument: '-' reads stdin, an existing path reads the
    file, anything else is taken literally.  Returns (text, source)."""
    if raw == "-":
        return sys.stdin.read(), "stdin"
    if os.path.isfile(raw):
        with open(raw, "r", encoding="ascii") as fh:
            return fh.read(), raw
    return raw, "literal"


def _parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    return parse_graph6(text.strip())


def _window_verdict(shift: float, co: GraphAnalysis) -> str:
    tol = theorems.TOL_EQ
    lam1 = co.lambda_max
    lam2 = co.eigenvalue(1) if co.graph.n >= 2 else None
    if shift > lam1 + tol or (lam2 is not None and lam2 > shift + tol):
        return "violated"
    if abs(shift - lam1) <= tol:
        return "equals-lambda1"
    if lam2 is not None and abs(shift - lam2) <= tol:
        return "equals-lambda2"
    return "interior"


def _analysis_record(g: Graph, a: GraphAnalysis, co: GraphAnalysis,
                     source: str, fmt: str) -> dict[str, Any]:
    shift = -1.0 - a.lambda_min
    record: dict[str, Any] = {
        "input": {"source": source, "format": fmt},
        "graph": {
            "n": g.n,
            "m": g.m,
            "graph6": serialize_graph6(g).decode("ascii"),
            "degrees": list(g.degrees()),
        },
        "groups": [
            {
                "value": grp.value,
                "multiplicity": grp.multiplicity,
                "projection": grp.projection_norm_sq,
                "main": bool(grp.is_main),
            }
            for grp in a.spectrum.groups
        ],
        "main_count": {
            "float_route": a.s_float if a.s_float is not None else a.rank,
            "walk_rank": a.rank,
            "used_fallback": a.used_fallback,
        },
        "harmonic": {"is_harmonic": a.is_harmonic, "level": a.harmonic_level},
        "complement": {
            "lambda1": co.lambda_max,
            "lambda2": co.eigenvalue(1) if g.n >= 2 else None,
            "shift": shift,
            "main_count": co.main_count,
            "window": _window_verdict(shift, co),
        },
    }
    return record


def _print_analysis_table(record: dict[str, Any]) -> None:
    g = record["graph"]
    print(f"graph: n={g['n']} m={g['m']} graph6={g['graph6']}")
    print(f"degrees: {' '.join(str(d) for d in g['degrees'])}")
    print(f"{'eigenvalue':>18}  {'mult':>4}  {'projection':>14}  main")
    for grp in record["groups"]:
        flag = "yes" if grp["main"] else "no"
        print(f"{_fmt(grp['value']):>18}  {grp['multiplicity']:>4}  "
              f"{_fmt(grp['projection']):>14}  {flag}")
    mc = record["main_count"]
    fallback = " (gray zone, exact rank decided)" if mc["used_fallback"] else ""
    print(f"main count: {mc['float_route']} (float route) / "
          f"{mc['walk_rank']} (walk-matrix rank){fallback}")
    h = record["harmonic"]
    if h["is_harmonic"]:
        print(f"harmonic: yes (level {h['level']})")
    else:
        print("harmonic: no")
    c = record["complement"]
    lam2 = "n/a" if c["lambda2"] is None else _fmt(c["lambda2"])
    print(f"complement: lambda1={_fmt(c['lambda1'])} lambda2={lam2} "
          f"-1-lambda_min={_fmt(c['shift'])} mains={c['main_count']} "
          f"[{c['window']}]")


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        text, source = _read_input(args.input)
        g = _parse_graph(text, args.format)
    except (Graph6Error, EdgeListError, ParameterError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    try:
        a = analyze_graph(g, strict=True)
        co = analyze_graph(g.complement(), strict=True)
    except RouteDisagreementError as err:
        print(f"error: cross-check disagreement: float route found {err.s_float} "
              f"main eigenvalues, walk-matrix rank is {err.rank}", file=sys.stderr)
        return EXIT_DISAGREE
    except (ConvergenceError, SpectralInvariantError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DISAGREE
    record = _analysis_record(g, a, co, source, args.format)
    if args.json:
        record["generated_at"] = _timestamp()
        print(json.dumps(theorems.json_clean(record)))
    else:
        _print_analysis_table(record)
    return EXIT_OK


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------


def _parse_family_tokens(tokens: Sequence[str]) -> FamilySpec:
    if not tokens:
        raise ParameterError("missing family name")
    kind = tokens[0].lower()
    rest = list(tokens[1:])
    if kind == "pendant":
        # pendant BASE P... [q] Q — the literal 'q' separator is optional.
        if rest and rest[-2:-1] == ["q"]:
            q_tokens = rest[-1:]
            rest = rest[:-2]
        elif rest:
            q_tokens = rest[-1:]
            rest = rest[:-1]
        else:
            raise ParameterError("pendant needs a base family and a pendant count")
        base = _parse_family_tokens(rest)
        if base.kind == "pendant":
            raise ParameterError("pendant decorations do not nest")
        return FamilySpec("pendant", (_as_int(q_tokens[0]),), base=base)
    return FamilySpec(kind, tuple(_as_int(t) for t in rest))


def _as_int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParameterError(f"expected an integer parameter, got {token!r}") from None


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        spec = _parse_family_tokens([args.family, *args.params])
        g = build_family(spec)
    except ParameterError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.buffer.write(serialize_graph6(g) + b"\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _parse_path_range(raw: str) -> tuple[int, int]:
    if ".." in raw:
        lo_s, hi_s = raw.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo, hi = 2, int(raw)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad path range {raw!r}")
    return lo, hi


def _family_extra_graphs(tid: str, args: argparse.Namespace) -> list[Graph]:
    """Named-family instances fed to the per-graph checkers on top of the
    exhaustive sweep (pendant-decorated cycles, harmonic trees, K_{r,r})."""
    lo, hi = args.path_range
    pend_p, pend_q = args.pendants
    extras: list[FamilySpec] = []
    if tid in ("P21", "C22", "T45"):
        extras += [
            FamilySpec("pendant", (q,), base=FamilySpec("cycle", (p,)))
            for p in range(3, pend_p + 1)
            for q in range(1, pend_q + 1)
        ]
    if tid in ("P21", "C22", "L23", "P24", "P25", "P26", "T45"):
        extras += [FamilySpec("harmonictree", (ell,))
                   for ell in range(2, args.harmonictrees + 1)]
    if tid in ("T37", "T44", "INEQ2", "P34", "P35"):
        extras += [FamilySpec("completebipartite", (r, r))
                   for r in range(1, args.krr + 1)]
    if tid == "T45":
        extras += [FamilySpec("path", (n,)) for n in range(lo, hi + 1)]
        extras += [FamilySpec("doublestar", (k, s))
                   for k in range(1, args.doublestars + 1)
                   for s in range(k, args.doublestars + 1)]
    return [build_family(spec) for spec in extras]


class _Tally:
    def __init__(self, tid: str) -> None:
        self.tid = tid
        self.holds = 0
        self.fails = 0
        self.skipped = 0
        self.failing: list[TheoremReport] = []

    def add(self, report: TheoremReport) -> None:
        if report.verdict == theorems.HOLDS:
            self.holds += 1
        elif report.verdict == FAILS:
            self.fails += 1
            if len(self.failing) < _MAX_FAIL_DETAIL:
                self.failing.append(report)
        else:
            self.skipped += 1

    @property
    def total(self) -> int:
        return self.holds + self.fails + self.skipped


def _emit_report(report: TheoremReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_json()))


def _run_graph_checkers(
    ids: list[str], args: argparse.Namespace, tallies: dict[str, _Tally],
    as_json: bool,
) -> bool:
    """Sweep order-N labeled graphs (plus per-claim named families) through the
    per-graph checkers.  Returns True if a confident route disagreement shows up."""
    disagreement = False
    wanted = [tid for tid in ids if tid in GRAPH_CHECKERS]
    if not wanted:
        return False
    n = args.exhaustive
    masks = None
    if args.sample and sweeps.mask_population(n) > args.sample:
        masks = sweeps.sample_masks(n, args.sample)
    pair_iter: Iterable[tuple[GraphAnalysis, GraphAnalysis | None]] = sweeps.sweep(
        n, masks=masks, connected_only=args.connected, with_complement=True
    )
    for a, co in pair_iter:
        if args.bipartite and not is_bipartite(a.graph):
            continue
        if a.s_float is not None and a.s_float != a.rank:
            disagreement = True
        for tid in wanted:
            report = GRAPH_CHECKERS[tid](a.graph, analysis=a, co=co)
            tallies[tid].add(report)
            _emit_report(report, as_json)
    for tid in wanted:
        for g in _family_extra_graphs(tid, args):
            a = analyze_graph(g, strict=False)
            if a.s_float is not None and a.s_float != a.rank:
                disagreement = True
            report = GRAPH_CHECKERS[tid](g, analysis=a)
            tallies[tid].add(report)
            _emit_report(report, as_json)
    return disagreement


def _run_family_checkers(
    ids: list[str], args: argparse.Namespace, tallies: dict[str, _Tally],
    as_json: bool,
) -> None:
    lo, hi = args.path_range
    for tid in ids:
        if tid in PATH_CHECKERS:
            for n in range(lo, hi + 1):
                report = PATH_CHECKERS[tid](n)
                tallies[tid].add(report)
                _emit_report(report, as_json)
        elif tid == "T46":
            for k in range(1, args.doublestars + 1):
                for s in range(k, args.doublestars + 1):
                    report = check_double_star_profile(k, s)
                    tallies[tid].add(report)
                    _emit_report(report, as_json)
        elif tid == "COR47":
            for n in range(max(lo, 2), hi + 1):
                report = check_complement_second_eigenvalue(FamilySpec("path", (n,)))
                tallies[tid].add(report)
                _emit_report(report, as_json)
            for k in range(1, args.doublestars + 1):
                report = check_complement_second_eigenvalue(
                    FamilySpec("doublestar", (k, k)))
                tallies[tid].add(report)
                _emit_report(report, as_json)


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        args.path_range = _parse_path_range(args.paths)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    if args.exhaustive < 1 or args.exhaustive > MAX_ENUM_ORDER:
        print(f"error: --exhaustive must be between 1 and {MAX_ENUM_ORDER}",
              file=sys.stderr)
        return EXIT_USAGE
    ids = list(ALL_IDS) if args.theorem == "all" else [args.theorem]
    tallies = {tid: _Tally(tid) for tid in ids}

    try:
        disagreement = _run_graph_checkers(ids, args, tallies, args.json)
        _run_family_checkers(ids, args, tallies, args.json)
    except (ConvergenceError, SpectralInvariantError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DISAGREE

    failures = sum(t.fails for t in tallies.values())
    instances = sum(t.total for t in tallies.values())
    if args.json:
        print(json.dumps({
            "record": "summary",
            "generated_at": _timestamp(),
            "claims": len(ids),
            "instances": instances,
            "failures": failures,
        }))
    else:
        for tid in ids:
            t = tallies[tid]
            print(f"{tid}: {t.total} instances — {t.holds} holds, {t.fails} fails, "
                  f"{t.skipped} not-applicable")
            for report in t.failing:
                wit = json.dumps(theorems.json_clean(report.witnesses))
                print(f"  FAIL {report.instance}: {wit}")
            if t.fails > len(t.failing):
                print(f"  ... and {t.fails - len(t.failing)} more failures")
        print(f"verified {len(ids)} claim(s) over {instances} instance(s): "
              f"{failures} failure(s)")
    if disagreement:
        print("error: cross-check disagreement between float route and "
              "walk-matrix rank", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_FAIL if failures else EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mainspec",
        description="Main-eigenvalue toolkit: analyze graphs, generate "
                    "families, verify spectral claims.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze one graph")
    p_an.add_argument("input",
                      help="graph input: '-' for stdin, a file path, or the "
                           "literal text itself")
    p_an.add_argument("--format", choices=("graph6", "edgelist"),
                      default="graph6")
    p_an.add_argument("--json", action="store_true",
                      help="emit a JSON record instead of a table")
    p_an.set_defaults(func=cmd_analyze)

    p_gen = sub.add_parser("generate", help="emit a named family as graph6")
    p_gen.add_argument("family",
                       help="path|cycle|complete|empty|star|completebipartite|"
                            "doublestar|harmonictree|pendant")
    p_gen.add_argument("params", nargs="*",
                       help="integer parameters; pendant takes a base family "
                            "first, e.g. 'pendant cycle 5 q 2'")
    p_gen.set_defaults(func=cmd_generate)

    p_ver = sub.add_parser("verify", help="check claims over instance sweeps")
    p_ver.add_argument("theorem", choices=ALL_IDS + ("all",),
                       metavar="THEOREM",
                       help=f"claim id or 'all'; ids: {', '.join(ALL_IDS)}")
    p_ver.add_argument("--exhaustive", type=int, default=4, metavar="N",
                       help="sweep all labeled graphs of this order (default 4)")
    p_ver.add_argument("--connected", action="store_true",
                       help="restrict the sweep to connected graphs")
    p_ver.add_argument("--bipartite", action="store_true",
                       help="restrict the sweep to bipartite graphs")
    p_ver.add_argument("--paths", default="2..12", metavar="A..B",
                       help="path order range (default 2..12)")
    p_ver.add_argument("--doublestars", type=int, default=6, metavar="K",
                       help="double stars with 1 <= k,s <= K (default 6)")
    p_ver.add_argument("--krr", type=int, default=5, metavar="R",
                       help="balanced complete bipartite sizes up to R (default 5)")
    p_ver.add_argument("--harmonictrees", type=int, default=3, metavar="L",
                       help="harmonic tree levels up to L (default 3)")
    p_ver.add_argument("--pendants", type=int, nargs=2, default=(8, 3),
                       metavar=("P", "Q"),
                       help="pendant-decorated cycles C_p, p <= P, q <= Q "
                            "(default 8 3)")
    p_ver.add_argument("--sample", type=int, default=0, metavar="K",
                       help="sample K graphs from the sweep instead of all "
                            "(0 = exhaustive)")
    p_ver.add_argument("--json", action="store_true",
                       help="emit one JSON line per instance plus a summary")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``linkrank rank`` and ``linkrank compare``.

Exit status is 0 on success (whether or not the solver converged), 1 on data
errors such as an unparsable edge list or an unknown label, and 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Optional, Sequence

from linkrank.compare import kendall_tau, ranking_from_scores
from linkrank.distance import distance_rank
from linkrank.eigenrumor import eigenrumor, read_agent_object_list
from linkrank.errors import LinkRankError
from linkrank.graph import read_edge_list
from linkrank.hits import expand_root_set, hits
from linkrank.pagerank import normalized_pagerank, pagerank
from linkrank.solver import IterationTrace, SolverConfig
from linkrank.weighted import weighted_pagerank

ALGORITHMS = ("pagerank", "normalized-pagerank", "wpr", "hits", "distance", "eigenrumor")
REPORT_KEYS = ("algorithm", "config", "converged", "iterations", "scores")


class UsageError(Exception):
    pass


def _sig10(x: float):
    if math.isinf(x) or math.isnan(x):
        return None
    return float(f"{x:.10g}")


def _labels(text: Optional[str]):
    if text is None:
        return None
    labels = [s.strip() for s in text.split(",") if s.strip()]
    return labels


def _add_solver_flags(p: argparse.ArgumentParser):
    p.add_argument("--graph", required=True, help="edge-list file (bipartite format for eigenrumor)")
    p.add_argument("--damping", type=float, default=0.85)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument(
        "--mode",
        choices=("sequential", "synchronous"),
        default=None,
        help="sweep mode (default: sequential; synchronous for normalized-pagerank)",
    )
    p.add_argument("--init", type=float, default=1.0)
    p.add_argument("--dangling", choices=("drop", "redistribute"), default="drop", help="pagerank only")
    p.add_argument("--seeds", default=None, help="comma-separated seed labels (distance only)")
    p.add_argument("--roots", default=None, help="comma-separated root labels (hits only; default all nodes)")
    p.add_argument("--cap", type=int, default=50, help="per-root predecessor cap for hits base set")
    p.add_argument("--mixing", type=float, default=0.5, help="eigenrumor only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linkrank", description="Link-analysis ranking toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    rank = sub.add_parser("rank", help="run one ranking algorithm")
    rank.add_argument("--algo", choices=ALGORITHMS, required=False)
    _add_solver_flags(rank)
    rank.add_argument("--format", choices=("json", "csv"), default="json")
    rank.add_argument("--trace", default=None, help="write per-sweep scores as CSV to this path")

    replay = sub.add_parser("replay", help="re-run the config echoed in a JSON report")
    replay.add_argument("report", help="path to a JSON report produced by 'rank'")
    replay.add_argument("--format", choices=("json", "csv"), default="json")

    cmp_ = sub.add_parser("compare", help="Kendall-tau comparison of several algorithms")
    cmp_.add_argument("--algos", required=True, help="comma-separated algorithm names (>= 2)")
    _add_solver_flags(cmp_)
    return parser


def _resolve_mode(algo, mode):
    if mode is not None:
        return mode
    return "synchronous" if algo == "normalized-pagerank" else "sequential"


def run_config(args, algo: str) -> dict:
    """The config echo: every input needed to replay the run."""
    return {
        "graph": args.graph,
        "algo": algo,
        "damping": args.damping,
        "tol": args.tol,
        "max_iter": args.max_iter,
        "mode": _resolve_mode(algo, args.mode),
        "init": args.init,
        "dangling": args.dangling,
        "seeds": _labels(args.seeds),
        "roots": _labels(args.roots),
        "cap": args.cap,
        "mixing": args.mixing,
    }


def argv_from_config(config: dict) -> list[str]:
    """Rebuild ``rank`` arguments from a report's config echo."""
    argv = ["rank", "--algo", config["algo"], "--graph", config["graph"]]
    argv += ["--damping", repr(config["damping"]), "--tol", repr(config["tol"])]
    argv += ["--max-iter", str(config["max_iter"]), "--mode", config["mode"]]
    argv += ["--init", repr(config["init"]), "--dangling", config["dangling"]]
    argv += ["--cap", str(config["cap"]), "--mixing", repr(config["mixing"])]
    if config.get("seeds"):
        argv += ["--seeds", ",".join(config["seeds"])]
    if config.get("roots"):
        argv += ["--roots", ",".join(config["roots"])]
    return argv


def _solver_config(cfg: dict) -> SolverConfig:
    try:
        return SolverConfig(
            damping=cfg["damping"],
            tolerance=cfg["tol"],
            max_iterations=cfg["max_iter"],
            update_mode=cfg["mode"],
            initial_value=cfg["init"],
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_usage(cfg: dict):
    algo = cfg["algo"]
    _solver_config(cfg)
    if algo == "distance" and not cfg["seeds"]:
        raise UsageError("--algo distance requires --seeds")
    if algo == "normalized-pagerank" and cfg["mode"] != "synchronous":
        raise UsageError("normalized-pagerank requires --mode synchronous")
    if not 0.0 <= cfg["mixing"] <= 1.0:
        raise UsageError("--mixing must lie in [0, 1]")
    if cfg["cap"] < 0:
        raise UsageError("--cap must be >= 0")


def execute(cfg: dict, want_trace: bool = False):
    """Run one algorithm from a config echo.

    Returns ``(report, trace_rows, (labels, raw_scores))``; trace rows are
    None unless ``want_trace`` is set.
    """
    algo = cfg["algo"]
    sc = _solver_config(cfg)
    extra = {}
    rows = None

    if algo == "eigenrumor":
        bg = read_agent_object_list(cfg["graph"])
        res = eigenrumor(bg, mixing=cfg["mixing"], config=sc, record=want_trace)
        labels, values = res.objects, res.object_score
        converged, iters = res.converged, res.iterations_used
        extra["agent_authority"] = {k: _sig10(v) for k, v in zip(res.agents, res.agent_authority)}
        extra["agent_hub"] = {k: _sig10(v) for k, v in zip(res.agents, res.agent_hub)}
        extra["degenerate"] = list(res.degenerate)
        if want_trace:
            rows = IterationTrace(snapshots=[r for r, _, _ in res.history]).rows(labels)
    else:
        g = read_edge_list(cfg["graph"])
        trace = None
        if algo in ("pagerank", "normalized-pagerank", "wpr"):
            if algo == "pagerank":
                rv, trace = pagerank(g, sc, cfg["dangling"])
            elif algo == "normalized-pagerank":
                rv, trace = normalized_pagerank(g, sc)
            else:
                rv, trace = weighted_pagerank(g, sc)
            labels, values = rv.labels, rv.scores
            converged, iters = rv.converged, rv.iterations_used
        elif algo == "hits":
            nodes = None
            if cfg["roots"]:
                nodes = expand_root_set(g, cfg["roots"], cfg["cap"])
            res = hits(g, nodes, sc, record=want_trace)
            labels, values = res.labels, res.authority
            converged, iters = res.converged, res.iterations_used
            extra["hub_scores"] = {k: _sig10(v) for k, v in zip(res.labels, res.hub)}
            if want_trace:
                trace = IterationTrace(snapshots=res.authority_history)
        elif algo == "distance":
            dv, rv = distance_rank(g, cfg["seeds"])
            labels, values = rv.labels, rv.scores
            converged, iters = True, 0
            extra["distances"] = {k: _sig10(v) for k, v in zip(dv.labels, dv.distance)}
            trace = IterationTrace(snapshots=[rv.scores])
        else:
            raise UsageError(f"unknown algorithm {algo!r}")
        if want_trace and trace is not None:
            rows = trace.rows(labels)

    report = {
        "algorithm": algo,
        "config": cfg,
        "converged": bool(converged),
        "iterations": int(iters),
        "scores": {k: _sig10(v) for k, v in zip(labels, values)},
    }
    report.update(extra)
    return report, (list(rows) if rows is not None else None), (labels, values)


def write_trace_csv(path, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["iteration", "node", "value"])
        for k, lab, v in rows:
            w.writerow([k, lab, repr(v)])


def format_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["node", "score"])
    for lab, v in report["scores"].items():
        w.writerow([lab, v])
    return buf.getvalue()


def cmd_rank(args) -> int:
    if args.algo is None:
        raise UsageError("the following arguments are required: --algo")
    cfg = run_config(args, args.algo)
    _check_usage(cfg)
    report, rows, _ = execute(cfg, want_trace=args.trace is not None)
    if args.trace is not None:
        write_trace_csv(args.trace, rows)
    sys.stdout.write(format_report(report, args.format))
    return 0


def cmd_replay(args) -> int:
    with open(args.report, encoding="utf-8") as fh:
        try:
            report = json.load(fh)
        except json.JSONDecodeError as exc:
            raise LinkRankError(f"{args.report}: not a JSON report ({exc})") from None
    parser = build_parser()
    rargs = parser.parse_args(argv_from_config(report["config"]) + ["--format", args.format])
    return cmd_rank(rargs)


def cmd_compare(args) -> int:
    algos = _labels(args.algos) or []
    if len(algos) < 2:
        raise UsageError("--algos needs at least two algorithm names")
    for a in algos:
        if a not in ALGORITHMS:
            raise UsageError(f"unknown algorithm {a!r}")
        if a == "eigenrumor":
            raise UsageError("eigenrumor ranks objects of a bipartite graph and cannot be compared here")
    cfgs = [run_config(args, a) for a in algos]
    for c in cfgs:
        _check_usage(c)

    rankings = []
    for cfg in cfgs:
        report, _, (labels, scores) = execute(cfg)
        rankings.append((cfg, report, ranking_from_scores(scores, labels, cfg["algo"])))

    # hits on a root set may cover fewer nodes than the other algorithms
    node_sets = {frozenset(r.order) for _, _, r in rankings}
    if len(node_sets) != 1:
        raise LinkRankError("algorithms ranked different node sets; drop --roots to compare")

    tau = [[kendall_tau(x, y) for _, _, y in rankings] for _, _, x in rankings]
    out = {
        "algorithms": algos,
        "config": {k: v for k, v in cfgs[0].items() if k not in ("algo", "mode")},
        "kendall_tau": tau,
        "rankings": [
            {
                "algorithm": cfg["algo"],
                "mode": cfg["mode"],
                "converged": rep["converged"],
                "iterations": rep["iterations"],
                "ranking": list(r.order),
                "tie_breaks": r.tie_breaks,
            }
            for cfg, rep, r in rankings
        ],
    }
    sys.stdout.write(json.dumps(out, indent=2, ensure_ascii=False) + "\n")
    return 0


COMMANDS = {"rank": cmd_rank, "replay": cmd_replay, "compare": cmd_compare}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    except (LinkRankError, OSError) as exc:
        print(f"linkrank: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

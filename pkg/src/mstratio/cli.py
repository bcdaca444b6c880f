"""Command line interface: one verb per library operation.

Exit codes: 0 on success, 1 for domain errors (reported as a single
``error: <code>: <message>`` line on stderr), 2 for usage errors.  Payload
goes to stdout (or --output) and is valid JSON, except for the sweep and
scatter verbs whose native format is CSV.  Every float is printed with 12
significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, approx, generators, hardness, ratio
from .core import (Coloring, MstRatioError, PointSet, WeightedCompleteGraph,
                   distance_graph, load_graph, load_point_set, parse_coloring)
from .mst import mst


def _round12(obj):
    if isinstance(obj, float):
        return float(format(obj, ".12g"))
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _dump(obj) -> str:
    return json.dumps(_round12(obj))


def _read_input(args) -> str:
    if args.input is None:
        raise MstRatioError("this verb requires --input (use - for stdin)")
    if args.input == "-":
        return sys.stdin.read()
    return open(args.input).read()


def _as_points(text: str) -> PointSet:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(text)
        if "points" not in obj:
            raise MstRatioError("expected a point-set JSON object with a 'points' field")
        return PointSet.from_json(obj)
    return load_point_set(text, is_text=True)


def _as_graph(text: str) -> WeightedCompleteGraph:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(text)
        if "weights" in obj:
            return WeightedCompleteGraph.from_json(obj)
        if "points" in obj:
            return distance_graph(PointSet.from_json(obj))
        raise MstRatioError("expected 'weights' or 'points' in the input JSON")
    return distance_graph(load_point_set(text, is_text=True))


def _as_simple_graph(text: str) -> hardness.SimpleGraph:
    return hardness.SimpleGraph.from_json(json.loads(text))


def _coloring_for(args, n: int) -> Coloring:
    if args.coloring is None:
        raise MstRatioError("this verb requires --coloring")
    return parse_coloring(args.coloring, n)


def _write(args, payload: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(payload if payload.endswith("\n") else payload + "\n")
    else:
        sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")


# ---------------------------------------------------------------------------
# verb handlers


def _cmd_gen(args) -> str:
    spec = generators.GeneratorSpec(
        family=args.family, n=args.n, d=args.d, k=args.k, m=args.m,
        eps=args.eps, delta=args.delta, p=args.p, seed=args.seed)
    out = generators.generate(spec)
    return _dump(out.to_json())


def _cmd_emst(args) -> str:
    g = _as_graph(_read_input(args))
    t = mst(g)
    obj = t.to_json()
    obj["total_weight"] = t.total_weight
    return _dump(obj)


def _cmd_ratio(args) -> str:
    g = _as_graph(_read_input(args))
    ev = ratio.mst_ratio(g, _coloring_for(args, g.n))
    return _dump(ev.to_json())


def _cmd_maxratio(args) -> str:
    g = _as_graph(_read_input(args))
    if args.approx:
        c, ev = approx.approx_coloring(g)
        obj = ev.to_json()
        obj.update(method="approx", examined=1)
    elif args.bipartite:
        c, ev = approx.bipartite_coloring(g)
        obj = ev.to_json()
        obj.update(method="bipartite", examined=1)
    else:
        obj = ratio.max_ratio_exact(g, override_guard=args.force).to_json()
    return _dump(obj)


def _cmd_average(args) -> str:
    g = _as_graph(_read_input(args))
    if args.sample is not None:
        mean, err = ratio.average_ratio_sampled(g, args.sample, args.seed)
        obj = {"average": mean, "stderr": err, "method": "sampled",
               "samples": args.sample}
    else:
        obj = {"average": ratio.average_ratio_exact(g, override_guard=args.force),
               "method": "exact",
               "colorings": (1 << (g.n - 1)) - 1}
    return _dump(obj)


def _cmd_bound(args) -> str:
    g = _as_graph(_read_input(args))
    t = mst(g)
    return _dump({"bound": ratio.average_lower_bound(t),
                  "floor": ratio.average_ratio_floor(g.n)})


def _cmd_certify(args) -> str:
    g = _as_graph(_read_input(args))
    report = approx.certify_upper_bound(g, _coloring_for(args, g.n))
    return _dump(report.to_json())


def _cmd_reduce_clique(args) -> str:
    src = _as_simple_graph(_read_input(args))
    ri = hardness.reduce_clique(src)
    return _dump(ri.reduced.to_json())


def _cmd_decode_clique(args) -> str:
    src = _as_simple_graph(_read_input(args))
    ri = hardness.reduce_clique(src)
    c = _coloring_for(args, src.n)
    value = hardness.coloring_value(ri.reduced, c)
    clique = hardness.coloring_to_clique(ri, c)
    return _dump({"clique": list(clique), "size": len(clique), "value": value,
                  "floor_value_over_n": int(value // src.n)})


def _cmd_realize(args) -> str:
    g = _as_graph(_read_input(args))
    lift = hardness.lift_and_realize(g)
    return _dump(lift.to_json())


def _cmd_bernstein(args) -> str:
    return _dump({"n": args.n, "d": args.d,
                  "value": analysis.bernstein_average_limit(args.n, args.d)})


def _cmd_beta(args) -> str:
    mean, err = analysis.estimate_beta(args.n, args.d, args.trials, args.seed)
    return _dump({"beta": mean, "stderr": err, "n": args.n, "d": args.d,
                  "trials": args.trials})


def _cmd_crossings(args) -> str:
    ps = _as_points(_read_input(args))
    c = _coloring_for(args, ps.n)
    return _dump({"crossings": analysis.chromatic_crossing_number(ps, c)})


def _cmd_maxcrossings(args) -> str:
    ps = _as_points(_read_input(args))
    c, count = analysis.max_crossing_exact(ps)
    return _dump({"crossings": count, "coloring": c.to_string()})


def _cmd_sweep(args) -> str:
    records = analysis.run_sweep(args.n_min, args.n_max, args.trials, args.d, args.seed)
    if args.format == "json":
        return _dump([r.to_json() for r in records])
    return analysis.sweep_to_csv(records)


def _cmd_scatter(args) -> str:
    rows = analysis.scatter_pairs(args.trials, (args.n_min, args.n_max),
                                  args.mode, args.seed)
    summary = analysis.scatter_summary(rows, args.mode)
    print(f"scatter summary: {_dump(summary)}", file=sys.stderr)
    if args.format == "json":
        return _dump([list(r) for r in rows])
    return analysis.scatter_to_csv(rows)


def _cmd_subsetmax(args) -> str:
    g = _as_graph(_read_input(args))
    verts, weight = ratio.max_subset_mst_exact(g, override_guard=args.force)
    return _dump({"subset": list(verts), "weight": weight})


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="input file, or - for stdin")
    common.add_argument("--output", help="output file (default stdout)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=None,
                        help="cap the worker pool (never changes results)")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--coloring", help="R/B string or JSON 0/1 array")
    common.add_argument("--force", action="store_true",
                        help="override exponential-size guards")

    p = argparse.ArgumentParser(prog="mstratio", description=__doc__)
    sub = p.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate an instance family")
    g.add_argument("--family", required=True, choices=generators.FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--d", type=int, default=2)
    g.add_argument("--k", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--eps", type=float)
    g.add_argument("--delta", type=float)
    g.add_argument("--p", type=float, default=0.5)
    g.set_defaults(fn=_cmd_gen)

    sub.add_parser("emst", parents=[common], help="minimum spanning tree") \
        .set_defaults(fn=_cmd_emst)
    sub.add_parser("ratio", parents=[common], help="ratio of one coloring") \
        .set_defaults(fn=_cmd_ratio)

    mr = sub.add_parser("maxratio", parents=[common], help="maximum ratio")
    mode = mr.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--approx", action="store_true")
    mode.add_argument("--bipartite", action="store_true")
    mr.set_defaults(fn=_cmd_maxratio)

    av = sub.add_parser("average", parents=[common], help="average ratio")
    avmode = av.add_mutually_exclusive_group()
    avmode.add_argument("--exact", action="store_true")
    avmode.add_argument("--sample", type=int, metavar="N")
    av.set_defaults(fn=_cmd_average)

    sub.add_parser("bound", parents=[common],
                   help="closed-form floor for the average ratio") \
        .set_defaults(fn=_cmd_bound)
    sub.add_parser("certify", parents=[common],
                   help="two-tree certificate for one coloring") \
        .set_defaults(fn=_cmd_certify)
    sub.add_parser("reduce-clique", parents=[common],
                   help="clique-to-ratio reduction instance") \
        .set_defaults(fn=_cmd_reduce_clique)
    sub.add_parser("decode-clique", parents=[common],
                   help="decode a coloring of the reduced instance into a clique") \
        .set_defaults(fn=_cmd_decode_clique)
    sub.add_parser("realize", parents=[common],
                   help="lift weights until Euclidean-realizable and embed") \
        .set_defaults(fn=_cmd_realize)

    bn = sub.add_parser("bernstein", parents=[common], help="average-ratio limit sum")
    bn.add_argument("--n", type=int, required=True)
    bn.add_argument("--d", type=int, default=2)
    bn.set_defaults(fn=_cmd_bernstein)

    bt = sub.add_parser("beta", parents=[common], help="EMST growth constant estimate")
    bt.add_argument("--n", type=int, required=True)
    bt.add_argument("--d", type=int, default=2)
    bt.add_argument("--trials", type=int, default=20)
    bt.set_defaults(fn=_cmd_beta)

    sub.add_parser("crossings", parents=[common],
                   help="red-blue MST crossing count") \
        .set_defaults(fn=_cmd_crossings)
    sub.add_parser("maxcrossings", parents=[common],
                   help="exhaustive maximum crossing count") \
        .set_defaults(fn=_cmd_maxcrossings)

    sw = sub.add_parser("sweep", parents=[common], help="ratio statistics per n")
    sw.add_argument("--n-min", type=int, default=5)
    sw.add_argument("--n-max", type=int, default=20)
    sw.add_argument("--trials", type=int, default=100)
    sw.add_argument("--d", type=int, default=2)
    sw.set_defaults(fn=_cmd_sweep)

    sc = sub.add_parser("scatter", parents=[common], help="per-trial ratio pairs")
    sc.add_argument("--n-min", type=int, default=5)
    sc.add_argument("--n-max", type=int, default=20)
    sc.add_argument("--trials", type=int, default=1000)
    sc.add_argument("--mode", choices=("max_vs_bipartite", "avg_vs_bipartite"),
                    default="max_vs_bipartite")
    sc.set_defaults(fn=_cmd_scatter)

    sub.add_parser("subsetmax", parents=[common],
                   help="subset with the heaviest induced MST") \
        .set_defaults(fn=_cmd_subsetmax)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None:
        import numba
        numba.set_num_threads(max(1, args.threads))
    if args.format is None:
        args.format = "csv" if args.verb in ("sweep", "scatter") else "json"
    try:
        payload = args.fn(args)
    except MstRatioError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: bad_input: {exc!r}", file=sys.stderr)
        return 1
    _write(args, payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())

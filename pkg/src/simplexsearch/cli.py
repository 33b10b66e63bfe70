"""Command-line front end.

Subcommands: simulate, reduce, predict, sweep-gamma, spectrum, classify,
reproduce.  Outputs are plain CSV and JSON only; every CSV is written with
a sidecar .manifest.json recording the exact invocation.  Exit codes:
0 success, 1 usage error, 2 numerical-verification failure.

The environment variable SIMPLEXSEARCH_THREADS caps the BLAS thread count
(set it before numpy is imported elsewhere to take full effect).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

if "SIMPLEXSEARCH_THREADS" in os.environ:
    os.environ.setdefault("OMP_NUM_THREADS", os.environ["SIMPLEXSEARCH_THREADS"])
    os.environ.setdefault("OPENBLAS_NUM_THREADS", os.environ["SIMPLEXSEARCH_THREADS"])

import numpy as np

from . import __version__
from .analytic import predict, predict_complete
from .graphs import (CASE_TAGS, MarkedConfiguration, build_complete,
                     build_simplex, named_configuration, parse_custom_config,
                     simplex_coordinate)
from .hamiltonian import build_hamiltonian, evolve_spectral, uniform_state
from .reduction import (classify_pairs, coarsest_equitable_partition,
                        reduced_hamiltonian)
from .reference import case_subspace, validate_reduction
from .schedule import (Schedule, auto_schedule, peak_summary, run_named_case,
                       run_schedule_full, run_schedule_reduced)
from .spectral import gamma_sweep, gap_at, scaling_fit

USAGE_ERROR = 1
VERIFICATION_ERROR = 2

TABLE2_CASES = ("ring-1", "clique-plus-1", "ring-2", "ring-2-shift")
TWO_CASES = ("two-a", "two-b", "two-c", "two-d", "two-e")


def _write_manifest(out_path, args_ns, outputs, t_start):
    manifest = {
        "command": " ".join(sys.argv),
        "parameters": {k: v for k, v in vars(args_ns).items() if k != "func"},
        "version": __version__,
        "outputs": outputs,
        "wall_clock_seconds": time.time() - t_start,
    }
    with open(str(out_path) + ".manifest.json", "w") as f:
        json.dump(manifest, f, indent=2, default=str)


def _emit(obj, fmt):
    if fmt == "json":
        print(json.dumps(obj, indent=2, default=str))
    else:
        _emit_text(obj)


def _emit_text(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)):
                print(f"{pad}{key}:")
                _emit_text(val, indent + 1)
            else:
                print(f"{pad}{key}: {val}")
    elif isinstance(obj, list):
        for val in obj:
            _emit_text(val, indent)
    else:
        print(f"{pad}{obj}")


def _parse_schedule(text, case, m, k):
    if text == "auto":
        return auto_schedule(case, m, k)
    stages = []
    for part in text.split(","):
        g, t = part.split(":")
        stages.append((float(g), float(t)))
    return Schedule(tuple(stages))


def cmd_simulate(args):
    t0 = time.time()
    if args.graph == "complete":
        if args.N is None:
            raise SystemExit("--N is required for --graph complete")
        graph = build_complete(args.N)
        marked = MarkedConfiguration(tuple(range(args.marked)))
        if args.schedule == "auto":
            gc, _, runtime = predict_complete(args.N, args.marked)
            sched = Schedule(((gc, runtime),))
        else:
            sched = _parse_schedule(args.schedule, None, None, None)
        series = run_schedule_full(graph, marked, sched, args.samples)
    else:
        if args.M is None:
            raise SystemExit("--M is required for --graph simplex")
        if args.config in CASE_TAGS:
            sched = _parse_schedule(args.schedule, args.config, args.M, args.k)
            if args.full:
                graph = build_simplex(args.M)
                marked = named_configuration(args.config, args.M, args.k)
                series = run_schedule_full(graph, marked, sched, args.samples)
            else:
                series = run_named_case(args.config, args.M, sched, args.k,
                                        args.samples, with_cells=args.cells)
        else:
            marked = parse_custom_config(args.config, args.M)
            if args.schedule == "auto":
                raise SystemExit("custom configurations need an explicit schedule")
            sched = _parse_schedule(args.schedule, None, None, None)
            graph = build_simplex(args.M)
            if args.full:
                series = run_schedule_full(graph, marked, sched, args.samples)
            else:
                part = coarsest_equitable_partition(graph, marked)
                series = run_schedule_reduced(part, sched, args.samples)
    peak, t_peak, final = peak_summary(series)
    if args.out:
        series.to_csv(args.out)
        _write_manifest(args.out, args, [args.out], t0)
    _emit({"peak": peak, "t_peak": t_peak, "final": final}, "json")
    return 0


def cmd_reduce(args):
    graph = build_simplex(args.M)
    if args.config in CASE_TAGS:
        marked = named_configuration(args.config, args.M, args.k)
    else:
        marked = parse_custom_config(args.config, args.M)
    part = coarsest_equitable_partition(graph, marked)
    op = reduced_hamiltonian(part, args.gamma)
    if args.format == "json":
        _emit({
            "dimension": part.dimension,
            "cell_sizes": part.sizes.tolist(),
            "marked_cells": sorted(part.marked_cells),
            "matrix": op.matrix.tolist(),
            "start_vector": op.start_vector.tolist(),
        }, "json")
    else:
        print(f"dimension: {part.dimension}")
        for i, cell in enumerate(part.cells):
            flag = "marked" if i in part.marked_cells else "      "
            print(f"cell {i:2d}  size {len(cell):5d}  {flag}")
        print("reduced Hamiltonian:")
        for row in op.matrix:
            print("  " + " ".join(f"{x:11.6f}" for x in row))
    if args.csv:
        t0 = time.time()
        with open(args.csv, "w") as f:
            for row in op.matrix:
                f.write(",".join(f"{x:.17g}" for x in row) + "\n")
        _write_manifest(args.csv, args, [args.csv], t0)
    return 0


def cmd_predict(args):
    pred = predict(args.case, args.M, args.k)
    out = {
        "case": pred.case, "M": pred.m, "k": pred.k,
        "stages": [
            {
                "gamma_c": s.gamma_c, "runtime": s.runtime, "gap": s.gap,
                "evolution": "+".join(s.source_cells) + " -> " + "+".join(s.target_cells),
                "gamma_window_exponent": s.gamma_window_exponent,
            }
            for s in pred.stages
        ],
    }
    _emit(out, "json")
    return 0


def cmd_sweep_gamma(args):
    t0 = time.time()
    detunings = [float(x) for x in args.detunings.split(",")]
    rows = gamma_sweep(args.case, args.M, args.stage, detunings, args.k)
    lines = ["epsilon,peak_probability"]
    lines += [f"{eps:.17g},{peak:.17g}" for eps, peak in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
        _write_manifest(args.out, args, [args.out], t0)
    else:
        sys.stdout.write(text)
    return 0


def cmd_spectrum(args):
    pred = predict(args.case, args.M, args.k)
    gamma = args.gamma if args.gamma is not None else pred.stages[args.stage - 1].gamma_c
    rep = gap_at(args.case, args.M, gamma, args.stage, args.k)
    _emit({
        "case": rep.case, "M": rep.m, "gamma": rep.gamma, "stage": rep.stage,
        "E0": rep.e_low, "E1": rep.e_high, "gap": rep.gap,
        "predicted_gap": rep.predicted, "relative_error": rep.relative_error,
        "overlap_plus": rep.overlap_plus, "overlap_minus": rep.overlap_minus,
        "ambiguous": rep.ambiguous,
    }, args.format)
    return 0


def cmd_classify(args):
    classes = classify_pairs(args.M)
    out = []
    for sig, rep, count in classes:
        coords = [simplex_coordinate(v, args.M) for v in rep.vertices]
        out.append({
            "dimension": len(sig[0]),
            "class_size": count,
            "representative": [f"{i}:{j}" for i, j in coords],
        })
    _emit({"M": args.M, "n_classes": len(classes), "classes": out}, args.format)
    return 0


def _reproduce_fig1b(outdir, args, t0):
    graph = build_complete(1024)
    marked = MarkedConfiguration(tuple(range(4)))
    times = np.linspace(0.0, 50.0, 2000)
    outputs, summary = [], {}
    for tag, gamma in (("critical", 1.0 / 1024), ("double", 2.0 / 1024)):
        h = build_hamiltonian(graph, marked, gamma)
        series = evolve_spectral(h, uniform_state(1024), times)
        path = os.path.join(outdir, f"fig1b_{tag}.csv")
        series.to_csv(path)
        outputs.append(path)
        summary[tag] = {"max": float(series.success_probability.max())}
    return outputs, summary, 0


def _reproduce_fig6(outdir, which, args, t0):
    own = "two-a" if which == "fig6a" else "two-b"
    other = "two-b" if which == "fig6a" else "two-a"
    outputs, summary = [], {}
    for tag, sched_case in (("correct", own), ("wrong", other)):
        series = run_named_case(own, 100, auto_schedule(sched_case, 100))
        path = os.path.join(outdir, f"{which}_{tag}.csv")
        series.to_csv(path)
        outputs.append(path)
        peak, t_peak, final = peak_summary(series)
        summary[tag] = {"peak": peak, "t_peak": t_peak, "final": final}
    return outputs, summary, 0


def _reproduce_table(outdir, cases, name, validate_m, gap_m):
    rows, status = [], 0
    for case in cases:
        rep = validate_reduction(case, validate_m)
        pred = predict(case, gap_m)
        stages = []
        for idx, stage in enumerate(pred.stages, start=1):
            gr = gap_at(case, gap_m, stage.gamma_c, idx)
            stages.append({
                "gamma_c": stage.gamma_c,
                "runtime": stage.runtime,
                "predicted_gap": stage.gap,
                "measured_gap": gr.gap,
                "relative_error": gr.relative_error,
                "evolution": "+".join(stage.source_cells) + " -> " + "+".join(stage.target_cells),
            })
        if not rep.matched:
            status = VERIFICATION_ERROR
        rows.append({
            "case": case,
            "dimension": case_subspace(case, gap_m).dimension,
            "matrix_match": rep.matched,
            "max_deviation": rep.max_deviation,
            "stages": stages,
        })
    path = os.path.join(outdir, f"{name}.json")
    with open(path, "w") as f:
        json.dump({"validate_M": validate_m, "gap_M": gap_m, "rows": rows}, f,
                  indent=2, default=str)
    return [path], {"rows": len(rows), "all_matched": status == 0}, status


def _reproduce_classify5(outdir, args, t0):
    classes = classify_pairs(5)
    out = []
    for sig, rep, count in classes:
        coords = [simplex_coordinate(v, 5) for v in rep.vertices]
        out.append({"dimension": len(sig[0]), "class_size": count,
                    "representative": [f"{i}:{j}" for i, j in coords]})
    path = os.path.join(outdir, "classify5.json")
    with open(path, "w") as f:
        json.dump({"M": 5, "n_classes": len(classes), "classes": out}, f, indent=2)
    status = 0 if len(classes) == 5 and sum(c[2] for c in classes) == 435 else VERIFICATION_ERROR
    return [path], {"n_classes": len(classes)}, status


def cmd_reproduce(args):
    t0 = time.time()
    os.makedirs(args.outdir, exist_ok=True)
    if args.target == "fig1b":
        outputs, summary, status = _reproduce_fig1b(args.outdir, args, t0)
    elif args.target in ("fig6a", "fig6b"):
        outputs, summary, status = _reproduce_fig6(args.outdir, args.target, args, t0)
    elif args.target == "table1":
        outputs, summary, status = _reproduce_table(args.outdir, TWO_CASES, "table1", 9, 100)
    elif args.target == "table2":
        outputs, summary, status = _reproduce_table(args.outdir, TABLE2_CASES, "table2", 9, 100)
    else:  # classify5
        outputs, summary, status = _reproduce_classify5(args.outdir, args, t0)
    for path in outputs:
        _write_manifest(path, args, outputs, t0)
    _emit({"target": args.target, "outputs": outputs, "summary": summary}, "json")
    return status


def build_parser():
    parser = argparse.ArgumentParser(
        prog="simplexsearch",
        description="Quantum-walk search on the complete graph and the simplex of complete graphs",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a search schedule and report success probability")
    p.add_argument("--graph", choices=["complete", "simplex"], required=True)
    p.add_argument("--N", type=int, help="complete-graph size")
    p.add_argument("--M", type=int, help="simplex clique size")
    p.add_argument("--config", default="k-in-clique",
                   help="named case or comma-separated i:j coordinates")
    p.add_argument("--k", type=int, help="marked count for k-in-clique")
    p.add_argument("--marked", type=int, default=1, help="marked count for complete graph")
    p.add_argument("--schedule", default="auto", help='"auto" or "gamma:t,gamma:t"')
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--full", action="store_true", help="evolve in the full vertex space")
    p.add_argument("--cells", action="store_true", help="include per-cell probabilities in CSV")
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("reduce", help="print the equitable partition and reduced Hamiltonian")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--gamma", type=float, default=0.02)
    p.add_argument("--csv", help="optional CSV path for the matrix")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("predict", help="closed-form schedule predictions")
    p.add_argument("--case", choices=CASE_TAGS, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("sweep-gamma", help="peak probability vs detuning from gamma_c")
    p.add_argument("--case", choices=CASE_TAGS, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--stage", type=int, default=1)
    p.add_argument("--k", type=int)
    p.add_argument("--detunings", required=True, help="comma-separated epsilons")
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_sweep_gamma)

    p = sub.add_parser("spectrum", help="gap report at the avoided crossing")
    p.add_argument("--case", choices=CASE_TAGS, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--stage", type=int, default=1)
    p.add_argument("--gamma", type=float, help="defaults to the stage's gamma_c")
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="enumerate two-marked-vertex classes")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reproduce", help="regenerate the reference figures and tables")
    p.add_argument("target", choices=["fig1b", "fig6a", "fig6b", "table1", "table2", "classify5"])
    p.add_argument("--outdir", default="reproduce_out")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors; we reserve 2 for
        # verification failures
        return 0 if exc.code in (0, None) else USAGE_ERROR
    try:
        return args.func(args)
    except (ValueError, SystemExit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface; every hypergraph argument is a JSON file ``{"n", "r", "edges"}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from .berge import contains_berge, k3t_skeleton
from .bounds import bound_report
from .constructions import build_F, lattice, reference_graph, sample_G, sample_H
from .errors import BergeError, NoConvergence, StabilityViolation
from .harness import extremal_table, probe_conjecture, spectral_table
from .hypergraph import load_json
from .spectral import spectral_radius
from .stability import extract_witness, scan_contexts

EXIT_NO_CONVERGENCE = 3
EXIT_VIOLATION = 4


def _emit(obj, out):
    text = json.dumps(obj, indent=2, default=str)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_check(args):
    H = load_json(args.file)
    wit = contains_berge(H, k3t_skeleton(args.berge_k3t))
    if wit is None:
        print("FREE")
    else:
        print(wit.to_json(indent=2))
    return 0


def cmd_spectrum(args):
    H = load_json(args.file)
    try:
        res = spectral_radius(H, tol=args.tol, max_iter=args.max_iter)
        code = 0
    except NoConvergence as exc:
        res, code = exc.result, EXIT_NO_CONVERGENCE
    _emit(
        {
            "rho": res.rho,
            "iterations": res.iterations,
            "residual": res.residual,
            "converged": res.converged,
            "bounds": [res.lower, res.upper],
            "x": res.x.tolist(),
        },
        args.output,
    )
    return code


def cmd_stability(args):
    H = load_json(args.file)
    ctxs = scan_contexts(H, args.t)
    if args.action == "scan":
        _emit([c.to_dict() for c in ctxs], args.output)
        return 0
    if not ctxs:
        print("no context reaches the threshold", file=sys.stderr)
        return 1
    ctx = ctxs[args.index]
    try:
        wit, trace = extract_witness(H, ctx, args.t)
    except StabilityViolation as exc:
        stamp = time.strftime("%Y%m%d-%H%M%S")
        path = Path(args.dump_dir) / f"counterexample-{stamp}.json"
        path.write_text(json.dumps(
            {
                "error": str(exc),
                "t": args.t,
                "hypergraph": H.to_dict(),
                "context": ctx.to_dict(),
                "trace": exc.trace.to_dict() if exc.trace else None,
            },
            indent=2,
        ))
        print(f"StabilityViolation: report written to {path}", file=sys.stderr)
        return EXIT_VIOLATION
    _emit({"context": ctx.to_dict(), "witness": wit.to_dict(), "trace": trace.to_dict()}, args.output)
    return 0


def cmd_construct(args):
    kind = args.kind
    if kind == "lattice":
        L = lattice(args.r, args.d)
        obj = L.base.to_dict()
        obj["colors"] = list(L.colors)
    elif kind == "F":
        obj = build_F(args.n, args.r).to_dict()
    elif kind == "G":
        obj = sample_G(args.n, args.r, args.t, seed=args.seed).to_dict()
    elif kind == "H":
        obj = sample_H(args.n, args.r, args.t, seed=args.seed).to_dict()
    else:
        obj = reference_graph(args.n, args.s, args.t).to_dict()
    _emit(obj, args.output)
    return 0


def cmd_bounds(args):
    rep = bound_report(args.n, args.r, args.t).to_dict()
    _emit(rep, args.output)
    if args.table:
        for key in ("f_value", "g1", "g2", "turan_edge_bound", "spectral_upper", "spectral_lower", "tait_bound"):
            print(f"{key:>18}  {rep[key]}", file=sys.stderr)
    return 0


def cmd_search(args):
    fn = extremal_table if args.kind == "ex" else spectral_table
    rec = fn(args.n, args.r, args.t, max_nodes=args.max_nodes, time_limit=args.time_limit)
    _emit(rec.to_dict(), args.output)
    if args.csv:
        buf = io.StringIO()
        wr = csv.writer(buf)
        wr.writerow(["n", "r", "t", "max_edges", "max_rho", "free_count", "complete"])
        wr.writerow([rec.n, rec.r, rec.t, rec.max_edges, rec.max_rho, rec.free_count, rec.complete])
        Path(args.csv).write_text(buf.getvalue())
    return 0


def cmd_probe(args):
    rep = probe_conjecture(args.n, args.r, args.t, args.budget, seed=args.seed, search_steps=args.steps)
    _emit(rep.to_dict(), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="berge-k3t", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="test Berge-K_{3,t} containment")
    c.add_argument("--berge-k3t", type=int, required=True, metavar="T")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("spectrum", help="adjacency-tensor spectral radius")
    s.add_argument("file")
    s.add_argument("--tol", type=float, default=1e-10)
    s.add_argument("--max-iter", type=int, default=100_000)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_spectrum)

    st = sub.add_parser("stability", help="scan contexts or extract a witness")
    st.add_argument("action", choices=["scan", "extract"])
    st.add_argument("file")
    st.add_argument("--t", type=int, required=True)
    st.add_argument("--index", type=int, default=0, help="context to extract from")
    st.add_argument("--dump-dir", default=".")
    st.add_argument("-o", "--output")
    st.set_defaults(func=cmd_stability)

    k = sub.add_parser("construct", help="generate a construction")
    k.add_argument("kind", choices=["lattice", "F", "G", "H", "ref"])
    k.add_argument("--n", type=int)
    k.add_argument("--r", type=int)
    k.add_argument("--d", type=int)
    k.add_argument("--s", type=int, default=3)
    k.add_argument("--t", type=int)
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_construct)

    b = sub.add_parser("bounds", help="evaluate every bound for (n, r, t)")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--t", type=int, required=True)
    b.add_argument("--table", action="store_true", help="also print a table to stderr")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bounds)

    se = sub.add_parser("search", help="exhaustive extremal tables")
    se.add_argument("kind", choices=["ex", "spex"])
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--r", type=int, required=True)
    se.add_argument("--t", type=int, required=True)
    se.add_argument("--max-nodes", type=int, default=1_000_000)
    se.add_argument("--time-limit", type=float)
    se.add_argument("--csv")
    se.add_argument("--seed", type=int, default=0, help="unused; exhaustive search is deterministic")
    se.add_argument("-o", "--output")
    se.set_defaults(func=cmd_search)

    pc = sub.add_parser("probe-conjecture", help="probe the structure of spectral extremal graphs")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--r", type=int, required=True)
    pc.add_argument("--t", type=int, required=True)
    pc.add_argument("--budget", type=int, default=10)
    pc.add_argument("--steps", type=int, default=200)
    pc.add_argument("--seed", type=int, default=0)
    pc.add_argument("-o", "--output")
    pc.set_defaults(func=cmd_probe)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BergeError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

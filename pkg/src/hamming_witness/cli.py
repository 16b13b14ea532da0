"""Command-line entry point.

Exit codes: 0 verified / success, 1 property violated or internal failure,
2 invalid invocation (bad parameters, k = 2 for the witness set, budgets).
"""

from __future__ import annotations

import argparse
import sys
import time

from . import report
from .construction import (
    SetSpec,
    enumerate_set,
    size_alpha,
    size_W,
    size_W_edges,
    size_Y,
)
from .core import GraphParams, format_vertex, rank
from .errors import HammingError, VerificationFailed
from .oracle import DEFAULT_CAP, DEFAULT_F_BUDGET, oracle_f, oracle_mis, predicted_f
from .verifier import (
    DEFAULT_BUDGET,
    induced_edges,
    sweep_classify,
    sweep_independence,
    sweep_no_cross,
    sweep_unique_partner,
    verify_W,
)

LEMMAS = {
    "independence": sweep_independence,
    "classify": sweep_classify,
    "no-cross": sweep_no_cross,
    "unique-partner": sweep_unique_partner,
}


def _params(args) -> GraphParams:
    return GraphParams(args.n, args.k)


def _emit(lines, out):
    for line in lines:
        out.write(line)
        out.write("\n")


def cmd_gen(args, out) -> int:
    p = _params(args)
    spec = SetSpec.parse(args.spec).validate(p)
    if args.format == "digits":
        members = enumerate_set(spec, p, method=args.method, workers=args.workers)
        _emit((format_vertex(v, p) for v in members), out)
    elif args.format == "ranks":
        members = enumerate_set(spec, p, method=args.method, workers=args.workers)
        _emit((str(rank(v, p)) for v in members), out)
    else:
        count = sum(1 for _ in enumerate_set(spec, p, method=args.method, workers=args.workers))
        edges = list(induced_edges(spec, p))
        out.write(f"c {p} induced by {spec}: {count} members; vertex id = rank + 1\n")
        out.write(f"p edge {p.order} {len(edges)}\n")
        _emit((f"e {u + 1} {w + 1}" for u, w in edges), out)
    return 0


def cmd_verify(args, out) -> int:
    p = _params(args)
    start = time.perf_counter()
    try:
        rep, cert = verify_W(p, workers=args.workers)
    except VerificationFailed as exc:
        fields = {"n": p.n, "k": p.k, "spec": "W", "status": "failed", "reason": str(exc)}
        if exc.vertex is not None:
            fields["counterexample"] = format_vertex(exc.vertex, p)
            fields["observed_degree"] = exc.degree
        out.write(report.render(fields, args.json) + "\n")
        return 1
    rep.status = "verified"
    fields = rep.fields()
    fields["expected_vertex_count"] = size_W(p)
    fields["elapsed"] = f"{time.perf_counter() - start:.3f}"
    if args.certificate:
        fields["pairs"] = [f"{format_vertex(v, p)}-{format_vertex(w, p)}" for v, w in cert.pairs]
        fields["isolated"] = [format_vertex(v, p) for v in cert.isolated]
    out.write(report.render(fields, args.json) + "\n")
    return 0


def cmd_stats(args, out) -> int:
    p = _params(args)
    fields = {
        "n": p.n,
        "k": p.k,
        "alpha": size_alpha(p),
        "Y_same": size_Y(1, 1, p),
        "Y_diff": size_Y(0, 1, p),
    }
    if p.k >= 3:
        fields["W"] = size_W(p)
        fields["W_edges"] = size_W_edges(p)
    else:
        print(
            "note: W rows omitted; the witness construction does not hold when k = 2",
            file=sys.stderr,
        )
    out.write(report.render(fields, args.json) + "\n")
    return 0


def cmd_oracle(args, out) -> int:
    p = _params(args)
    if args.which == "mis":
        res = oracle_mis(p, cap=args.cap)
        expected = size_alpha(p)
    else:
        seed = None
        if args.seed_from_witness and p.k >= 3:
            seed = verify_W(p)[0].max_degree
        res = oracle_f(p, budget=args.budget, cap=args.cap, upper_bound=seed)
        expected = predicted_f(p)
    fields = res.fields()
    fields["expected"] = expected
    fields["status"] = "agrees" if res.value == expected else "disagrees"
    out.write(report.render(fields, args.json) + "\n")
    return 0 if res.value == expected else 1


def _sweep_grid(args):
    if not args.sweep:
        return [GraphParams(args.n, args.k)]
    return [GraphParams(n, k) for k in range(3, args.k + 1) for n in range(1, args.n + 1)]


def cmd_check_lemma(args, out) -> int:
    check = LEMMAS[args.which]
    grid = _sweep_grid(args)
    totals: dict = {}
    done = []
    for p in grid:
        try:
            counts = check(p, args.budget)
        except VerificationFailed as exc:
            fields = {"lemma": args.which, "n": p.n, "k": p.k, "status": "failed", "reason": str(exc)}
            if exc.vertex is not None:
                fields["counterexample"] = format_vertex(exc.vertex, p)
            fields.update({key: str(v) for key, v in exc.details.items()})
            out.write(report.render(fields, args.json) + "\n")
            return 1
        for key, v in counts.items():
            totals[key] = totals.get(key, 0) + v
        done.append(f"({p.n},{p.k})")
    fields = {"lemma": args.which, "instances": done}
    fields.update(totals)
    fields["status"] = "verified"
    out.write(report.render(fields, args.json) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamming-witness",
        description="Witness sets of size alpha+1 and induced max degree 1 in Hamming graphs H(n,k).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(sp):
        sp.add_argument("-n", type=int, required=True, help="dimension (number of coordinates)")
        sp.add_argument("-k", type=int, required=True, help="alphabet size")
        sp.add_argument("--json", action="store_true", help="emit one JSON object")

    sp = sub.add_parser("gen", help="list the members of a vertex set in rank order")
    graph_args(sp)
    sp.add_argument("--spec", required=True, help="X:s, Y:s,t, Z:s,t,c or W")
    sp.add_argument("--format", choices=("digits", "ranks", "edges"), default="digits")
    sp.add_argument("--method", choices=("filter", "constructive"), default="filter")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="audit |W| = k^(n-1)+1 and induced max degree 1")
    graph_args(sp)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--certificate", action="store_true", help="include the matching pairs")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("stats", help="closed-form set sizes (exact, any n)")
    graph_args(sp)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("oracle", help="brute-force independence number or f-value")
    sp.add_argument("which", choices=("mis", "f"))
    graph_args(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_F_BUDGET, help="max subsets for f")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max vertices to materialise")
    sp.add_argument(
        "--seed-from-witness",
        action="store_true",
        help="start the f search from the audited degree of W (k >= 3)",
    )
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("check-lemma", help="exhaustive sweep of one adjacency lemma")
    sp.add_argument("which", choices=sorted(LEMMAS))
    graph_args(sp)
    sp.add_argument(
        "--sweep",
        action="store_true",
        help="run every instance with 1 <= n' <= n and 3 <= k' <= k",
    )
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max neighbour probes per check")
    sp.set_defaults(func=cmd_check_lemma)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.func(args, out)
    except HammingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

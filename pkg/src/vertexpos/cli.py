"""Command-line interface: ``vertexpos <command> ...``.

Exit codes: 0 success, 1 a theorem check found a counterexample, 2 bad
input (unparsable graph, unknown family, bad flags), 3 oracle budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

import numpy as np

from . import __version__
from .generators import FAMILIES, generate, parse_family
from .graph import GraphFormatError, encode_graph6, format_edge_list, parse_edge_list, read_graph6_lines
from .oracle import BudgetExceeded, OracleBudget, oracle_alpha, oracle_gp, oracle_px
from .solver import solve_all, solve_px
from .theorems import builtin_checks, get_check, ratio_summary, run_check

EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

TABLE1_ROOTS = ("x", "c1", "b1", "a1")


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# input
# ---------------------------------------------------------------------------

def _looks_like_edge_list(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return all(tok.lstrip("-").isdigit() for tok in line.split())
    return False


def parse_graphs(data: bytes) -> list:
    """One edge list, or a stream of graph6 lines (format detected)."""
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        raise InputError("input is not ASCII") from None
    if _looks_like_edge_list(text):
        return [parse_edge_list(text)]
    graphs = read_graph6_lines(data)
    if not graphs:
        raise InputError("no graph in input")
    return graphs


def _with_seed(spec: str, seed) -> str:
    if seed is None or "seed=" in spec:
        return spec
    fs = parse_family(spec)
    if fs.family not in ("gnp", "tree", "block"):
        return spec
    return spec + ("," if ":" in spec else ":") + f"seed={seed}"


def load_input(args) -> list:
    src, spec = getattr(args, "input", None), getattr(args, "gen", None)
    if (src is None) == (spec is None):
        raise InputError("give exactly one input: a file, '-' for stdin, or --gen SPEC")
    if spec is not None:
        return [generate(_with_seed(spec, args.seed))]
    if src == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(src, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {src}: {exc.strerror}") from None
    return parse_graphs(data)


def resolve_root(g, text: str) -> int:
    try:
        return g.index(text)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None


def _threads(value):
    return (os.cpu_count() or 1) if value is None else value


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _table(rows, header) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*header).rstrip(), fmt.format(*("-" * w for w in widths))]
    out += [fmt.format(*r).rstrip() for r in rows]
    return "\n".join(out)


def _labels(g, vs):
    return [g.label(v) for v in vs]


def _px_json(g, res) -> dict:
    out = res.to_json()
    if g.labels:
        out["root_label"] = g.label(res.root)
        out["witness_labels"] = _labels(g, res.witness)
    return out


def _emit_px(g, res, fmt, out):
    if fmt == "json":
        print(_dump(_px_json(g, res)), file=out)
    elif fmt == "tsv":
        print(f"{g.label(res.root)}\t{res.value}\t{','.join(_labels(g, res.witness))}", file=out)
    else:
        print(f"n={g.n} root={g.label(res.root)} p_x={res.value} ({res.method})", file=out)
        print("witness: " + " ".join(_labels(g, res.witness)), file=out)
        if res.crosscheck:
            print("crosscheck: " + _dump(res.crosscheck), file=out)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_px(args, out):
    for g in load_input(args):
        x = resolve_root(g, args.root)
        res = solve_px(g, x, check=args.check)
        if args.crosscheck:
            o = oracle_px(g, x, OracleBudget(max_vertices=args.max_vertices))
            res = type(res)(res.root, res.witness, res.value, res.method, res.n, {"oracle": o.value, "agree": o.value == res.value})
        _emit_px(g, res, args.format, out)
    return 0


def cmd_vp(args, out):
    for g in load_input(args):
        s = solve_all(g, workers=_threads(args.threads), check=args.check)
        if args.format == "json":
            obj = s.to_json()
            if g.labels:
                obj["labels"] = list(g.labels)
            print(_dump(obj), file=out)
        elif args.format == "tsv":
            for x, v in enumerate(s.values):
                print(f"{g.label(x)}\t{v}", file=out)
        else:
            print(_table([(g.label(x), v) for x, v in enumerate(s.values)], ["vertex", "p_x"]), file=out)
            print(f"vp={s.vp} at {' '.join(_labels(g, sorted(s.argmax)))}", file=out)
            print(f"vp-={s.vp_minus} at {' '.join(_labels(g, sorted(s.argmin)))}", file=out)
    return 0


def cmd_oracle(args, out):
    budget = OracleBudget(
        max_vertices=args.max_vertices,
        max_gp_vertices=args.max_vertices if args.gp else OracleBudget.max_gp_vertices,
        time_limit=args.time_limit,
    )
    for g in load_input(args):
        if args.gp or args.alpha:
            obj = {"n": g.n}
            if args.gp:
                obj["gp"] = oracle_gp(g, budget)
            if args.alpha:
                obj["alpha"] = oracle_alpha(g, budget)
            if args.format == "json":
                print(_dump(obj), file=out)
            else:
                print("\t".join(f"{k}={v}" for k, v in obj.items()), file=out)
            continue
        if args.root is None:
            raise InputError("oracle needs --root (or --gp / --alpha)")
        res = oracle_px(g, resolve_root(g, args.root), budget, prune=not args.no_prune)
        _emit_px(g, res, args.format, out)
    return 0


def cmd_verify(args, out):
    if args.list:
        for c in builtin_checks():
            print(f"{c.id}\t{c.statement}", file=out)
        return 0
    if args.check == "all":
        checks = builtin_checks()
    else:
        try:
            checks = [get_check(c) for c in args.check.split(",")]
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    corpus = args.corpus or None
    reports = []
    for chk in checks:
        try:
            rep = run_check(chk, corpus, seed=args.seed, workers=_threads(args.threads))
        except (ValueError, FileNotFoundError) as exc:
            raise InputError(f"bad corpus: {exc}") from None
        reports.append(rep)
        if args.format == "table" and not args.quiet:
            print(f"{rep.check_id}: {'ok' if rep.ok else 'FAIL'} ({rep.seconds:.1f}s)", file=sys.stderr)
    extra = ratio_summary(corpus, args.seed) if args.ratio and corpus else None
    if args.format == "json":
        obj = {"reports": [r.to_json() for r in reports], "seed": args.seed}
        if extra is not None:
            obj["ratio"] = extra
        print(_dump(obj), file=out)
    elif args.format == "tsv":
        for r in reports:
            print(f"{r.check_id}\t{r.tested}\t{r.skipped}\t{r.passed}\t{len(r.counterexamples)}", file=out)
    else:
        rows = [
            (r.check_id, r.tested, r.skipped, r.passed, len(r.counterexamples), "ok" if r.ok else "FAIL")
            for r in reports
        ]
        print(_table(rows, ["check", "tested", "skipped", "passed", "counterexamples", "status"]), file=out)
        for r in reports:
            for c in r.counterexamples[: args.show]:
                print(f"  {r.check_id}: {c.graph6}  {c.detail}  [{c.source}]", file=out)
            if len(r.counterexamples) > args.show:
                print(f"  {r.check_id}: ... {len(r.counterexamples) - args.show} more", file=out)
        if extra is not None:
            print(f"max vp/vp- = {extra['max_ratio']}", file=out)
    return EXIT_COUNTEREXAMPLE if any(not r.ok for r in reports) else 0


def cmd_gen(args, out):
    g = generate(_with_seed(args.spec, args.seed))
    if args.format == "edges":
        out.write(format_edge_list(g))
    else:
        print(encode_graph6(g).decode(), file=out)
    return 0


def fit_slope(xs, ys) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    lx, ly = np.log(np.asarray(xs, float)), np.log(np.asarray(ys, float))
    return float(np.polyfit(lx, ly, 1)[0])


def bench_rows(sizes, p=None, avg_degree=None, seed=0, threads=1, repeat=1):
    """``(n, m, seconds)`` per size; ``seconds`` is the best of ``repeat`` runs."""
    rows = []
    for n in sizes:
        prob = p if p is not None else min(1.0, avg_degree / max(n - 1, 1))
        g = generate(f"gnp:{n},{prob},seed={seed}")
        best = math.inf
        for _ in range(repeat):
            t0 = time.perf_counter()
            solve_all(g, workers=threads)
            best = min(best, time.perf_counter() - t0)
        rows.append((n, g.m, best))
    return rows


def cmd_bench(args, out):
    sizes = [int(s) for s in args.sizes.split(",")]
    avg = None if args.p is not None else args.avg_degree
    rows = bench_rows(sizes, args.p, avg, args.seed, _threads(args.threads), args.repeat)
    slope_nm = fit_slope([n * m for n, m, _ in rows if m], [t for _, m, t in rows if m]) if len(rows) > 1 else None
    slope_n = fit_slope([n for n, _, _ in rows], [t for _, _, t in rows]) if len(rows) > 1 else None
    if args.format == "json":
        print(_dump({"rows": [{"n": n, "m": m, "seconds": t} for n, m, t in rows], "slope_n": slope_n, "slope_nm": slope_nm}), file=out)
    else:
        sep = "\t" if args.format == "tsv" else "  "
        print(sep.join(["n", "m", "seconds"]), file=out)
        for n, m, t in rows:
            print(sep.join([str(n), str(m), f"{t:.3f}"]), file=out)
        if slope_n is not None:
            print(f"log-log slope: {slope_n:.2f} in n, {slope_nm:.2f} in n*m", file=out)
    return 0


def table1_rows():
    g = generate("paperFig1")
    return [(lab, solve_px(g, g.index(lab), check=True).value) for lab in TABLE1_ROOTS]


def cmd_table1(args, out):
    rows = table1_rows()
    if args.format == "json":
        print(_dump([{"vertex": v, "p_x": p} for v, p in rows]), file=out)
    elif args.format == "tsv":
        for v, p in rows:
            print(f"{v}\t{p}", file=out)
    else:
        print(_table(rows, ["vertex", "p_x"]), file=out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_input(p):
    p.add_argument("input", nargs="?", help="graph file (edge list or graph6), or '-' for stdin")
    p.add_argument("--gen", metavar="SPEC", help="generate the input, e.g. cycle:6 or gnp:50,0.1")
    p.add_argument("--seed", type=int, default=None, help="seed for random families without seed=")


def _add_format(p, default="table"):
    p.add_argument("--format", choices=("table", "json", "tsv"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vertexpos", description="Vertex position numbers of graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("px", help="maximum x-position set for one root")
    _add_input(p)
    p.add_argument("--root", required=True, help="root vertex: label or integer id")
    p.add_argument("--check", action="store_true", help="assert the solver's internal invariants")
    p.add_argument("--crosscheck", action="store_true", help="also run the exhaustive oracle")
    p.add_argument("--max-vertices", type=int, default=OracleBudget.max_vertices)
    _add_format(p)
    p.set_defaults(func=cmd_px)

    p = sub.add_parser("vp", help="p_x for every root, with vp and vp-")
    _add_input(p)
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: all CPUs)")
    p.add_argument("--check", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_vp)

    p = sub.add_parser("oracle", help="exhaustive search on small graphs")
    _add_input(p)
    p.add_argument("--root", help="root vertex for p_x")
    p.add_argument("--gp", action="store_true", help="general position number")
    p.add_argument("--alpha", action="store_true", help="independence number")
    p.add_argument("--no-prune", action="store_true", help="enumerate every subset")
    p.add_argument("--max-vertices", type=int, default=OracleBudget.max_vertices)
    p.add_argument("--time-limit", type=float, default=None, help="seconds per search")
    _add_format(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run theorem checks")
    p.add_argument("check", nargs="?", default="all", help="check id, comma list, or 'all'")
    p.add_argument("--corpus", action="append", help="corpus descriptor, e.g. 'n<=7' (repeatable)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--list", action="store_true", help="list the available checks")
    p.add_argument("--show", type=int, default=3, help="counterexamples printed per check")
    p.add_argument("--ratio", action="store_true", help="report the largest vp/vp- in the corpus")
    p.add_argument("--quiet", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="print a family member")
    p.add_argument("spec", help=f"family spec; families: {', '.join(FAMILIES)}")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time solve_all on random graphs")
    p.add_argument("--sizes", default="250,500,1000,2000")
    p.add_argument("--p", type=float, default=None, help="edge probability (default: fixed average degree)")
    p.add_argument("--avg-degree", type=float, default=20.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--repeat", type=int, default=1)
    _add_format(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("table1", help="p_x at x, c1, b1, a1 of the bundled example graph")
    _add_format(p)
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())

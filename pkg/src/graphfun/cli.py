"""Command-line front end.

One JSON report object goes to standard output; a short human summary goes
to standard error.  Exit codes: 0 success/verified, 1 property violated,
2 usage/configuration error, 3 input parse error.

All randomness flows through ``random.Random`` (the Mersenne Twister from
the Python standard library) seeded from ``--seed``; the generator identity
is recorded in every report.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__, families, hyper3, kexpr, verify, witnesses
from .functionality import fun_graph, fun_vertex, is_function_of, min_fun
from .graph import GraphFormatError, format_graph, read_graph, write_graph
from .params import degeneracy, vc_dimension
from .symdiff import min_sd, sd_graph, sd_pair

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_PARSE = 3

RNG_NAME = "python-random-mt19937"


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _digest(*chunks: str) -> str:
    h = hashlib.sha256()
    for c in chunks:
        h.update(c.encode("utf-8"))
        h.update(b"\x00")
    return h.hexdigest()


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from exc


def _parse_graph_file(path: str):
    text = _read_text(path)
    try:
        from .graph import parse_graph

        return parse_graph(text), text
    except (GraphFormatError, ValueError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc


def _witness_payload(w) -> dict:
    return {
        "target": w.target,
        "support": sorted(w.support)
        if isinstance(w.support, frozenset)
        else list(w.support),
    }


def _fun_result_payload(res) -> dict:
    return {
        "value": res.value,
        "witness_vertex": res.witness_vertex,
        "witness_set": sorted(res.witness_set),
        "subgraph": sorted(res.subgraph) if res.subgraph is not None else None,
    }


# --- subcommand handlers ----------------------------------------------------


def _cmd_gen(args) -> tuple[dict, str, int]:
    fam = args.family
    seed = args.seed
    if fam == "random-graph":
        g = families.random_graph(args.n, args.p, seed)
        text = format_graph(g)
        payload = {"family": fam, "n": g.n, "m": g.num_edges()}
    elif fam == "hypercube":
        g = families.hypercube(args.n)
        text = format_graph(g)
        payload = {"family": fam, "n": g.n, "m": g.num_edges()}
    elif fam == "shattering":
        g = families.shattering_graph(args.n)
        text = format_graph(g)
        payload = {"family": fam, "n": g.n, "m": g.num_edges()}
    elif fam == "permutation":
        p = families.random_permutation(args.n, seed)
        text = families.format_permutation(p)
        payload = {"family": fam, "n": p.n}
    elif fam == "sd-construction":
        p = families.sd_construction(args.t)
        text = families.format_permutation(p)
        payload = {"family": fam, "t": args.t, "n": p.n}
    elif fam == "unit-intervals":
        iv = families.random_unit_intervals(args.n, seed)
        text = families.format_intervals(iv)
        payload = {"family": fam, "n": iv.n}
    elif fam == "hypergraph":
        h = families.random_3_hypergraph(args.n, args.m, seed)
        text = families.format_hypergraph(h)
        payload = {"family": fam, "n": h.n, "m": len(h.edges)}
    elif fam == "kexpression":
        e = kexpr.random_kexpression(args.k, args.ops, seed)
        text = kexpr.to_text(e) + "\n"
        payload = {"family": fam, "k": args.k, "ops": args.ops}
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown family {fam}", EXIT_USAGE)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}", EXIT_USAGE) from exc
    payload["out"] = args.out
    return payload, _digest(fam, text), EXIT_OK


def _cmd_fun(args) -> tuple[dict, str, int]:
    g, text = _parse_graph_file(args.graphfile)
    if args.mode == "vertex":
        if args.vertex is None:
            raise CliError("fun vertex requires --vertex", EXIT_USAGE)
        if not 0 <= args.vertex < g.n:
            raise CliError(f"vertex {args.vertex} out of range", EXIT_USAGE)
        res = fun_vertex(g, args.vertex)
    elif args.mode == "min":
        res = min_fun(g)
    else:
        res = fun_graph(g, exact_limit=args.exact_limit)
    payload = _fun_result_payload(res)
    if args.recheck:
        target_graph = g
        if res.subgraph is not None:
            from .graph import induced_subgraph

            sub, mapping = induced_subgraph(g, res.subgraph)
            back = {v: i for i, v in enumerate(mapping)}
            ok = (
                is_function_of(sub, back[res.witness_vertex],
                               {back[v] for v in res.witness_set})
                is not None
            )
        else:
            ok = is_function_of(g, res.witness_vertex, res.witness_set) is not None
        payload["recheck"] = ok
        if not ok:
            return payload, _digest(text), EXIT_VIOLATION
    return payload, _digest(text), EXIT_OK


def _cmd_sd(args) -> tuple[dict, str, int]:
    g, text = _parse_graph_file(args.graphfile)
    if args.mode == "pair":
        if args.x is None or args.y is None:
            raise CliError("sd pair requires --x and --y", EXIT_USAGE)
        payload = {"value": sd_pair(g, args.x, args.y), "pair": [args.x, args.y]}
    elif args.mode == "min":
        res = min_sd(g)
        payload = {"value": res.value, "pair": list(res.pair)}
    else:
        res = sd_graph(g, exact_limit=args.exact_limit)
        payload = {
            "value": res.value,
            "pair": list(res.pair),
            "subgraph": sorted(res.subgraph) if res.subgraph is not None else None,
        }
    return payload, _digest(text), EXIT_OK


def _cmd_degeneracy(args) -> tuple[dict, str, int]:
    g, text = _parse_graph_file(args.graphfile)
    res = degeneracy(g)
    return {"value": res.value, "order": list(res.order)}, _digest(text), EXIT_OK


def _cmd_vcdim(args) -> tuple[dict, str, int]:
    g, text = _parse_graph_file(args.graphfile)
    res = vc_dimension(g)
    return {"value": res.value, "shattered": sorted(res.shattered)}, _digest(text), EXIT_OK


def _cmd_kexpr(args) -> tuple[dict, str, int]:
    text = _read_text(args.exprfile)
    try:
        e = kexpr.parse(text)
    except kexpr.KExprError as exc:
        raise CliError(f"{args.exprfile}: {exc}", EXIT_PARSE) from exc
    if args.mode == "eval":
        lg = kexpr.evaluate(e)
        payload = {
            "n": lg.graph.n,
            "edges": [list(edge) for edge in lg.graph.edges()],
            "labels": list(lg.labels),
            "names": list(lg.names),
            "label_count": kexpr.label_count(e),
        }
        return payload, _digest(text), EXIT_OK
    report = kexpr.check_fun_cwd_bound(e)
    payload = {
        "passed": report.passed,
        "min_fun": report.min_fun_value,
        "bound": report.bound,
        "witness_vertex": report.witness_vertex,
        "witness_set": sorted(report.witness_set),
    }
    return payload, _digest(text), EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_witness(args) -> tuple[dict, str, int]:
    text = _read_text(args.file)
    try:
        if args.kind == "unit-interval":
            iv = families.parse_intervals(text)
            t, value = witnesses.unit_interval_pair(iv)
            payload = {"t": t, "sd_value": value,
                       "sum_sd": witnesses.sum_sd_consecutive(iv)}
            return payload, _digest(text), EXIT_OK
        if args.kind == "permutation":
            p = families.parse_permutation(text)
            w = witnesses.permutation_witness(p)
            payload = _witness_payload(w)
            payload["terms"] = [list(t) for t in w.terms]
            payload["support_size"] = len(set(w.support))
            if args.recheck:
                payload["recheck"] = w.verify(families.permutation_graph(p))
                if not payload["recheck"]:
                    return payload, _digest(text), EXIT_VIOLATION
            return payload, _digest(text), EXIT_OK
        # line-graph
        from .graph import parse_graph

        g = parse_graph(text)
        if args.edge is None:
            raise CliError("witness line-graph requires --edge U V", EXIT_USAGE)
        w = witnesses.line_graph_witness(g, tuple(args.edge))
        payload = _witness_payload(w)
        payload["terms"] = [list(t) for t in w.terms]
        if args.recheck:
            lg, _ = families.line_graph(g)
            payload["recheck"] = w.verify(lg)
            if not payload["recheck"]:
                return payload, _digest(text), EXIT_VIOLATION
        return payload, _digest(text), EXIT_OK
    except (GraphFormatError, ValueError) as exc:
        if isinstance(exc, CliError):
            raise
        raise CliError(f"{args.file}: {exc}", EXIT_PARSE) from exc


def _cmd_hyper3(args) -> tuple[dict, str, int]:
    text = _read_text(args.hypergraphfile)
    try:
        h = families.parse_hypergraph(text)
    except ValueError as exc:
        raise CliError(f"{args.hypergraphfile}: {exc}", EXIT_PARSE) from exc
    if args.mode == "bound":
        report = hyper3.hyper3_fun_bound(h)
        payload = {
            "s_index": report.s_index,
            "s": list(report.s),
            "f_indices": list(report.f_indices),
            "bound": report.bound,
            "thick_case": report.thick_case,
        }
        if args.recheck:
            ig, _ = hyper3.intersection_graph(h)
            payload["recheck"] = (
                is_function_of(ig, report.s_index, report.f_indices) is not None
            )
            if not payload["recheck"]:
                return payload, _digest(text), EXIT_VIOLATION
        return payload, _digest(text), EXIT_OK
    try:
        st = hyper3.find_thick_structure(h)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    payload = {
        "kind": st.kind,
        "s": list(st.s),
        "parts": [list(p) for p in st.parts],
        "apex_degree": st.apex_degree,
    }
    return payload, _digest(text), EXIT_OK


def _cmd_verify(args) -> tuple[dict, str, int]:
    if args.target not in verify.TARGETS:
        raise CliError(f"unknown verify target {args.target}", EXIT_USAGE)
    passed, payload = verify.run_target(
        args.target, seed=args.seed, cases=args.cases, t=args.t
    )
    result = {"target": args.target, "passed": passed, "detail": payload}
    digest = _digest(args.target, str(args.seed), str(args.cases), str(args.t))
    return result, digest, EXIT_OK if passed else EXIT_VIOLATION


# --- argument parsing -------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="graphfun",
        description="Graph functionality, symmetric differences, "
        "k-expressions and witness constructions.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument(
        "family",
        choices=[
            "random-graph", "hypercube", "shattering", "permutation",
            "sd-construction", "unit-intervals", "hypergraph", "kexpression",
        ],
    )
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--m", type=int, default=20)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--t", type=int, default=2)
    g.add_argument("--k", type=int, default=3)
    g.add_argument("--ops", type=int, default=20)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    g.set_defaults(handler=_cmd_gen)

    f = sub.add_parser("fun", help="functionality of a vertex or graph")
    f.add_argument("mode", choices=["vertex", "min", "graph"])
    f.add_argument("graphfile")
    f.add_argument("--vertex", type=int)
    f.add_argument("--exact-limit", type=int, default=14)
    f.add_argument("--recheck", action="store_true")
    f.set_defaults(handler=_cmd_fun)

    s = sub.add_parser("sd", help="neighbourhood symmetric differences")
    s.add_argument("mode", choices=["pair", "min", "graph"])
    s.add_argument("graphfile")
    s.add_argument("--x", type=int)
    s.add_argument("--y", type=int)
    s.add_argument("--exact-limit", type=int, default=14)
    s.set_defaults(handler=_cmd_sd)

    d = sub.add_parser("degeneracy", help="degeneracy and elimination order")
    d.add_argument("graphfile")
    d.set_defaults(handler=_cmd_degeneracy)

    v = sub.add_parser("vcdim", help="VC-dimension of closed neighbourhoods")
    v.add_argument("graphfile")
    v.set_defaults(handler=_cmd_vcdim)

    k = sub.add_parser("kexpr", help="evaluate or check a k-expression")
    k.add_argument("mode", choices=["eval", "check"])
    k.add_argument("exprfile")
    k.set_defaults(handler=_cmd_kexpr)

    w = sub.add_parser("witness", help="constructive small-support witnesses")
    w.add_argument("kind", choices=["unit-interval", "permutation", "line-graph"])
    w.add_argument("file")
    w.add_argument("--edge", type=int, nargs=2)
    w.add_argument("--recheck", action="store_true")
    w.set_defaults(handler=_cmd_witness)

    h = sub.add_parser("hyper3", help="3-uniform hypergraph witness bounds")
    h.add_argument("mode", choices=["bound", "structure"])
    h.add_argument("hypergraphfile")
    h.add_argument("--recheck", action="store_true")
    h.set_defaults(handler=_cmd_hyper3)

    ver = sub.add_parser("verify", help="run a verification target")
    ver.add_argument("target", choices=sorted(verify.TARGETS))
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--cases", type=int, default=None)
    ver.add_argument("--t", type=int, default=3)
    ver.set_defaults(handler=_cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    start = time.perf_counter()
    try:
        result, digest, code = args.handler(args)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except (GraphFormatError,) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    elapsed = int((time.perf_counter() - start) * 1000)
    report = {
        "command": " ".join(argv if argv is not None else sys.argv[1:]),
        "input_digest": digest,
        "seed": getattr(args, "seed", None),
        "rng": RNG_NAME,
        "result": result,
        "timing_ms": elapsed,
        "version": __version__,
    }
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    summary = {k: v for k, v in result.items() if not isinstance(v, (list, dict))}
    print(f"{args.command}: {summary} [{elapsed} ms]", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end.

    ulc uklc --k 3 --graph figure1
    ulc m-number --graph6 A_
    ulc recognize --family 3-list-critical --graph figure2
    ulc scan --figure scan.png

Results go to stdout as JSON (default) or an aligned table. Exit codes:
0 decided, 1 usage or parse error, 2 undecided within the work budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import constructions, recognizers
from .coloring import (
    DEFAULT_BUDGET,
    Budget,
    BudgetExceeded,
    ListAssignment,
    is_k_choosable,
    list_chromatic_number,
)
from .corpus import CorpusEntry, bundled, read_corpus
from .graph import (
    Graph,
    GraphError,
    edges_json_decode,
    generate,
    graph6_decode,
    graph6_encode,
    parse_named,
)
from .unique import Undecided, is_uflc, is_uklc, m_number
from . import verify as checks

SCHEMA = "ulc/1"
EXIT_OK, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass(frozen=True)
class RunConfig:
    budget: int = DEFAULT_BUDGET
    threads: int = 1
    output: str = "json"

    def __post_init__(self):
        if self.budget <= 0:
            raise UsageError("--budget must be positive")
        if self.threads <= 0:
            raise UsageError("--threads must be positive")


# -- input ----------------------------------------------------------------


def load_graph(args) -> Graph:
    given = [x for x in (args.graph6, args.edges, args.graph) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --graph6, --edges, --graph")
    if args.graph6 is not None:
        return graph6_decode(args.graph6)
    if args.edges is not None:
        return edges_json_decode(Path(args.edges).read_text())
    return parse_named(args.graph)


def load_entries(args) -> list[CorpusEntry]:
    if args.corpus:
        if args.corpus in ("planar", "connected_le7"):
            return bundled(args.corpus)
        return read_corpus(args.corpus)
    g = load_graph(args)
    return [CorpusEntry(g, {"name": args.graph or graph6_encode(g)})]


# -- output ---------------------------------------------------------------


def _emit(payload: dict, cfg: RunConfig, out) -> None:
    if cfg.output == "json":
        out.write(json.dumps({"schema": SCHEMA, **payload}) + "\n")
        return
    rows = [(k, v if isinstance(v, str) else json.dumps(v)) for k, v in payload.items()]
    width = max((len(k) for k, _ in rows), default=0)
    for k, v in rows:
        out.write(f"{k.ljust(width)}  {v}\n")


def _emit_rows(rows: list[dict], cfg: RunConfig, out) -> None:
    if cfg.output == "json":
        for row in rows:
            out.write(json.dumps({"schema": SCHEMA, **row}) + "\n")
        return
    cols = ["claim_id", "instance", "lhs", "rhs", "holds"]
    cells = [[str(r.get(c, "")) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() + "\n")


def _graph_payload(g: Graph) -> dict:
    return {"graph6": graph6_encode(g), "n": g.n, "edges": [list(e) for e in g.edges()]}


# -- subcommands ----------------------------------------------------------


def cmd_decode(args, cfg):
    text = args.text if args.text is not None else args.graph6
    if text is None:
        raise UsageError("decode needs a graph6 string")
    return _graph_payload(graph6_decode(text))


def cmd_encode(args, cfg):
    return {"graph6": graph6_encode(load_graph(args))}


def cmd_generate(args, cfg):
    params = [int(x) for x in args.params]
    if args.family == "join":
        raise UsageError("join is available from the library only")
    return {"family": args.family, **_graph_payload(generate(args.family, *params))}


def cmd_m_number(args, cfg):
    g = load_graph(args)
    res = m_number(g, Budget(cfg.budget))
    return {"decided": True, **res.to_dict()}


def cmd_uklc(args, cfg):
    if args.k is None:
        raise UsageError("uklc needs --k")
    g = load_graph(args)
    report = is_uklc(g, args.k, Budget(cfg.budget))
    return {"k": args.k, **report.to_dict()}


def cmd_uflc(args, cfg):
    if args.f is None:
        raise UsageError("uflc needs --f FILE")
    g = load_graph(args)
    data = json.loads(Path(args.f).read_text())
    try:
        sizes = [int(data[str(v)]) for v in range(g.n)]
    except KeyError as exc:
        raise UsageError(f"--f file lacks vertex {exc}") from None
    report = is_uflc(g, sizes, Budget(cfg.budget))
    return report.to_dict()


def cmd_choosable(args, cfg):
    if args.k is None:
        raise UsageError("choosable needs --k")
    g = load_graph(args)
    res = is_k_choosable(g, args.k, Budget(cfg.budget), certificates=not args.exhaustive)
    out = {"decided": True, "k": args.k, "choosable": res.choosable, "method": res.method,
           "nodes": res.nodes}
    if res.witness is not None:
        out["witness"] = res.witness.to_dict()
    return out


def cmd_chi_list(args, cfg):
    g = load_graph(args)
    return {"decided": True,
            "chi_list": list_chromatic_number(g, Budget(cfg.budget), not args.exhaustive)}


def cmd_recognize(args, cfg):
    g = load_graph(args)
    fam = args.family
    if fam == "2-choosable":
        return {"family": fam, "result": recognizers.is_2_choosable_fast(g)}
    if fam == "u2lc":
        return {"family": fam, "result": recognizers.is_u2lc_fast(g)}
    if fam == "theta":
        return {"family": fam, "lengths": recognizers.recognize_theta(g)}
    if fam == "3-list-critical":
        return recognizers.is_3_list_critical_fast(g).to_dict()
    if fam == "list-critical":
        return {"family": fam, "result": recognizers.is_list_critical_bruteforce(g, Budget(cfg.budget))}
    if fam == "edge-list-critical":
        return {"family": fam, "result": recognizers.is_edge_list_critical(g, Budget(cfg.budget))}
    raise UsageError(f"unknown family {fam!r}")


def cmd_construct(args, cfg):
    g = load_graph(args)
    kind = args.kind
    if kind == "lemma1":
        if args.k is None:
            raise UsageError("lemma1 needs --k")
        L = constructions.lemma1_assignment(g, args.k)
        return {"kind": kind, **_graph_payload(g), "assignment": L.to_dict()}
    if kind == "equality":
        order = [int(x) for x in args.order.split(",")] if args.order else None
        f, L = constructions.equality_flist(g, order)
        return {"kind": kind, **_graph_payload(g), "f": {str(v): f[v] for v in sorted(f)},
                "assignment": L.to_dict()}
    if kind == "gstar":
        if args.lists is None or args.t is None:
            raise UsageError("gstar needs --lists FILE and --t")
        L = ListAssignment.from_json(Path(args.lists).read_text(), g.n)
        return {"kind": kind, **_graph_payload(constructions.gstar(g, L, args.t))}
    if kind == "duplicate":
        if args.vertex is None:
            raise UsageError("duplicate needs --vertex")
        return {"kind": kind, **_graph_payload(constructions.duplicate_vertex(g, args.vertex))}
    raise UsageError(f"unknown construction {kind!r}")


CLAIMS = ("bound", "logbnd", "8face", "edgemnum", "planar", "critical", "sigmafv", "kcolor")


def _run_claim(job: tuple[str, CorpusEntry, int]) -> dict:
    claim, entry, budget = job
    g = entry.graph
    b = Budget(budget)
    try:
        if claim == "bound":
            o = checks.check_bound(g, entry.name, b)
        elif claim == "logbnd":
            o = checks.check_logbnd(g, entry.name, b)
        elif claim == "8face":
            pg = entry.plane_graph()
            if pg is None:
                raise checks.RejectedInput("entry has no face list")
            o = checks.check_8face(pg, entry.name, b)
        elif claim == "edgemnum":
            o = checks.check_edge_mnumber(g, entry.name, b)
        elif claim == "planar":
            o = checks.check_planar_bound(entry, b)
        elif claim == "critical":
            o = checks.check_critical_mnumber(g, entry.name, b)
        elif claim in ("sigmafv", "kcolor"):
            res = m_number(g, b)
            k = res.m - 1
            L, c = res.witnesses[k]
            if claim == "sigmafv":
                o = checks.check_sigmafv(g, (L, c), entry.name)
            else:
                o = checks.check_kcolor(g, L, c, k, entry.name)
        else:
            raise UsageError(f"unknown claim {claim!r}")
    except checks.RejectedInput as exc:
        return {"claim_id": claim, "instance": entry.name, "skipped": str(exc)}
    return o.to_dict()


def _map(fn: Callable, jobs: list, threads: int) -> list:
    if threads <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, jobs))


def _finish_rows(rows: list[dict], args, cfg, out) -> int:
    _emit_rows(rows, cfg, out)
    outcomes = [checks.CheckOutcome(**r) for r in rows if "skipped" not in r]
    if getattr(args, "figure", None):
        from .plots import plot_outcomes

        plot_outcomes(outcomes, args.figure, title=args.command)
    if cfg.output == "json":
        summary = {"summary": True, "checked": len(outcomes),
                   "skipped": len(rows) - len(outcomes),
                   "violations": sum(1 for o in outcomes if not o.holds)}
        out.write(json.dumps({"schema": SCHEMA, **summary}) + "\n")
    return EXIT_OK


def cmd_verify(args, cfg, out):
    entries = load_entries(args)
    claims = args.claim or ["bound"]
    jobs = [(c, e, cfg.budget) for e in entries for c in claims]
    return _finish_rows(_map(_run_claim, jobs, cfg.threads), args, cfg, out)


def _scan_one(job: tuple[CorpusEntry, int]) -> list[dict]:
    entry, budget = job
    return [o.to_dict() for o in checks.scan_conjecture_u3lc_planar([entry], Budget(budget))]


def cmd_scan(args, cfg, out):
    entries = bundled("planar") if not args.corpus else load_entries(args)
    jobs = [(e, cfg.budget) for e in entries]
    rows = [r for chunk in _map(_scan_one, jobs, cfg.threads) for r in chunk]
    return _finish_rows(rows, args, cfg, out)


SIMPLE = {
    "decode": cmd_decode, "encode": cmd_encode, "generate": cmd_generate,
    "m-number": cmd_m_number, "uklc": cmd_uklc, "uflc": cmd_uflc,
    "choosable": cmd_choosable, "chi-list": cmd_chi_list,
    "recognize": cmd_recognize, "construct": cmd_construct,
}
STREAMING = {"verify": cmd_verify, "scan": cmd_scan}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph6", help="graph as a graph6 string")
    common.add_argument("--edges", metavar="FILE", help='JSON {"n": .., "edges": [[u, v], ..]}')
    common.add_argument("--graph", metavar="NAME", help="named graph: figure1, C5, K4, K3,3, theta2,2,4, K4-e")
    common.add_argument("--k", type=int)
    common.add_argument("--f", metavar="FILE", help='JSON {"vertex": size, ..}')
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node-expansion limit")
    common.add_argument("--threads", type=int, default=1, help="worker processes for corpus runs")
    common.add_argument("--output", choices=("json", "table"), default="json")
    common.add_argument("--corpus", metavar="FILE", help="graph6 corpus (or 'planar', 'connected_le7')")

    parser = _Parser(prog="ulc", description="Uniquely list colorable graphs: exact search and checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("decode", parents=[common], help="graph6 to edge list")
    p.add_argument("text", nargs="?")
    sub.add_parser("encode", parents=[common], help="graph to graph6")
    p = sub.add_parser("generate", parents=[common], help="named family member")
    p.add_argument("family", choices=("path", "cycle", "complete", "complete_bipartite", "star",
                                      "theta", "figure1", "figure2"))
    p.add_argument("params", nargs="*")
    sub.add_parser("m-number", parents=[common], help="least k that is not UkLC")
    sub.add_parser("uklc", parents=[common], help="search a UkLC witness")
    sub.add_parser("uflc", parents=[common], help="search a UfLC witness")
    for name in ("choosable", "chi-list"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--exhaustive", action="store_true",
                       help="prove choosability by enumeration only (no certificate shortcuts)")
    p = sub.add_parser("recognize", parents=[common], help="structural recognizers")
    p.add_argument("--family", required=True,
                   choices=("2-choosable", "u2lc", "theta", "3-list-critical",
                            "list-critical", "edge-list-critical"))
    p = sub.add_parser("construct", parents=[common], help="build assignments and graphs with unique colorings")
    p.add_argument("--kind", required=True, choices=("lemma1", "equality", "gstar", "duplicate"))
    p.add_argument("--order", help="comma-separated vertex order for 'equality'")
    p.add_argument("--lists", metavar="FILE", help="assignment JSON for 'gstar'")
    p.add_argument("--t", type=int)
    p.add_argument("--vertex", type=int)
    p = sub.add_parser("verify", parents=[common], help="replay inequalities")
    p.add_argument("--claim", action="append", choices=CLAIMS)
    p.add_argument("--figure", metavar="PNG", help="also render the outcomes to this file")
    p = sub.add_parser("scan", parents=[common], help="U3LC planar graphs without K4")
    p.add_argument("--figure", metavar="PNG")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(args.budget, args.threads, args.output)
        if args.command in STREAMING:
            return STREAMING[args.command](args, cfg, out)
        payload = SIMPLE[args.command](args, cfg)
        _emit(payload, cfg, out)
        return EXIT_UNDECIDED if payload.get("decided") is False else EXIT_OK
    except (BudgetExceeded, Undecided) as exc:
        _emit({"decided": False, "error": str(exc)}, RunConfig(output=args.output), out)
        return EXIT_UNDECIDED
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"ulc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""
Punto de entrada de línea de comandos.

stdout lleva sólo la carga útil (JSON, CSV, graph6 o lista de aristas);
los logs y el progreso van a stderr. Códigos de salida: 0 éxito, 2 error de
entrada, 3 presupuesto agotado.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import pandas as pd
from pydantic import ValidationError

from graphcore import AntidimError, BudgetExceeded, Graph, ParameterError, TooLarge
from antiresolve import AnalysisBudget, Verdict, adim_oracle, analyze
from products import harden
from families import FAMILIES, build_family
from enumeration import enumerate_all, enumerate_connected, enumerate_free_trees
from randgen import RandomModelConfig, SweepManifest
from ingest import (
    EdgeListOptions,
    format_edge_list,
    LabeledGraph,
    load_edge_list,
    parse_edge_list,
    parse_graph6,
    read_graph6_stream,
    write_graph6,
)
from experiments import ClassificationOptions, audit_network, classify_order, classify_stream, run_manifest, sweep
from data import ResultsLogger
from events import Event, EventType, event_bus
from utils.settings import default_workers
from utils.utils import Utils


EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3

DEFAULT_HARDEN_CATALOG = ("path:2", "path:3", "complete:2", "complete:3")
_CATALOG_NAMES = {'path': "P", 'complete': "K", 'cycle': "C", 'star': "S"}


# ==================== ENTRADA / SALIDA ====================

def _emit(payload: str, out: Optional[str]) -> None:
    if not payload.endswith("\n"):
        payload += "\n"
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(payload, encoding="utf-8")
        Utils.log("CLI", f"Output written to {out}")
    else:
        sys.stdout.write(payload)
        sys.stdout.flush()


def _json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _csv(rows: List[dict]) -> str:
    return pd.DataFrame(rows).to_csv(index=False)


def _edge_options(args) -> EdgeListOptions:
    return EdgeListOptions(numeric=args.numeric, first_two_columns=args.columns2)


def _family_spec(text: str) -> Tuple[str, Graph]:
    """'name' o 'name:p1,p2' -> (etiqueta, grafo)."""
    name, _, params = text.partition(":")
    values = [int(p) for p in params.split(",") if p.strip()] if params else []
    graph = build_family(name, *values)
    short = _CATALOG_NAMES.get(name)
    label = f"{short}_{values[0]}" if short and len(values) == 1 else text
    return label, graph


def _read_graph(args) -> Graph:
    """Grafo de --graph6, --edges, --family o la primera línea graph6 de stdin."""
    if getattr(args, "graph6", None):
        return parse_graph6(args.graph6)
    if getattr(args, "edges", None):
        return load_edge_list(args.edges, _edge_options(args)).graph
    if getattr(args, "family", None):
        return _family_spec(args.family)[1]
    for line in sys.stdin.buffer:
        if line.strip():
            return parse_graph6(line)
    raise ParameterError("no input graph: use --graph6, --edges, --family or pipe a graph6 line")


def _budget(args) -> AnalysisBudget:
    values = {}
    if getattr(args, "budget", None) is not None:
        values['adim1_seconds'] = args.budget
    if getattr(args, "limit", None) is not None:
        values['oracle_limit'] = args.limit
    if getattr(args, "exact", False):
        values['exact'] = True
    return AnalysisBudget(**values)


def _print_event(event: Event) -> None:
    if event.event_type is EventType.GRAPH_FOUND:
        Utils.log("Found", f"order {event.data['order']} {event.data['graph6']} κ={event.data['kappa']}")
    elif event.event_type is EventType.BUDGET_EXCEEDED:
        Utils.log("Budget", f"⏱️ {event.data['stage']} stopped after {event.data['seconds']:.2f}s")


# ==================== SUBCOMANDOS ====================

def cmd_analyze(args) -> int:
    g = _read_graph(args)
    report = analyze(g, _budget(args))
    payload = report.to_dict()
    payload['n'] = g.n
    payload['m'] = g.edge_count
    _emit(_json(payload), args.out)
    Utils.log("Analyze", f"{report.verdict.value} (decided by {report.decided_by}) in {report.elapsed:.3f}s")
    return EXIT_BUDGET if report.verdict is Verdict.UNDECIDED else EXIT_OK


def cmd_oracle(args) -> int:
    g = _read_graph(args)
    table = adim_oracle(g, limit=args.limit)
    payload = table.to_dict()
    if args.ell is not None:
        payload['anonymity'] = {'ell': args.ell, 'k': table.anonymity_level(args.ell)}
    _emit(_json(payload), args.out)
    return EXIT_OK


def cmd_harden(args) -> int:
    g = _read_graph(args)
    catalog = [_family_spec(text) for text in (args.factor or DEFAULT_HARDEN_CATALOG)]
    advice = harden(g, catalog, verify_limit=args.verify_limit)
    for warning in advice.warnings:
        Utils.log("Harden", f"⚠️ {warning}")
    if args.format == "csv":
        _emit(_csv(advice.to_records()), args.out)
    else:
        _emit(_json(advice.to_records()), args.out)
    return EXIT_OK


def cmd_family(args) -> int:
    g = build_family(args.name, *args.param)
    if args.to == "edges":
        _emit(format_edge_list(LabeledGraph(g, tuple(range(g.n)))), args.out)
    else:
        _emit(write_graph6(g).decode("ascii"), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.trees:
        graphs = enumerate_free_trees(args.n)
    elif args.all:
        graphs = enumerate_all(args.n)
    else:
        graphs = enumerate_connected(args.n)
    lines = [write_graph6(g).decode("ascii") for g in graphs]
    Utils.log("Enumerate", f"{len(lines)} graphs of order {args.n}")
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def _sweep_config(args) -> RandomModelConfig:
    if args.model is None or args.n is None:
        raise ParameterError("sweep needs --model and --n (or --manifest)")
    return RandomModelConfig(
        model=args.model,
        n=args.n,
        m=args.m,
        p=args.p,
        seed=args.seed,
        samples=args.samples,
        ba_initial=args.ba_initial,
    )


def cmd_sweep(args) -> int:
    workers = args.workers or default_workers()
    budget = _budget(args)
    logger = ResultsLogger(args.save) if args.save else None
    if args.manifest:
        manifest = SweepManifest.from_json(Path(args.manifest).read_text(encoding="utf-8"))
        records = run_manifest(manifest, workers, budget, logger)
    else:
        records = [sweep(_sweep_config(args), workers, budget)]
        if logger is not None:
            logger.log_sweep(records[0])
    if logger is not None:
        logger.repository.write_table(args.save, [r.to_table_row() for r in records])
    if args.format == "csv":
        _emit(_csv([r.to_table_row() for r in records]), args.out)
    else:
        _emit("\n".join(json.dumps(r.to_dict(), sort_keys=True) for r in records), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    options = ClassificationOptions(density=args.density, workers=args.workers or default_workers())
    budget = _budget(args)
    found_lines: List[str] = []
    on_found = (lambda g: found_lines.append(write_graph6(g).decode("ascii"))) if args.found_out else None

    if args.enumerate:
        rows = [
            classify_order(n, options, budget, with_total=not args.no_total, on_found=on_found)
            for n in args.enumerate
        ]
    else:
        source = args.graph6_stream or "-"
        if source == "-":
            reader = read_graph6_stream(sys.stdin.buffer, source="stdin")
            rows = classify_stream(reader, options, budget, on_found)
        else:
            with open(source, "rb") as f:
                reader = read_graph6_stream(f, source=source)
                rows = classify_stream(reader, options, budget, on_found)
        if reader.malformed:
            Utils.log("Classify", f"⚠️ {len(reader.malformed)} malformed graph6 lines skipped")

    if args.found_out:
        Path(args.found_out).write_text("".join(line + "\n" for line in found_lines), encoding="ascii")
    if args.save:
        logger = ResultsLogger(args.save)
        for row in rows:
            logger.log_classification(row)
        logger.repository.write_table(args.save, [row.to_table_row() for row in rows])
    if args.format == "csv":
        _emit(_csv([row.to_table_row() for row in rows]), args.out)
    else:
        _emit("\n".join(json.dumps(row.to_dict(), sort_keys=True) for row in rows), args.out)
    return EXIT_BUDGET if any(row.undecided for row in rows) else EXIT_OK


def cmd_audit(args) -> int:
    lg = load_edge_list(args.edges, _edge_options(args))
    audit = audit_network(lg, args.name or Path(args.edges).stem, _budget(args))
    if args.save:
        ResultsLogger(args.save).log_audit(audit)
    _emit(_json(audit.to_dict()), args.out)
    return EXIT_BUDGET if audit.verdict == Verdict.UNDECIDED.value else EXIT_OK


def cmd_convert(args) -> int:
    if args.edges:
        lg = load_edge_list(args.edges, _edge_options(args))
    elif args.graph6:
        g = parse_graph6(args.graph6)
        lg = LabeledGraph(g, tuple(range(g.n)))
    elif args.to == "graph6":
        # Sin fichero: stdin es una lista de aristas
        lg = parse_edge_list(sys.stdin, _edge_options(args), source="stdin")
    else:
        g = _read_graph(args)
        lg = LabeledGraph(g, tuple(range(g.n)))
    if args.to == "edges":
        _emit(format_edge_list(lg), args.out)
    else:
        _emit(write_graph6(lg.graph).decode("ascii"), args.out)
    return EXIT_OK


# ==================== PARSER ====================

def _add_graph_input(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--graph6", help="graph6 string")
    group.add_argument("--edges", help="edge-list file (.mtx read as Matrix Market)")
    group.add_argument("--family", help="named family, e.g. petersen or path:5")
    _add_edge_flags(parser)


def _add_edge_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--numeric", action="store_true", help="labels must be integers")
    parser.add_argument("--columns2", action="store_true", help="keep the first two columns only")


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--budget", type=float, help="ADIM-1 wall-time budget in seconds")
    parser.add_argument("--limit", type=int, help="max order for the brute-force oracle")


def _add_output(parser: argparse.ArgumentParser, formats: Sequence[str] = ("json",)) -> None:
    parser.add_argument("--out", help="write the payload to this path instead of stdout")
    parser.add_argument("--format", choices=list(formats), default=formats[0])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antidim",
        description="1-metric antidimension checks, bounds, product hardening and experiments",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", dest="verbose", action="store_true", default=None)
    verbosity.add_argument("--quiet", dest="verbose", action="store_false")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="verdict on Adim(G) = 1 with bounds")
    _add_graph_input(p)
    _add_budget(p)
    p.add_argument("--exact", action="store_true", help="also run the oracle on tiny graphs")
    _add_output(p)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("oracle", help="exhaustive adim_k table for tiny graphs")
    _add_graph_input(p)
    p.add_argument("--limit", type=int, help="max order (default ANTIDIM_ORACLE_LIMIT)")
    p.add_argument("--ell", type=int, help="also report the (k, ell)-anonymity k")
    _add_output(p)
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("harden", help="rank product embeddings that hide Adim(G) = 1")
    _add_graph_input(p)
    p.add_argument("--factor", action="append", help="second factor, e.g. path:3 (repeatable)")
    p.add_argument("--verify-limit", type=int, default=12, help="verify products up to this order")
    _add_output(p, ("json", "csv"))
    p.set_defaults(handler=cmd_harden)

    p = sub.add_parser("family", help="emit a named family member")
    p.add_argument("--name", required=True, choices=sorted(FAMILIES))
    p.add_argument("--param", type=int, nargs="*", default=[])
    p.add_argument("--to", choices=["graph6", "edges"], default="graph6")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("enumerate", help="graph6 stream of non-isomorphic graphs")
    p.add_argument("--n", type=int, required=True)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--all", action="store_true", help="include disconnected graphs")
    kind.add_argument("--trees", action="store_true", help="free trees only (n <= 10)")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("sweep", help="random-model sweep")
    p.add_argument("--model", choices=["ba", "gnm", "gnp"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--ba-initial", choices=["complete", "star"], default="complete")
    p.add_argument("--manifest", help="JSON sweep manifest")
    p.add_argument("--workers", type=int)
    p.add_argument("--save", help="experiment name for the results directory")
    _add_budget(p)
    _add_output(p, ("json", "csv"))
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("classify", help="classification rows per order")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--enumerate", type=int, nargs="+", metavar="N", help="orders from the built-in enumeration")
    source.add_argument("--graph6-stream", help="graph6 file, '-' for stdin (default)")
    p.add_argument("--density", action="store_true", help="add the per-density breakdown")
    p.add_argument("--found-out", help="write the found graphs as graph6 to this file")
    p.add_argument("--no-total", action="store_true", help="skip the all-graphs count")
    p.add_argument("--workers", type=int)
    p.add_argument("--save", help="experiment name for the results directory")
    _add_budget(p)
    _add_output(p, ("json", "csv"))
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("audit", help="audit a real network edge list")
    p.add_argument("--edges", required=True)
    p.add_argument("--name")
    _add_edge_flags(p)
    p.add_argument("--save", help="experiment name for the results directory")
    _add_budget(p)
    _add_output(p)
    p.set_defaults(handler=cmd_audit)

    p = sub.add_parser("convert", help="edge list <-> graph6")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--graph6")
    group.add_argument("--edges")
    _add_edge_flags(p)
    p.add_argument("--to", choices=["graph6", "edges"], default="graph6")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_convert)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parses argv, dispatches the subcommand and maps errors to exit codes.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT

    if args.verbose is not None:
        Utils.set_verbose(args.verbose)
    event_bus.subscribe(EventType.GRAPH_FOUND, _print_event)
    event_bus.subscribe(EventType.BUDGET_EXCEEDED, _print_event)
    try:
        return args.handler(args)
    except (BudgetExceeded, TooLarge) as e:
        Utils.log_error("CLI", f"limit reached: {e}")
        return EXIT_BUDGET
    except (ValueError, ValidationError, OSError, AntidimError) as e:
        Utils.log_error("CLI", str(e))
        return EXIT_INPUT
    finally:
        event_bus.unsubscribe(EventType.GRAPH_FOUND, _print_event)
        event_bus.unsubscribe(EventType.BUDGET_EXCEEDED, _print_event)


def main() -> None:
    sys.exit(run())

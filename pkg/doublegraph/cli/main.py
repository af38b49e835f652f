#!/usr/bin/env python3
"""
doublegraph command line.

Usage:
    doublegraph analyze graph.elt --n 2,3          # invariants and predictions
    doublegraph double graph.elt -n 3 -o d3.elt    # emit D_n[G]
    doublegraph lift c5.elt -n 3                   # Hamiltonian cycle of D_n[G]
    doublegraph verify --pmax 5 --n 2,3 --jobs 4   # machine-check every claim
    doublegraph probe --pmax 6                     # MidBand max-lambda search

Exit codes: 0 ok, 1 a theorem check failed, 2 bad input,
3 input not Hamiltonian, 4 lift infeasible.
"""

import argparse
import json
import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from pydantic import ValidationError

from ..core.classify import (
    GraphProfile,
    conjectured_lambda_double_n,
    floor_avg_degree_law,
    is_max_kappa,
    is_max_lambda,
    lambda_regime,
    predict_kappa_double_n,
    predict_lambda_double,
    predict_lambda_double_n_as_stated,
    predict_max_kappa_double_n,
    predict_max_lambda_double_n,
    window_class,
)
from ..core.config import Config, load_config
from ..core.formats import emit_dot, emit_elt, read_graph
from ..core.graph import EmptyGraph, Graph, GraphError
from ..core.hamilton import TooShortForLift, hamiltonian_cycle, lift_hamiltonian
from ..core.product import ZeroOrder, double_n
from ..harness.checks import parse_check_ids
from ..harness.corpus import CorpusSpec
from ..harness.report import (
    AnalyzeReport,
    Prediction,
    render_analyze,
    render_probe,
    render_suite,
)
from ..harness.suite import probe_midband_max_lambda, run_suite

logger = logging.getLogger(__name__)

_LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s - %(message)s"
_LOG_MAX_BYTES = 5 * 1024 * 1024
_LOG_BACKUP_COUNT = 3

EXIT_OK = 0
EXIT_THEOREM_FAILED = 1
EXIT_INPUT = 2
EXIT_NOT_HAMILTONIAN = 3
EXIT_LIFT_INFEASIBLE = 4


class Colors:
    """ANSI color codes for terminal output."""
    GREEN = '\033[92m'
    YELLOW = '\033[93m'
    RED = '\033[91m'
    BOLD = '\033[1m'
    DIM = '\033[2m'
    END = '\033[0m'


_STATUS_COLORS = {
    "PASS": Colors.GREEN,
    "FAIL": Colors.RED + Colors.BOLD,
    "AUDIT": Colors.YELLOW,
    "EMPTY": Colors.DIM,
}


def _painter(enabled: bool) -> Optional[Callable[[str, str], str]]:
    if not enabled:
        return None

    def paint(status: str, text: str) -> str:
        code = _STATUS_COLORS.get(status)
        return f"{code}{text}{Colors.END}" if code else text

    return paint


def _setup_logging(config: Config, verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, config.log_level, logging.WARNING)
    logging.basicConfig(level=level, format=_LOG_FORMAT, stream=sys.stderr)
    if config.log_file:
        config.log_file.parent.mkdir(parents=True, exist_ok=True)
        handler = logging.handlers.RotatingFileHandler(
            config.log_file,
            maxBytes=_LOG_MAX_BYTES,
            backupCount=_LOG_BACKUP_COUNT,
            encoding="utf-8",
        )
        handler.setFormatter(logging.Formatter(_LOG_FORMAT))
        logging.getLogger().addHandler(handler)


def _int_list(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def _name_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _random_spec(text: str) -> List[int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected COUNT:P:M, got {text!r}")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected COUNT:P:M integers, got {text!r}")


def _corpus_spec(args, p_max: int, fixtures: List[str], seed: int,
                 p_min: int = 2, connected_only: bool = True) -> CorpusSpec:
    if args.random:
        count, rp, rm = args.random
        return CorpusSpec(mode="random", random_count=count, random_p=rp, random_m=rm,
                          seed=seed, connected_only=connected_only, fixtures=fixtures)
    return CorpusSpec(mode="exhaustive", p_min=p_min, p_max=p_max, seed=seed,
                      connected_only=connected_only, fixtures=fixtures)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("[cli] wrote %s", out)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- analyze

def build_analyze_report(g: Graph, name: str, n_values: Sequence[int],
                         exact: bool = False) -> AnalyzeReport:
    if g.p < 1:
        raise EmptyGraph("analyze needs at least one vertex")
    if any(n < 1 for n in n_values):
        raise ZeroOrder(f"layer counts must be >= 1, got {list(n_values)}")
    prof = GraphProfile(g)
    kr, lr = prof.kappa_result, prof.lambda_result
    t, t0 = prof.decomposition.t, prof.decomposition.t0
    eligible = prof.connected and g.p >= 2

    report = AnalyzeReport(
        input=name,
        p=g.p,
        q=g.q,
        degrees=list(prof.metrics.degrees),
        delta=prof.delta,
        max_degree=prof.metrics.max_degree,
        connected=prof.connected,
        kappa=kr.value,
        kappa_witness=list(kr.witness.vertices) if kr.witness else None,
        kappa_witness_absent_reason=kr.witness_absent_reason,
        lam=lr.value,
        lambda_witness=[tuple(e) for e in lr.witness.edges] if lr.witness else None,
        lambda_witness_absent_reason=lr.witness_absent_reason,
        floor_avg=prof.floor_avg,
        t=t,
        t0=t0,
        max_kappa=is_max_kappa(prof),
        max_lambda=is_max_lambda(prof),
    )
    if g.p == 1:
        return report
    if eligible:
        report.regime = lambda_regime(prof).value
        report.lambda_double = predict_lambda_double(prof)
    for n in sorted(set(n_values)):
        pred = Prediction(
            n=n,
            window=window_class(prof, n).value,
            kappa_double_n=predict_kappa_double_n(prof, n),
            max_kappa_double_n=predict_max_kappa_double_n(prof, n),
            max_lambda_double_n=predict_max_lambda_double_n(prof, n),
            floor_avg_double_n=floor_avg_degree_law(prof, n),
        )
        if eligible:
            pred.lambda_double_n_as_stated = predict_lambda_double_n_as_stated(prof, n)
            pred.conjectured_lambda_double_n = conjectured_lambda_double_n(prof, n)
        if exact:
            d = GraphProfile(double_n(g, n).graph)
            pred.exact_kappa_double_n = d.kappa
            pred.exact_lambda_double_n = d.lam
            pred.exact_max_kappa_double_n = is_max_kappa(d)
            pred.exact_max_lambda_double_n = is_max_lambda(d)
        report.predictions.append(pred)
    return report


def cmd_analyze(args, config: Config) -> int:
    g = read_graph(args.path, graph6=args.g6)
    report = build_analyze_report(g, Path(args.path).name, args.n, exact=args.exact)
    if args.json:
        _emit(report.to_json(), None)
    else:
        _emit(render_analyze(report), None)
    return EXIT_OK


# -- double

def cmd_double(args, config: Config) -> int:
    g = read_graph(args.path, graph6=args.g6)
    layered = double_n(g, args.n)
    if args.dot:
        text = emit_dot(layered.graph, layered=layered, name=f"D{args.n}")
    else:
        text = emit_elt(layered.graph)
    _emit(text, args.out)
    return EXIT_OK


# -- lift

def cmd_lift(args, config: Config) -> int:
    g = read_graph(args.path, graph6=args.g6)
    gamma = hamiltonian_cycle(g)
    if gamma is None:
        print(f"{Path(args.path).name}: no Hamiltonian cycle", file=sys.stderr)
        return EXIT_NOT_HAMILTONIAN
    try:
        cycle = lift_hamiltonian(g, gamma, args.n)
    except TooShortForLift as e:
        print(f"lift infeasible: {e}", file=sys.stderr)
        return EXIT_LIFT_INFEASIBLE
    if args.json:
        _emit(json.dumps(cycle), None)
    else:
        _emit(" ".join(map(str, cycle)), None)
    return EXIT_OK


# -- verify

def cmd_verify(args, config: Config) -> int:
    suite = config.suite
    corpus = _corpus_spec(
        args,
        p_max=args.pmax if args.pmax is not None else suite.p_max,
        fixtures=args.fixtures if args.fixtures is not None else suite.fixtures,
        seed=args.seed if args.seed is not None else suite.seed,
        p_min=args.pmin if args.pmin is not None else suite.p_min,
        connected_only=args.connected_only,
    )
    checks = parse_check_ids(args.checks) if args.checks else None
    n_values = args.n if args.n is not None else suite.n_values
    jobs = args.jobs if args.jobs is not None else suite.jobs

    report = run_suite(corpus, checks, n_values, jobs=max(1, jobs))
    if args.out:
        Path(args.out).write_text(report.to_json() + "\n", encoding="utf-8")
    if args.json:
        _emit(report.to_json(), None)
    else:
        _emit(render_suite(report, color=_painter(args.color)), None)
    return EXIT_THEOREM_FAILED if report.failed else EXIT_OK


# -- probe

def cmd_probe(args, config: Config) -> int:
    probe = config.probe
    corpus = _corpus_spec(
        args,
        p_max=args.pmax if args.pmax is not None else probe.p_max,
        fixtures=args.fixtures if args.fixtures is not None else probe.fixtures,
        seed=args.seed if args.seed is not None else config.suite.seed,
    )
    report = probe_midband_max_lambda(corpus, jobs=config.suite.jobs)
    _emit(report.to_json() if args.json else render_probe(report), None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doublegraph",
        description="Double graphs D_n[G]: connectivity, classification, Hamiltonian lifts",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument("-c", "--config", help="Path to doublegraph.yaml config file")
    parser.add_argument("--no-color", dest="no_color", action="store_true",
                        help="Plain table output")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("path", help="Graph file (ELT v1, or graph6 with --g6)")
        p.add_argument("--g6", action="store_true", help="Read the input as graph6")

    p = sub.add_parser("analyze", help="Invariants, classification and predictions")
    graph_input(p)
    p.add_argument("--n", type=_int_list, default=[2], help="Layer counts, e.g. 2,3")
    p.add_argument("--exact", action="store_true", help="Also compute D_n[G] exactly")
    p.add_argument("--json", action="store_true", help="JSON report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("double", help="Emit D_n[G]")
    graph_input(p)
    p.add_argument("-n", type=int, default=2, help="Layer count (default 2)")
    p.add_argument("-o", "--out", help="Output file (default stdout)")
    p.add_argument("--dot", action="store_true", help="Graphviz DOT instead of ELT")
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("lift", help="Lift a Hamiltonian cycle of G into D_n[G]")
    graph_input(p)
    p.add_argument("-n", type=int, default=2, help="Layer count (default 2)")
    p.add_argument("--json", action="store_true", help="Print the cycle as a JSON array")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify", help="Check every claim on a graph corpus")
    p.add_argument("--pmin", type=int, default=None)
    p.add_argument("--pmax", type=int, default=None)
    p.add_argument("--n", type=_int_list, default=None, help="Layer counts, e.g. 2,3")
    p.add_argument("--checks", type=_name_list, default=None, help="Comma-separated check ids")
    p.add_argument("--jobs", type=int, default=None, help="Worker processes")
    p.add_argument("--random", type=_random_spec, default=None, metavar="COUNT:P:M")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--fixtures", type=_name_list, default=None, help="Named graphs appended")
    p.add_argument("--connected-only", dest="connected_only",
                   action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--json", action="store_true", help="JSON report on stdout")
    p.add_argument("--out", help="Also write the JSON report to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("probe", help="Is D[G] max-lambda for MidBand graphs?")
    p.add_argument("--pmax", type=int, default=None)
    p.add_argument("--random", type=_random_spec, default=None, metavar="COUNT:P:M")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--fixtures", type=_name_list, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_probe)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    args.color = not args.no_color and sys.stdout.isatty()

    try:
        config = load_config(Path(args.config)) if args.config else load_config()
    except (ValidationError, OSError) as e:
        print(f"{Colors.RED if args.color else ''}config error:{Colors.END if args.color else ''} {e}",
              file=sys.stderr)
        return EXIT_INPUT
    _setup_logging(config, args.verbose)

    try:
        return args.func(args, config)
    except (GraphError, ValidationError, OSError) as e:
        logger.debug("[cli] %s failed", args.command, exc_info=True)
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Settings resolve as: built-in defaults, then ``--config`` file, then
``SYMROUTE_*`` environment variables, then flags. Exit codes: 0 success,
1 usage or input error, 2 the sample could not be executed.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Sequence

from .config import ConfigError, load_config
from .gateway import GatewayConfig, GatewayError, make_client
from .harness import (
    STRATEGIES,
    DatasetError,
    Pipeline,
    ReportRow,
    WrongTaskCount,
    compute_metrics,
    emit_report,
    load_dataset,
    problem_from_json,
    run_strategy,
    split_tasks,
    write_run_log,
)
from .ir import Problem, SlKind
from .parsers import ParseError, parse_csp, parse_fol, parse_lp
from .router import RouterConfig, adaptive_select, extract_features, heuristic_select, random_select

EXIT_OK, EXIT_USAGE, EXIT_NOT_EXECUTED = 0, 1, 2

ENV_KEYS = {
    "SYMROUTE_BASE_URL": "gateway.base_url",
    "SYMROUTE_MODEL": "gateway.model",
    "SYMROUTE_TIMEOUT": "gateway.timeout",
    "SYMROUTE_RETRIES": "gateway.retries",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, help="key-value settings file")
    p.add_argument("--replay", type=Path, metavar="DIR", help="answer from stored exchanges only")
    p.add_argument("--record", type=Path, metavar="DIR", help="append exchanges to DIR/exchanges.jsonl")
    p.add_argument("--model", help="chat model name")
    p.add_argument("--base-url", help="chat-completions endpoint base URL")
    p.add_argument("--seed", type=int, default=None, help="seed for random routing")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symroute", description="Route a logic problem to FOL, LP or SAT, "
                     "translate it with a chat model and solve it symbolically.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve = sub.add_parser("solve", help="route, translate and solve one problem")
    solve.add_argument("problem", help="problem JSON file, or inline JSON object")
    solve.add_argument("--strategy", choices=STRATEGIES, default="adaptive")
    _common(solve)

    ev = sub.add_parser("eval", help="evaluate strategies over a JSONL dataset")
    ev.add_argument("dataset", type=Path, help="JSONL file, one problem per line")
    ev.add_argument("--strategies", default="fixed-lp,fixed-fol,fixed-sat,random,adaptive",
                    help=f"comma-separated subset of {', '.join(STRATEGIES)}")
    ev.add_argument("--output", type=Path, default=Path("reports"), metavar="DIR",
                    help="where report.csv, report.md and runs.jsonl go (default: reports)")
    ev.add_argument("--format", choices=("csv", "md"), action="append",
                    help="report format (repeatable; default both)")
    ev.add_argument("--jobs", type=int, default=1, metavar="N", help="concurrent samples")
    _common(ev)

    route = sub.add_parser("route", help="show the language chosen for a problem")
    route.add_argument("problem")
    how = route.add_mutually_exclusive_group()
    how.add_argument("--heuristic", action="store_const", dest="how", const="heuristic")
    how.add_argument("--llm", action="store_const", dest="how", const="llm")
    how.add_argument("--random", action="store_const", dest="how", const="random")
    _common(route)

    tr = sub.add_parser("translate", help="print a translation and whether it parses")
    tr.add_argument("problem")
    tr.add_argument("--sl", required=True, choices=("fol", "lp", "sat"))
    _common(tr)
    return parser


def _settings(args: argparse.Namespace) -> dict[str, list[str]]:
    settings: dict[str, list[str]] = {}
    if args.config is not None:
        try:
            settings.update(load_config(args.config))
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from None
    for env, key in ENV_KEYS.items():
        if os.environ.get(env):
            settings[key] = [os.environ[env]]
    return settings


def _client(args: argparse.Namespace, settings: dict[str, list[str]]):
    try:
        cfg = GatewayConfig.from_mapping(settings, model=args.model, base_url=args.base_url)
    except ValueError as exc:
        raise UsageError(f"bad gateway settings: {exc}") from None
    try:
        return make_client(cfg, replay=args.replay, record=args.record)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot load replay store: {exc}") from None


def _seed(args: argparse.Namespace, settings: dict[str, list[str]]) -> int:
    if args.seed is not None:
        return args.seed
    raw = settings.get("seed", ["0"])[-1]
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"seed must be an integer, got {raw!r}") from None


def _load_problem(spec: str) -> Problem:
    text = spec
    if not spec.lstrip().startswith("{"):
        try:
            text = Path(spec).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read problem: {exc}") from None
    try:
        return problem_from_json(json.loads(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"invalid problem: {exc}") from None


def cmd_solve(args: argparse.Namespace, settings: dict[str, list[str]]) -> int:
    problem = _load_problem(args.problem)
    pipeline = Pipeline(_client(args, settings), seed=_seed(args, settings),
                        router_config=RouterConfig.from_mapping(settings))
    record = pipeline.run_sample(problem, args.strategy)
    print(f"route: {record.chosen.value if record.chosen else '-'} ({args.strategy})")
    for note in record.notes:
        print(f"note: {note}")
    print("translation:")
    print(record.translation.rstrip() or "(none)")
    if record.executed:
        print(f"verdict: {problem.format_option(record.predicted)}")
    else:
        print(f"verdict: not executed ({record.failure}: {record.detail})")
    print(json.dumps(record.to_json(), ensure_ascii=False, sort_keys=True))
    return EXIT_OK if record.executed else EXIT_NOT_EXECUTED


def cmd_eval(args: argparse.Namespace, settings: dict[str, list[str]]) -> int:
    strategies = [s.strip() for s in args.strategies.split(",") if s.strip()]
    unknown = [s for s in strategies if s not in STRATEGIES]
    if unknown or not strategies:
        raise UsageError(f"unknown strategies: {', '.join(unknown) or '(none)'}")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    try:
        dataset = load_dataset(args.dataset)
    except OSError as exc:
        raise UsageError(f"cannot read dataset: {exc}") from None
    except DatasetError as exc:
        raise UsageError(str(exc)) from None
    for e in dataset.errors:
        print(f"{args.dataset}:{e.line}: skipped: {e.message}", file=sys.stderr)
    if not dataset.problems:
        raise UsageError("dataset has no valid problems")

    pipeline = Pipeline(_client(args, settings), seed=_seed(args, settings),
                        router_config=RouterConfig.from_mapping(settings))
    rows: list[ReportRow] = []
    records = []
    for strategy in strategies:
        recs = run_strategy(pipeline, dataset.problems, strategy, jobs=args.jobs)
        records += recs
        m = compute_metrics(recs, dataset.chance)
        rows.append(ReportRow(strategy, dataset.name, m))
        print(f"{strategy:<20} overall {100 * m.overall_acc:6.2f}%  "
              f"exec-rate {100 * m.exec_rate:6.2f}%  exec-acc {100 * m.exec_acc:6.2f}%  n={m.n}")
    formats = args.format or ["csv", "md"]
    try:
        for fmt in formats:
            path = emit_report(rows, args.output / f"report.{fmt}", fmt)
            print(f"wrote {path}")
        print(f"wrote {write_run_log(records, args.output / 'runs.jsonl')}")
    except OSError as exc:
        print(f"symroute: cannot write reports: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_route(args: argparse.Namespace, settings: dict[str, list[str]]) -> int:
    problem = _load_problem(args.problem)
    router_config = RouterConfig.from_mapping(settings)
    how = args.how or "heuristic"
    if how == "random":
        decision = random_select(problem.id, _seed(args, settings))
    elif how == "llm":
        decision = adaptive_select(problem, _client(args, settings), router_config)
        if decision.degraded and decision.degraded.startswith("gateway"):
            print(f"symroute: {decision.degraded}", file=sys.stderr)
            return EXIT_NOT_EXECUTED
    else:
        fv = extract_features(problem, router_config)
        decision = heuristic_select(fv, router_config)
        print(f"features: quantifier={fv.quantifier} syllogism={fv.syllogism} "
              f"conditional={fv.conditional} ordering={fv.ordering} options={fv.option_arity}")
    print(decision.chosen.value)
    if decision.feature_scores:
        print("scores: " + ", ".join(f"{k.value}={v}" for k, v in decision.feature_scores.items()))
    if decision.degraded:
        print(f"note: degraded to heuristic ({decision.degraded})")
    print(f"rationale: {decision.rationale}")
    return EXIT_OK


def cmd_translate(args: argparse.Namespace, settings: dict[str, list[str]]) -> int:
    problem = _load_problem(args.problem)
    kind = SlKind(args.sl.upper())
    pipeline = Pipeline(_client(args, settings))
    try:
        text = pipeline.translate(problem, kind)
    except GatewayError as exc:
        print(f"symroute: {exc}", file=sys.stderr)
        return EXIT_NOT_EXECUTED
    print(text.rstrip())
    try:
        if kind is SlKind.SAT:
            parse_csp(text, option_count=1 if problem.truth_valued else len(problem.options))
        else:
            parse = parse_fol if kind is SlKind.FOL else parse_lp
            for block in split_tasks(problem, text):
                parse(block)
    except ParseError as exc:
        print(f"parse: error {exc.diagnostic}")
        return EXIT_NOT_EXECUTED
    except WrongTaskCount as exc:
        print(f"parse: error {exc}")
        return EXIT_NOT_EXECUTED
    print("parse: ok")
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "eval": cmd_eval, "route": cmd_route, "translate": cmd_translate}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        settings = _settings(args)
        return COMMANDS[args.command](args, settings)
    except (UsageError, ConfigError) as exc:
        print(f"symroute: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

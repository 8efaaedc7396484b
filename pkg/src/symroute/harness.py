"""Datasets, the route-translate-solve pipeline, metrics and reports."""

from __future__ import annotations

import csv
import io
import json
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from . import csp_engine, lp_engine
from .fol import SaturationLimits, decide
from .gateway import Client, GatewayError, build_translation_prompt
from .ir import Metrics, Problem, RunRecord, SlKind, SolverError, TruthLabel
from .parsers import ParseError, parse_csp, parse_fol, parse_lp
from .router import (
    RouteDecision,
    RouterConfig,
    adaptive_select,
    extract_features,
    heuristic_select,
    random_select,
)

log = logging.getLogger(__name__)

FIXED = {"fixed-fol": SlKind.FOL, "fixed-lp": SlKind.LP, "fixed-sat": SlKind.SAT}
STRATEGIES = ("fixed-fol", "fixed-lp", "fixed-sat", "random", "adaptive", "adaptive-heuristic")
DISPLAY_NAMES = {
    "fixed-lp": "LP",
    "fixed-fol": "FOL",
    "fixed-sat": "SAT",
    "random": "Random selection",
    "adaptive": "Adaptive selection",
    "adaptive-heuristic": "Adaptive selection (heuristic)",
}


# -- datasets ---------------------------------------------------------------


class DatasetError(ValueError):
    pass


@dataclass(frozen=True)
class LoadError:
    line: int
    message: str


@dataclass
class Dataset:
    name: str
    problems: list[Problem]
    errors: list[LoadError] = field(default_factory=list)

    @property
    def chance(self) -> float:
        return dataset_chance(self.problems)


def problem_from_json(d: dict) -> Problem:
    """Build a :class:`Problem` from the dataset schema; raises ValueError/KeyError/TypeError."""
    if not isinstance(d, dict):
        raise TypeError("record is not a JSON object")
    context = d["context"]
    if isinstance(context, str):
        context = [context]
    if not isinstance(context, list) or not all(isinstance(c, str) for c in context):
        raise TypeError("context must be a list of strings")
    options = d["options"]
    if not isinstance(options, list) or not all(isinstance(o, str) for o in options):
        raise TypeError("options must be a list of strings")
    gold = d["answer_index"]
    if not isinstance(gold, int) or isinstance(gold, bool):
        raise TypeError("answer_index must be an integer")
    return Problem(
        id=str(d["id"]),
        context=tuple(context),
        question=str(d["question"]),
        options=tuple(options),
        gold=gold,
        source=str(d.get("source", "")),
    )


def problem_to_json(p: Problem) -> dict:
    out = {"id": p.id, "context": list(p.context), "question": p.question,
           "options": list(p.options), "answer_index": p.gold}
    if p.source:
        out["source"] = p.source
    return out


def load_dataset(path: str | Path) -> Dataset:
    """Read a JSONL dataset. Bad lines are collected; duplicate ids are fatal."""
    path = Path(path)
    problems: list[Problem] = []
    errors: list[LoadError] = []
    seen: dict[str, int] = {}
    with path.open(encoding="utf-8") as fh:
        for number, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                problem = problem_from_json(json.loads(line))
            except json.JSONDecodeError as exc:
                errors.append(LoadError(number, f"malformed JSON: {exc.msg}"))
                continue
            except KeyError as exc:
                errors.append(LoadError(number, f"missing field {exc.args[0]!r}"))
                continue
            except (TypeError, ValueError) as exc:
                errors.append(LoadError(number, str(exc)))
                continue
            if problem.id in seen:
                raise DatasetError(
                    f"{path}:{number}: duplicate id {problem.id!r} (first on line {seen[problem.id]})"
                )
            seen[problem.id] = number
            problems.append(problem)
    for e in errors:
        log.warning("%s:%d: %s", path, e.line, e.message)
    return Dataset(path.stem, problems, errors)


def dataset_chance(problems: Sequence[Problem]) -> float:
    """Mean guessing accuracy, 1/len(options) averaged over problems."""
    if not problems:
        raise ValueError("no problems")
    return sum(p.chance for p in problems) / len(problems)


# -- solving a translation --------------------------------------------------


class UnmappableVerdict(SolverError):
    kind = "unmappable-verdict"


class WrongTaskCount(SolverError):
    kind = "parse"


_SEPARATOR = re.compile(r"^[ \t]*---[ \t]*$", re.MULTILINE)


def split_tasks(problem: Problem, text: str) -> list[str]:
    """Split a FOL/LP translation into one task per option (``---`` separated)."""
    blocks = [b for b in _SEPARATOR.split(text) if b.strip()]
    want = 1 if problem.truth_valued else len(problem.options)
    if len(blocks) != want:
        raise WrongTaskCount(f"expected {want} task block(s), found {len(blocks)}")
    return blocks


def _option_for(problem: Problem, label: TruthLabel) -> int:
    index = problem.index_of(label)
    if index is None:
        raise UnmappableVerdict(f"verdict {label.value} is not among the options")
    return index


@dataclass(frozen=True)
class SolverLimits:
    fol: SaturationLimits = SaturationLimits()
    lp: lp_engine.LpLimits = lp_engine.LpLimits()


def solve_translation(
    problem: Problem, kind: SlKind, text: str, limits: SolverLimits = SolverLimits()
) -> int:
    """Parse ``text`` as ``kind``, run the matching engine and return an option index.

    Raises :class:`ParseError` or a :class:`SolverError` subclass when the
    sample cannot be answered.
    """
    if kind is SlKind.SAT:
        want = 1 if problem.truth_valued else len(problem.options)
        task = parse_csp(text, option_count=want)
        if problem.truth_valued:
            return _option_for(problem, csp_engine.classify(task, task.statements[0]))
        return csp_engine.answer_multichoice(task)

    def verdict(block: str) -> TruthLabel:
        if kind is SlKind.FOL:
            return decide(parse_fol(block), limits.fol)
        return lp_engine.answer(parse_lp(block), limits.lp)

    blocks = split_tasks(problem, text)
    if problem.truth_valued:
        return _option_for(problem, verdict(blocks[0]))
    labels = [verdict(b) for b in blocks]
    winners = [i for i, label in enumerate(labels) if label is TruthLabel.TRUE]
    if len(winners) != 1:
        raise csp_engine.NoUniqueAnswer(f"{len(winners)} options are entailed")
    return winners[0]


# -- pipeline ---------------------------------------------------------------


class Pipeline:
    def __init__(
        self,
        client: Client,
        *,
        seed: int = 0,
        router_config: RouterConfig = RouterConfig(),
        limits: SolverLimits = SolverLimits(),
    ):
        self.client = client
        self.seed = seed
        self.router_config = router_config
        self.limits = limits

    def route(self, problem: Problem, strategy: str) -> RouteDecision:
        if strategy in FIXED:
            return RouteDecision(FIXED[strategy], strategy, "fixed")
        if strategy == "random":
            return random_select(problem.id, self.seed)
        if strategy == "adaptive":
            return adaptive_select(problem, self.client, self.router_config)
        if strategy == "adaptive-heuristic":
            fv = extract_features(problem, self.router_config)
            decision = heuristic_select(fv, self.router_config)
            return RouteDecision(decision.chosen, strategy, decision.rationale,
                                 decision.feature_scores)
        raise ValueError(f"unknown strategy {strategy!r}")

    def translate(self, problem: Problem, kind: SlKind) -> str:
        return self.client.complete(build_translation_prompt(problem, kind))

    def run_sample(self, problem: Problem, strategy: str) -> RunRecord:
        decision = self.route(problem, strategy)
        notes = (f"degraded to heuristic: {decision.degraded}",) if decision.degraded else ()

        def failed(kind: str, detail: str, translation: str = "") -> RunRecord:
            return RunRecord(problem.id, strategy, decision.chosen, translation,
                             executed=False, predicted=None, correct=False,
                             fallback_applied=True, failure=kind, detail=detail, notes=notes)

        try:
            translation = self.translate(problem, decision.chosen)
        except GatewayError as exc:
            return failed(exc.kind, str(exc))
        try:
            predicted = solve_translation(problem, decision.chosen, translation, self.limits)
        except ParseError as exc:
            return failed("parse", str(exc.diagnostic), translation)
        except SolverError as exc:
            return failed(exc.kind, str(exc), translation)
        except RecursionError:
            return failed("resource-out", "recursion limit", translation)
        return RunRecord(problem.id, strategy, decision.chosen, translation,
                         executed=True, predicted=predicted, correct=predicted == problem.gold,
                         fallback_applied=False, notes=notes)


def run_strategy(
    pipeline: Pipeline, problems: Sequence[Problem], strategy: str, jobs: int = 1
) -> list[RunRecord]:
    """Run every problem through ``strategy``; records come back sorted by id."""
    if jobs <= 1:
        records = [pipeline.run_sample(p, strategy) for p in problems]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(lambda p: pipeline.run_sample(p, strategy), problems))
    return sorted(records, key=lambda r: r.problem_id)


# -- metrics ----------------------------------------------------------------


def compute_metrics(
    records: Sequence[RunRecord], chance: float, *, fallback_credit: bool = True
) -> Metrics:
    """Overall-Acc, Exec-Rate and Exec-Acc.

    A non-executed sample is credited ``chance`` of a correct answer, which
    makes ``overall = exec_rate * exec_acc + (1 - exec_rate) * chance``.
    """
    if not records:
        raise ValueError("cannot compute metrics over zero records")
    if not 0.0 <= chance <= 1.0:
        raise ValueError("chance must be a fraction")
    n = len(records)
    executed = sum(r.executed for r in records)
    correct = sum(r.correct and r.executed for r in records)
    credit = chance * (n - executed) if fallback_credit else 0.0
    return Metrics(
        overall_acc=(correct + credit) / n,
        exec_rate=executed / n,
        exec_acc=correct / executed if executed else 0.0,
        n=n,
        chance=chance,
        executed=executed,
        correct=correct,
    )


# -- reports ----------------------------------------------------------------


@dataclass(frozen=True)
class ReportRow:
    strategy: str
    dataset: str
    metrics: Metrics


def _pct(x: float) -> str:
    return f"{100 * x:.2f}"


def render_csv(rows: Iterable[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["strategy", "dataset", "overall_acc", "exec_rate", "exec_acc", "n"])
    for r in rows:
        m = r.metrics
        writer.writerow([r.strategy, r.dataset, _pct(m.overall_acc), _pct(m.exec_rate),
                         _pct(m.exec_acc), m.n])
    return buf.getvalue()


def render_markdown(rows: Sequence[ReportRow]) -> str:
    """Strategies as rows, a metric triple per dataset; column maxima in bold."""
    datasets = list(dict.fromkeys(r.dataset for r in rows))
    strategies = list(dict.fromkeys(r.strategy for r in rows))
    cell = {(r.strategy, r.dataset): r.metrics for r in rows}
    metric_names = (("overall_acc", "Overall-Acc"), ("exec_rate", "Exec-Rate"),
                    ("exec_acc", "Exec-Acc"))
    columns = [(d, attr) for d in datasets for attr, _ in metric_names]
    best = {}
    for d, attr in columns:
        values = [round(getattr(cell[s, d], attr), 4) for s in strategies if (s, d) in cell]
        best[d, attr] = max(values) if values else None

    header = [""] + [f"{d} {label}" for d in datasets for _, label in metric_names]
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    chance_row = ["Chance"]
    for d in datasets:
        m = next(cell[s, d] for s in strategies if (s, d) in cell)
        chance_row += [f"{_pct(m.chance)}%", "/", "/"]
    lines.append("| " + " | ".join(chance_row) + " |")
    for s in strategies:
        row = [DISPLAY_NAMES.get(s, s)]
        for d, attr in columns:
            m = cell.get((s, d))
            if m is None:
                row.append("")
                continue
            value = getattr(m, attr)
            text = f"{_pct(value)}%"
            if round(value, 4) == best[d, attr]:
                text = f"**{text}**"
            row.append(text)
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def emit_report(rows: Sequence[ReportRow], path: str | Path, fmt: str = "csv") -> Path:
    if not rows:
        raise ValueError("nothing to report")
    path = Path(path)
    if fmt == "csv":
        text = render_csv(rows)
    elif fmt in ("md", "markdown"):
        text = render_markdown(rows)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path


def write_run_log(records: Iterable[RunRecord], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        for r in records:
            fh.write(json.dumps(r.to_json(), ensure_ascii=False, sort_keys=True) + "\n")
    return path

from __future__ import annotations

import json
import random
from dataclasses import replace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CORPUS
from symroute.gateway import ReplayClient, build_selection_prompt, build_translation_prompt, prompt_hash
from symroute.harness import (
    DatasetError,
    Pipeline,
    ReportRow,
    dataset_chance,
    compute_metrics,
    emit_report,
    load_dataset,
    problem_to_json,
    render_csv,
    render_markdown,
    run_strategy,
    solve_translation,
    split_tasks,
    write_run_log,
)
from symroute.ir import Problem, RunRecord, SlKind

PRONTO_LIKE = Problem("p", ("Every cat is a mammal.",), "Is Tom a mammal?", ("A) True", "B) False"), 0)


def record(executed: bool, correct: bool = False, pid: str = "x") -> RunRecord:
    return RunRecord(pid, "fixed-lp", SlKind.LP, "", executed=executed,
                     predicted=(0 if correct else 1) if executed else None,
                     correct=correct, fallback_applied=not executed)


def records(n: int, executed: int, correct: int) -> list[RunRecord]:
    out = [record(True, i < correct, f"r{i}") for i in range(executed)]
    return out + [record(False, pid=f"r{executed + i}") for i in range(n - executed)]


class TestMetrics:
    def test_forced_arithmetic(self):
        m = compute_metrics(records(5, 4, 3), 0.5)
        assert (m.exec_rate, m.exec_acc) == (0.8, 0.75)
        assert m.overall_acc == pytest.approx(0.70, abs=1e-12)

    def test_nothing_executed(self):
        m = compute_metrics(records(4, 0, 0), 0.25)
        assert m.exec_acc == 0.0 and m.exec_acc_undefined and m.overall_acc == 0.25

    def test_empty_records(self):
        with pytest.raises(ValueError):
            compute_metrics([], 0.5)

    def test_fallback_credit_only_moves_overall(self):
        rs = records(10, 6, 4)
        on, off = compute_metrics(rs, 0.5), compute_metrics(rs, 0.5, fallback_credit=False)
        assert (on.exec_rate, on.exec_acc) == (off.exec_rate, off.exec_acc)
        assert on.overall_acc - off.overall_acc == pytest.approx(0.4 * 0.5)

    @given(st.integers(1, 60).flatmap(lambda n: st.tuples(
        st.just(n), st.integers(0, n).flatmap(lambda e: st.tuples(st.just(e), st.integers(0, e))))),
        st.sampled_from([0.5, 1 / 3, 0.2, 0.25]))
    def test_identity(self, shape, chance):
        n, (executed, correct) = shape
        m = compute_metrics(records(n, executed, correct), chance)
        expected = m.exec_rate * m.exec_acc + (1 - m.exec_rate) * chance
        assert abs(m.overall_acc - expected) <= 1e-12

    @given(st.integers(2, 40), st.data())
    def test_flipping_one_record_is_monotone(self, n, data):
        executed = data.draw(st.integers(1, n))
        correct = data.draw(st.integers(0, executed - 1))
        rs = records(n, executed, correct)
        wrong = [i for i, r in enumerate(rs) if r.executed and not r.correct]
        i = data.draw(st.sampled_from(wrong))
        flipped = list(rs)
        flipped[i] = replace(rs[i], predicted=0, correct=True)
        before, after = compute_metrics(rs, 0.5), compute_metrics(flipped, 0.5)
        assert after.overall_acc > before.overall_acc
        assert after.exec_acc > before.exec_acc
        assert after.exec_rate == before.exec_rate


class TestDataset:
    def test_three_lines(self, tmp_path):
        path = tmp_path / "d.jsonl"
        path.write_text("".join(json.dumps(problem_to_json(replace(PRONTO_LIKE, id=f"p{i}"))) + "\n"
                                for i in range(3)))
        assert len(load_dataset(path).problems) == 3

    def test_missing_field_is_collected(self, tmp_path):
        good = problem_to_json(PRONTO_LIKE)
        bad = {k: v for k, v in good.items() if k != "options"} | {"id": "q"}
        path = tmp_path / "d.jsonl"
        path.write_text(f"{json.dumps(bad)}\nnot json\n{json.dumps(good)}\n")
        ds = load_dataset(path)
        assert [p.id for p in ds.problems] == ["p"]
        assert [(e.line, "options" in e.message) for e in ds.errors] == [(1, True), (2, False)]

    def test_duplicate_id(self, tmp_path):
        line = json.dumps(problem_to_json(PRONTO_LIKE)) + "\n"
        (tmp_path / "d.jsonl").write_text(line * 2)
        with pytest.raises(DatasetError, match="duplicate"):
            load_dataset(tmp_path / "d.jsonl")

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_dataset(tmp_path / "nope.jsonl")

    def test_mixed_300(self, tmp_path):
        corpus = load_dataset(CORPUS).problems
        lines = []
        for source in ("ProntoQA", "ProofWriter", "LogicalDeduction"):
            pool = [p for p in corpus if p.source == source]
            for i in range(100):
                lines.append(json.dumps(problem_to_json(replace(pool[i % len(pool)], id=f"{source}-{i:03d}"))))
        (tmp_path / "mixed.jsonl").write_text("\n".join(lines) + "\n")
        ds = load_dataset(tmp_path / "mixed.jsonl")
        assert len(ds.problems) == 300 and not ds.errors
        assert ds.chance == pytest.approx(sum(1 / len(p.options) for p in ds.problems) / 300)

    def test_chance_from_option_count(self):
        assert dataset_chance([PRONTO_LIKE]) == 0.5


class TestSolveTranslation:
    def test_tiger_lp(self, tiger, replay):
        text = replay.complete(build_translation_prompt(tiger, SlKind.LP))
        assert solve_translation(tiger, SlKind.LP, text) == 1

    def test_block_count_must_match_options(self):
        mc = Problem("m", ("x",), "q", ("A) a", "B) b", "C) c"), 0)
        with pytest.raises(Exception) as info:
            split_tasks(mc, "p(a).\n?- p(a).")
        assert info.value.kind == "parse"
        assert len(split_tasks(mc, "a\n---\nb\n  ---  \nc")) == 3


class TestPipeline:
    def test_tiger_fixed_lp(self, tiger, replay):
        r = Pipeline(replay).run_sample(tiger, "fixed-lp")
        assert (r.executed, r.predicted, r.correct, r.chosen) == (True, 1, True, SlKind.LP)

    def test_tiger_fixed_sat_fails_to_parse(self, tiger, replay):
        r = Pipeline(replay).run_sample(tiger, "fixed-sat")
        assert not r.executed and r.fallback_applied and r.failure == "parse"

    def test_gateway_miss_is_folded(self, tiger):
        r = Pipeline(ReplayClient()).run_sample(tiger, "fixed-fol")
        assert not r.executed and r.failure == "replay-miss"

    def test_unparseable_choice_degrades(self, tiger, replay):
        responses = dict(replay.responses)
        responses[prompt_hash(build_selection_prompt(tiger))] = "hmm"
        r = Pipeline(ReplayClient(responses)).run_sample(tiger, "adaptive")
        assert r.chosen is SlKind.LP and r.correct
        assert any("degraded" in note for note in r.notes)

    def test_unknown_strategy(self, tiger, replay):
        with pytest.raises(ValueError):
            Pipeline(replay).run_sample(tiger, "oracle")

    def test_replay_determinism_and_order(self, replay):
        problems = load_dataset(CORPUS).problems
        shuffled = random.Random(3).sample(problems, len(problems))
        a = run_strategy(Pipeline(replay, seed=7), problems, "random")
        b = run_strategy(Pipeline(replay, seed=7), shuffled, "random", jobs=4)
        assert a == b
        assert [r.problem_id for r in a] == sorted(p.id for p in problems)


class TestReports:
    def rows(self, strategies, datasets):
        m = compute_metrics(records(4, 3, 2), 0.5)
        return [ReportRow(s, d, m) for s in strategies for d in datasets]

    def test_csv_one_row(self):
        lines = render_csv(self.rows(["fixed-lp"], ["d"])).splitlines()
        assert lines == ["strategy,dataset,overall_acc,exec_rate,exec_acc,n",
                         "fixed-lp,d,62.50,75.00,66.67,4"]

    def test_csv_fifteen_rows(self):
        rows = self.rows(["fixed-lp", "fixed-fol", "fixed-sat", "random", "adaptive"], ["a", "b", "c"])
        assert len(render_csv(rows).splitlines()) == 16

    def test_markdown_bolds_column_maxima(self):
        lo = compute_metrics(records(4, 2, 1), 0.5)
        hi = compute_metrics(records(4, 4, 3), 0.5)
        text = render_markdown([ReportRow("fixed-lp", "d", lo), ReportRow("adaptive", "d", hi)])
        lp_row = next(l for l in text.splitlines() if l.startswith("| LP"))
        ad_row = next(l for l in text.splitlines() if l.startswith("| Adaptive selection"))
        assert "**" not in lp_row
        assert ad_row.count("**") == 6
        assert "| Chance | 50.00% |" in text

    def test_emit(self, tmp_path):
        rows = self.rows(["fixed-lp"], ["d"])
        assert emit_report(rows, tmp_path / "r.md", "md").read_text().startswith("| ")
        with pytest.raises(ValueError):
            emit_report(rows, tmp_path / "r.txt", "txt")
        with pytest.raises(ValueError):
            emit_report([], tmp_path / "r.csv")

    def test_run_log(self, tmp_path, tiger, replay):
        r = Pipeline(replay).run_sample(tiger, "fixed-lp")
        path = write_run_log([r], tmp_path / "log.jsonl")
        assert json.loads(path.read_text())["predicted"] == 1

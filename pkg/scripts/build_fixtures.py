"""Regenerate the committed fixtures from ``fixture_corpus.py``.

Writes ``fixtures/tiger.json``, ``fixtures/data/corpus.jsonl`` and the replay
store ``fixtures/exchanges.jsonl`` (prompt hash -> stored response), then
prints how each stored translation fares against the gold answer.

    python scripts/build_fixtures.py [--check]

With ``--check`` nothing is written; the script exits 1 if the committed
files differ from what would be generated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from fixture_corpus import CORPUS, TIGER

from symroute.gateway import Exchange, build_selection_prompt, build_translation_prompt
from symroute.harness import problem_from_json, solve_translation
from symroute.ir import SlKind, SolverError
from symroute.parsers import ParseError

ROOT = Path(__file__).resolve().parent.parent / "fixtures"
STAMP = "2024-01-01T00:00:00+00:00"
FIELDS = ("id", "context", "question", "options", "answer_index", "source")


def problem_record(entry: dict) -> dict:
    return {k: entry[k] for k in FIELDS}


def exchanges(entry: dict) -> list[Exchange]:
    problem = problem_from_json(problem_record(entry))
    out = [Exchange.create(build_selection_prompt(problem), entry["select"], STAMP)]
    for kind in SlKind:
        prompt = build_translation_prompt(problem, kind)
        out.append(Exchange.create(prompt, entry[kind.value], STAMP))
    return out


def outcome(entry: dict, kind: SlKind) -> str:
    problem = problem_from_json(problem_record(entry))
    try:
        predicted = solve_translation(problem, kind, entry[kind.value])
    except ParseError:
        return "parse"
    except SolverError as exc:
        return exc.kind
    return "ok" if predicted == problem.gold else "wrong"


def render() -> dict[Path, str]:
    entries = [TIGER, *CORPUS]
    lines = [ex.to_json() for e in entries for ex in exchanges(e)]
    corpus = "".join(json.dumps(problem_record(e), ensure_ascii=False) + "\n" for e in CORPUS)
    return {
        ROOT / "tiger.json": json.dumps(problem_record(TIGER), indent=2, ensure_ascii=False) + "\n",
        ROOT / "data" / "corpus.jsonl": corpus,
        ROOT / "exchanges.jsonl": "\n".join(lines) + "\n",
    }


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="verify instead of writing")
    args = ap.parse_args()
    files = render()
    if args.check:
        stale = [p for p, text in files.items() if not p.exists() or p.read_text("utf-8") != text]
        for p in stale:
            print(f"stale: {p}")
        return 1 if stale else 0
    for path, text in files.items():
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        print(f"wrote {path}")
    print(f"{'id':<6} {'source':<17} {'FOL':<22} {'LP':<22} {'SAT':<22}")
    for e in [TIGER, *CORPUS]:
        cells = [outcome(e, k) for k in SlKind]
        print(f"{e['id']:<6} {e['source']:<17} " + " ".join(f"{c:<22}" for c in cells))
    return 0


if __name__ == "__main__":
    sys.exit(main())

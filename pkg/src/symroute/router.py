"""Choosing a symbolic language per problem.

Three strategies share the :class:`RouteDecision` result: a language model
answering the selection prompt, a deterministic pattern-count heuristic
(also the fallback when the model's answer cannot be read), and a seeded
uniform random choice.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING

from .config import ConfigError
from .ir import Problem, SlKind

if TYPE_CHECKING:
    from .gateway import Client

FAMILIES = ("quantifier", "syllogism", "conditional", "ordering")

DEFAULT_PATTERNS: dict[str, tuple[str, ...]] = {
    "quantifier": (
        r"\ball\b",
        r"\bevery\b",
        r"\beach\b",
        r"\bsome\b",
        r"\bno \w+ (?:is|are)\b",
        r"\bthere (?:is|are|exists?) (?:a|an|some)\b",
    ),
    "syllogism": (
        r"\b(?:is|are) (?:not )?an? [a-z]+",
        r"\b[a-z]+e?s are (?:not )?[a-z]+e?s\b",
    ),
    "conditional": (
        r"\bif\b[^.?!]*?\bthen\b",
        r"\bwhenever\b",
        r"\bonly if\b",
    ),
    "ordering": (
        r"\b(?:left|right) of\b",
        r"\bbetween\b",
        r"\b(?:newer|older|younger|earlier|later|cheaper|pricier|taller|shorter) than\b",
        r"\b(?:more|less) expensive than\b",
        r"\bfinished (?:above|below|first|second|third|fourth|fifth|last)\b",
        r"\b(?:leftmost|rightmost|oldest|newest|youngest|cheapest|priciest)\b",
        r"\b(?:most|least|second-most|second-least) expensive\b",
        r"\b(?:first|second|third|fourth|fifth|last) from the (?:left|right)\b",
        r"\bfixed order\b",
    ),
}

# FOL gets quantifier and syllogism cues, LP conditionals, SAT ordering phrases.
SCORED_BY = {SlKind.FOL: ("quantifier", "syllogism"), SlKind.LP: ("conditional",),
             SlKind.SAT: ("ordering",)}
TIE_PRIORITY = (SlKind.LP, SlKind.FOL, SlKind.SAT)


@dataclass(frozen=True)
class RouterConfig:
    patterns: dict[str, tuple[str, ...]] = field(default_factory=lambda: dict(DEFAULT_PATTERNS))
    weights: dict[str, int] = field(default_factory=lambda: {f: 1 for f in FAMILIES})

    @classmethod
    def from_mapping(cls, config: dict[str, list[str]]) -> RouterConfig:
        patterns = dict(DEFAULT_PATTERNS)
        weights = {f: 1 for f in FAMILIES}
        for family in FAMILIES:
            if f"router.pattern.{family}" in config:
                patterns[family] = tuple(config[f"router.pattern.{family}"])
            if f"router.weight.{family}" in config:
                try:
                    weights[family] = int(config[f"router.weight.{family}"][-1])
                except ValueError as exc:
                    raise ConfigError(f"router.weight.{family}: {exc}") from None
        for family, regexes in patterns.items():
            for regex in regexes:
                try:
                    re.compile(regex)
                except re.error as exc:
                    raise ConfigError(f"router.pattern.{family}: {regex!r}: {exc}") from None
        return cls(patterns, weights)


@dataclass(frozen=True)
class FeatureVector:
    quantifier: int = 0
    syllogism: int = 0
    conditional: int = 0
    ordering: int = 0
    option_arity: int = 0

    def scaled(self, k: int) -> FeatureVector:
        return FeatureVector(*(k * v for v in (self.quantifier, self.syllogism,
                                               self.conditional, self.ordering)),
                             option_arity=self.option_arity)


@dataclass(frozen=True)
class RouteDecision:
    chosen: SlKind
    strategy: str
    rationale: str
    feature_scores: dict[SlKind, int] = field(default_factory=dict)
    degraded: str | None = None


def extract_features(problem: Problem, config: RouterConfig = RouterConfig()) -> FeatureVector:
    text = " ".join([*problem.context, problem.question])
    counts = {
        family: sum(len(re.findall(rx, text, flags=re.IGNORECASE)) for rx in config.patterns[family])
        for family in FAMILIES
    }
    return FeatureVector(**counts, option_arity=len(problem.options))


def heuristic_select(fv: FeatureVector, config: RouterConfig = RouterConfig()) -> RouteDecision:
    scores = {
        kind: sum(config.weights[f] * getattr(fv, f) for f in families)
        for kind, families in SCORED_BY.items()
    }
    best = max(scores.values())
    chosen = next(k for k in TIE_PRIORITY if scores[k] == best)
    parts = ", ".join(f"{k.value}={scores[k]}" for k in TIE_PRIORITY)
    return RouteDecision(chosen, "heuristic", f"pattern scores {parts}", scores)


_TOKEN = re.compile(r"(?<![A-Za-z0-9_])(FOL|LP|SAT)(?![A-Za-z0-9_])", re.IGNORECASE)
_MARKER = re.compile(r"(?:final answer|answer|therefore|choice|selected|select|choose)\W*",
                     re.IGNORECASE)


def parse_llm_choice(response: str) -> SlKind | None:
    """Pull the chosen language out of a free-form completion, or ``None``.

    Lines are scanned from the end. A line with an answer marker ("Answer:",
    "Therefore", ...) yields the first language token after its last marker;
    failing that, the last line mentioning any token yields its first one.
    """
    lines = [l for l in response.splitlines() if l.strip()]
    for line in reversed(lines):
        markers = list(_MARKER.finditer(line))
        if markers:
            m = _TOKEN.search(line, markers[-1].end())
            if m:
                return SlKind(m.group(1).upper())
    for line in reversed(lines):
        m = _TOKEN.search(line)
        if m:
            return SlKind(m.group(1).upper())
    return None


_ORDER = (SlKind.FOL, SlKind.LP, SlKind.SAT)


def random_select(problem_id: str, seed: int) -> RouteDecision:
    """Uniform choice from SHA-256 of ``"{seed}:{problem_id}"`` (first 8 bytes, mod 3)."""
    digest = hashlib.sha256(f"{seed}:{problem_id}".encode("utf-8")).digest()
    chosen = _ORDER[int.from_bytes(digest[:8], "big") % 3]
    return RouteDecision(chosen, "random", f"seed {seed}")


def adaptive_select(
    problem: Problem, client: Client, config: RouterConfig = RouterConfig()
) -> RouteDecision:
    """Ask the model; fall back to the heuristic if the call fails or is unreadable."""
    from .gateway import GatewayError, build_selection_prompt

    fallback = replace(heuristic_select(extract_features(problem, config), config),
                       strategy="adaptive")
    try:
        response = client.complete(build_selection_prompt(problem))
    except GatewayError as exc:
        return replace(fallback, degraded=f"gateway: {exc}")
    chosen = parse_llm_choice(response)
    if chosen is None:
        return replace(fallback, degraded="unparseable selection response")
    return RouteDecision(chosen, "adaptive", response.strip())

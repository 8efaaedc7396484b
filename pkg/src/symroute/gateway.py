"""Prompt construction and chat-completion clients (live, replay, recording).

Replay stores are JSONL files of :class:`Exchange` records keyed by the
SHA-256 of the prompt, so editing a prompt template invalidates every stored
response for it instead of silently reusing stale answers.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Protocol

import httpx

from .config import ConfigError, last
from .ir import Problem, SlKind

log = logging.getLogger(__name__)


# -- prompts ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _template(name: str) -> str:
    return resources.files("symroute.prompts").joinpath(name).read_text(encoding="utf-8")


def _fill(template: str, problem: Problem, separator: str) -> str:
    options = separator.join(problem.format_option(i) for i in range(len(problem.options)))
    return (
        template.replace("{context}", "\n".join(problem.context))
        .replace("{question}", problem.question)
        .replace("{options}", options)
    )


def build_selection_prompt(problem: Problem) -> str:
    # trailing newline of the asset is not part of the prompt
    return _fill(_template("selection.txt").rstrip("\n"), problem, "  ")


TRANSLATION_TEMPLATES = {
    SlKind.FOL: "translate_fol.txt",
    SlKind.LP: "translate_lp.txt",
    SlKind.SAT: "translate_sat.txt",
}


def build_translation_prompt(problem: Problem, kind: SlKind) -> str:
    return _fill(_template(TRANSLATION_TEMPLATES[kind]).rstrip("\n"), problem, "\n")


def prompt_hash(prompt: str) -> str:
    return hashlib.sha256(prompt.encode("utf-8")).hexdigest()


# -- configuration ----------------------------------------------------------


@dataclass(frozen=True)
class GatewayConfig:
    base_url: str = "https://api.openai.com/v1"
    model: str = "gpt-4"
    temperature: float = 0.0
    max_tokens: int = 1024
    timeout: float = 60.0
    retries: int = 0
    api_key_env: str = "OPENAI_API_KEY"
    max_concurrency: int = 4

    def __post_init__(self) -> None:
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")
        if self.timeout <= 0:
            raise ValueError("timeout must be > 0")
        if self.retries < 0 or self.max_concurrency < 1:
            raise ValueError("retries must be >= 0 and max_concurrency >= 1")

    @classmethod
    def from_mapping(cls, config: dict[str, list[str]], **overrides) -> GatewayConfig:
        kinds = {
            "base_url": str, "model": str, "temperature": float, "max_tokens": int,
            "timeout": float, "retries": int, "api_key_env": str, "max_concurrency": int,
        }
        values = {}
        for name, cast in kinds.items():
            raw = last(config, f"gateway.{name}")
            if raw is not None:
                try:
                    values[name] = cast(raw)
                except ValueError:
                    raise ConfigError(f"gateway.{name}: bad value {raw!r}") from None
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


# -- errors -----------------------------------------------------------------


class GatewayError(Exception):
    kind = "gateway"


class GatewayTimeout(GatewayError):
    kind = "gateway-timeout"


class GatewayHTTPError(GatewayError):
    kind = "gateway-http"

    def __init__(self, status: int, message: str = ""):
        super().__init__(f"HTTP {status}" + (f": {message}" if message else ""))
        self.status = status


class GatewayConnectionError(GatewayError):
    kind = "gateway-connection"


class ReplayMiss(GatewayError):
    kind = "replay-miss"

    def __init__(self, digest: str):
        super().__init__(f"no stored response for prompt {digest[:12]}")
        self.digest = digest


# -- exchanges --------------------------------------------------------------


@dataclass(frozen=True)
class Exchange:
    prompt: str
    response: str
    prompt_sha256: str
    timestamp: str

    @classmethod
    def create(cls, prompt: str, response: str, timestamp: str | None = None) -> Exchange:
        stamp = timestamp or datetime.now(timezone.utc).isoformat(timespec="seconds")
        return cls(prompt, response, prompt_hash(prompt), stamp)

    def __post_init__(self) -> None:
        if prompt_hash(self.prompt) != self.prompt_sha256:
            raise ValueError("exchange hash does not match its prompt")

    def to_json(self) -> str:
        return json.dumps(
            {"prompt_sha256": self.prompt_sha256, "timestamp": self.timestamp,
             "prompt": self.prompt, "response": self.response},
            ensure_ascii=False,
        )

    @classmethod
    def from_json(cls, line: str) -> Exchange:
        d = json.loads(line)
        return cls(d["prompt"], d["response"], d["prompt_sha256"], d["timestamp"])


# -- clients ----------------------------------------------------------------


class Client(Protocol):
    def complete(self, prompt: str) -> str: ...


class ReplayClient:
    """Answers from stored exchanges only; never touches the network."""

    def __init__(self, exchanges: dict[str, str] | None = None):
        self.responses = dict(exchanges or {})

    @classmethod
    def load(cls, path: str | Path) -> ReplayClient:
        path = Path(path)
        files = sorted(path.glob("*.jsonl")) if path.is_dir() else [path]
        if not files:
            raise FileNotFoundError(f"no replay files in {path}")
        responses: dict[str, str] = {}
        for f in files:
            with f.open(encoding="utf-8") as fh:
                for number, line in enumerate(fh, start=1):
                    if not line.strip():
                        continue
                    try:
                        ex = Exchange.from_json(line)
                    except (ValueError, KeyError) as exc:
                        raise ValueError(f"{f}:{number}: bad exchange: {exc}") from None
                    responses[ex.prompt_sha256] = ex.response
        return cls(responses)

    def complete(self, prompt: str) -> str:
        digest = prompt_hash(prompt)
        try:
            return self.responses[digest]
        except KeyError:
            raise ReplayMiss(digest) from None


class LiveClient:
    """OpenAI-style chat-completions client over HTTP."""

    def __init__(self, config: GatewayConfig, transport: httpx.BaseTransport | None = None):
        self.config = config
        self._http = httpx.Client(timeout=config.timeout, transport=transport)
        self._slots = threading.BoundedSemaphore(config.max_concurrency)

    def close(self) -> None:
        self._http.close()

    def _headers(self) -> dict[str, str]:
        key = os.environ.get(self.config.api_key_env, "")
        headers = {"Content-Type": "application/json"}
        if key:
            headers["Authorization"] = f"Bearer {key}"
        return headers

    def _once(self, prompt: str) -> str:
        cfg = self.config
        body = {
            "model": cfg.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": cfg.temperature,
            "max_tokens": cfg.max_tokens,
        }
        url = cfg.base_url.rstrip("/") + "/chat/completions"
        try:
            with self._slots:
                resp = self._http.post(url, json=body, headers=self._headers())
        except httpx.TimeoutException:
            raise GatewayTimeout(f"no response from {url} within {cfg.timeout}s") from None
        except httpx.TransportError as exc:
            raise GatewayConnectionError(f"{url}: {type(exc).__name__}") from None
        if resp.status_code != 200:
            raise GatewayHTTPError(resp.status_code, resp.reason_phrase)
        try:
            return resp.json()["choices"][0]["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError):
            raise GatewayError("malformed completion payload") from None

    def complete(self, prompt: str) -> str:
        attempts = self.config.retries + 1
        for attempt in range(1, attempts + 1):
            try:
                return self._once(prompt)
            except (GatewayTimeout, GatewayConnectionError, GatewayHTTPError) as exc:
                if attempt == attempts:
                    raise
                log.warning("attempt %d/%d failed: %s", attempt, attempts, exc)
        raise AssertionError("unreachable")


class RecordingClient:
    """Wraps another client and appends every exchange to a JSONL file."""

    def __init__(self, inner: Client, path: str | Path, timestamp: str | None = None):
        self.inner = inner
        self.path = Path(path)
        if self.path.suffix != ".jsonl":
            self.path = self.path / "exchanges.jsonl"
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.timestamp = timestamp
        self._lock = threading.Lock()

    def complete(self, prompt: str) -> str:
        response = self.inner.complete(prompt)
        line = Exchange.create(prompt, response, self.timestamp).to_json()
        with self._lock, self.path.open("a", encoding="utf-8") as fh:
            fh.write(line + "\n")
        return response


def make_client(
    config: GatewayConfig,
    replay: str | Path | None = None,
    record: str | Path | None = None,
) -> Client:
    if replay is not None:
        client: Client = ReplayClient.load(replay)
    else:
        client = LiveClient(config)
    if record is not None:
        client = RecordingClient(client, record)
    return client


def complete(prompt: str, config: GatewayConfig, client: Client | None = None) -> str:
    """One completion through ``client`` (a live client built from ``config`` by default)."""
    return (client or LiveClient(config)).complete(prompt)

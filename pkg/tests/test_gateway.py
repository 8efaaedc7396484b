from __future__ import annotations

import json
import logging
import socket
import threading
from dataclasses import replace

import httpx
import pytest

from symroute.config import ConfigError, parse_config
from symroute.gateway import (
    Exchange,
    GatewayConfig,
    GatewayConnectionError,
    GatewayError,
    GatewayHTTPError,
    GatewayTimeout,
    LiveClient,
    RecordingClient,
    ReplayClient,
    ReplayMiss,
    build_selection_prompt,
    build_translation_prompt,
    make_client,
    prompt_hash,
)
from symroute.ir import SlKind

SECRET = "sk-test-0000-DO-NOT-LEAK"


def completion(content: str) -> dict:
    return {"choices": [{"message": {"role": "assistant", "content": content}}]}


class TestPrompts:
    def test_selection_prompt_is_filled(self, tiger):
        prompt = build_selection_prompt(tiger)
        assert "The tiger is big." in prompt
        assert tiger.question in prompt
        assert "{context}" not in prompt and "{options}" not in prompt

    @pytest.mark.parametrize("kind", list(SlKind))
    def test_translation_prompts_differ_by_language(self, tiger, kind):
        prompt = build_translation_prompt(tiger, kind)
        assert tiger.question in prompt
        others = {build_translation_prompt(tiger, k) for k in SlKind if k is not kind}
        assert prompt not in others

    def test_selection_prompt_asks_for_a_language(self, tiger):
        assert "select the most appropriate symbolic language" in build_selection_prompt(tiger)

    def test_empty_context_only_changes_the_context(self, tiger):
        bare = replace(tiger, context=())
        full, empty = build_selection_prompt(tiger), build_selection_prompt(bare)
        assert empty == full.replace("\n".join(tiger.context), "")

    def test_byte_stable(self, tiger):
        twin = replace(tiger, id="other")
        assert build_selection_prompt(tiger) == build_selection_prompt(twin)
        for kind in SlKind:
            assert build_translation_prompt(tiger, kind) == build_translation_prompt(twin, kind)

    def test_fol_prompt_lists_operators(self, tiger):
        prompt = build_translation_prompt(tiger, SlKind.FOL)
        for op in ("~", "&", "|", "->", "<->", "forall", "exists"):
            assert op in prompt

    def test_lp_prompt_carries_grammar_and_example(self, tiger):
        prompt = build_translation_prompt(tiger, SlKind.LP)
        assert ":-" in prompt and "?-" in prompt and "visits(X, rabbit) :- big(X)." in prompt

    def test_hash_is_sha256_hex(self):
        assert prompt_hash("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"


class TestLiveClient:
    def test_wire_format(self, monkeypatch):
        monkeypatch.setenv("TEST_KEY", SECRET)
        seen = {}

        def handler(request: httpx.Request) -> httpx.Response:
            seen["url"] = str(request.url)
            seen["auth"] = request.headers.get("authorization")
            seen["body"] = json.loads(request.content)
            return httpx.Response(200, json=completion("Answer: LP"))

        cfg = GatewayConfig(base_url="http://llm.local/v1/", model="m1", temperature=0.0,
                            max_tokens=64, api_key_env="TEST_KEY")
        client = LiveClient(cfg, transport=httpx.MockTransport(handler))
        assert client.complete("hello") == "Answer: LP"
        assert seen["url"] == "http://llm.local/v1/chat/completions"
        assert seen["auth"] == f"Bearer {SECRET}"
        assert seen["body"] == {"model": "m1", "messages": [{"role": "user", "content": "hello"}],
                                "temperature": 0.0, "max_tokens": 64}

    def test_no_key_no_header(self, monkeypatch):
        monkeypatch.delenv("UNSET_KEY", raising=False)

        def handler(request: httpx.Request) -> httpx.Response:
            assert "authorization" not in request.headers
            return httpx.Response(200, json=completion("ok"))

        cfg = GatewayConfig(api_key_env="UNSET_KEY")
        assert LiveClient(cfg, transport=httpx.MockTransport(handler)).complete("x") == "ok"

    def test_http_status(self):
        transport = httpx.MockTransport(lambda r: httpx.Response(429))
        with pytest.raises(GatewayHTTPError) as info:
            LiveClient(GatewayConfig(), transport=transport).complete("x")
        assert info.value.status == 429

    def test_malformed_payload(self):
        transport = httpx.MockTransport(lambda r: httpx.Response(200, json={"choices": []}))
        with pytest.raises(GatewayError):
            LiveClient(GatewayConfig(), transport=transport).complete("x")

    def test_retries_then_succeeds(self):
        calls = []

        def handler(request):
            calls.append(1)
            return httpx.Response(503) if len(calls) < 3 else httpx.Response(200, json=completion("ok"))

        client = LiveClient(GatewayConfig(retries=2), transport=httpx.MockTransport(handler))
        assert client.complete("x") == "ok" and len(calls) == 3

    def test_timeout_against_silent_server(self):
        server = socket.socket()
        server.bind(("127.0.0.1", 0))
        server.listen(1)
        held = []
        accepter = threading.Thread(target=lambda: held.append(server.accept()), daemon=True)
        accepter.start()
        port = server.getsockname()[1]
        try:
            client = LiveClient(GatewayConfig(base_url=f"http://127.0.0.1:{port}", timeout=0.3))
            with pytest.raises(GatewayTimeout):
                client.complete("x")
        finally:
            for conn, _ in held:
                conn.close()
            server.close()

    def test_connection_refused(self):
        probe = socket.socket()
        probe.bind(("127.0.0.1", 0))
        port = probe.getsockname()[1]
        probe.close()
        client = LiveClient(GatewayConfig(base_url=f"http://127.0.0.1:{port}", timeout=2))
        with pytest.raises(GatewayConnectionError):
            client.complete("x")

    def test_key_never_logged(self, monkeypatch, caplog, tmp_path):
        monkeypatch.setenv("TEST_KEY", SECRET)
        transport = httpx.MockTransport(lambda r: httpx.Response(500))
        client = LiveClient(GatewayConfig(retries=2, api_key_env="TEST_KEY"), transport=transport)
        recorder = RecordingClient(client, tmp_path / "log.jsonl")
        with caplog.at_level(logging.DEBUG):
            with pytest.raises(GatewayHTTPError) as info:
                recorder.complete("x")
        assert SECRET not in caplog.text and SECRET not in str(info.value)
        assert caplog.records  # the failed attempts were logged

    def test_key_never_recorded(self, monkeypatch, tmp_path):
        monkeypatch.setenv("TEST_KEY", SECRET)
        transport = httpx.MockTransport(lambda r: httpx.Response(200, json=completion("LP")))
        client = LiveClient(GatewayConfig(api_key_env="TEST_KEY"), transport=transport)
        RecordingClient(client, tmp_path).complete("which language?")
        for path in tmp_path.rglob("*"):
            if path.is_file():
                assert SECRET not in path.read_text()


class TestReplay:
    def test_hit_and_miss(self):
        client = ReplayClient({prompt_hash("a"): "A"})
        assert client.complete("a") == "A"
        with pytest.raises(ReplayMiss) as info:
            client.complete("b")
        assert info.value.digest == prompt_hash("b")

    def test_never_opens_a_socket(self, monkeypatch, tmp_path):
        (tmp_path / "x.jsonl").write_text(Exchange.create("p", "r", "t").to_json() + "\n")

        def forbidden(*args, **kwargs):
            raise AssertionError("replay mode opened a socket")

        monkeypatch.setattr(socket, "socket", forbidden)
        client = make_client(GatewayConfig(), replay=tmp_path)
        assert client.complete("p") == "r"
        with pytest.raises(ReplayMiss):
            client.complete("q")

    def test_load_reads_every_jsonl_in_directory(self, tmp_path):
        (tmp_path / "a.jsonl").write_text(Exchange.create("p1", "r1", "t").to_json() + "\n\n")
        (tmp_path / "b.jsonl").write_text(Exchange.create("p2", "r2", "t").to_json() + "\n")
        client = ReplayClient.load(tmp_path)
        assert (client.complete("p1"), client.complete("p2")) == ("r1", "r2")

    def test_load_rejects_tampered_hash(self, tmp_path):
        record = json.loads(Exchange.create("p", "r", "t").to_json())
        record["prompt"] = "edited"
        (tmp_path / "x.jsonl").write_text(json.dumps(record) + "\n")
        with pytest.raises(ValueError, match="x.jsonl:1"):
            ReplayClient.load(tmp_path)

    def test_load_empty_directory(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            ReplayClient.load(tmp_path)


class TestRecording:
    def test_round_trip(self, tmp_path):
        inner = ReplayClient({prompt_hash("p"): "r"})
        recorder = RecordingClient(inner, tmp_path, timestamp="2024-01-01T00:00:00+00:00")
        assert recorder.complete("p") == "r"
        line = (tmp_path / "exchanges.jsonl").read_text().strip()
        ex = Exchange.from_json(line)
        assert (ex.prompt, ex.response, ex.prompt_sha256) == ("p", "r", prompt_hash("p"))
        assert ReplayClient.load(tmp_path).complete("p") == "r"

    def test_failures_are_not_recorded(self, tmp_path):
        recorder = RecordingClient(ReplayClient(), tmp_path / "out.jsonl")
        with pytest.raises(ReplayMiss):
            recorder.complete("p")
        assert not (tmp_path / "out.jsonl").exists()


class TestConfig:
    def test_from_mapping_with_overrides(self):
        cfg = GatewayConfig.from_mapping(
            parse_config("gateway.model = a\ngateway.model = b\ngateway.timeout = 5\n"),
            temperature=0.5, model=None,
        )
        assert (cfg.model, cfg.timeout, cfg.temperature) == ("b", 5.0, 0.5)

    def test_bad_number(self):
        with pytest.raises(ConfigError):
            GatewayConfig.from_mapping(parse_config("gateway.retries = many\n"))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            GatewayConfig(timeout=0)

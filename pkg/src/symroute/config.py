"""Key-value configuration files.

One ``key = value`` per line, ``#`` comments and blank lines ignored. A key
may repeat; the values accumulate in file order (used for pattern lists).
Keys are dotted, e.g. ``gateway.model`` or ``router.pattern.ordering``.
"""

from __future__ import annotations

from pathlib import Path


class ConfigError(ValueError):
    pass


def parse_config(text: str, source: str = "<config>") -> dict[str, list[str]]:
    out: dict[str, list[str]] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep or not key.strip():
            raise ConfigError(f"{source}:{number}: expected 'key = value'")
        out.setdefault(key.strip(), []).append(value.strip())
    return out


def load_config(path: str | Path) -> dict[str, list[str]]:
    path = Path(path)
    return parse_config(path.read_text(encoding="utf-8"), str(path))


def last(config: dict[str, list[str]], key: str, default: str | None = None) -> str | None:
    values = config.get(key)
    return values[-1] if values else default

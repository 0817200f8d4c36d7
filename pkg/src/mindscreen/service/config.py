"""Service settings from config file plus environment overrides.

Precedence, lowest to highest: built-in defaults, config file (TOML or
JSON), explicit keyword overrides, then MINDSCREEN_* environment variables.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

ENV_PREFIX = "MINDSCREEN_"


@dataclass(frozen=True)
class ServiceSettings:
    host: str = "127.0.0.1"
    port: int = 8000
    model_path: str = "screening.model"
    log_path: str = "assessments.jsonl"
    frontend_dir: str | None = None


def read_config_file(path) -> dict:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return json.loads(text)
    return tomllib.loads(text)


def load_settings(config_file=None, env: dict | None = None, **overrides) -> ServiceSettings:
    env = os.environ if env is None else env
    values: dict = {}
    if config_file:
        payload = read_config_file(config_file)
        payload = payload.get("service", payload)
        values.update(payload)
    values.update({k: v for k, v in overrides.items() if v is not None})
    for spec in fields(ServiceSettings):
        env_value = env.get(ENV_PREFIX + spec.name.upper())
        if env_value is not None:
            values[spec.name] = int(env_value) if spec.name == "port" else env_value
    known = {f.name for f in fields(ServiceSettings)}
    unknown = set(values) - known
    if unknown:
        raise ValueError(f"unknown service settings: {sorted(unknown)}")
    return ServiceSettings(**values)

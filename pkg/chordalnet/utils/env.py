"""Environment-driven defaults (CHORDALNET_*), optionally seeded from <repo>/.env."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Dict, Optional

DEFAULT_PRIME = 65521
DEFAULT_GB_BUDGET = 200000

REPO_ENV = Path(__file__).resolve().parents[2] / ".env"


def _split_assignment(line: str) -> tuple[str, str] | None:
    body = line.strip()
    if not body or body.startswith("#"):
        return None
    body = body.removeprefix("export ").lstrip()
    key, eq, val = body.partition("=")
    if not eq:
        return None
    val = val.strip()
    if len(val) >= 2 and val[0] == val[-1] and val[0] in "\"'":
        val = val[1:-1]
    return key.strip(), val


def load_env_defaults(env_path: Optional[Path] = None) -> Dict[str, str]:
    """Copy assignments from a .env file into os.environ without overriding.

    Returns the keys actually set. A missing or unreadable file is ignored.
    """
    path = env_path or REPO_ENV
    try:
        text = path.read_text(encoding="utf-8")
    except OSError:
        return {}
    applied: Dict[str, str] = {}
    for line in text.splitlines():
        pair = _split_assignment(line)
        if pair is None or pair[0] in os.environ:
            continue
        os.environ[pair[0]] = pair[1]
        applied[pair[0]] = pair[1]
    return applied


def env_int(key: str, default: Optional[int] = None) -> Optional[int]:
    raw = os.environ.get(key, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def default_prime() -> int:
    return env_int("CHORDALNET_PRIME", DEFAULT_PRIME) or DEFAULT_PRIME


def default_gb_budget() -> int:
    return env_int("CHORDALNET_GB_BUDGET", DEFAULT_GB_BUDGET) or DEFAULT_GB_BUDGET


def default_seed() -> Optional[int]:
    return env_int("CHORDALNET_SEED")

"""Shipped spec-file corpus."""

from __future__ import annotations

import os

_HERE = os.path.dirname(__file__)


def fixture_path(name: str) -> str:
    path = os.path.join(_HERE, name)
    if not os.path.exists(path):
        raise FileNotFoundError(f"no fixture named {name!r}")
    return path


def fixture_names() -> list[str]:
    return sorted(f for f in os.listdir(_HERE) if f.endswith(".json"))

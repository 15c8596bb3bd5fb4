"""Shipped JSON Schemas for the wire formats (instance, reports, certificates)."""

import json
from importlib import resources

NAMES = (
    "instance",
    "solve-report",
    "dnumber-report",
    "lambda-report",
    "strategy-tree",
    "game-state",
)


def load(name: str) -> dict:
    if name not in NAMES:
        raise KeyError(f"unknown schema {name!r}; have {NAMES}")
    ref = resources.files(__package__) / f"{name}.schema.json"
    return json.loads(ref.read_text(encoding="utf-8"))

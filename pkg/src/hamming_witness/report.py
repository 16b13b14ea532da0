"""Serialisation of reports: ``key = value`` lines or a single JSON object."""

from __future__ import annotations

import json


def _text_value(value) -> str:
    if isinstance(value, dict):
        return ",".join(f"{k}:{v}" for k, v in value.items()) or "-"
    if isinstance(value, (list, tuple)):
        return " ".join(str(x) for x in value) or "-"
    return str(value)


def render(fields: dict, as_json: bool = False) -> str:
    if as_json:
        return json.dumps(fields, default=str)
    return "\n".join(f"{key} = {_text_value(value)}" for key, value in fields.items())


def parse(text: str) -> dict:
    """Inverse of the text form, returning raw string values."""
    out = {}
    for line in text.splitlines():
        if " = " in line:
            key, value = line.split(" = ", 1)
            out[key.strip()] = value.strip()
    return out


def parse_histogram(value: str) -> dict:
    if value == "-":
        return {}
    return {int(d): int(c) for d, c in (item.split(":") for item in value.split(","))}

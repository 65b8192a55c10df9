"""Report trees: JSON (canonical, sorted keys) and a lossy text summary."""

from __future__ import annotations

import json
from fractions import Fraction


def jsonable(value):
    """Normalize a report tree to JSON-native types."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


def render_json(report: dict) -> str:
    return json.dumps(jsonable(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> dict:
    return json.loads(text)


def _scalar(v) -> str:
    if v is True:
        return "pass"
    if v is False:
        return "fail"
    if v is None:
        return "n/a"
    return str(v)


def render_text(report: dict) -> str:
    lines = []

    def walk(node, indent):
        pad = "  " * indent
        for key in sorted(node):
            val = node[key]
            if isinstance(val, dict):
                if not val:
                    lines.append(f"{pad}{key}: (none)")
                    continue
                lines.append(f"{pad}{key}:")
                walk(val, indent + 1)
            elif isinstance(val, (list, tuple)):
                items = ", ".join(_scalar(jsonable(v)) if not isinstance(v, (list, tuple, dict))
                                  else json.dumps(jsonable(v), ensure_ascii=False) for v in val)
                lines.append(f"{pad}{key}: [{items}]")
            elif isinstance(val, str) and "\n" in val:
                lines.append(f"{pad}{key}:")
                lines.extend(pad + "  " + ln for ln in val.rstrip("\n").splitlines())
            else:
                lines.append(f"{pad}{key}: {_scalar(jsonable(val))}")

    walk(report, 0)
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(report)
    if fmt == "text":
        return render_text(report)
    raise ValueError(f"unknown format {fmt!r}")

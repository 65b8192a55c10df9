"""The ``.hls`` algebra file format.

Example::

    # the affine example
    [algebra]
    name = affine
    basis = e1, e2, e3
    parity = e3:1

    [bracket]
    "e1,e2" = "e1"

    [alpha]
    e3 = "0"

Sections are ``[algebra]``, ``[bracket]``, ``[alpha]`` and ``[form]``.  Keys
and values may be double-quoted.  Omitted parities are 0, omitted alpha rows
are the identity, omitted brackets and form entries are zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import ParseError
from ..notation import format_combination, parse_combination
from ..ratlin import format_scalar

SECTIONS = ("algebra", "bracket", "alpha", "form")
_LABEL = re.compile(r"[A-Za-z_][A-Za-z0-9_'.]*\Z")
_INT = re.compile(r"[-+−]?\d+\Z")


@dataclass
class AlgebraSpecFile:
    name: str = ""
    names: list = field(default_factory=list)
    parity: dict = field(default_factory=dict)
    degree: dict | None = None
    brackets: dict = field(default_factory=dict)
    alpha: dict = field(default_factory=dict)
    form: dict | None = None
    has_algebra: bool = False


def _unquote(text: str, line: int, col: int) -> str:
    t = text.strip()
    if t.startswith('"'):
        if len(t) < 2 or not t.endswith('"'):
            raise ParseError("unterminated quoted string", line, col)
        return t[1:-1]
    if '"' in t:
        raise ParseError("stray quote", line, col + t.index('"'))
    return t


def _strip_comment(raw: str) -> str:
    out = []
    quoted = False
    for ch in raw:
        if ch == '"':
            quoted = not quoted
        if ch == "#" and not quoted:
            break
        out.append(ch)
    return "".join(out)


def _split_list(text: str, line: int, col: int) -> list:
    """Comma-separated items with their columns."""
    items = []
    pos = 0
    for part in text.split(","):
        lead = len(part) - len(part.lstrip())
        items.append((part.strip(), col + pos + lead))
        pos += len(part) + 1
    if any(not it for it, _ in items):
        raise ParseError("empty item in list", line, col)
    return items


def parse_spec(text: str, labels: list | None = None) -> AlgebraSpecFile:
    """Parse ``.hls`` text.

    ``labels`` supplies the basis when the text has no ``[algebra]`` section
    (a stand-alone form file).
    """
    spec = AlgebraSpecFile()
    section = None
    seen_sections = set()
    keys_seen: dict = {}
    pending = []  # (section, key, value, line, key_col, value_col)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw).rstrip()
        if not body.strip():
            continue
        lead = len(body) - len(body.lstrip())
        stripped = body.strip()
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ParseError("unterminated section header", lineno, lead + 1)
            section = stripped[1:-1].strip()
            if section not in SECTIONS:
                raise ParseError(f"unknown section [{section}]", lineno, lead + 2)
            if section in seen_sections:
                raise ParseError(f"duplicate section [{section}]", lineno, lead + 1)
            seen_sections.add(section)
            continue
        if section is None:
            raise ParseError("entry outside any section", lineno, lead + 1)
        eq = _find_eq(body)
        if eq < 0:
            raise ParseError("expected key = value", lineno, lead + 1)
        key_raw = body[:eq]
        val_raw = body[eq + 1:]
        key_col = lead + 1
        val_col = eq + 2 + (len(val_raw) - len(val_raw.lstrip()))
        key = _unquote(key_raw, lineno, key_col)
        value = _unquote(val_raw, lineno, val_col)
        # columns of the content, past any opening quote
        key_col += key_raw.lstrip().startswith('"')
        val_col += val_raw.lstrip().startswith('"')
        if not key:
            raise ParseError("empty key", lineno, key_col)
        norm = key if section in ("algebra", "alpha") else ",".join(p.strip() for p in key.split(","))
        if (section, norm) in keys_seen:
            raise ParseError(f"duplicate key {key!r} in [{section}] (first on line {keys_seen[(section, norm)]})",
                             lineno, key_col)
        keys_seen[(section, norm)] = lineno
        if value == "":
            raise ParseError("empty value", lineno, val_col)
        pending.append((section, key, value, lineno, key_col, val_col))

    # algebra header first, so labels are known
    for section, key, value, line, kc, vc in pending:
        if section != "algebra":
            continue
        if key == "name":
            spec.name = value
        elif key == "basis":
            for lab, col in _split_list(value, line, vc):
                if not _LABEL.match(lab):
                    raise ParseError(f"invalid basis label {lab!r}", line, col)
                if lab in spec.names:
                    raise ParseError(f"duplicate basis label {lab!r}", line, col)
                spec.names.append(lab)
            spec.has_algebra = True
        elif key not in ("parity", "degree"):
            raise ParseError(f"unknown [algebra] key {key!r}", line, kc)
    if not spec.has_algebra:
        if "algebra" in seen_sections:
            raise ParseError("[algebra] section has no basis", 1, 1)
        if labels is None and any(s != "form" for s, *_ in pending):
            raise ParseError("missing [algebra] section", 1, 1)
        spec.names = list(labels or [])
    known = set(spec.names)

    def label_at(lab, line, col):
        if lab not in known:
            raise ParseError(f"unknown basis label {lab!r}", line, col)
        return lab

    for section, key, value, line, kc, vc in pending:
        if section == "algebra" and key in ("parity", "degree"):
            target = {}
            for item, col in _split_list(value, line, vc):
                if ":" not in item:
                    raise ParseError(f"expected label:value in {key} map", line, col)
                lab, num = (s.strip() for s in item.split(":", 1))
                label_at(lab, line, col)
                if lab in target:
                    raise ParseError(f"duplicate {key} entry for {lab!r}", line, col)
                if not _INT.match(num):
                    raise ParseError(f"{key} of {lab!r} must be an integer", line, col + item.index(":") + 1)
                v = int(num.replace("−", "-"))
                if key == "parity" and v not in (0, 1):
                    raise ParseError(f"parity of {lab!r} must be 0 or 1", line, col)
                target[lab] = v
            if key == "parity":
                spec.parity = {lab: target.get(lab, 0) for lab in spec.names}
            else:
                missing = [lab for lab in spec.names if lab not in target]
                if missing:
                    raise ParseError(f"degree missing for {', '.join(missing)}", line, vc)
                spec.degree = target
    if not spec.parity:
        spec.parity = {lab: 0 for lab in spec.names}
    index = {lab: i for i, lab in enumerate(spec.names)}

    for section, key, value, line, kc, vc in pending:
        if section == "algebra":
            continue
        if section in ("bracket", "form"):
            parts = _split_list(key, line, kc)
            if len(parts) != 2:
                raise ParseError("expected a pair 'a,b'", line, kc)
            (a, ca), (b, cb) = parts
            label_at(a, line, ca)
            label_at(b, line, cb)
            if section == "bracket":
                if index[a] > index[b]:
                    raise ParseError(f"bracket must be given as \"{b},{a}\" (pairs in basis order)", line, kc)
                _check_combination(value, spec.names, line, vc)
                spec.brackets[(a, b)] = value
            else:
                _check_scalar(value, line, vc)
                if spec.form is None:
                    spec.form = {}
                spec.form[(a, b)] = value
        else:
            label_at(key, line, kc)
            _check_combination(value, spec.names, line, vc)
            spec.alpha[key] = value
    if "form" in seen_sections and spec.form is None:
        spec.form = {}
    return spec


def _find_eq(body: str) -> int:
    quoted = False
    for i, ch in enumerate(body):
        if ch == '"':
            quoted = not quoted
        elif ch == "=" and not quoted:
            return i
    return -1


def _check_combination(value, names, line, col):
    try:
        parse_combination(value, names)
    except ParseError as exc:
        raise ParseError(exc.reason, line, col + (exc.column or 1) - 1) from None


def _check_scalar(value, line, col):
    from ..ratlin import as_scalar
    try:
        as_scalar(value.replace("−", "-").replace(" ", ""))
    except (ValueError, TypeError, ZeroDivisionError):
        raise ParseError(f"invalid scalar {value!r}", line, col) from None


def read_spec(path) -> AlgebraSpecFile:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def render_spec(g, form=None) -> str:
    """Canonical ``.hls`` text for an algebra (and optionally a Gram matrix)."""
    lines = ["[algebra]"]
    if g.name:
        lines.append(f"name = {g.name}")
    lines.append("basis = " + ", ".join(g.names))
    lines.append("parity = " + ", ".join(f"{lab}:{p}" for lab, p in zip(g.names, g.parity)))
    if g.zdegree is not None:
        lines.append("degree = " + ", ".join(f"{lab}:{d}" for lab, d in zip(g.names, g.zdegree)))
    lines.append("")
    lines.append("[bracket]")
    n = g.dim
    for i in range(n):
        for j in range(i, n):
            v = g.table[i][j]
            if any(v):
                lines.append(f'"{g.names[i]},{g.names[j]}" = "{format_combination(v, g.names)}"')
    lines.append("")
    lines.append("[alpha]")
    for j in range(n):
        lines.append(f'{g.names[j]} = "{format_combination(g.alpha.column(j), g.names)}"')
    if form is not None:
        gram = getattr(form, "gram", form)
        lines.append("")
        lines.append("[form]")
        for i in range(n):
            for j in range(n):
                if gram[i, j]:
                    lines.append(f'"{g.names[i]},{g.names[j]}" = "{format_scalar(gram[i, j])}"')
    return "\n".join(lines) + "\n"


export_spec = render_spec

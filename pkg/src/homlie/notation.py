"""Linear-combination strings such as ``"2*e1 - 1/2*e3"``.

Grammar::

    combo  := term (("+" | "-") term)*
    term   := [scalar "*"] label | scalar
    scalar := integer | integer "/" integer

A bare scalar term is only meaningful as ``0``; anything else is rejected
because it has no basis element to attach to.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<label>[A-Za-z_][A-Za-z0-9_'.]*)|(?P<op>[-+*]))")


def _tokens(text: str):
    pos = 0
    text = text.replace("−", "-")
    while pos < len(text):
        if text[pos:].strip() == "":
            return
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", column=bad + 1)
        kind = m.lastgroup
        start = m.start(kind)
        yield kind, m.group(kind), start + 1
        pos = m.end()


def parse_combination(text: str, labels: Sequence[str]) -> dict:
    """Parse ``text`` into ``{label: Fraction}`` with zero coefficients dropped.

    Raises ParseError (column set, line unset) on bad syntax or unknown labels.
    """
    index = set(labels)
    toks = list(_tokens(text))
    if not toks:
        raise ParseError("empty linear combination", column=1)
    out: dict = {}
    i = 0
    expect_term = True
    sign = 1
    while i < len(toks):
        kind, val, col = toks[i]
        if expect_term:
            if kind == "op" and val in "+-":
                if val == "-":
                    sign = -sign
                i += 1
                continue
            coef = Fraction(1)
            if kind == "num":
                if i + 1 < len(toks) and toks[i + 1][1] == "*":
                    coef = Fraction(val)
                    i += 2
                    if i >= len(toks):
                        raise ParseError("expected a basis label after '*'", column=len(text.rstrip()) + 1)
                    kind, val, col = toks[i]
                    if kind != "label":
                        raise ParseError(f"expected a basis label, got {val!r}", column=col)
                else:
                    if Fraction(val) != 0:
                        raise ParseError(f"scalar term {val!r} has no basis label", column=col)
                    i += 1
                    expect_term = False
                    sign = 1
                    continue
            elif kind != "label":
                raise ParseError(f"expected a term, got {val!r}", column=col)
            if val not in index:
                raise ParseError(f"unknown basis label {val!r}", column=col)
            out[val] = out.get(val, Fraction(0)) + sign * coef
            sign = 1
            expect_term = False
            i += 1
        else:
            if kind != "op" or val == "*":
                raise ParseError(f"expected '+' or '-', got {val!r}", column=col)
            sign = 1 if val == "+" else -1
            expect_term = True
            i += 1
    if expect_term:
        raise ParseError("dangling operator at end of expression", column=toks[-1][2])
    return {k: v for k, v in out.items() if v}


def combination_vector(coeffs: Mapping[str, Fraction], labels: Sequence[str]) -> tuple:
    pos = {name: i for i, name in enumerate(labels)}
    v = [Fraction(0)] * len(labels)
    for name, c in coeffs.items():
        v[pos[name]] += Fraction(c)
    return tuple(v)


def format_combination(vector: Sequence[Fraction], labels: Sequence[str]) -> str:
    """Canonical text for a coefficient vector; ``"0"`` for the zero vector."""
    parts = []
    for c, name in zip(vector, labels):
        if not c:
            continue
        mag = abs(c)
        term = name if mag == 1 else f"{mag}*{name}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"

"""Command-line interface: ``homlie {check,analyze,prolong,extend-form,quotient}``.

Exit codes: 0 success, 1 domain failure (axiom, precondition, prolongation),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import HomLieError, ParseError, PreconditionError, ProlongationError, SpecError
from ..notation import format_combination, parse_combination, combination_vector
from ..ratlin import Subspace
from ..superalgebra import check_axioms, load_algebra
from .report import render
from .specfile import AlgebraSpecFile, parse_spec, read_spec, render_spec

__all__ = ["main", "run", "parse_spec", "render_spec", "AlgebraSpecFile"]

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="homlie", description="Exact checks for finite-dimensional hom-Lie superalgebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("file", help="algebra file (.hls)")
        sp.add_argument("--format", choices=("json", "text"), default="text")

    sp = sub.add_parser("check", help="evaluate the axioms and twist-map properties")
    common(sp)
    sp.add_argument("--require", default="", help="comma-separated flags that must pass, e.g. multiplicative")

    sp = sub.add_parser("analyze", help="center, derived algebra, grading and simplicity")
    common(sp)

    sp = sub.add_parser("prolong", help="minimal graded realization of a local part")
    common(sp)
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--tensor-cap", type=int, required=True)
    sp.add_argument("--sign-convention", choices=("auto", "verbatim", "koszul"), default="auto")
    sp.add_argument("--output", "-o", help="output file (default: <input stem>_min.hls)")

    sp = sub.add_parser("extend-form", help="extend a local invariant form degree by degree")
    common(sp)
    sp.add_argument("--form", help="form file with a [form] section (default: the algebra file's own)")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--convention", choices=("classical_sign", "paper_sign"), default="classical_sign")

    sp = sub.add_parser("quotient", help="quotient by a hom-ideal")
    common(sp)
    sp.add_argument("--ideal", required=True, help="comma-separated spanning vectors, e.g. \"e1, e2 + e3\"")
    sp.add_argument("--output", "-o", help="write the quotient algebra file here")
    return p


def _basis_strings(s: Subspace, names) -> list:
    return [format_combination(v, names) for v in s.vectors]


def _cmd_check(args, spec):
    g = load_algebra(spec)
    rep = check_axioms(g)
    flags = rep.flags()
    required = [f.strip() for f in args.require.split(",") if f.strip()]
    for f in required:
        if f not in flags:
            raise _Usage(f"unknown flag {f!r} in --require")
    failed = [f for f in required if not flags[f]]
    out = {"command": "check", "algebra": g.name, "dim": g.dim, "axioms": flags,
           "hom_lie": rep.is_hom_lie, "witnesses": rep.witnesses}
    if required:
        out["required"] = {f: flags[f] for f in required}
    code = EXIT_OK if rep.is_hom_lie and not failed else EXIT_DOMAIN
    return out, code


def _cmd_analyze(args, spec):
    from ..forms import check_form, killing_form
    from ..grading import analyze_grading, is_simple, structural_criteria
    from ..structure import center, derived_algebra
    g = load_algebra(spec)
    ax = check_axioms(g)
    z = center(g)
    d = derived_algebra(g)
    simple = is_simple(g, graded=False)
    out = {"command": "analyze", "algebra": g.name, "dim": g.dim,
           "axioms": ax.flags(),
           "center": {"dim": z.dim, "basis": _basis_strings(z, g.names)},
           "derived": {"dim": d.dim, "basis": _basis_strings(d, g.names)},
           "abelian": g.is_abelian(),
           "simple": simple.simple,
           "simplicity": {"reason": simple.reason,
                          "witness": None if simple.witness is None
                          else _basis_strings(simple.witness, g.names),
                          "certificate": simple.search.certificate if simple.search else ""}}
    if g.zdegree is not None:
        gr = analyze_grading(g)
        out["grading"] = {"flags": gr.flags(), "witnesses": gr.witnesses,
                          "dims_per_degree": {str(k): v for k, v in sorted(gr.dims_per_degree.items())},
                          "degree_range": list(gr.degree_range)}
        out["simple_graded"] = gr.simple
    crit = structural_criteria(g)
    out["criteria"] = {"alarms": crit.alarms, "undetermined": crit.undetermined,
                       "simple_center_ok": crit.simple_center_ok}
    kf = check_form(g, killing_form(g))
    out["killing_form"] = {"invariant": kf.invariant, "nondegenerate": kf.nondegenerate}
    return out, EXIT_OK


def _cmd_prolong(args, spec):
    from ..prolong import TensorWindow, load_local, prolong_minimal
    L = load_local(spec)
    w = TensorWindow.for_local(L, args.tensor_cap)
    res = prolong_minimal(L, args.max_degree, w, args.sign_convention)
    target = Path(args.output) if args.output else Path(args.file).with_name(Path(args.file).stem + "_min.hls")
    target.write_text(render_spec(res.algebra), encoding="utf-8")
    out = {"command": "prolong", "algebra": L.name, "dims": res.dims_table(),
           "dims_per_degree": {str(k): v for k, v in sorted(res.dims.items())},
           "recovery": res.recovery, "local_brackets_match": res.local_brackets_match,
           "relations": res.relations.flags(), "sign_convention": res.relations.convention,
           "axioms": res.axioms.flags(), "tensor_cap": res.cap, "output": str(target)}
    return out, EXIT_OK


def _cmd_extend_form(args, spec):
    from ..forms import BilinearForm, extend_form
    g = load_algebra(spec)
    if args.form:
        fspec = parse_spec(Path(args.form).read_text(encoding="utf-8"), labels=list(g.names))
        if fspec.has_algebra and list(fspec.names) != list(g.names):
            raise SpecError("form file declares a different basis")
        entries = fspec.form
    else:
        entries = spec.form
    if entries is None:
        raise _Usage("no [form] section found; pass --form")
    local = BilinearForm.from_entries(g, entries, args.convention)
    res = extend_form(g, local, args.max_degree, args.convention)
    gram = res.form.gram
    entries_out = {f"{g.names[i]},{g.names[j]}": gram[i, j]
                   for i in range(g.dim) for j in range(g.dim) if gram[i, j]}
    out = {"command": "extend-form", "algebra": g.name, "verdict": res.verdict,
           "blocks": {str(k): v for k, v in sorted(res.blocks.items())}, "gram": entries_out,
           "notes": res.notes, "convention": args.convention,
           "check": None if res.report is None else res.report.flags()}
    return out, EXIT_DOMAIN if res.verdict == "Inconsistent" else EXIT_OK


def _cmd_quotient(args, spec):
    from ..structure import quotient
    g = load_algebra(spec)
    vecs = []
    for item in args.ideal.split(","):
        if item.strip():
            try:
                vecs.append(combination_vector(parse_combination(item, g.names), g.names))
            except ParseError as exc:
                raise _Usage(f"--ideal: {exc}") from None
    ideal = Subspace.span(vecs, g.dim)
    q = quotient(g, ideal)
    text = render_spec(q)
    out = {"command": "quotient", "algebra": g.name, "ideal": _basis_strings(ideal, g.names),
           "quotient": {"name": q.name, "dim": q.dim, "basis": list(q.names)}}
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        out["output"] = args.output
    else:
        out["spec"] = text
    return out, EXIT_OK


COMMANDS = {"check": _cmd_check, "analyze": _cmd_analyze, "prolong": _cmd_prolong,
            "extend-form": _cmd_extend_form, "quotient": _cmd_quotient}


def run(argv=None) -> tuple:
    """Execute a command line; returns ``(exit_code, report, rendered_text)``."""
    fmt = "text"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        spec = read_spec(args.file)
        report, code = COMMANDS[args.command](args, spec)
    except _Usage as exc:
        return _fail(EXIT_USAGE, "usage", str(exc), fmt)
    except FileNotFoundError as exc:
        return _fail(EXIT_USAGE, "file", f"file not found: {exc.filename}", fmt)
    except ParseError as exc:
        return _fail(EXIT_USAGE, "parse", str(exc), fmt, line=exc.line, column=exc.column)
    except SpecError as exc:
        return _fail(EXIT_USAGE, "spec", str(exc), fmt)
    except PreconditionError as exc:
        return _fail(EXIT_DOMAIN, "precondition", str(exc), fmt, witness=exc.witness)
    except (ProlongationError, HomLieError) as exc:
        return _fail(EXIT_DOMAIN, "domain", str(exc), fmt)
    return code, report, render(report, fmt)


def _fail(code, kind, message, fmt, **extra):
    err = {"kind": kind, "message": message}
    err.update({k: v for k, v in extra.items() if v is not None})
    report = {"error": err}
    return code, report, render(report, fmt)


def main(argv=None) -> int:
    code, report, text = run(argv)
    if "error" in report:
        if text.startswith("{"):
            sys.stdout.write(text)
        sys.stderr.write(f"homlie: error: {report['error']['message']}\n")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

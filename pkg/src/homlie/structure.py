"""Hom-subalgebras, hom-ideals, center, derived algebra and quotients."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionError, PreconditionError
from .notation import format_combination
from .ratlin import (Matrix, Subspace, complement_indices, kernel, solve,
                     unit_vector, Unique)
from .repth import spin
from .superalgebra import HomLieSuperalgebra

log = logging.getLogger(__name__)


@dataclass
class IdealVerdict:
    subspace: Subspace
    is_subalgebra: bool
    is_hom_ideal: bool
    is_abelian: bool
    alpha_stable: bool
    witnesses: dict = field(default_factory=dict)


def _fmt(g: HomLieSuperalgebra, v) -> str:
    return format_combination(v, g.names)


def classify_subspace(g: HomLieSuperalgebra, v: Subspace) -> IdealVerdict:
    """Decide hom-subalgebra, hom-ideal and Abelian status of ``v`` from its basis."""
    if v.ambient_dim != g.dim:
        raise DimensionError(f"subspace of ambient {v.ambient_dim} in an algebra of dimension {g.dim}")
    wit = {}
    vecs = v.vectors

    alpha_stable = True
    for x in vecs:
        if g.alpha.apply(x) not in v:
            alpha_stable = False
            wit["alpha_stable"] = (_fmt(g, x), "alpha")
            break

    closed = True
    abelian = True
    for a in vecs:
        for b in vecs:
            br = g.bracket(a, b)
            if any(br):
                if abelian:
                    abelian = False
                    wit["is_abelian"] = (_fmt(g, a), _fmt(g, b))
                if closed and br not in v:
                    closed = False
                    wit["is_subalgebra"] = (_fmt(g, a), _fmt(g, b))
    if not alpha_stable and "is_subalgebra" not in wit:
        wit["is_subalgebra"] = wit["alpha_stable"]

    ideal = True
    for a in vecs:
        for j in range(g.dim):
            br = g.bracket(a, unit_vector(g.dim, j))
            if br not in v:
                ideal = False
                wit["is_hom_ideal"] = (_fmt(g, a), g.names[j])
                break
        if not ideal:
            break
    if ideal and not alpha_stable:
        wit["is_hom_ideal"] = wit["alpha_stable"]
    subalgebra = alpha_stable and closed
    return IdealVerdict(v, subalgebra, ideal and alpha_stable, abelian, alpha_stable, wit)


def ideal_operators(g: HomLieSuperalgebra) -> list:
    """Operators whose common invariant subspaces are the hom-ideals (for homogeneous spans)."""
    return [g.ad(i) for i in range(g.dim)] + [g.alpha]


def ideal_closure(g: HomLieSuperalgebra, generators: Sequence) -> Subspace:
    """Smallest subspace containing ``generators`` stable under every ``ad(e_i)`` and alpha."""
    gens = [g.vector(x) for x in generators]
    if not gens:
        return Subspace.zero(g.dim)
    return spin(ideal_operators(g), gens, g.dim)


def ideal_arithmetic(g: HomLieSuperalgebra, i: Subspace, j: Subspace, op: str) -> Subspace:
    """Sum, intersection or bracket of two hom-ideals.

    The result is re-classified; a result that is not a hom-ideal is logged
    as a warning rather than raised, so corpus runs can count violations.
    """
    for name, s in (("first", i), ("second", j)):
        verdict = classify_subspace(g, s)
        if not verdict.is_hom_ideal:
            raise PreconditionError(f"{name} operand is not a hom-ideal",
                                    verdict.witnesses.get("is_hom_ideal"))
    if op == "sum":
        out = i + j
    elif op == "intersect":
        out = i & j
    elif op == "bracket":
        out = Subspace.span((g.bracket(a, b) for a in i.vectors for b in j.vectors), g.dim)
    else:
        raise ValueError(f"unknown ideal operation {op!r}")
    if not classify_subspace(g, out).is_hom_ideal:
        log.warning("ideal %s of hom-ideals is not a hom-ideal in %s", op, g.name or g.names)
    return out


def derived_algebra(g: HomLieSuperalgebra) -> Subspace:
    n = g.dim
    return Subspace.span((g.table[i][j] for i in range(n) for j in range(i, n)), n)


def center(g: HomLieSuperalgebra) -> Subspace:
    """Kernel of ``v -> ([v, e_1], ..., [v, e_n])``."""
    n = g.dim
    if n == 0:
        return Subspace.zero(0)
    rows = [[g.table[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    return kernel(Matrix(rows, n))


def derived_and_center(g: HomLieSuperalgebra) -> tuple:
    return derived_algebra(g), center(g)


def is_homogeneous(g: HomLieSuperalgebra, s: Subspace) -> bool:
    """True when ``s`` is spanned by parity-homogeneous vectors."""
    even = Subspace.span((unit_vector(g.dim, i) for i in g.parity_indices(0)), g.dim)
    odd = Subspace.span((unit_vector(g.dim, i) for i in g.parity_indices(1)), g.dim)
    return (s & even).dim + (s & odd).dim == s.dim


def is_graded(g: HomLieSuperalgebra, s: Subspace) -> bool:
    if g.zdegree is None:
        return False
    return sum((s & g.degree_subspace(d)).dim for d in g.degrees()) == s.dim


def quotient(g: HomLieSuperalgebra, ideal: Subspace) -> HomLieSuperalgebra:
    """The quotient algebra on cosets of a greedily chosen standard complement.

    The quotient keeps the Z-grading when the ideal is graded.
    """
    verdict = classify_subspace(g, ideal)
    if not verdict.is_hom_ideal:
        raise PreconditionError("quotient needs a hom-ideal", verdict.witnesses.get("is_hom_ideal"))
    if not is_homogeneous(g, ideal):
        raise PreconditionError("quotient needs a parity-homogeneous ideal")
    n = g.dim
    comp = complement_indices(ideal)
    m = len(comp)
    # columns: chosen standard vectors, then the ideal basis
    basis_cols = [unit_vector(n, c) for c in comp] + list(ideal.vectors)
    change = Matrix.from_columns(basis_cols, n)

    def coset(v) -> tuple:
        sol = solve(change, v)
        assert isinstance(sol, Unique)
        return sol.solution[:m]

    table = [[coset(g.table[a][b]) for b in comp] for a in comp]
    alpha_cols = [coset(g.alpha.column(c)) for c in comp]
    alpha = Matrix.from_columns(alpha_cols, m) if m else Matrix.zeros(0, 0)
    zdeg = None
    if g.zdegree is not None and is_graded(g, ideal):
        zdeg = [g.zdegree[c] for c in comp]
    name = f"{g.name}/I" if g.name else ""
    return HomLieSuperalgebra([g.names[c] for c in comp], [g.parity[c] for c in comp],
                              table, alpha, zdeg, name)

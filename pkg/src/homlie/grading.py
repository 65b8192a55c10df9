"""Z-grading diagnostics: compatibility, transitivity, irreducibility, simplicity.

Simplicity is decided through the invariant-subspace search of
:func:`homlie.repth.irreducible`: a (graded) hom-ideal is exactly a subspace
invariant under every ``ad(e_i)``, under alpha, under the parity projection
and, in the graded case, under the degree projections.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .notation import format_combination
from .ratlin import Matrix, Subspace, kernel, preimage, unit_vector
from .repth import IrreducibilityVerdict, irreducible
from .structure import center, derived_algebra
from .superalgebra import HomLieSuperalgebra


@dataclass
class GradingReport:
    compatible: bool
    consistent: bool
    transitive: bool | None = None
    bitransitive: bool | None = None
    graded_irreducible: bool | None = None
    local_generates: bool | None = None
    simple: bool | None = None
    witnesses: dict = field(default_factory=dict)
    degree_range: tuple = ()
    dims_per_degree: dict = field(default_factory=dict)

    FLAGS = ("compatible", "consistent", "transitive", "bitransitive", "graded_irreducible",
             "local_generates", "simple")

    def flags(self) -> dict:
        return {k: getattr(self, k) for k in self.FLAGS if getattr(self, k) is not None}


def _require_grading(g: HomLieSuperalgebra):
    if g.zdegree is None:
        raise PreconditionError("algebra has no Z-grading")


def check_grading(g: HomLieSuperalgebra) -> GradingReport:
    """Compatibility of brackets and alpha with the degrees, and parity consistency."""
    _require_grading(g)
    n = g.dim
    d = g.zdegree
    wit = {}
    compatible = True
    for i in range(n):
        for j in range(n):
            if any(c and d[k] != d[i] + d[j] for k, c in enumerate(g.table[i][j])):
                compatible = False
                wit["compatible"] = (g.names[i], g.names[j])
                break
        if not compatible:
            break
    if compatible:
        for j in range(n):
            col = g.alpha.column(j)
            if any(c and d[k] != d[j] for k, c in enumerate(col)):
                compatible = False
                wit["compatible"] = (g.names[j], "alpha")
                break
    consistent = True
    for i in range(n):
        if g.parity[i] != d[i] % 2:
            consistent = False
            wit["consistent"] = (g.names[i],)
            break
    degs = g.degrees()
    dims = {k: len(g.degree_indices(k)) for k in degs}
    rng = (min(degs), max(degs)) if degs else ()
    return GradingReport(compatible, consistent, witnesses=wit, degree_range=rng, dims_per_degree=dims)


def _annihilator_in_degree(g: HomLieSuperalgebra, deg: int, against: int) -> Subspace:
    """``{a in g_deg : [a, g_against] = 0}`` as a subspace of the whole algebra."""
    n = g.dim
    src = g.degree_indices(deg)
    tgt = g.degree_indices(against)
    if not src:
        return Subspace.zero(n)
    if not tgt:
        return Subspace.span((unit_vector(n, i) for i in src), n)
    rows = [[g.table[i][j][k] for i in src] for j in tgt for k in range(n)]
    ker = kernel(Matrix(rows, len(src)))
    vecs = []
    for v in ker.vectors:
        full = [0] * n
        for c, i in zip(v, src):
            full[i] = c
        vecs.append(full)
    return Subspace.span(vecs, n)


@dataclass
class Transitivity:
    transitive: bool
    bitransitive: bool
    witnesses: dict = field(default_factory=dict)


def transitivity(g: HomLieSuperalgebra) -> Transitivity:
    _require_grading(g)
    wit = {}
    transitive = True
    for deg in [k for k in g.degrees() if k >= 0]:
        ann = _annihilator_in_degree(g, deg, -1)
        if not ann.is_zero():
            transitive = False
            wit["transitive"] = format_combination(ann.vectors[0], g.names)
            break
    bi = transitive
    if transitive:
        for deg in [k for k in g.degrees() if k <= 0]:
            ann = _annihilator_in_degree(g, deg, 1)
            if not ann.is_zero():
                bi = False
                wit["bitransitive"] = format_combination(ann.vectors[0], g.names)
                break
    else:
        wit["bitransitive"] = wit["transitive"]
    return Transitivity(transitive, bi, wit)


def _restricted(g: HomLieSuperalgebra, m: Matrix, idx: list) -> Matrix:
    return m.submatrix(idx, idx)


def graded_irreducible(g: HomLieSuperalgebra) -> IrreducibilityVerdict:
    """Irreducibility of the adjoint action of g_0 on g_{-1}."""
    _require_grading(g)
    minus = g.degree_indices(-1)
    if not minus:
        raise PreconditionError("g_{-1} is zero")
    zero = g.degree_indices(0)
    ops = [_restricted(g, g.ad(z), minus) for z in zero]
    beta = _restricted(g, g.alpha, minus)
    verdict = irreducible(ops, len(minus), [g.parity[i] for i in minus], beta)
    if verdict.witness is not None:
        n = g.dim
        lifted = []
        for v in verdict.witness.vectors:
            full = [0] * n
            for c, i in zip(v, minus):
                full[i] = c
            lifted.append(full)
        verdict.witness = Subspace.span(lifted, n)
    return verdict


def generated_subalgebra(g: HomLieSuperalgebra, seed: Subspace) -> Subspace:
    """Bracket closure of ``seed``."""
    current = seed
    while True:
        vecs = current.vectors
        new = Subspace.span(list(vecs) + [g.bracket(a, b) for a in vecs for b in vecs], g.dim)
        if new == current:
            return current
        current = new


def local_part_generates(g: HomLieSuperalgebra) -> bool:
    _require_grading(g)
    local = Subspace.span((unit_vector(g.dim, i) for i, d in enumerate(g.zdegree) if abs(d) <= 1), g.dim)
    return generated_subalgebra(g, local).is_full()


def _projection(n: int, idx) -> Matrix:
    keep = set(idx)
    return Matrix.diag([1 if i in keep else 0 for i in range(n)])


def ideal_search_operators(g: HomLieSuperalgebra, graded: bool) -> list:
    n = g.dim
    ops = [g.ad(i) for i in range(n)] + [g.alpha]
    if 0 < len(g.parity_indices(1)) < n:
        ops.append(_projection(n, g.parity_indices(0)))
    if graded:
        degs = g.degrees()
        if len(degs) > 1:
            ops.extend(_projection(n, g.degree_indices(k)) for k in degs)
    return ops


@dataclass
class SimplicityVerdict:
    simple: bool | None
    witness: Subspace | None = None
    reason: str = ""
    graded: bool = False
    search: IrreducibilityVerdict | None = None


def _largest_alpha_stable(g: HomLieSuperalgebra, s: Subspace) -> Subspace:
    while True:
        nxt = s & preimage(g.alpha, s)
        if nxt == s:
            return s
        s = nxt


def is_simple(g: HomLieSuperalgebra, graded: bool | None = None) -> SimplicityVerdict:
    """No nontrivial (graded) hom-ideal and a nonzero derived algebra."""
    if graded is None:
        graded = g.zdegree is not None
    if graded:
        _require_grading(g)
    n = g.dim
    if n == 0:
        return SimplicityVerdict(False, None, "zero algebra", graded)
    derived = derived_algebra(g)
    if derived.is_zero():
        return SimplicityVerdict(False, None, "[g,g] = 0", graded)
    z = _largest_alpha_stable(g, center(g))
    if not z.is_zero() and not z.is_full():
        return SimplicityVerdict(False, z, "nonzero alpha-stable center", graded)
    if not derived.is_full() and derived.is_invariant(g.alpha):
        return SimplicityVerdict(False, derived, "[g,g] is a proper hom-ideal", graded)
    verdict = irreducible(ideal_search_operators(g, graded), n, g.parity, g.alpha)
    if verdict.is_reducible:
        return SimplicityVerdict(False, verdict.witness, "proper hom-ideal found", graded, verdict)
    if verdict.is_irreducible:
        return SimplicityVerdict(True, None, "no proper hom-ideal (certified)", graded, verdict)
    return SimplicityVerdict(None, None, "invariant-subspace search inconclusive", graded, verdict)


def analyze_grading(g: HomLieSuperalgebra) -> GradingReport:
    """Every grading flag at once."""
    rep = check_grading(g)
    tr = transitivity(g)
    rep.transitive = tr.transitive
    rep.bitransitive = tr.bitransitive
    rep.witnesses.update(tr.witnesses)
    if g.degree_indices(-1):
        irr = graded_irreducible(g)
        rep.graded_irreducible = None if irr.status == "Inconclusive" else irr.is_irreducible
        if irr.witness is not None:
            rep.witnesses["graded_irreducible"] = [format_combination(v, g.names)
                                                   for v in irr.witness.vectors]
    rep.local_generates = local_part_generates(g)
    simple = is_simple(g, graded=True)
    rep.simple = simple.simple
    if simple.simple is False:
        rep.witnesses["simple"] = simple.reason
    return rep


# ---------------------------------------------------------------- propositions

@dataclass
class Implication:
    name: str
    applicable: bool
    hypotheses: dict
    conclusions: dict
    alarm: bool | None

    @property
    def hypothesis_holds(self):
        vals = list(self.hypotheses.values())
        if any(v is False for v in vals):
            return False
        if any(v is None for v in vals):
            return None
        return True


def _implication(name, applicable, hyp, concl) -> Implication:
    alarm = False
    if applicable:
        vals = list(hyp.values())
        if all(v is True for v in vals):
            cv = list(concl.values())
            if any(v is False for v in cv):
                alarm = True
            elif any(v is None for v in cv):
                alarm = None
        elif not any(v is False for v in vals):
            alarm = None
    return Implication(name, applicable, hyp, concl, alarm)


def _span_brackets(g, left, right) -> Subspace:
    n = g.dim
    return Subspace.span((g.table[i][j] for i in left for j in right), n)


def _coord_span(n, idx) -> Subspace:
    return Subspace.span((unit_vector(n, i) for i in idx), n)


@dataclass
class CriteriaReport:
    implications: list
    simple_center_ok: bool

    @property
    def alarms(self) -> list:
        return [imp.name for imp in self.implications if imp.alarm]

    @property
    def undetermined(self) -> list:
        return [imp.name for imp in self.implications if imp.alarm is None]


def structural_criteria(g: HomLieSuperalgebra) -> CriteriaReport:
    """Instance-level check of the bitransitivity and simplicity criteria."""
    n = g.dim
    out = []
    ungraded = is_simple(g, graded=False)
    even = g.parity_indices(0)
    odd = g.parity_indices(1)

    # faithful irreducible g_even action on g_odd and [g_odd, g_odd] = g_even => simple
    faithful = irreducible_odd = None
    if odd:
        ops = [g.ad(z).submatrix(odd, odd) for z in even]
        stacked = [[ops[a][r, c] for a in range(len(even))] for r in range(len(odd)) for c in range(len(odd))]
        faithful = kernel(Matrix(stacked, len(even))).is_zero() if even else True
        irr = irreducible(ops, len(odd), [1] * len(odd))
        irreducible_odd = None if irr.status == "Inconclusive" else irr.is_irreducible
    else:
        faithful = not even
        irreducible_odd = False
    hyp = {"faithful_even_on_odd": faithful, "irreducible_even_on_odd": irreducible_odd,
           "odd_brackets_span_even": _span_brackets(g, odd, odd) == _coord_span(n, even),
           "even_nonzero": bool(even)}
    out.append(_implication("odd_generation_simplicity", True, hyp, {"simple": ungraded.simple}))

    graded_simple = None
    if g.zdegree is not None and check_grading(g).compatible:
        gs = is_simple(g, graded=True)
        graded_simple = gs.simple
        tr = transitivity(g)
        gen = local_part_generates(g)
        out.append(_implication("simple_generated_bitransitive", True,
                                {"simple": graded_simple, "local_generates": gen},
                                {"bitransitive": tr.bitransitive}))
        degs = g.degrees()
        minus = g.degree_indices(-1)
        applicable = bool(minus) and min(degs) >= -1
        irr = None
        if minus:
            v = graded_irreducible(g)
            irr = None if v.status == "Inconclusive" else v.is_irreducible
        g0 = g.degree_indices(0)
        g1 = g.degree_indices(1)
        concl = {"transitive": tr.transitive, "irreducible": irr,
                 "minus_one_plus_one_spans_zero": _span_brackets(g, minus, g1) == _coord_span(n, g0),
                 "g0_nonzero": bool(g0), "g1_nonzero": bool(g1)}
        out.append(_implication("simple_implies_transitive_irreducible", applicable,
                                {"simple": graded_simple}, concl))
        gen_ok = True
        if applicable:
            for k in range(-1, max(degs) + 1):
                got = _span_brackets(g, g.degree_indices(k), g1)
                want = _coord_span(n, g.degree_indices(k + 1))
                if got != want:
                    gen_ok = False
                    break
        hyp2 = {"g1_nonzero": bool(g1), "transitive": tr.transitive, "irreducible": irr,
                "positive_generation": gen_ok}
        out.append(_implication("transitive_irreducible_generated_simple", applicable, hyp2,
                                {"simple": graded_simple}))

    simple_any = graded_simple if graded_simple is not None else ungraded.simple
    center_ok = True
    if simple_any:
        center_ok = center(g).is_zero()
    return CriteriaReport(out, center_ok)

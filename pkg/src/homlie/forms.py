"""Bilinear forms: the five form properties, radicals, proportionality and graded extension."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import DimensionError, PreconditionError
from .grading import local_part_generates
from .ratlin import Affine, Inconsistent, Matrix, Subspace, as_scalar, kernel, solve
from .structure import IdealVerdict, classify_subspace
from .superalgebra import HomLieSuperalgebra, sign

log = logging.getLogger(__name__)

CONVENTIONS = ("classical_sign", "paper_sign")


@dataclass(frozen=True)
class BilinearForm:
    gram: Matrix
    known_blocks: frozenset | None = None

    def __post_init__(self):
        if not self.gram.is_square():
            raise DimensionError("Gram matrix must be square")

    @property
    def dim(self) -> int:
        return self.gram.rows

    def __call__(self, x, y) -> Fraction:
        gx = self.gram.T.apply(x)
        return sum((a * b for a, b in zip(gx, y)), Fraction(0))

    @classmethod
    def from_entries(cls, g: HomLieSuperalgebra, entries: Mapping, convention: str = "classical_sign",
                     fill: bool = True) -> "BilinearForm":
        """Gram matrix from ``{(label, label): scalar}``.

        With ``fill`` an entry whose mirror is absent is mirrored by the
        supersymmetry sign of ``convention``.
        """
        _check_convention(convention)
        n = g.dim
        grid = [[Fraction(0)] * n for _ in range(n)]
        given = set()
        for (a, b), v in entries.items():
            i, j = g.index(a), g.index(b)
            grid[i][j] = as_scalar(v)
            given.add((i, j))
        if fill:
            for i, j in list(given):
                if (j, i) not in given:
                    grid[j][i] = _mirror_sign(g.parity[i], g.parity[j], convention) * grid[i][j]
        return cls(Matrix(grid, n))


def _check_convention(convention: str):
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")


def _mirror_sign(pi: int, pj: int, convention: str) -> int:
    s = sign(pi * pj)
    return s if convention == "classical_sign" else -s


@dataclass
class FormReport:
    consistent: bool
    supersymmetric: bool
    invariant: bool
    alpha_invariant: bool
    nondegenerate: bool
    radical: Subspace
    convention: str = "classical_sign"
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("consistent", "supersymmetric", "invariant", "alpha_invariant", "nondegenerate")

    def flags(self) -> dict:
        return {k: getattr(self, k) for k in self.FLAGS}


def radical(b: BilinearForm) -> Subspace:
    """``{x : f(x, g) = 0}``."""
    return kernel(b.gram.T)


def check_form(g: HomLieSuperalgebra, b: BilinearForm, convention: str = "classical_sign") -> FormReport:
    _check_convention(convention)
    n = g.dim
    if b.dim != n:
        raise DimensionError(f"form of dimension {b.dim} on an algebra of dimension {n}")
    G = b.gram
    p = g.parity
    names = g.names
    wit = {}

    consistent = True
    for i in range(n):
        for j in range(n):
            if p[i] != p[j] and G[i, j]:
                consistent = False
                wit["consistent"] = (names[i], names[j])
                break
        if not consistent:
            break

    supersymmetric = True
    for i in range(n):
        for j in range(i, n):
            if G[i, j] != _mirror_sign(p[i], p[j], convention) * G[j, i]:
                supersymmetric = False
                wit["supersymmetric"] = (names[i], names[j])
                break
        if not supersymmetric:
            break

    # f([x,y],z) = f(x,[y,z]) over basis triples
    invariant = True
    rows = [G.row(i) for i in range(n)]
    cols = [G.column(k) for k in range(n)]
    for i in range(n):
        for j in range(n):
            left = g.table[i][j]
            for k in range(n):
                lhs = sum((c * x for c, x in zip(left, cols[k]) if c), Fraction(0))
                rhs = sum((c * x for c, x in zip(g.table[j][k], rows[i]) if c), Fraction(0))
                if lhs != rhs:
                    invariant = False
                    wit["invariant"] = (names[i], names[j], names[k])
                    break
            if not invariant:
                break
        if not invariant:
            break

    a = g.alpha
    lhs = a.T @ G
    rhs = G @ a
    alpha_invariant = lhs == rhs
    if not alpha_invariant:
        i, j = next((i, j) for i in range(n) for j in range(n) if lhs[i, j] != rhs[i, j])
        wit["alpha_invariant"] = (names[i], names[j])

    rad = radical(b)
    nondeg = rad.is_zero()
    if not nondeg:
        from .notation import format_combination
        wit["nondegenerate"] = (format_combination(rad.vectors[0], names),)
    return FormReport(consistent, supersymmetric, invariant, alpha_invariant, nondeg, rad, convention, wit)


def form_radical_ideal(g: HomLieSuperalgebra, b: BilinearForm) -> IdealVerdict:
    """Classify the radical; an invariant, alpha-invariant form must give a hom-ideal."""
    rep = check_form(g, b)
    if not rep.invariant:
        raise PreconditionError("form is not invariant", rep.witnesses.get("invariant"))
    verdict = classify_subspace(g, rep.radical)
    if rep.alpha_invariant and not verdict.is_hom_ideal:
        log.warning("radical of an invariant alpha-invariant form is not a hom-ideal in %s", g.name)
    return verdict


def proportional(b1: BilinearForm, b2: BilinearForm):
    """``lam`` with ``gram(b1) = lam * gram(b2)``, or None.

    Two zero forms give 1; exactly one zero form gives None.
    """
    if b1.dim != b2.dim:
        raise DimensionError("forms of different dimensions")
    z1, z2 = b1.gram.is_zero(), b2.gram.is_zero()
    if z1 and z2:
        return Fraction(1)
    if z1 or z2:
        return None
    lam = None
    n = b1.dim
    for i in range(n):
        for j in range(n):
            x, y = b1.gram[i, j], b2.gram[i, j]
            if y == 0:
                if x != 0:
                    return None
                continue
            r = x / y
            if lam is None:
                lam = r
            elif r != lam:
                return None
    return lam


def supertrace(m: Matrix, parity) -> Fraction:
    return sum((m[i, i] if parity[i] == 0 else -m[i, i] for i in range(m.rows)), Fraction(0))


def killing_form(g: HomLieSuperalgebra) -> BilinearForm:
    """``(x, y) -> str(ad x ad y)``."""
    n = g.dim
    ads = [g.ad(i) for i in range(n)]
    grid = [[supertrace(ads[i] @ ads[j], g.parity) for j in range(n)] for i in range(n)]
    return BilinearForm(Matrix(grid, n))


def invariant_forms(g: HomLieSuperalgebra, convention: str = "classical_sign") -> list:
    """Basis of the forms that are consistent, supersymmetric, invariant and alpha-invariant."""
    _check_convention(convention)
    n = g.dim
    N = n * n

    def var(i, j):
        return i * n + j

    eqs = []
    for i in range(n):
        for j in range(n):
            if g.parity[i] != g.parity[j]:
                row = [0] * N
                row[var(i, j)] = 1
                eqs.append(row)
            elif i <= j:
                row = [0] * N
                row[var(i, j)] += 1
                row[var(j, i)] -= _mirror_sign(g.parity[i], g.parity[j], convention)
                if any(row):
                    eqs.append(row)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [Fraction(0)] * N
                for m, c in enumerate(g.table[i][j]):
                    if c:
                        row[var(m, k)] += c
                for m, c in enumerate(g.table[j][k]):
                    if c:
                        row[var(i, m)] -= c
                if any(row):
                    eqs.append(row)
    a = g.alpha
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * N
            for m in range(n):
                if a[m, i]:
                    row[var(m, j)] += a[m, i]
                if a[m, j]:
                    row[var(i, m)] -= a[m, j]
            if any(row):
                eqs.append(row)
    if not eqs:
        space = Subspace.full(N)
    else:
        space = kernel(Matrix(eqs, N))
    return [BilinearForm(Matrix([v[r * n:(r + 1) * n] for r in range(n)], n)) for v in space.vectors]


# ---------------------------------------------------------------- extension

@dataclass
class ExtensionResult:
    form: BilinearForm
    verdict: str
    blocks: dict
    notes: list
    report: FormReport | None


def _local_gram(g: HomLieSuperalgebra, local_gram, convention) -> Matrix:
    if isinstance(local_gram, BilinearForm):
        m = local_gram.gram
    elif isinstance(local_gram, Matrix):
        m = local_gram
    elif isinstance(local_gram, Mapping):
        m = BilinearForm.from_entries(g, local_gram, convention).gram
    else:
        m = Matrix(local_gram, g.dim)
    if m.shape != (g.dim, g.dim):
        raise DimensionError("local Gram matrix must match the algebra dimension")
    return m


def _local_preconditions(g: HomLieSuperalgebra, G: Matrix, convention: str):
    n = g.dim
    d = g.zdegree
    p = g.parity
    names = g.names
    local = [i for i in range(n) if abs(d[i]) <= 1]
    for i in range(n):
        for j in range(n):
            if G[i, j] and (abs(d[i]) > 1 or abs(d[j]) > 1 or d[i] + d[j] != 0):
                raise PreconditionError("local Gram entry outside the blocks (g_i, g_-i), |i| <= 1",
                                        (names[i], names[j]))
    for i in local:
        for j in local:
            if p[i] != p[j] and G[i, j]:
                raise PreconditionError("local form is not consistent", (names[i], names[j]))
            if G[i, j] != _mirror_sign(p[i], p[j], convention) * G[j, i]:
                raise PreconditionError("local form is not supersymmetric", (names[i], names[j]))
    a = g.alpha
    for i in local:
        for j in local:
            lhs = sum((a[m, i] * G[m, j] for m in range(n)), Fraction(0))
            rhs = sum((G[i, m] * a[m, j] for m in range(n)), Fraction(0))
            if lhs != rhs:
                raise PreconditionError("local form is not alpha-invariant", (names[i], names[j]))
    for i in local:
        for j in local:
            if abs(d[i] + d[j]) > 1:
                continue
            for k in local:
                if abs(d[j] + d[k]) > 1:
                    continue
                lhs = sum((c * G[m, k] for m, c in enumerate(g.table[i][j]) if c), Fraction(0))
                rhs = sum((c * G[i, m] for m, c in enumerate(g.table[j][k]) if c), Fraction(0))
                if lhs != rhs:
                    raise PreconditionError("local invariance violated", (names[i], names[j], names[k]))


def extend_form(g: HomLieSuperalgebra, local_gram, k_max: int,
                convention: str = "classical_sign") -> ExtensionResult:
    """Extend a local invariant form block by block to degrees ``|i| <= k_max``.

    Each block ``(g_k, g_-k)`` is solved exactly from every invariance,
    alpha-invariance, supersymmetry and consistency equation whose entries
    lie in blocks up to ``k``.
    """
    _check_convention(convention)
    if g.zdegree is None:
        raise PreconditionError("extend_form needs a Z-graded algebra")
    G0 = _local_gram(g, local_gram, convention)
    _local_preconditions(g, G0, convention)
    if not local_part_generates(g):
        raise PreconditionError("the local part does not generate the algebra")

    n = g.dim
    d = g.zdegree
    p = g.parity
    a = g.alpha
    grid = [list(G0.row(i)) for i in range(n)]
    known = {(i, j) for i in range(n) for j in range(n) if abs(d[i]) <= 1 and abs(d[j]) <= 1}
    blocks = {}
    notes = []
    overall = "Unique"

    def level(i, j) -> int:
        return max(abs(d[i]), abs(d[j]))

    for k in range(2, k_max + 1):
        cells = [(i, j) for i in range(n) for j in range(n)
                 if level(i, j) == k and d[i] + d[j] == 0]
        if not cells:
            continue
        pos = {c: t for t, c in enumerate(cells)}
        m = len(cells)
        rows, rhs = [], []

        def term(row, const, i, j, coef):
            """Add coef * B(i, j) to an equation; returns the updated constant."""
            if not coef or d[i] + d[j] != 0:
                return const
            if (i, j) in pos:
                row[pos[(i, j)]] += coef
                return const
            if (i, j) in known:
                return const - coef * grid[i][j]
            raise KeyError((i, j))

        def emit(build):
            row = [Fraction(0)] * m
            try:
                const = build(row)
            except KeyError:
                return
            if any(row) or const:
                rows.append(row)
                rhs.append(const)

        for (i, j) in cells:
            if p[i] != p[j]:
                emit(lambda row, i=i, j=j: term(row, Fraction(0), i, j, 1))

            def ss(row, i=i, j=j):
                const = term(row, Fraction(0), i, j, 1)
                return term(row, const, j, i, -_mirror_sign(p[i], p[j], convention))
            emit(ss)

        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if d[x] + d[y] + d[z] != 0:
                        continue
                    if max(abs(d[x] + d[y]), abs(d[z]), abs(d[x]), abs(d[y] + d[z])) > k:
                        continue

                    def inv(row, x=x, y=y, z=z):
                        const = Fraction(0)
                        for u, c in enumerate(g.table[x][y]):
                            const = term(row, const, u, z, c)
                        for u, c in enumerate(g.table[y][z]):
                            const = term(row, const, x, u, -c)
                        return const
                    emit(inv)
        for (i, j) in cells:
            def ainv(row, i=i, j=j):
                const = Fraction(0)
                for u in range(n):
                    const = term(row, const, u, j, a[u, i])
                    const = term(row, const, i, u, -a[u, j])
                return const
            emit(ainv)

        if not rows:
            sol = Affine(tuple([Fraction(0)] * m), Subspace.full(m))
        else:
            sol = solve(Matrix(rows, m), rhs)
        if isinstance(sol, Inconsistent):
            blocks[k] = "Inconsistent"
            notes.append(f"block {k}: constraint system has no solution")
            overall = "Inconsistent"
            break
        if isinstance(sol, Affine):
            blocks[k] = "Underdetermined"
            notes.append(f"block {k}: {sol.kernel.dim} free parameter(s) set to zero")
            values = sol.particular
            if overall == "Unique":
                overall = "Underdetermined"
        else:
            blocks[k] = "Unique"
            values = sol.solution
        for (i, j), v in zip(cells, values):
            grid[i][j] = v
            known.add((i, j))

    form = BilinearForm(Matrix(grid, n), frozenset(blocks))
    covered = all(abs(x) <= max(k_max, 1) for x in d)
    report = check_form(g, form, convention) if covered and overall != "Inconsistent" else None
    if not covered:
        notes.append("degrees beyond k_max are left at zero; whole-algebra check skipped")
    return ExtensionResult(form, overall, blocks, notes, report)

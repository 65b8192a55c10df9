"""Hom-Lie superalgebras on a finite homogeneous basis.

An algebra is stored by its full bracket table ``table[i][j] = [e_i, e_j]``
(coefficient vectors), a parity per basis element, an optional integer degree
per basis element, and the twist map ``alpha`` as a matrix acting on column
coefficient vectors (column ``j`` is ``alpha(e_j)``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionError, SpecError
from .notation import combination_vector, parse_combination
from .ratlin import (ZERO, Matrix, Subspace, as_scalar, unit_vector, vec_add,
                     vec_sub)


def sign(k: int) -> int:
    """(-1)**k for integer k."""
    return -1 if k & 1 else 1


class HomLieSuperalgebra:
    """Structure constants, parities, optional Z-degrees and twist map."""

    def __init__(self, names: Sequence[str], parity: Sequence[int], table, alpha: Matrix,
                 zdegree: Sequence[int] | None = None, name: str = ""):
        n = len(names)
        if len(set(names)) != n:
            raise SpecError("duplicate basis labels")
        if len(parity) != n or any(p not in (0, 1) for p in parity):
            raise SpecError("parity must give 0 or 1 for every basis element")
        if zdegree is not None and len(zdegree) != n:
            raise SpecError("degree map must cover every basis element")
        if alpha.shape != (n, n):
            raise DimensionError(f"alpha must be {n}x{n}, got {alpha.shape}")
        self.names = tuple(names)
        self.parity = tuple(int(p) for p in parity)
        self.zdegree = None if zdegree is None else tuple(int(d) for d in zdegree)
        self.table = tuple(tuple(tuple(as_scalar(x) for x in table[i][j]) for j in range(n))
                           for i in range(n))
        self.alpha = alpha
        self.name = name
        self._ad_cache: dict = {}

    # -- construction -------------------------------------------------------

    @classmethod
    def from_brackets(cls, names: Sequence[str], parity: Sequence[int] | Mapping[str, int] | None = None,
                      brackets: Mapping | None = None, alpha=None,
                      zdegree: Sequence[int] | Mapping[str, int] | None = None,
                      name: str = "") -> "HomLieSuperalgebra":
        """Build an algebra from brackets on pairs ``i <= j``.

        ``brackets`` maps ``(label_i, label_j)`` to a linear combination given
        as a dict, a coefficient sequence or a string.  The ``j > i`` side is
        filled in by supersymmetry.  ``alpha`` maps labels to images (same
        forms) or is a Matrix; omitted labels are fixed by alpha.
        """
        names = tuple(names)
        n = len(names)
        index = {lab: i for i, lab in enumerate(names)}
        parity = _per_label(parity, names, default=0, what="parity")
        if zdegree is not None:
            zdegree = _per_label(zdegree, names, default=None, what="degree")
            if any(d is None for d in zdegree):
                missing = [names[i] for i, d in enumerate(zdegree) if d is None]
                raise SpecError(f"degree missing for {', '.join(missing)}")

        table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        seen = set()
        for key, value in (brackets or {}).items():
            a, b = key
            for lab in (a, b):
                if lab not in index:
                    raise SpecError(f"unknown basis label {lab!r} in bracket [{a},{b}]")
            i, j = index[a], index[b]
            if i > j:
                raise SpecError(f"bracket [{a},{b}] must be given as [{b},{a}] (pairs i <= j only)")
            if (i, j) in seen:
                raise SpecError(f"bracket [{a},{b}] given twice")
            seen.add((i, j))
            vec = _as_vector(value, names)
            if i == j and parity[i] == 0 and any(vec):
                raise SpecError(f"[{a},{a}] must vanish for even {a}")
            target = (parity[i] + parity[j]) % 2
            for k, c in enumerate(vec):
                if c and parity[k] != target:
                    raise SpecError(
                        f"bracket [{a},{b}] has a component on {names[k]} of the wrong parity")
            table[i][j] = list(vec)
            if i != j:
                s = -sign(parity[i] * parity[j])
                table[j][i] = [s * c for c in vec]

        alpha_m = _alpha_matrix(alpha, names)
        for j in range(n):
            for i in range(n):
                if alpha_m[i, j] and parity[i] != parity[j]:
                    raise SpecError(f"alpha is not even: alpha({names[j]}) has a {names[i]} component")
        return cls(names, parity, table, alpha_m, zdegree, name)

    def with_alpha(self, alpha) -> "HomLieSuperalgebra":
        m = _alpha_matrix(alpha, self.names)
        return HomLieSuperalgebra(self.names, self.parity, self.table, m, self.zdegree, self.name)

    def with_degrees(self, zdegree) -> "HomLieSuperalgebra":
        zd = None if zdegree is None else _per_label(zdegree, self.names, default=None, what="degree")
        return HomLieSuperalgebra(self.names, self.parity, self.table, self.alpha, zd, self.name)

    def permuted(self, order: Sequence[int]) -> "HomLieSuperalgebra":
        """Same algebra with basis reordered: new basis element ``k`` is old ``order[k]``."""
        n = self.dim
        if sorted(order) != list(range(n)):
            raise ValueError("order must be a permutation of the basis indices")
        table = [[[self.table[order[a]][order[b]][order[c]] for c in range(n)]
                  for b in range(n)] for a in range(n)]
        alpha = Matrix([[self.alpha[order[a], order[b]] for b in range(n)] for a in range(n)], n)
        zd = None if self.zdegree is None else [self.zdegree[o] for o in order]
        return HomLieSuperalgebra([self.names[o] for o in order], [self.parity[o] for o in order],
                                  table, alpha, zd, self.name)

    # -- basic access -------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def basis_vector(self, label_or_index) -> tuple:
        i = label_or_index if isinstance(label_or_index, int) else self.index(label_or_index)
        return unit_vector(self.dim, i)

    def vector(self, value) -> tuple:
        """Coefficient vector from a label, dict, string or sequence."""
        if isinstance(value, str) and value in self.names:
            return self.basis_vector(value)
        return _as_vector(value, self.names)

    def structure(self) -> list:
        """The tensor ``c[i][j][k]`` as nested lists."""
        return [[list(v) for v in row] for row in self.table]

    def is_abelian(self) -> bool:
        return not any(any(v) for row in self.table for v in row)

    def vector_parity(self, v: Sequence[Fraction]):
        """0 or 1 for a nonzero homogeneous vector, None otherwise."""
        ps = {self.parity[k] for k, c in enumerate(v) if c}
        return ps.pop() if len(ps) == 1 else None

    def parity_indices(self, p: int) -> list:
        return [i for i, q in enumerate(self.parity) if q == p]

    def degrees(self) -> list:
        if self.zdegree is None:
            return []
        return sorted(set(self.zdegree))

    def degree_indices(self, d: int) -> list:
        if self.zdegree is None:
            raise ValueError("algebra has no Z-grading")
        return [i for i, e in enumerate(self.zdegree) if e == d]

    def degree_subspace(self, d: int) -> Subspace:
        return Subspace.span((unit_vector(self.dim, i) for i in self.degree_indices(d)), self.dim)

    # -- bracket and twist --------------------------------------------------

    def _check_vec(self, v):
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} for an algebra of dimension {self.dim}")

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple:
        self._check_vec(x)
        self._check_vec(y)
        n = self.dim
        acc = [ZERO] * n
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        acc[k] += ab * c
        return tuple(acc)

    def ad(self, x) -> Matrix:
        """Matrix of ``v -> [x, v]``; ``x`` a basis index or a vector."""
        if isinstance(x, int):
            if x not in self._ad_cache:
                cols = [self.table[x][j] for j in range(self.dim)]
                self._ad_cache[x] = Matrix.from_columns(cols, self.dim)
            return self._ad_cache[x]
        self._check_vec(x)
        n = self.dim
        out = Matrix.zeros(n, n)
        for i, a in enumerate(x):
            if a:
                out = out + self.ad(i).scale(a)
        return out

    def apply_alpha(self, v: Sequence[Fraction], power: int = 1) -> tuple:
        self._check_vec(v)
        for _ in range(power):
            v = self.alpha.apply(v)
        return tuple(v)

    def alpha_power(self, s: int) -> Matrix:
        return self.alpha ** s

    def is_multiplicative(self) -> bool:
        return check_axioms(self).multiplicative

    def __eq__(self, other):
        if not isinstance(other, HomLieSuperalgebra):
            return NotImplemented
        return (self.names == other.names and self.parity == other.parity
                and self.zdegree == other.zdegree and self.table == other.table
                and self.alpha == other.alpha)

    def __hash__(self):
        return hash((self.names, self.parity, self.zdegree, self.table, self.alpha))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<HomLieSuperalgebra{label} dim={self.dim} basis={list(self.names)}>"


def _per_label(values, names, default, what):
    if values is None:
        return [default] * len(names)
    if isinstance(values, Mapping):
        for lab in values:
            if lab not in names:
                raise SpecError(f"unknown basis label {lab!r} in {what} map")
        return [values.get(lab, default) for lab in names]
    values = list(values)
    if len(values) != len(names):
        raise SpecError(f"{what} list has {len(values)} entries for {len(names)} basis elements")
    return values


def _as_vector(value, names) -> tuple:
    if isinstance(value, str):
        try:
            coeffs = parse_combination(value, names)
        except Exception as exc:
            raise SpecError(str(exc)) from exc
        return combination_vector(coeffs, names)
    if isinstance(value, Mapping):
        for lab in value:
            if lab not in names:
                raise SpecError(f"unknown basis label {lab!r}")
        return combination_vector({k: as_scalar(v) for k, v in value.items()}, names)
    vec = tuple(as_scalar(x) for x in value)
    if len(vec) != len(names):
        raise DimensionError(f"vector of length {len(vec)} for {len(names)} basis elements")
    return vec


def _alpha_matrix(alpha, names) -> Matrix:
    n = len(names)
    if alpha is None:
        return Matrix.identity(n)
    if isinstance(alpha, Matrix):
        if alpha.shape != (n, n):
            raise DimensionError(f"alpha must be {n}x{n}")
        return alpha
    if isinstance(alpha, Mapping):
        cols = []
        for lab in alpha:
            if lab not in names:
                raise SpecError(f"unknown basis label {lab!r} in alpha")
        for j, lab in enumerate(names):
            cols.append(_as_vector(alpha[lab], names) if lab in alpha else unit_vector(n, j))
        return Matrix.from_columns(cols, n)
    return Matrix(alpha, n)


def load_algebra(spec) -> HomLieSuperalgebra:
    """Build an algebra from a parsed definition.

    ``spec`` needs ``names``, ``parity`` (label -> 0/1), ``degree`` (label ->
    int, or None), ``brackets`` ((a, b) -> combination) and ``alpha`` (label
    -> combination); see :class:`homlie.cli.specfile.AlgebraSpecFile`.
    """
    return HomLieSuperalgebra.from_brackets(
        spec.names, spec.parity, spec.brackets, spec.alpha or None,
        spec.degree or None, getattr(spec, "name", "") or "")


# ---------------------------------------------------------------- axioms

@dataclass
class AxiomReport:
    parity_graded: bool
    supersymmetric: bool
    hom_jacobi: bool
    multiplicative: bool
    regular: bool
    alpha_idempotent: bool
    z_grading_compatible: bool | None = None
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("parity_graded", "supersymmetric", "hom_jacobi", "multiplicative", "regular",
             "alpha_idempotent", "z_grading_compatible")

    def flags(self) -> dict:
        out = {k: getattr(self, k) for k in self.FLAGS}
        if out["z_grading_compatible"] is None:
            del out["z_grading_compatible"]
        return out

    @property
    def is_hom_lie(self) -> bool:
        """The defining axioms: parity grading, supersymmetry and hom-Jacobi."""
        return self.parity_graded and self.supersymmetric and self.hom_jacobi


def hom_jacobi_sum(g: HomLieSuperalgebra, i: int, j: int, k: int) -> tuple:
    """Signed cyclic sum of ``[alpha(x), [y, z]]`` on basis elements x, y, z."""
    p = g.parity
    a = g.alpha
    t = g.table
    ax, ay, az = a.column(i), a.column(j), a.column(k)
    s1 = g.bracket(ax, t[j][k])
    s2 = g.bracket(ay, t[k][i])
    s3 = g.bracket(az, t[i][j])
    c1, c2, c3 = sign(p[i] * p[k]), sign(p[j] * p[i]), sign(p[k] * p[j])
    return tuple(c1 * u + c2 * v + c3 * w for u, v, w in zip(s1, s2, s3))


def check_axioms(g: HomLieSuperalgebra) -> AxiomReport:
    """Evaluate every axiom and twist-map property over basis pairs and triples."""
    n = g.dim
    p = g.parity
    t = g.table
    a = g.alpha
    wit = {}

    parity_graded = True
    for i in range(n):
        for j in range(n):
            target = (p[i] + p[j]) % 2
            if any(c and p[k] != target for k, c in enumerate(t[i][j])):
                parity_graded = False
                wit["parity_graded"] = (g.names[i], g.names[j])
                break
        if not parity_graded:
            break
    if parity_graded:
        for j in range(n):
            if any(a[i, j] and p[i] != p[j] for i in range(n)):
                parity_graded = False
                wit["parity_graded"] = (g.names[j],)
                break

    supersymmetric = True
    for i in range(n):
        for j in range(i, n):
            s = -sign(p[i] * p[j])
            if t[j][i] != tuple(s * c for c in t[i][j]):
                supersymmetric = False
                wit["supersymmetric"] = (g.names[i], g.names[j])
                break
        if not supersymmetric:
            break

    hom_jacobi = True
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if any(hom_jacobi_sum(g, i, j, k)):
                    hom_jacobi = False
                    wit["hom_jacobi"] = (g.names[i], g.names[j], g.names[k])
                    break
            if not hom_jacobi:
                break
        if not hom_jacobi:
            break

    multiplicative = True
    for i in range(n):
        for j in range(n):
            lhs = a.apply(t[i][j])
            rhs = g.bracket(a.column(i), a.column(j))
            if lhs != rhs:
                multiplicative = False
                wit["multiplicative"] = (g.names[i], g.names[j])
                break
        if not multiplicative:
            break

    regular = a.is_invertible()
    if not regular:
        ker = _kernel_basis_label(a, g.names)
        wit["regular"] = (ker,)

    a2 = a @ a
    alpha_idempotent = True
    for j in range(n):
        if a2.column(j) != a.column(j):
            alpha_idempotent = False
            wit["alpha_idempotent"] = (g.names[j],)
            break

    z_ok = None
    if g.zdegree is not None:
        z_ok = True
        d = g.zdegree
        for i in range(n):
            for j in range(n):
                bad = [k for k, c in enumerate(t[i][j]) if c and d[k] != d[i] + d[j]]
                if bad:
                    z_ok = False
                    wit["z_grading_compatible"] = (g.names[i], g.names[j])
                    break
            if not z_ok:
                break

    return AxiomReport(parity_graded, supersymmetric, hom_jacobi, multiplicative, regular,
                       alpha_idempotent, z_ok, wit)


def _kernel_basis_label(m: Matrix, names) -> str:
    from .notation import format_combination
    from .ratlin import kernel
    ker = kernel(m)
    return format_combination(ker.vectors[0], names)


def super_jacobi_witness(g: HomLieSuperalgebra):
    """First basis triple violating ``[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]``.

    Returns None when the classical super-Jacobi identity holds.
    """
    n = g.dim
    p = g.parity
    t = g.table
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = g.bracket(unit_vector(n, i), t[j][k])
                r1 = g.bracket(t[i][j], unit_vector(n, k))
                r2 = g.bracket(unit_vector(n, j), t[i][k])
                s = sign(p[i] * p[j])
                if any(vec_sub(lhs, vec_add(r1, tuple(s * c for c in r2)))):
                    return (g.names[i], g.names[j], g.names[k])
    return None

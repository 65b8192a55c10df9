"""Local hom-Lie superalgebras and their minimal graded realization.

A local part ``g_{-1} + g_0 + g_1`` acts on the tensor algebra ``T(g_{-1})``:
``g_{-1}`` by left multiplication, ``g_0`` by derivations and ``g_1`` through
a recursion that lowers tensor length by one.  Super-commutators of these
operators generate a graded algebra whose quotient by the largest graded
ideal meeting the local part trivially is the minimal realization.

Everything lives on a truncated window ``T_0 + ... + T_cap``.  Each operator
carries a validity depth: the largest tensor length on which the truncated
matrix agrees with the true operator.  Operators are compared only on those
columns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import PreconditionError, ProlongationError, SpecError
from .ratlin import (Affine, Echelon, Inconsistent, Matrix, Subspace, complement_indices,
                     preimage, solve, unit_vector)
from .superalgebra import AxiomReport, HomLieSuperalgebra, check_axioms, sign

SIGN_CONVENTIONS = ("verbatim", "koszul", "auto")


# ---------------------------------------------------------------- local part

class LocalAlgebra:
    """Pieces of degree -1, 0, 1 with brackets for pairs whose degrees sum to at most 1 in size."""

    def __init__(self, algebra: HomLieSuperalgebra):
        self.algebra = algebra
        self._validate()

    @classmethod
    def from_brackets(cls, names, parity, brackets, alpha, degree, name="") -> "LocalAlgebra":
        if degree is None:
            raise SpecError("a local part needs a degree for every basis element")
        g = HomLieSuperalgebra.from_brackets(names, parity, brackets, alpha, degree, name)
        return cls(g)

    # -- access
    @property
    def names(self):
        return self.algebra.names

    @property
    def parity(self):
        return self.algebra.parity

    @property
    def degree(self):
        return self.algebra.zdegree

    @property
    def alpha(self) -> Matrix:
        return self.algebra.alpha

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def piece(self, d: int) -> list:
        return [i for i, k in enumerate(self.degree) if k == d]

    def defined(self, i: int, j: int) -> bool:
        return abs(self.degree[i] + self.degree[j]) <= 1

    def bracket(self, x, y) -> tuple:
        return self.algebra.bracket(x, y)

    def _validate(self):
        g = self.algebra
        n = g.dim
        d = g.zdegree
        if d is None or any(k not in (-1, 0, 1) for k in d):
            raise SpecError("local part degrees must lie in {-1, 0, 1}")
        for i in range(n):
            for j in range(n):
                v = g.table[i][j]
                if not any(v):
                    continue
                if not self.defined(i, j):
                    raise SpecError(f"bracket [{g.names[i]},{g.names[j]}] given outside the local part")
                if any(c and d[k] != d[i] + d[j] for k, c in enumerate(v)):
                    raise SpecError(f"bracket [{g.names[i]},{g.names[j]}] does not respect degrees")
        a = g.alpha
        for j in range(n):
            if any(a[i, j] and d[i] != d[j] for i in range(n)):
                raise SpecError(f"alpha moves {g.names[j]} out of its piece")
        a2 = a @ a
        for j in range(n):
            if a2.column(j) != a.column(j):
                raise PreconditionError("alpha is not idempotent", (g.names[j],))
        for i in range(n):
            for j in range(n):
                if self.defined(i, j) and a.apply(g.table[i][j]) != g.bracket(a.column(i), a.column(j)):
                    raise PreconditionError("alpha is not multiplicative on the local part",
                                            (g.names[i], g.names[j]))
        w = partial_jacobi_witness(self)
        if w is not None:
            raise PreconditionError("partial hom-Jacobi identity fails", w)


def partial_jacobi_witness(L: LocalAlgebra):
    """First basis triple whose three hom-Jacobi terms are defined and do not cancel."""
    from .superalgebra import hom_jacobi_sum
    g = L.algebra
    d = L.degree
    n = g.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        if abs(d[i] + d[j] + d[k]) > 1:
            continue
        if not (L.defined(i, j) and L.defined(j, k) and L.defined(k, i)):
            continue
        if any(hom_jacobi_sum(g, i, j, k)):
            return (g.names[i], g.names[j], g.names[k])
    return None


def load_local(spec) -> LocalAlgebra:
    """Build a local part from a parsed spec file (degrees required)."""
    if not spec.degree:
        raise SpecError("a local part needs a [algebra] degree map")
    return LocalAlgebra.from_brackets(spec.names, spec.parity, spec.brackets, spec.alpha or None,
                                      spec.degree, getattr(spec, "name", "") or "")


def mirror_local(L: LocalAlgebra) -> LocalAlgebra:
    """Swap the roles of g_{-1} and g_1."""
    g = L.algebra
    return LocalAlgebra(g.with_degrees([-k for k in g.zdegree]))


# ---------------------------------------------------------------- tensor window

@dataclass(frozen=True)
class TensorWindow:
    """``T_0 + ... + T_cap`` over the ``m``-dimensional space g_{-1}."""

    m: int
    parity: tuple
    cap: int

    def __post_init__(self):
        if self.cap < 1:
            raise ProlongationError("tensor window needs cap >= 1")
        if len(self.parity) != self.m:
            raise SpecError("window parity must cover g_{-1}")

    @classmethod
    def for_local(cls, L: LocalAlgebra, cap: int) -> "TensorWindow":
        return cls(len(L.piece(-1)), tuple(L.parity[i] for i in L.piece(-1)), cap)

    def offset(self, length: int) -> int:
        return sum(self.m ** i for i in range(length))

    @property
    def dim(self) -> int:
        return self.offset(self.cap + 1)

    def words(self, length: int):
        return itertools.product(range(self.m), repeat=length)

    def index(self, word: Sequence[int]) -> int:
        k = 0
        for a in word:
            k = k * self.m + a
        return self.offset(len(word)) + k

    def all_words(self):
        for length in range(self.cap + 1):
            yield from self.words(length)

    def word_parity(self, word) -> int:
        return sum(self.parity[a] for a in word) % 2

    def columns(self, upto: int) -> range:
        """Indices of basis words of length at most ``upto``."""
        return range(self.offset(min(upto, self.cap) + 1)) if upto >= 0 else range(0)


# ---------------------------------------------------------------- phi

@dataclass
class OperatorImage:
    window: TensorWindow
    labels: tuple
    matrices: dict
    degree: dict
    parity: dict
    convention: str

    def phi(self, v: Sequence[Fraction]) -> Matrix:
        """Image of a local-part vector (coordinates in the local basis)."""
        n = self.window.dim
        out = Matrix.zeros(n, n)
        for c, lab in zip(v, self.labels):
            if c:
                out = out + self.matrices[lab].scale(c)
        return out

    def degree_shift_ok(self) -> bool:
        """Every phi(b) maps T_i into T_{i - deg b} (or to zero past the cap)."""
        w = self.window
        length = {}
        for word in w.all_words():
            length[w.index(word)] = len(word)
        for lab, m in self.matrices.items():
            d = self.degree[lab]
            for r in range(m.rows):
                for c in range(m.cols):
                    if m[r, c] and length[r] != length[c] - d:
                        return False
        return True


def phi_operators(L: LocalAlgebra, w: TensorWindow, sign_convention: str = "verbatim") -> OperatorImage:
    """Matrices of phi(b) on the window for every local basis element b."""
    if sign_convention not in ("verbatim", "koszul"):
        raise ValueError(f"sign convention must be verbatim or koszul, got {sign_convention!r}")
    if w.cap < 1:
        raise ProlongationError("tensor window needs cap >= 1")
    koszul = sign_convention == "koszul"
    g = L.algebra
    minus = L.piece(-1)
    pos = {gi: a for a, gi in enumerate(minus)}
    par = L.parity
    nloc = g.dim

    def in_minus(v) -> list:
        """Coordinates of a g_{-1} vector in the local g_{-1} basis."""
        return [(pos[k], c) for k, c in enumerate(v) if c]

    # phi(z) on words: derivation
    def phi_zero(zvec, zpar, word) -> dict:
        out: dict = {}
        acc = 0
        for t, a in enumerate(word):
            br = in_minus(g.bracket(zvec, unit_vector(nloc, minus[a])))
            s = sign(zpar * acc) if koszul else 1
            for b, c in br:
                new = word[:t] + (b,) + word[t + 1:]
                out[new] = out.get(new, 0) + s * c
            acc += par[minus[a]]
        return out

    zero_cache: dict = {}

    def phi_zero_vec(zvec, word) -> dict:
        key = (zvec, word)
        if key not in zero_cache:
            zpar = g.vector_parity(zvec) or 0
            zero_cache[key] = phi_zero(zvec, zpar, word)
        return zero_cache[key]

    plus_cache: dict = {}

    def phi_plus(i: int, word: tuple) -> dict:
        key = (i, word)
        if key in plus_cache:
            return plus_cache[key]
        out: dict = {}
        if word:
            a1 = unit_vector(nloc, minus[word[0]])
            aa1 = g.alpha.apply(a1)
            rest = word[1:]
            z = g.bracket(unit_vector(nloc, i), aa1)
            if any(z):
                for new, c in phi_zero_vec(z, rest).items():
                    out[new] = out.get(new, 0) + c
            if rest:
                s = sign(par[i] * par[minus[word[0]]]) if koszul else 1
                sub = phi_plus(i, rest)
                for b, cb in in_minus(aa1):
                    for tail, ct in sub.items():
                        new = (b,) + tail
                        out[new] = out.get(new, 0) + s * cb * ct
        out = {k: v for k, v in out.items() if v}
        plus_cache[key] = out
        return out

    n = w.dim
    matrices = {}
    degree = {}
    parity = {}
    for i, lab in enumerate(L.names):
        d = L.degree[i]
        grid = [[Fraction(0)] * n for _ in range(n)]
        for word in w.all_words():
            c = w.index(word)
            if d == -1:
                new = (pos[i],) + word
                if len(new) <= w.cap:
                    grid[w.index(new)][c] += 1
                continue
            image = phi_zero_vec(unit_vector(nloc, i), word) if d == 0 else phi_plus(i, word)
            for new, v in image.items():
                grid[w.index(new)][c] += v
        matrices[lab] = Matrix(grid, n)
        degree[lab] = d
        parity[lab] = par[i]
    return OperatorImage(w, L.names, matrices, degree, parity, sign_convention)


def supercommutator(a: Matrix, pa: int, b: Matrix, pb: int) -> Matrix:
    ab = a @ b
    ba = b @ a
    return ab - ba if sign(pa * pb) == 1 else ab + ba


def _restrict(m: Matrix, cols: range) -> tuple:
    return tuple(m[r, c] for c in cols for r in range(m.rows))


# ---------------------------------------------------------------- relations

@dataclass
class RelationReport:
    ok: bool
    eq1: bool
    eq2: bool
    eq3: bool
    convention: str
    witnesses: dict = field(default_factory=dict)
    safe_window: int = 0

    def flags(self) -> dict:
        return {"eq1": self.eq1, "eq2": self.eq2, "eq3": self.eq3}


def _check_relations(L: LocalAlgebra, img: OperatorImage) -> RelationReport:
    w = img.window
    cols = w.columns(w.cap - 1)
    g = L.algebra
    nloc = g.dim
    a = g.alpha
    res = {}
    wit = {}
    for key, left, right in (("eq1", -1, 0), ("eq2", 1, -1), ("eq3", 0, 1)):
        ok = True
        for i in L.piece(left):
            for j in L.piece(right):
                ai, aj = a.column(i), a.column(j)
                lhs = img.phi(g.bracket(ai, aj))
                rhs = supercommutator(img.phi(ai), g.parity[i], img.phi(aj), g.parity[j])
                if _restrict(lhs, cols) != _restrict(rhs, cols):
                    ok = False
                    wit[key] = (g.names[i], g.names[j])
                    break
            if not ok:
                break
        res[key] = ok
    del nloc
    return RelationReport(all(res.values()), res["eq1"], res["eq2"], res["eq3"], img.convention,
                          wit, w.cap - 1)


def verify_phi_relations(L: LocalAlgebra, w: TensorWindow, sign_convention: str = "auto",
                         image: OperatorImage | None = None) -> RelationReport:
    """Check the three operator relations on ``T_0 + ... + T_{cap-1}``.

    With ``sign_convention="auto"`` the verbatim recursion is tried first and
    the Koszul-signed one is used when the verbatim one fails.  A supplied
    ``image`` is checked as is.
    """
    if w.cap < 2:
        raise ProlongationError("relation check needs cap >= 2")
    if image is not None:
        return _check_relations(L, image)
    if sign_convention not in SIGN_CONVENTIONS:
        raise ValueError(f"unknown sign convention {sign_convention!r}")
    if sign_convention != "auto":
        return _check_relations(L, phi_operators(L, w, sign_convention))
    first = _check_relations(L, phi_operators(L, w, "verbatim"))
    if first.ok:
        return first
    second = _check_relations(L, phi_operators(L, w, "koszul"))
    return second if second.ok else first


# ---------------------------------------------------------------- realization

@dataclass
class _Piece:
    """Basis operators of one degree, with parities and validity depth."""

    degree: int
    ops: list
    parity: list
    labels: list
    valid: int
    provenance: list


def _merge_valid(vp, np_, vq, nq) -> int:
    return min(vq, vp - nq, vp, vq - np_)


@dataclass
class ProlongationResult:
    algebra: HomLieSuperalgebra
    recovery: str
    dims: dict
    relations: RelationReport
    local_brackets_match: bool | None
    axioms: AxiomReport
    validity: dict
    cap: int

    def dims_table(self) -> str:
        return "(" + ", ".join(f"{k}:{v}" for k, v in sorted(self.dims.items())) + ")"


class _Realizer:
    def __init__(self, L: LocalAlgebra, d_max: int, w: TensorWindow, img: OperatorImage):
        self.L = L
        self.d_max = d_max
        self.w = w
        self.img = img
        self.pieces: dict = {}

    # coordinates of an operator in a piece, compared on the first ``valid`` lengths
    def coords(self, k: int, op: Matrix, valid: int) -> tuple:
        piece = self.pieces[k]
        v = min(valid, piece.valid)
        if v < 0:
            raise ProlongationError(f"tensor window too small to compare operators in degree {k}")
        cols = self.w.columns(v)
        target = _restrict(op, cols)
        if not piece.ops:
            if any(target):
                raise ProlongationError(f"operator of degree {k} is not in the computed span; "
                                        f"grow the window")
            return ()
        a = Matrix.from_columns([_restrict(p, cols) for p in piece.ops], len(target))
        sol = solve(a, target)
        if isinstance(sol, Inconsistent):
            raise ProlongationError(f"operator of degree {k} is not in the computed span; grow the window")
        if isinstance(sol, Affine):
            raise ProlongationError(f"degree {k} basis is ambiguous on the window; grow the window")
        return sol.solution

    def seed(self):
        L = self.L
        img = self.img
        for d in (-1, 0, 1):
            valid = self.w.cap - 1 if d == -1 else self.w.cap
            ech = Echelon(len(_restrict(img.matrices[L.names[0]], self.w.columns(valid))))
            piece = _Piece(d, [], [], [], valid, [])
            for i in L.piece(d):
                m = img.matrices[L.names[i]]
                if ech.add(_restrict(m, self.w.columns(valid))) is not None:
                    piece.ops.append(m)
                    piece.parity.append(L.parity[i])
                    piece.labels.append(L.names[i])
                    piece.provenance.append(("gen", i))
            self.pieces[d] = piece

    def grow(self, k: int):
        """Degree ``k`` from brackets of degree +-1 with degree ``k -+ 1``."""
        step = 1 if k > 0 else -1
        gen = self.pieces[step]
        prev = self.pieces[k - step]
        valid = _merge_valid(gen.valid, -step, prev.valid, -(k - step))
        if valid < 0:
            raise ProlongationError(f"tensor window too small for degree {k}")
        cols = self.w.columns(valid)
        ech = None
        piece = _Piece(k, [], [], [], valid, [])
        for a, (ga, pa) in enumerate(zip(gen.ops, gen.parity)):
            for b, (pb_op, pb) in enumerate(zip(prev.ops, prev.parity)):
                c = supercommutator(ga, pa, pb_op, pb)
                flat = _restrict(c, cols)
                if ech is None:
                    ech = Echelon(len(flat))
                if ech.add(flat) is not None:
                    piece.ops.append(c)
                    piece.parity.append((pa + pb) % 2)
                    tag = "p" if k > 0 else "m"
                    piece.labels.append(f"{tag}{abs(k)}_{len(piece.ops)}")
                    piece.provenance.append(("br", a, b))
        self.pieces[k] = piece

    def bracket_coords(self, i: int, a: int, j: int, b: int):
        """Coordinates of [basis a of degree i, basis b of degree j] in degree i + j."""
        P, Q = self.pieces[i], self.pieces[j]
        c = supercommutator(P.ops[a], P.parity[a], Q.ops[b], Q.parity[b])
        k = i + j
        valid = _merge_valid(P.valid, -i, Q.valid, -j)
        return self.coords(k, c, valid)

    def alpha_maps(self) -> dict:
        """Induced alpha on every piece, solved as a linear map and checked for consistency."""
        L = self.L
        maps = {}
        for d in (-1, 0, 1):
            piece = self.pieces[d]
            srcs, tgts = [], []
            for i in L.piece(d):
                m = self.img.matrices[L.names[i]]
                srcs.append(self.coords(d, m, piece.valid))
                tgts.append(self.coords(d, self.img.phi(L.alpha.column(i)), piece.valid))
            maps[d] = _solve_linear_map(srcs, tgts, len(piece.ops), d)
        for k in self._grow_order():
            step = 1 if k > 0 else -1
            gen, prev = self.pieces[step], self.pieces[k - step]
            srcs, tgts = [], []
            for a in range(len(gen.ops)):
                for b in range(len(prev.ops)):
                    srcs.append(self.bracket_coords(step, a, k - step, b))
                    ia = maps[step].apply(unit_vector(len(gen.ops), a))
                    ib = maps[k - step].apply(unit_vector(len(prev.ops), b))
                    tgt = [Fraction(0)] * len(self.pieces[k].ops)
                    for u, cu in enumerate(ia):
                        if not cu:
                            continue
                        for v, cv in enumerate(ib):
                            if cv:
                                bc = self.bracket_coords(step, u, k - step, v)
                                for t, x in enumerate(bc):
                                    tgt[t] += cu * cv * x
                    tgts.append(tuple(tgt))
            maps[k] = _solve_linear_map(srcs, tgts, len(self.pieces[k].ops), k)
        return maps

    def _grow_order(self):
        top = self.d_max + 1
        return [k for n in range(2, top + 1) for k in (n, -n)]


def _solve_linear_map(srcs, tgts, dim: int, degree: int) -> Matrix:
    """Matrix M with M s = t for every pair; raises when no such map exists."""
    if dim == 0:
        return Matrix.zeros(0, 0)
    rows_needed = len(srcs)
    if rows_needed == 0:
        return Matrix.zeros(dim, dim)
    s_mat = Matrix([list(s) for s in srcs], dim)
    out = []
    for r in range(dim):
        sol = solve(s_mat, [t[r] for t in tgts])
        if isinstance(sol, Inconsistent):
            raise ProlongationError(f"induced alpha is not well defined in degree {degree}")
        out.append(sol.solution if hasattr(sol, "solution") else sol.particular)
    return Matrix(out, dim)


def _largest_stable(space: Subspace, ops) -> Subspace:
    while True:
        nxt = space
        for m in ops:
            nxt = nxt & preimage(m, nxt)
        if nxt == space:
            return space
        space = nxt


def prolong_minimal(L: LocalAlgebra, d_max: int, w: TensorWindow | int,
                    sign_convention: str = "auto") -> ProlongationResult:
    """Truncated minimal graded realization of ``L`` in degrees ``-d_max..d_max``."""
    if d_max < 1:
        raise ValueError("d_max must be a positive integer")
    if isinstance(w, int):
        w = TensorWindow.for_local(L, w)
    if w.cap < d_max + 1:
        raise ProlongationError(f"tensor cap {w.cap} is below d_max + 1 = {d_max + 1}")
    rel = verify_phi_relations(L, w, sign_convention)
    if not rel.ok:
        raise PreconditionError("phi relations fail on the safe window", rel.witnesses)
    img = phi_operators(L, w, rel.convention)
    R = _Realizer(L, d_max, w, img)
    R.seed()
    for k in R._grow_order():
        R.grow(k)
    alpha = R.alpha_maps()
    top = d_max + 1

    # largest graded ideal meeting the local part trivially, built inward from +-1
    J = {k: Subspace.zero(len(R.pieces[k].ops)) for k in (-1, 0, 1)}
    for n in range(2, top + 1):
        for k in (n, -n):
            step = 1 if k > 0 else -1
            dim_k = len(R.pieces[k].ops)
            space = Subspace.full(dim_k)
            low = k - step
            for a in range(len(R.pieces[-step].ops)):
                cols = [R.bracket_coords(-step, a, k, b) for b in range(dim_k)]
                if not cols:
                    continue
                m = Matrix.from_columns(cols, len(R.pieces[low].ops)) if R.pieces[low].ops \
                    else Matrix.zeros(0, dim_k)
                space = space & preimage(m, J[low])
            par = R.pieces[k].parity
            if dim_k and 0 < sum(par) < dim_k:
                proj = [Matrix.diag([1 if p == q else 0 for p in par]) for q in (0, 1)]
            else:
                proj = []
            J[k] = _largest_stable(space, [alpha[k]] + proj) if dim_k else space
    for k in (top, -top):
        if J[k].dim != len(R.pieces[k].ops):
            raise ProlongationError(f"degree {k} does not vanish in the minimal quotient; raise d_max")

    # quotient by J in degrees -d_max..d_max
    names, parity, zdeg, where = [], [], [], {}
    cosets = {}
    for k in range(-d_max, d_max + 1):
        piece = R.pieces[k]
        dim_k = len(piece.ops)
        keep = complement_indices(J[k]) if dim_k else []
        change = Matrix.from_columns([unit_vector(dim_k, c) for c in keep] + list(J[k].vectors), dim_k) \
            if dim_k else None

        def coset(v, change=change, m=len(keep)):
            if not m:
                return ()
            return solve(change, v).solution[:m]

        cosets[k] = coset
        for t, c in enumerate(keep):
            where[(k, t)] = len(names)
            names.append(piece.labels[c])
            parity.append(piece.parity[c])
            zdeg.append(k)
        R.pieces[k].keep = keep
    n = len(names)
    table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    amat = [[Fraction(0)] * n for _ in range(n)]
    for i in range(-d_max, d_max + 1):
        for ti, a in enumerate(R.pieces[i].keep):
            col = cosets[i](alpha[i].apply(unit_vector(len(R.pieces[i].ops), a)))
            for t, c in enumerate(col):
                amat[where[(i, t)]][where[(i, ti)]] = c
            for j in range(-d_max, d_max + 1):
                k = i + j
                if abs(k) > d_max:
                    continue
                for tj, b in enumerate(R.pieces[j].keep):
                    bc = R.bracket_coords(i, a, j, b)
                    for t, c in enumerate(cosets[k](bc)):
                        table[where[(i, ti)]][where[(j, tj)]][where[(k, t)]] = c
    name = f"{L.name}_min" if L.name else "minimal"
    alg = HomLieSuperalgebra(names, parity, table, Matrix(amat, n), zdeg, name)

    faithful = all(len(R.pieces[d].ops) == len(L.piece(d)) for d in (-1, 0, 1))
    match = None
    if faithful:
        match = True
        g = L.algebra
        for i in range(g.dim):
            for j in range(g.dim):
                if not L.defined(i, j):
                    continue
                got = alg.table[alg.index(g.names[i])][alg.index(g.names[j])]
                want = [Fraction(0)] * n
                for k, c in enumerate(g.table[i][j]):
                    if c:
                        want[alg.index(g.names[k])] = c
                if tuple(got) != tuple(want):
                    match = False
    dims = {k: len(R.pieces[k].keep) for k in range(-d_max, d_max + 1)}
    validity = {k: R.pieces[k].valid for k in R.pieces}
    return ProlongationResult(alg, "Faithful" if faithful else "QuotientRealized", dims, rel, match,
                              check_axioms(alg), validity, w.cap)


def local_part_of(g: HomLieSuperalgebra, name: str | None = None) -> LocalAlgebra:
    """Truncate a graded algebra to degrees -1, 0, 1."""
    if g.zdegree is None:
        raise PreconditionError("algebra has no Z-grading")
    idx = [i for i, d in enumerate(g.zdegree) if abs(d) <= 1]
    names = [g.names[i] for i in idx]
    brackets = {}
    for a, i in enumerate(idx):
        for j in idx[a:]:
            if abs(g.zdegree[i] + g.zdegree[j]) > 1:
                continue
            v = g.table[i][j]
            if any(v):
                brackets[(g.names[i], g.names[j])] = {names[b]: v[k] for b, k in enumerate(idx) if v[k]}
    alpha = {g.names[j]: {names[b]: g.alpha[k, j] for b, k in enumerate(idx) if g.alpha[k, j]}
             for j in idx}
    return LocalAlgebra.from_brackets(names, [g.parity[i] for i in idx], brackets, alpha,
                                      [g.zdegree[i] for i in idx], name or g.name)


def sl2_local() -> LocalAlgebra:
    return LocalAlgebra.from_brackets(["f", "h", "e"], None,
                                      {("f", "h"): "2*f", ("f", "e"): "-h", ("h", "e"): "2*e"},
                                      None, {"f": -1, "h": 0, "e": 1}, name="sl2local")

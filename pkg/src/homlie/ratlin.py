"""Exact rational linear algebra.

Every other module goes through this one: matrices and vectors hold
``fractions.Fraction`` entries, subspaces are kept in reduced row-echelon
form so that equality of subspaces is equality of basis matrices.

Vectors are plain tuples of Fractions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionError

if os.environ.get("HOMLIE_PURE_PYTHON"):
    from . import _pykernel as _kernel
else:
    try:
        from . import _ckernel as _kernel
    except ImportError:
        from . import _pykernel as _kernel

KERNEL = "compiled" if _kernel.__name__.endswith("_ckernel") else "python"

Scalar = Fraction
Vector = tuple
ScalarLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(x: ScalarLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        text = x.strip().replace("−", "-")
        if not text or "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational literal: {x!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def format_scalar(x: Fraction) -> str:
    return str(x)


# ---------------------------------------------------------------- vectors

def zero_vector(n: int) -> tuple:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> tuple:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, v: Sequence[Fraction]) -> tuple:
    if not c:
        return (ZERO,) * len(v)
    return tuple(c * a for a in v)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return not any(v)


def combine(coeffs: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], n: int) -> tuple:
    """Linear combination ``sum(c_i * v_i)`` in dimension ``n``."""
    acc = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    acc[k] += c * a
    return tuple(acc)


# ---------------------------------------------------------------- matrices

class Matrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Iterable[ScalarLike]], cols: int | None = None):
        grid = tuple(tuple(as_scalar(x) for x in row) for row in data)
        if cols is None:
            if not grid:
                raise DimensionError("column count needed for a matrix with no rows")
            cols = len(grid[0])
        for row in grid:
            if len(row) != cols:
                raise DimensionError(f"ragged matrix: expected {cols} columns, got {len(row)}")
        self.rows = len(grid)
        self.cols = cols
        self._data = grid
        self._hash = None

    @classmethod
    def _trusted(cls, grid, rows: int, cols: int) -> "Matrix":
        m = cls.__new__(cls)
        m._data = tuple(tuple(r) for r in grid)
        m.rows = rows
        m.cols = cols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._trusted(((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._trusted((unit_vector(n, i) for i in range(n)), n, n)

    @classmethod
    def diag(cls, entries: Sequence[ScalarLike]) -> "Matrix":
        n = len(entries)
        grid = []
        for i, x in enumerate(entries):
            row = [ZERO] * n
            row[i] = as_scalar(x)
            grid.append(row)
        return cls._trusted(grid, n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]], rows: int | None = None) -> "Matrix":
        if not columns:
            if rows is None:
                raise DimensionError("row count needed for a matrix with no columns")
            return cls.zeros(rows, 0)
        n = len(columns[0])
        grid = [[as_scalar(x) for x in row] for row in zip(*columns)] if n else []
        return cls._trusted(grid, n, len(columns))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]], cols: int) -> "Matrix":
        return cls(rows, cols)

    # access
    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def T(self) -> "Matrix":
        if self.rows == 0:
            return Matrix.zeros(self.cols, 0)
        return Matrix._trusted(zip(*self._data), self.cols, self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # arithmetic
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._trusted((vec_add(a, b) for a, b in zip(self._data, other._data)),
                               self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._trusted((vec_sub(a, b) for a, b in zip(self._data, other._data)),
                               self.rows, self.cols)

    def __neg__(self) -> "Matrix":
        return self.scale(-ONE)

    def scale(self, c: ScalarLike) -> "Matrix":
        c = as_scalar(c)
        return Matrix._trusted((vec_scale(c, r) for r in self._data), self.rows, self.cols)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            grid = _kernel.matmul(self._data, other._data, self.cols, other.cols)
            return Matrix._trusted(grid, self.rows, other.cols)
        return self.apply(other)

    def apply(self, v: Sequence[Fraction]) -> tuple:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        nz = [(k, x) for k, x in enumerate(v) if x]
        return tuple(sum((row[k] * x for k, x in nz), ZERO) for row in self._data)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square() or k < 0:
            raise DimensionError("matrix power needs a square matrix and k >= 0")
        out = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def rank(self) -> int:
        return len(rref(self)[1])

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionError("hstack needs equal row counts")
        return Matrix._trusted((a + b for a, b in zip(self._data, other._data)),
                               self.rows, self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise DimensionError("vstack needs equal column counts")
        return Matrix._trusted(self._data + other._data, self.rows + other.rows, self.cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._trusted((tuple(self._data[i][j] for j in cols) for i in rows),
                               len(rows), len(cols))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def rref(m: Matrix) -> tuple:
    """Return ``(R, pivots)``: the nonzero rows of the rref of ``m`` and pivot columns."""
    rows, pivots = _kernel.rref(m._data, m.cols)
    return Matrix._trusted(rows, len(rows), m.cols), tuple(pivots)


# ---------------------------------------------------------------- subspaces

class Subspace:
    """Subspace of Q^n held by its canonical rref basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, basis: Matrix, pivots: tuple):
        self.ambient_dim = basis.cols
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def span(cls, vectors: Iterable[Sequence[ScalarLike]], ambient_dim: int) -> "Subspace":
        vecs = [tuple(as_scalar(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        r, piv = rref(Matrix._trusted(vecs, len(vecs), ambient_dim))
        return cls(r, piv)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(Matrix.zeros(0, n), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(Matrix.identity(n), tuple(range(n)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> tuple:
        return self.basis._data

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _same_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"ambient mismatch: {self.ambient_dim} vs {other.ambient_dim}")

    def reduce(self, v: Sequence[Fraction]) -> tuple:
        """Remainder of ``v`` after clearing the pivot columns with basis rows."""
        w = list(v)
        for row, p in zip(self.basis._data, self.pivots):
            c = w[p]
            if c:
                for k, a in enumerate(row):
                    if a:
                        w[k] -= c * a
        return tuple(w)

    def __contains__(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match ambient dimension")
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence[Fraction]) -> tuple:
        """Coefficients of ``v`` in the rref basis; ValueError if ``v`` is outside."""
        if any(self.reduce(v)):
            raise ValueError("vector not in subspace")
        return tuple(v[p] for p in self.pivots)

    def contains(self, other: "Subspace") -> bool:
        self._same_ambient(other)
        return all(v in self for v in other.vectors)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __ge__(self, other: "Subspace") -> bool:
        return self.contains(other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace.span(self.vectors + other.vectors, self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def image(self, m: Matrix) -> "Subspace":
        if m.cols != self.ambient_dim:
            raise DimensionError("operator does not act on this ambient space")
        return Subspace.span((m.apply(v) for v in self.vectors), m.rows)

    def is_invariant(self, m: Matrix) -> bool:
        return all(m.apply(v) in self for v in self.vectors)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={self.basis.tolist()})"


#: optional callable ``(m, kernel_subspace)`` invoked after every kernel computation
kernel_audit = None


def kernel(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}`` as a canonical subspace of Q^cols."""
    r, pivots = rref(m)
    n = m.cols
    pivot_set = set(pivots)
    vecs = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for row, p in zip(r._data, pivots):
            v[p] = -row[f]
        vecs.append(v)
    out = Subspace.span(vecs, n)
    if out.dim + len(pivots) != n:
        raise ArithmeticError("rank-nullity violated")
    if kernel_audit is not None:
        kernel_audit(m, out)
    return out


@dataclass(frozen=True)
class Unique:
    solution: tuple


@dataclass(frozen=True)
class Affine:
    particular: tuple
    kernel: Subspace


@dataclass(frozen=True)
class Inconsistent:
    pass


def solve(a: Matrix, b: Sequence[ScalarLike]):
    """Classify and solve ``a x = b`` exactly."""
    b = tuple(as_scalar(x) for x in b)
    if len(b) != a.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {a.rows} equations")
    aug = a.hstack(Matrix._trusted(((x,) for x in b), a.rows, 1))
    r, pivots = rref(aug)
    if pivots and pivots[-1] == a.cols:
        return Inconsistent()
    x = [ZERO] * a.cols
    for row, p in zip(r._data, pivots):
        x[p] = row[a.cols]
    x = tuple(x)
    ker = kernel(a)
    if ker.is_zero():
        return Unique(x)
    return Affine(x, ker)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus intersection: rref of [[A, A], [B, 0]] and keep rows with zero left half."""
    a._same_ambient(b)
    n = a.ambient_dim
    if a.is_zero() or b.is_zero():
        return Subspace.zero(n)
    zero = (ZERO,) * n
    rows = [v + v for v in a.vectors] + [v + zero for v in b.vectors]
    r, pivots = rref(Matrix._trusted(rows, len(rows), 2 * n))
    keep = [row[n:] for row, p in zip(r._data, pivots) if p >= n]
    return Subspace.span(keep, n)


def lattice(a: Subspace, b: Subspace, op: str):
    """Subspace lattice operation: ``sum``, ``intersect``, ``contains`` or ``equal``."""
    a._same_ambient(b)
    if op == "sum":
        return a + b
    if op == "intersect":
        return intersect(a, b)
    if op == "contains":
        return a.contains(b)
    if op == "equal":
        return a == b
    raise ValueError(f"unknown lattice operation {op!r}")


def preimage(m: Matrix, target: Subspace) -> Subspace:
    """``{v : m v in target}``."""
    if m.rows != target.ambient_dim:
        raise DimensionError("operator codomain does not match the target subspace")
    # m v in target  <=>  C m v = 0 for C spanning the annihilator of target
    ann = kernel(target.basis) if target.dim else Subspace.full(target.ambient_dim)
    if ann.is_zero():
        return Subspace.full(m.cols)
    return kernel(ann.basis @ m)


def complement_indices(s: Subspace, order: Iterable[int] | None = None) -> list:
    """Standard basis indices extending ``s`` to the whole space, chosen greedily."""
    n = s.ambient_dim
    order = range(n) if order is None else order
    current = s
    chosen = []
    for i in order:
        e = unit_vector(n, i)
        if e not in current:
            chosen.append(i)
            current = current + Subspace.span([e], n)
            if current.is_full():
                break
    return chosen


class Echelon:
    """Incrementally grown echelon basis, for fixpoint closures.

    ``add`` returns the reduced remainder of a new vector (now part of the
    basis) or None when the vector was already in the span.
    """

    def __init__(self, n: int):
        self.n = n
        self._rows: dict = {}

    def __len__(self):
        return len(self._rows)

    def reduce(self, v: Sequence[Fraction]) -> list:
        w = list(v)
        for p, row in self._rows.items():
            c = w[p]
            if c:
                for k, a in enumerate(row):
                    if a:
                        w[k] -= c * a
        return w

    def add(self, v: Sequence[Fraction]):
        w = self.reduce(v)
        for p, c in enumerate(w):
            if c:
                break
        else:
            return None
        w = [x / c for x in w]
        for q, row in self._rows.items():
            d = row[p]
            if d:
                self._rows[q] = [a - d * b for a, b in zip(row, w)]
        self._rows[p] = w
        return tuple(w)

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def subspace(self) -> Subspace:
        return Subspace.span(self._rows.values(), self.n)

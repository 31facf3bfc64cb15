"""Exact dense matrices and canonical subspaces over Q(i).

Conventions used throughout the package:

* vectors are column vectors, given as tuples of scalars;
* a :class:`Subspace` stores its basis as the *rows* of a matrix in reduced
  row-echelon form, which makes equal subspaces structurally equal;
* "the matrix of a map on a subspace W" always means the matrix with respect
  to W's RREF basis (one column per basis row).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ContainmentError, DimensionMismatchError
from .scalars import ONE, ZERO, GaussianRational

Vector = tuple  # tuple of GaussianRational


def _gr(x) -> GaussianRational:
    return GaussianRational.coerce(x)


class Matrix:
    """Immutable ``rows x cols`` matrix with Gaussian-rational entries."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(_gr(x) for x in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    # constructors

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatchError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = [list(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise DimensionMismatchError("ragged columns")
        return cls(rows, len(columns),
                   [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([ONE] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        e = [ZERO] * (n * n)
        for i, v in enumerate(values):
            e[i * n + i] = _gr(v)
        return cls(n, n, e)

    # access

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[GaussianRational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    # algebra

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatchError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            ocols = [other.col(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for c in ocols:
                    out.append(_dot(r, c))
            return Matrix(self.rows, other.cols, out)
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(v)} for {self.cols} columns")
        v = tuple(_gr(x) for x in v)
        return tuple(_dot(self.row(i), v) for i in range(self.rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = _gr(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, c) -> "Matrix":
        return self.scale(c)

    __rmul__ = __mul__

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} vs {other.shape}")

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    def conj(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [a.conj() for a in self.entries])

    @property
    def H(self) -> "Matrix":
        """Conjugate transpose."""
        return self.T.conj()

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionMismatchError("hstack needs equal row counts")
        return Matrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                                self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise DimensionMismatchError("vstack needs equal column counts")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def first_nonzero(self) -> GaussianRational | None:
        for x in self.entries:
            if not x.is_zero():
                return x
        return None

    def rank(self) -> int:
        return len(_rref_rows(self.to_rows(), self.cols)[1])

    def det(self) -> GaussianRational:
        if not self.is_square():
            raise DimensionMismatchError("determinant of a non-square matrix")
        return _det(self.to_rows())

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatchError("inverse of a non-square matrix")
        n = self.rows
        aug = [r + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.to_rows())]
        red, piv = _rref_rows(aug, 2 * n)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix.from_rows([r[n:] for r in red[:n]], n)

    def to_complex(self) -> list[list[complex]]:
        """Lossy conversion for numerical oracles only."""
        return [[complex(x) for x in r] for r in self.to_rows()]

    # equality

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{rows}])"


def _dot(u, v) -> GaussianRational:
    s = ZERO
    for a, b in zip(u, v):
        if a.is_zero() or b.is_zero():
            continue
        s = s + a * b
    return s


def _rref_rows(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Gauss-Jordan on a list of mutable rows. Returns (nonzero rows, pivot cols)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        if inv != ONE:
            m[r] = [x * inv for x in m[r]]
        pr = m[r]
        for i in range(nrows):
            if i == r:
                continue
            f = m[i][c]
            if f.is_zero():
                continue
            mi = m[i]
            m[i] = [mi[k] - f * pr[k] if not pr[k].is_zero() else mi[k] for k in range(ncols)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _det(rows: list[list]) -> GaussianRational:
    m = [list(r) for r in rows]
    n = len(m)
    det = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        piv = m[c][c]
        det = det * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            f = m[i][c]
            if f.is_zero():
                continue
            f = f * inv
            m[i] = [m[i][k] - f * m[c][k] for k in range(n)]
    return det


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form, same shape (zero rows at the bottom)."""
    red, _ = _rref_rows(m.to_rows(), m.cols)
    red += [[ZERO] * m.cols for _ in range(m.rows - len(red))]
    return Matrix.from_rows(red, m.cols) if m.rows else m


class Subspace:
    """Subspace of Q(i)^d with canonical RREF basis (rows)."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: Sequence[int], _trusted=False):
        if not _trusted:
            raise TypeError("use Subspace.span / Subspace.from_rows")
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = [[_gr(x) for x in v] for v in vectors]
        if any(len(r) != ambient_dim for r in rows):
            raise DimensionMismatchError("vector length differs from ambient dimension")
        red, piv = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, Matrix(len(red), ambient_dim, [x for r in red for x in r]),
                   piv, _trusted=True)

    @classmethod
    def zero(cls, d: int) -> "Subspace":
        return cls(d, Matrix(0, d, ()), (), _trusted=True)

    @classmethod
    def full(cls, d: int) -> "Subspace":
        return cls(d, Matrix.identity(d), range(d), _trusted=True)

    @classmethod
    def coordinate(cls, d: int, indices: Iterable[int]) -> "Subspace":
        """span{e_i : i in indices} (0-based)."""
        vecs = []
        for i in indices:
            v = [0] * d
            v[i] = 1
            vecs.append(v)
        return cls.span(vecs, d)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[Vector]:
        return [self.basis.row(i) for i in range(self.dim)]

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence) -> Vector:
        """Canonical remainder of ``v`` modulo this subspace."""
        v = [_gr(x) for x in v]
        for i, p in enumerate(self.pivots):
            c = v[p]
            if c.is_zero():
                continue
            row = self.basis.row(i)
            v = [a - c * b for a, b in zip(v, row)]
        return tuple(v)

    def contains_vector(self, v: Sequence) -> bool:
        return all(x.is_zero() for x in self.reduce(v))

    def coords(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the RREF basis; ``v`` must lie in the subspace."""
        if not self.contains_vector(v):
            raise ContainmentError("vector is not in the subspace")
        return tuple(_gr(v[p]) for p in self.pivots)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        vecs = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vectors())
        return f"Subspace(d={self.ambient_dim}, span{{{vecs}}})"


def kernel(m: Matrix) -> Subspace:
    """{x : m x = 0} as a canonical subspace of Q(i)^cols."""
    red, piv = _rref_rows(m.to_rows(), m.cols)
    free = [c for c in range(m.cols) if c not in piv]
    vecs = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(piv):
            v[p] = -red[r][f]
        vecs.append(v)
    return Subspace.span(vecs, m.cols)


def image(m: Matrix) -> Subspace:
    """Column span of ``m``."""
    return Subspace.span(m.columns(), m.rows)


def _check_ambient(u: Subspace, v: Subspace):
    if u.ambient_dim != v.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {u.ambient_dim} vs {v.ambient_dim}")


def annihilator(u: Subspace) -> Matrix:
    """Rows spanning {y : y . x = 0 for all x in u} (bilinear pairing)."""
    k = kernel(u.basis) if u.dim else Subspace.full(u.ambient_dim)
    return k.basis


def intersect(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    if u.is_full():
        return v
    if v.is_full():
        return u
    return kernel(annihilator(u).vstack(annihilator(v)))


def sum_(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return Subspace.span(u.vectors() + v.vectors(), u.ambient_dim)


def contains(u: Subspace, v: Subspace) -> bool:
    """True iff v is a subspace of u."""
    _check_ambient(u, v)
    if v.dim > u.dim:
        return False
    return all(u.contains_vector(x) for x in v.vectors())


def orthocomplement_in(inner: Subspace, outer: Subspace) -> Subspace:
    """Hermitian complement of ``inner`` inside ``outer`` (<x,y> = sum x_k conj(y_k))."""
    _check_ambient(inner, outer)
    if not contains(outer, inner):
        raise ContainmentError("inner subspace is not contained in outer subspace")
    if inner.is_zero():
        return outer
    return intersect(kernel(inner.basis.conj()), outer)


def restrict(m: Matrix, w: Subspace) -> Matrix:
    """Matrix of ``m`` on ``w`` with respect to w's canonical basis."""
    if w.ambient_dim != m.cols:
        raise DimensionMismatchError(
            f"subspace of dimension {w.ambient_dim} for a matrix with {m.cols} columns")
    if w.is_full():
        return m
    return Matrix.from_columns([m.apply(b) for b in w.vectors()], m.rows)


def extend_by_zero(a: Matrix, w: Subspace) -> Matrix:
    """The square matrix equal to ``a`` (a map on ``w``) on w and 0 on w's orthocomplement."""
    if a.cols != w.dim:
        raise DimensionMismatchError("map does not match subspace dimension")
    if w.is_full():
        return a
    if w.is_zero():
        return Matrix.zeros(a.rows, w.ambient_dim)
    b = w.basis
    gram = b.conj() @ b.T
    return a @ gram.inverse() @ b.conj()


def solve(a: Matrix, rhs: Sequence) -> Vector | None:
    """One solution x of a x = rhs, or None if inconsistent."""
    if len(rhs) != a.rows:
        raise DimensionMismatchError("right-hand side length mismatch")
    aug = [r + [_gr(b)] for r, b in zip(a.to_rows(), rhs)]
    red, piv = _rref_rows(aug, a.cols + 1)
    if piv and piv[-1] == a.cols:
        return None
    x = [ZERO] * a.cols
    for r, p in enumerate(piv):
        x[p] = red[r][a.cols]
    return tuple(x)


def hdot(x: Sequence, y: Sequence) -> GaussianRational:
    """Standard Hermitian form sum x_k conj(y_k)."""
    return _dot(x, [b.conj() for b in y])

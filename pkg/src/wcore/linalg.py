"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`, which already keeps values in lowest
terms with a positive denominator.  Matrices are immutable and hashable, so
they can be used as cache keys by the inverse constructors.

The affine matrix-equation solver at the bottom of this module is the
brute-force route used to cross-check every closed-form inverse: each
constraint is a sum of terms ``L X R`` (optionally transposed) equal to a
constant, the unknown ``X`` is vectorized column-major, and the stacked system
is reduced exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]


class DimensionMismatch(ValueError):
    pass


class NotInvertible(ValueError):
    pass


def as_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class Matrix:
    """Immutable dense matrix of Fractions.

    ``0``-row or ``0``-column shapes are allowed; they appear as bases of
    trivial subspaces.
    """

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable[ScalarLike]):
        data = tuple(as_scalar(e) for e in entries)
        if rows < 0 or cols < 0:
            raise ValueError("negative shape")
        if len(data) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self._data = data
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]]) -> Matrix:
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, (e for r in rows for e in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]], rows: int | None = None) -> Matrix:
        columns = [list(c) for c in columns]
        if not columns:
            return cls(rows or 0, 0, ())
        height = len(columns[0])
        return cls(height, len(columns), (columns[j][i] for i in range(height) for j in range(len(columns))))

    @classmethod
    def identity(cls, k: int) -> Matrix:
        return cls(k, k, (1 if i == j else 0 for i in range(k) for j in range(k)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[ScalarLike]) -> Matrix:
        k = len(values)
        return cls(k, k, (values[i] if i == j else 0 for i in range(k) for j in range(k)))

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major entries."""
        return self._data

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self._data[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self._data)

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    # -- ring operations ----------------------------------------------------

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, (x + y for x, y in zip(self._data, other._data)))

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, (x - y for x, y in zip(self._data, other._data)))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, (-x for x in self._data))

    def __mul__(self, scalar: ScalarLike) -> Matrix:
        if isinstance(scalar, Matrix):
            raise TypeError("use @ for matrix products")
        s = as_scalar(scalar)
        return Matrix(self.rows, self.cols, (s * x for x in self._data))

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        n, p = self.cols, other.cols
        a, b = self._data, other._data
        out = []
        for i in range(self.rows):
            arow = a[i * n:(i + 1) * n]
            acc = [Fraction(0)] * p
            for t, x in enumerate(arow):
                if x:
                    brow = b[t * p:(t + 1) * p]
                    for j in range(p):
                        if brow[j]:
                            acc[j] += x * brow[j]
            out.extend(acc)
        return Matrix(self.rows, p, out)

    def __pow__(self, exponent: int) -> Matrix:
        if not self.is_square():
            raise DimensionMismatch("powers need a square matrix")
        if exponent < 0:
            return inverse(self) ** (-exponent)
        result = Matrix.identity(self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    @property
    def T(self) -> Matrix:
        """Adjoint under the transpose involution."""
        return Matrix(self.cols, self.rows, (self._data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def adjoint(self) -> Matrix:
        return self.T

    def rank(self) -> int:
        return rref(self).rank

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in self.row(i)) + "]" for i in range(self.rows))
        return f"Matrix([{body}])"

    def __str__(self) -> str:
        cells = [[str(x) for x in self.row(i)] for i in range(self.rows)]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def hstack(*blocks: Matrix) -> Matrix:
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise DimensionMismatch("hstack needs equal row counts")
    cols = sum(b.cols for b in blocks)
    return Matrix(rows, cols, (x for i in range(rows) for b in blocks for x in b.row(i)))


def vstack(*blocks: Matrix) -> Matrix:
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise DimensionMismatch("vstack needs equal column counts")
    return Matrix(sum(b.rows for b in blocks), cols, (x for b in blocks for x in b.entries))


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    rows = [[Fraction(0)] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            rows[r0 + i][c0:c0 + b.cols] = b.row(i)
        r0 += b.rows
        c0 += b.cols
    return Matrix(n, m, (x for r in rows for x in r))


# ---------------------------------------------------------------------------
# Row reduction
# ---------------------------------------------------------------------------


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduce ``rows`` in place; pivot on the first nonzero entry."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != 1:
            inv = 1 / pv
            prow = rows[r] = [x * inv if x else x for x in prow]
        nz = [j for j in range(c, len(prow)) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return rows, pivots


@dataclass(frozen=True)
class RREF:
    reduced: Matrix
    rank: int
    pivot_cols: tuple[int, ...]


def rref(a: Matrix) -> RREF:
    rows, pivots = _rref_rows(a.to_rows(), a.cols)
    return RREF(Matrix(a.rows, a.cols, (x for r in rows for x in r)), len(pivots), tuple(pivots))


def rank(a: Matrix) -> int:
    return rref(a).rank


def inverse(a: Matrix) -> Matrix:
    if not a.is_square():
        raise DimensionMismatch("only square matrices have two-sided inverses")
    k = a.rows
    aug = [list(a.row(i)) + [Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    rows, pivots = _rref_rows(aug, k)
    r = sum(1 for c in pivots if c < k)
    if r < k:
        raise NotInvertible(f"rank {r} < {k}")
    return Matrix(k, k, (x for r in rows for x in r[k:]))


def is_invertible(a: Matrix) -> bool:
    return a.is_square() and rank(a) == a.rows


def full_rank_factorization(a: Matrix) -> tuple[Matrix, Matrix]:
    """Return ``(F, G)`` with ``a = F @ G`` and both factors of full rank.

    ``F`` collects the pivot columns of ``a`` and ``G`` the nonzero rows of
    its reduced row-echelon form.  The zero matrix has no such factorization.
    """
    red = rref(a)
    if red.rank == 0:
        raise ValueError("the zero matrix has no full-rank factorization")
    f = Matrix.from_columns([a.column(j) for j in red.pivot_cols])
    g = Matrix(red.rank, a.cols, red.reduced.entries[: red.rank * a.cols])
    return f, g


def moore_penrose(a: Matrix) -> Matrix:
    """Moore-Penrose inverse w.r.t. transpose, via full-rank factorization."""
    if a.is_zero():
        return Matrix.zeros(a.cols, a.rows)
    f, g = full_rank_factorization(a)
    return g.T @ inverse(g @ g.T) @ inverse(f.T @ f) @ f.T


# ---------------------------------------------------------------------------
# Subspaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient_dim spanned by the (independent) columns of ``basis``."""

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise DimensionMismatch("basis rows must equal the ambient dimension")
        if self.basis.cols and rank(self.basis) != self.basis.cols:
            raise ValueError("basis columns are linearly dependent")

    @property
    def dim(self) -> int:
        return self.basis.cols

    @classmethod
    def span(cls, generators: Matrix) -> Subspace:
        """Span of the columns of ``generators``, with a pivot-column basis."""
        red = rref(generators)
        cols = [generators.column(j) for j in red.pivot_cols]
        basis = Matrix.from_columns(cols) if cols else Matrix.zeros(generators.rows, 0)
        return cls(generators.rows, basis)

    def contains(self, other: Subspace) -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        if other.dim == 0:
            return True
        if self.dim == 0:
            return False
        return rank(hstack(self.basis, other.basis)) == self.dim


class Relation(enum.Enum):
    EQUAL = "Equal"
    P_IN_Q = "PinQ"
    Q_IN_P = "QinP"
    INCOMPARABLE = "Incomparable"


def column_space(a: Matrix) -> Subspace:
    return Subspace.span(a)


def row_space(a: Matrix) -> Subspace:
    """Row space of ``a``, stored as the column space of its adjoint."""
    return Subspace.span(a.T)


def null_space(a: Matrix) -> Subspace:
    red = rref(a)
    pivots = set(red.pivot_cols)
    free = [j for j in range(a.cols) if j not in pivots]
    vectors = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for r, p in enumerate(red.pivot_cols):
            v[p] = -red.reduced[r, f]
        vectors.append(v)
    basis = Matrix.from_columns(vectors) if vectors else Matrix.zeros(a.cols, 0)
    return Subspace(a.cols, basis)


def left_null_space(a: Matrix) -> Subspace:
    """Vectors ``v`` with ``v^T a = 0``, as columns."""
    return null_space(a.T)


def subspace_relation(p: Subspace, q: Subspace) -> Relation:
    p_in_q = q.contains(p)
    q_in_p = p.contains(q)
    if p_in_q and q_in_p:
        return Relation.EQUAL
    if p_in_q:
        return Relation.P_IN_Q
    if q_in_p:
        return Relation.Q_IN_P
    return Relation.INCOMPARABLE


def col_contained(x: Matrix, y: Matrix) -> bool:
    """``x R ⊆ y R``, i.e. every column of ``x`` lies in the column space of ``y``."""
    return rank(hstack(y, x)) == rank(y)


def col_equal(x: Matrix, y: Matrix) -> bool:
    return col_contained(x, y) and col_contained(y, x)


# ---------------------------------------------------------------------------
# Affine matrix-equation solver
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Term:
    """The linear term ``left @ X @ right``, or its adjoint when ``transpose``."""

    left: Matrix
    right: Matrix
    transpose: bool = False

    def apply(self, x: Matrix) -> Matrix:
        out = self.left @ x @ self.right
        return out.T if self.transpose else out


@dataclass(frozen=True)
class Constraint:
    terms: tuple[Term, ...]
    rhs: Matrix

    def residual(self, x: Matrix) -> Matrix:
        total = Matrix.zeros(*self.rhs.shape)
        for t in self.terms:
            total = total + t.apply(x)
        return total - self.rhs

    def holds(self, x: Matrix) -> bool:
        return self.residual(x).is_zero()


def equation(*terms: Term, rhs: Matrix) -> Constraint:
    return Constraint(tuple(terms), rhs)


class SolutionKind(enum.Enum):
    UNIQUE = "Unique"
    AFFINE = "Affine"
    INCONSISTENT = "Inconsistent"


@dataclass(frozen=True)
class SolutionSet:
    """Solution set ``particular + span(homogeneous)``; ``particular`` is None when empty."""

    particular: Matrix | None
    homogeneous: tuple[Matrix, ...] = ()

    @property
    def kind(self) -> SolutionKind:
        if self.particular is None:
            return SolutionKind.INCONSISTENT
        return SolutionKind.AFFINE if self.homogeneous else SolutionKind.UNIQUE

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def dimension(self) -> int | None:
        return None if self.particular is None else len(self.homogeneous)

    @property
    def value(self) -> Matrix:
        if self.kind is not SolutionKind.UNIQUE:
            raise ValueError(f"solution set is {self.kind.value}, not unique")
        return self.particular


def _term_rows(term: Term, shape: tuple[int, int]) -> list[tuple[dict[int, Fraction], int]]:
    """Sparse coefficient rows of ``vec(term(X))`` in column-major entry order."""
    p, q = shape
    L, R = term.left, term.right
    if L.cols != p or R.rows != q:
        raise DimensionMismatch(f"term {L.shape} X{shape} {R.shape} is not conformable")
    out_r, out_c = L.rows, R.cols
    Lnz = [[(s, L[i, s]) for s in range(p) if L[i, s]] for i in range(out_r)]
    Rnz = [[(t, R[t, j]) for t in range(q) if R[t, j]] for j in range(out_c)]
    rows = []
    # entry (i, j) of L X R has coefficient L[i,s] R[t,j] on X[s,t], index t*p + s
    if term.transpose:
        out_shape = (out_c, out_r)
        for jj in range(out_shape[1]):
            for ii in range(out_shape[0]):
                i, j = jj, ii
                coeffs: dict[int, Fraction] = {}
                for s, ls in Lnz[i]:
                    for t, rt in Rnz[j]:
                        idx = t * p + s
                        coeffs[idx] = coeffs.get(idx, Fraction(0)) + ls * rt
                rows.append((coeffs, jj * out_shape[0] + ii))
    else:
        for j in range(out_c):
            for i in range(out_r):
                coeffs = {}
                for s, ls in Lnz[i]:
                    for t, rt in Rnz[j]:
                        idx = t * p + s
                        coeffs[idx] = coeffs.get(idx, Fraction(0)) + ls * rt
                rows.append((coeffs, j * out_r + i))
    return rows


def linear_system(constraints: Sequence[Constraint], shape: tuple[int, int]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Stack constraints into ``A vec(X) = b`` (column-major ``vec``)."""
    nvars = shape[0] * shape[1]
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for con in constraints:
        r, c = con.rhs.shape
        block = [[Fraction(0)] * nvars for _ in range(r * c)]
        for term in con.terms:
            out = (term.right.cols, term.left.rows) if term.transpose else (term.left.rows, term.right.cols)
            if out != (r, c):
                raise DimensionMismatch(f"term output {out} does not match rhs {con.rhs.shape}")
            for coeffs, e in _term_rows(term, shape):
                row = block[e]
                for idx, v in coeffs.items():
                    row[idx] += v
        A.extend(block)
        b.extend(con.rhs[e % r, e // r] for e in range(r * c))
    return A, b


def solve_affine_matrix_system(constraints: Sequence[Constraint], shape: tuple[int, int]) -> SolutionSet:
    """Full solution set of the stacked affine constraints in the unknown ``X``."""
    p, q = shape
    nvars = p * q
    A, b = linear_system(constraints, shape)
    aug = [row + [rhs] for row, rhs in zip(A, b)]
    rows, pivots = _rref_rows(aug, nvars + 1)
    if pivots and pivots[-1] == nvars:
        return SolutionSet(None)

    def unvec(v: Sequence[Fraction]) -> Matrix:
        return Matrix(p, q, (v[t * p + s] for s in range(p) for t in range(q)))

    x = [Fraction(0)] * nvars
    for r, c in enumerate(pivots):
        x[c] = rows[r][nvars]
    pivot_set = set(pivots)
    basis = []
    for f in range(nvars):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * nvars
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(unvec(v))
    return SolutionSet(unvec(x), tuple(basis))

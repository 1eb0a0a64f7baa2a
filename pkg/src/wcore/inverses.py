"""Generalized inverses in M_k(Q) with the transpose involution.

Every inverse class comes in two independent routes:

* a closed form (full-rank factorizations and Moore-Penrose inverses of
  Gram-type products), returned with ``method=Method.CLOSED_FORM``;
* an oracle that stacks the defining equations into an affine system in the
  unknown and solves it exactly (``method=Method.ORACLE``).

Nonlinear defining equations (``xax = x``, ``ax^2 = x``, ``x^2a = x``) are never
solved directly.  The oracle fixes the known factor (``ax`` or ``xa`` is pinned
down by the linear equations), solves the linearized system, and re-verifies
the full equation list on the result.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .linalg import (
    DimensionMismatch,
    Matrix,
    SolutionSet,
    Term,
    col_equal,
    equation,
    full_rank_factorization,
    inverse,
    is_invertible,
    moore_penrose,
    rank,
    solve_affine_matrix_system,
)


class InvalidWeight(ValueError):
    pass


class HypothesisNotMet(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    """Symmetric invertible weight matrix (the ``m`` or ``n`` of the weighted inverses)."""

    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_square():
            raise InvalidWeight("weight must be square")
        if not self.matrix.is_symmetric():
            raise InvalidWeight("weight must be symmetric")
        if not is_invertible(self.matrix):
            raise InvalidWeight("weight must be invertible")

    @classmethod
    def identity(cls, k: int) -> Weight:
        return cls(Matrix.identity(k))

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def inverse(self) -> Weight:
        return _weight_inverse(self)


@lru_cache(maxsize=1024)
def _weight_inverse(w: Weight) -> Weight:
    return Weight(inverse(w.matrix))


class EquationTag(enum.Enum):
    E1 = "E1"    # axa = a
    E2 = "E2"    # xax = x
    E3m = "E3m"  # (max)^* = max
    E4n = "E4n"  # (nxa)^* = nxa
    E5 = "E5"    # ax = xa
    E6 = "E6"    # xa^2 = a
    E7 = "E7"    # ax^2 = x
    E8 = "E8"    # a^2x = a
    E9 = "E9"    # x^2a = x
    E6k = "E6k"  # xa^(k+1) = a^k


class Method(enum.Enum):
    CLOSED_FORM = "closed_form"
    ORACLE = "oracle"


@dataclass(frozen=True)
class RingContext:
    dim: int
    m: Weight
    n: Weight

    def __post_init__(self):
        if self.m.dim != self.dim or self.n.dim != self.dim:
            raise DimensionMismatch("weights do not match the ring dimension")

    @classmethod
    def unweighted(cls, k: int) -> RingContext:
        return cls(k, Weight.identity(k), Weight.identity(k))


Certificate = tuple[tuple[EquationTag, bool], ...]


@dataclass(frozen=True)
class InverseResult:
    value: Matrix | None
    certificate: Certificate = ()
    method: Method = Method.CLOSED_FORM
    # dimension of the oracle's final solution set; 0 means it was unique
    solution_dim: int | None = None

    @property
    def present(self) -> bool:
        return self.value is not None

    def __post_init__(self):
        if self.value is not None and not all(ok for _, ok in self.certificate):
            bad = [t.value for t, ok in self.certificate if not ok]
            raise AssertionError(f"certificate fails on {bad}")


ABSENT = InverseResult(None)

CORE_TAGS = (EquationTag.E1, EquationTag.E2, EquationTag.E3m, EquationTag.E6, EquationTag.E7)
DUAL_CORE_TAGS = (EquationTag.E1, EquationTag.E2, EquationTag.E4n, EquationTag.E8, EquationTag.E9)
GROUP_TAGS = (EquationTag.E1, EquationTag.E2, EquationTag.E5)


def _square(a: Matrix) -> int:
    if not a.is_square():
        raise DimensionMismatch(f"expected a square matrix, got {a.shape}")
    return a.rows


def verify_equations(
    a: Matrix,
    x: Matrix,
    tags: Sequence[EquationTag],
    ctx: RingContext | None = None,
    k: int | None = None,
) -> Certificate:
    """Exact verdict for each requested defining equation of ``x`` against ``a``."""
    dim = _square(a)
    if x.shape != a.shape:
        raise DimensionMismatch("candidate and matrix shapes differ")
    ctx = ctx or RingContext.unweighted(dim)
    if ctx.dim != dim:
        raise DimensionMismatch("ring context dimension differs from the matrix")
    out = []
    for tag in tags:
        if tag is EquationTag.E1:
            ok = a @ x @ a == a
        elif tag is EquationTag.E2:
            ok = x @ a @ x == x
        elif tag is EquationTag.E3m:
            ok = (ctx.m.matrix @ a @ x).is_symmetric()
        elif tag is EquationTag.E4n:
            ok = (ctx.n.matrix @ x @ a).is_symmetric()
        elif tag is EquationTag.E5:
            ok = a @ x == x @ a
        elif tag is EquationTag.E6:
            ok = x @ a @ a == a
        elif tag is EquationTag.E7:
            ok = a @ x @ x == x
        elif tag is EquationTag.E8:
            ok = a @ a @ x == a
        elif tag is EquationTag.E9:
            ok = x @ x @ a == x
        elif tag is EquationTag.E6k:
            if k is None:
                raise ValueError("E6k needs the exponent k")
            ok = x @ a ** (k + 1) == a ** k
        else:  # pragma: no cover
            raise ValueError(tag)
        out.append((tag, ok))
    return tuple(out)


def _ctx(dim: int, m: Weight | None = None, n: Weight | None = None) -> RingContext:
    return RingContext(dim, m or Weight.identity(dim), n or Weight.identity(dim))


def _result(a: Matrix, x: Matrix, tags, ctx: RingContext, method: Method, k: int | None = None, solution_dim=None) -> InverseResult:
    return InverseResult(x, verify_equations(a, x, tags, ctx, k), method, solution_dim)


def _check_weight(a: Matrix, w: Weight) -> int:
    dim = _square(a)
    if w.dim != dim:
        raise DimensionMismatch(f"weight is {w.dim}x{w.dim}, matrix is {dim}x{dim}")
    return dim


# ---------------------------------------------------------------------------
# {1}, {1,3^m}, {1,4^n}
# ---------------------------------------------------------------------------


def one_inverse(a: Matrix) -> Matrix:
    """Canonical {1}-inverse: the oracle's particular solution of ``aXa = a``."""
    sol = solve_affine_matrix_system([equation(Term(a, a), rhs=a)], (a.cols, a.rows))
    return sol.particular


@lru_cache(maxsize=8192)
def inverse_13m(a: Matrix, m: Weight) -> InverseResult:
    """A member of a{1,3^m}: ``(a^T m a)^+ a^T m``, present iff rank(a^T m a) = rank(a)."""
    dim = _check_weight(a, m)
    gram = a.T @ m.matrix @ a
    if rank(gram) != rank(a):
        return ABSENT
    x = moore_penrose(gram) @ a.T @ m.matrix
    return _result(a, x, (EquationTag.E1, EquationTag.E3m), _ctx(dim, m=m), Method.CLOSED_FORM)


@lru_cache(maxsize=8192)
def inverse_14n(a: Matrix, n: Weight) -> InverseResult:
    """A member of a{1,4^n}: ``n^-1 a^T (a n^-1 a^T)^+``, present iff rank(a n^-1 a^T) = rank(a)."""
    dim = _check_weight(a, n)
    ninv = n.inverse.matrix
    gram = a @ ninv @ a.T
    if rank(gram) != rank(a):
        return ABSENT
    y = ninv @ a.T @ moore_penrose(gram)
    return _result(a, y, (EquationTag.E1, EquationTag.E4n), _ctx(dim, n=n), Method.CLOSED_FORM)


def oracle_inverse_13m(a: Matrix, m: Weight) -> InverseResult:
    dim = _check_weight(a, m)
    ma = m.matrix @ a
    eye = Matrix.identity(dim)
    sol = solve_affine_matrix_system(
        [
            equation(Term(a, a), rhs=a),
            equation(Term(ma, eye, transpose=True), Term(-ma, eye), rhs=Matrix.zeros(dim)),
        ],
        (dim, dim),
    )
    if not sol.consistent:
        return ABSENT
    return _result(a, sol.particular, (EquationTag.E1, EquationTag.E3m), _ctx(dim, m=m), Method.ORACLE, solution_dim=sol.dimension)


def oracle_inverse_14n(a: Matrix, n: Weight) -> InverseResult:
    dim = _check_weight(a, n)
    eye = Matrix.identity(dim)
    nm = n.matrix
    sol = solve_affine_matrix_system(
        [
            equation(Term(a, a), rhs=a),
            equation(Term(nm, a, transpose=True), Term(-nm, a), rhs=Matrix.zeros(dim)),
        ],
        (dim, dim),
    )
    if not sol.consistent:
        return ABSENT
    return _result(a, sol.particular, (EquationTag.E1, EquationTag.E4n), _ctx(dim, n=n), Method.ORACLE, solution_dim=sol.dimension)


# ---------------------------------------------------------------------------
# Group and Drazin
# ---------------------------------------------------------------------------


def matrix_index(a: Matrix) -> int:
    """Least k >= 0 with rank(a^k) = rank(a^(k+1))."""
    _square(a)
    k, p = 0, Matrix.identity(a.rows)
    r = a.rows
    while True:
        q = p @ a
        rq = rank(q)
        if rq == r:
            return k
        k, p, r = k + 1, q, rq


def is_group_invertible(a: Matrix) -> bool:
    return rank(a @ a) == rank(a)


@lru_cache(maxsize=8192)
def group_inverse(a: Matrix) -> InverseResult:
    """``F (GF)^-2 G`` from a full-rank factorization ``a = FG``; absent iff index > 1."""
    dim = _square(a)
    if a.is_zero():
        return _result(a, a, GROUP_TAGS, _ctx(dim), Method.CLOSED_FORM)
    f, g = full_rank_factorization(a)
    gf = g @ f
    if not is_invertible(gf):
        return ABSENT
    gfi = inverse(gf)
    return _result(a, f @ gfi @ gfi @ g, GROUP_TAGS, _ctx(dim), Method.CLOSED_FORM)


def drazin_inverse(a: Matrix) -> tuple[int, InverseResult]:
    """Index and Drazin inverse; for index k >= 1 this is ``(a^k)^# a^(k-1)``."""
    dim = _square(a)
    k = matrix_index(a)
    if k == 0:
        x = inverse(a)
    else:
        x = group_inverse(a ** k).value @ a ** (k - 1)
    tags = (EquationTag.E6k, EquationTag.E2, EquationTag.E5)
    return k, _result(a, x, tags, _ctx(dim), Method.CLOSED_FORM, k=k)


def oracle_drazin(a: Matrix, k: int | None = None) -> tuple[int, InverseResult]:
    """Solve ``{aX = Xa, X a^(k+1) = a^k, (I - a^k g) X = 0}`` with g a {1}-inverse of a^k.

    The last constraint pins the range of X inside the range of a^k, which makes
    the system uniquely solvable; ``XaX = X`` is then verified, not imposed.
    """
    dim = _square(a)
    k = matrix_index(a) if k is None else k
    eye = Matrix.identity(dim)
    ak = a ** k
    proj = ak @ one_inverse(ak)
    sol = solve_affine_matrix_system(
        [
            equation(Term(a, eye), Term(-eye, a), rhs=Matrix.zeros(dim)),
            equation(Term(eye, a ** (k + 1)), rhs=ak),
            equation(Term(eye - proj, eye), rhs=Matrix.zeros(dim)),
        ],
        (dim, dim),
    )
    if not sol.consistent:
        return k, ABSENT
    x = sol.particular
    cert = verify_equations(a, x, (EquationTag.E6k, EquationTag.E2, EquationTag.E5), k=k)
    if not all(ok for _, ok in cert):
        return k, ABSENT
    return k, InverseResult(x, cert, Method.ORACLE, sol.dimension)


def oracle_group_inverse(a: Matrix) -> InverseResult:
    if not is_group_invertible(a):
        return ABSENT
    _, res = oracle_drazin(a, k=1)
    if not res.present:
        return ABSENT
    return InverseResult(res.value, verify_equations(a, res.value, GROUP_TAGS), Method.ORACLE, res.solution_dim)


# ---------------------------------------------------------------------------
# Weighted core and weighted dual core
# ---------------------------------------------------------------------------


@lru_cache(maxsize=8192)
def weighted_core(a: Matrix, m: Weight) -> InverseResult:
    """m-weighted core inverse ``a^# a x`` for any x in a{1,3^m}."""
    dim = _check_weight(a, m)
    g = group_inverse(a)
    x = inverse_13m(a, m)
    if not (g.present and x.present):
        return ABSENT
    return _result(a, g.value @ a @ x.value, CORE_TAGS, _ctx(dim, m=m), Method.CLOSED_FORM)


@lru_cache(maxsize=8192)
def weighted_dual_core(a: Matrix, n: Weight) -> InverseResult:
    """n-weighted dual core inverse ``y a a^#`` for any y in a{1,4^n}."""
    dim = _check_weight(a, n)
    g = group_inverse(a)
    y = inverse_14n(a, n)
    if not (g.present and y.present):
        return ABSENT
    return _result(a, y.value @ a @ g.value, DUAL_CORE_TAGS, _ctx(dim, n=n), Method.CLOSED_FORM)


def core_inverse(a: Matrix) -> InverseResult:
    return weighted_core(a, Weight.identity(_square(a)))


def dual_core_inverse(a: Matrix) -> InverseResult:
    return weighted_dual_core(a, Weight.identity(_square(a)))


def oracle_weighted_core(a: Matrix, m: Weight) -> InverseResult:
    """Equation-system route to the m-weighted core inverse.

    1. Solve ``{aXa = a, (maX)^T = maX}``; any solution gives the projector
       ``P = aX`` (it is the same for every solution).
    2. Solve ``{aXa = a, (maX)^T = maX, Xa^2 = a, (I - P) X = 0}``; the last
       constraint is ``aX^2 = X`` with the known factor ``aX = P`` fixed.
    3. Verify all five defining equations on the result.
    """
    dim = _check_weight(a, m)
    eye = Matrix.identity(dim)
    zero = Matrix.zeros(dim)
    ma = m.matrix @ a
    base = [
        equation(Term(a, a), rhs=a),
        equation(Term(ma, eye, transpose=True), Term(-ma, eye), rhs=zero),
    ]
    first = solve_affine_matrix_system(base, (dim, dim))
    if not first.consistent:
        return ABSENT
    proj = a @ first.particular
    sol = solve_affine_matrix_system(
        base + [equation(Term(eye, a @ a), rhs=a), equation(Term(eye - proj, eye), rhs=zero)],
        (dim, dim),
    )
    if not sol.consistent:
        return ABSENT
    x = sol.particular
    cert = verify_equations(a, x, CORE_TAGS, _ctx(dim, m=m))
    if not all(ok for _, ok in cert):
        return ABSENT
    return InverseResult(x, cert, Method.ORACLE, sol.dimension)


def oracle_weighted_dual_core(a: Matrix, n: Weight) -> InverseResult:
    """Mirror of :func:`oracle_weighted_core` with the fixed factor ``Q = Ya``."""
    dim = _check_weight(a, n)
    eye = Matrix.identity(dim)
    zero = Matrix.zeros(dim)
    nm = n.matrix
    base = [
        equation(Term(a, a), rhs=a),
        equation(Term(nm, a, transpose=True), Term(-nm, a), rhs=zero),
    ]
    first = solve_affine_matrix_system(base, (dim, dim))
    if not first.consistent:
        return ABSENT
    proj = first.particular @ a
    sol = solve_affine_matrix_system(
        base + [equation(Term(a @ a, eye), rhs=a), equation(Term(eye, eye - proj), rhs=zero)],
        (dim, dim),
    )
    if not sol.consistent:
        return ABSENT
    y = sol.particular
    cert = verify_equations(a, y, DUAL_CORE_TAGS, _ctx(dim, n=n))
    if not all(ok for _, ok in cert):
        return ABSENT
    return InverseResult(y, cert, Method.ORACLE, sol.dimension)


def wc(a: Matrix, m: Weight) -> Matrix | None:
    """Shorthand: the m-weighted core inverse or None."""
    return weighted_core(a, m).value


def wdc(a: Matrix, n: Weight) -> Matrix | None:
    """Shorthand: the n-weighted dual core inverse or None."""
    return weighted_dual_core(a, n).value


def gi(a: Matrix) -> Matrix | None:
    """Shorthand: the group inverse or None."""
    return group_inverse(a).value


# ---------------------------------------------------------------------------
# Characterizations
# ---------------------------------------------------------------------------


def range_characterization(a: Matrix, z: Matrix, m: Weight) -> bool:
    """``aza = a``, ``zR = aR`` and ``Rz = Ra^*m`` (the defining range conditions)."""
    _check_weight(a, m)
    if a @ z @ a != a:
        return False
    # row spaces compared as column spaces of adjoints
    return col_equal(z, a) and col_equal(z.T, (a.T @ m.matrix).T)


def dual_range_characterization(a: Matrix, y: Matrix, n: Weight) -> bool:
    """``aya = a``, ``nyR = a^*R`` and ``Ry = Ra``."""
    _check_weight(a, n)
    if a @ y @ a != a:
        return False
    return col_equal(n.matrix @ y, a.T) and col_equal(y.T, a.T)


def power_rule_check(a: Matrix, m: Weight, p: int) -> bool:
    """Whether ``(a^p)^(#,m) = ((a^(#,m))^p``."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    x = wc(a, m)
    if x is None:
        raise HypothesisNotMet("a is not m-weighted core invertible")
    return wc(a ** p, m) == x ** p


# ---------------------------------------------------------------------------
# Solution families for equation-class properties
# ---------------------------------------------------------------------------


def six_seven_family(a: Matrix) -> SolutionSet:
    """All x with ``xa^2 = a`` and ``ax^2 = x`` for index-one ``a``.

    ``ax^2 = x`` forces ``xR ⊆ aR``; with that linear constraint in place the
    quadratic one follows from ``xa^2 = a``, so the set is affine.
    """
    dim = _square(a)
    ag = gi(a)
    if ag is None:
        raise HypothesisNotMet("a is not group invertible")
    eye = Matrix.identity(dim)
    return solve_affine_matrix_system(
        [equation(Term(eye, a @ a), rhs=a), equation(Term(eye - a @ ag, eye), rhs=Matrix.zeros(dim))],
        (dim, dim),
    )


def eight_nine_family(a: Matrix) -> SolutionSet:
    """All y with ``a^2 y = a`` and ``y^2 a = y`` for index-one ``a`` (row-space mirror)."""
    dim = _square(a)
    ag = gi(a)
    if ag is None:
        raise HypothesisNotMet("a is not group invertible")
    eye = Matrix.identity(dim)
    return solve_affine_matrix_system(
        [equation(Term(a @ a, eye), rhs=a), equation(Term(eye, eye - ag @ a), rhs=Matrix.zeros(dim))],
        (dim, dim),
    )


def family_member(sol: SolutionSet, coeffs) -> Matrix:
    """``particular + sum(c_i h_i)``; extra coefficients are ignored."""
    if not sol.consistent:
        raise ValueError("empty solution set")
    x = sol.particular
    for c, h in zip(coeffs, sol.homogeneous):
        x = x + h * c
    return x


def clear_caches() -> None:
    """Drop memoized inverses so a rerun recomputes everything from scratch."""
    for fn in (_weight_inverse, inverse_13m, inverse_14n, group_inverse, weighted_core, weighted_dual_core):
        fn.cache_clear()

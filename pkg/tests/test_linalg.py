from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wcore.linalg import (
    DimensionMismatch,
    Matrix,
    NotInvertible,
    Relation,
    Subspace,
    Term,
    block_diag,
    column_space,
    equation,
    full_rank_factorization,
    hstack,
    inverse,
    left_null_space,
    linear_system,
    moore_penrose,
    null_space,
    rank,
    row_space,
    rref,
    solve_affine_matrix_system,
    subspace_relation,
    vstack,
)
from wcore.linalg import SolutionKind

from .conftest import M, matrices, rationals, square


class TestMatrixAlgebra:
    def test_transpose(self):
        assert M([1, 2], [0, 0]).T == M([1, 0], [2, 0])

    def test_identity_is_neutral(self):
        x = M([3, -1], [Fraction(1, 2), 7])
        assert Matrix.identity(2) @ x == x == x @ Matrix.identity(2)

    def test_entries_are_canonical_fractions(self):
        a = M([Fraction(2, 4), 3])
        assert a[0, 0] == Fraction(1, 2) and a[0, 0].denominator == 2
        assert all(isinstance(x, Fraction) for x in a.entries)

    def test_float_entries_rejected(self):
        with pytest.raises(TypeError):
            M([0.5, 1])

    def test_dimension_errors(self):
        with pytest.raises(DimensionMismatch):
            M([1, 2]) @ M([1, 2])
        with pytest.raises(DimensionMismatch):
            M([1, 2]) + M([1], [2])
        with pytest.raises(ValueError):
            Matrix(2, 2, [1, 2, 3])

    def test_powers(self):
        a = M([1, 1], [0, 1])
        assert a ** 3 == M([1, 3], [0, 1])
        assert a ** 0 == Matrix.identity(2)
        assert a ** -1 == M([1, -1], [0, 1])

    def test_hash_and_equality(self):
        assert hash(M([1, 2], [3, 4])) == hash(M([1, 2], [3, 4]))
        assert M([1, 2]) != M([1], [2])

    def test_stacking(self):
        a, b = M([1], [2]), M([3], [4])
        assert hstack(a, b) == M([1, 3], [2, 4])
        assert vstack(a.T, b.T) == M([1, 2], [3, 4])
        assert block_diag(M([1]), M([2, 3], [4, 5])) == M([1, 0, 0], [0, 2, 3], [0, 4, 5])

    def test_zero_width_shapes(self):
        z = Matrix.zeros(3, 0)
        assert z.shape == (3, 0)
        assert (z @ Matrix.zeros(0, 2)) == Matrix.zeros(3, 2)

    @given(st.integers(1, 4).flatmap(lambda k: st.tuples(matrices(k, k, rationals), matrices(k, k, rationals))))
    def test_transpose_reverses_products(self, pair):
        a, b = pair
        assert (a @ b).T == b.T @ a.T

    @given(matrices(elements=rationals))
    def test_transpose_is_an_involution(self, a):
        assert a.T.T == a

    @given(matrices())
    def test_rank_invariant_under_transpose(self, a):
        assert rank(a) == rank(a.T)


class TestRref:
    def test_single_pivot(self):
        r = rref(M([1, 2], [0, 0]))
        assert (r.rank, r.pivot_cols) == (1, (0,))

    def test_identity(self):
        assert rref(Matrix.identity(3)).rank == 3

    def test_strictly_upper_rank_one(self):
        r = rref(M([0, 5], [0, 0]))
        assert r.rank == 1 and r.reduced == M([0, 1], [0, 0])

    @given(matrices())
    def test_rref_is_idempotent(self, a):
        once = rref(a).reduced
        assert rref(once).reduced == once


class TestInverse:
    def test_weight_inverse(self):
        third = Fraction(1, 3)
        assert inverse(M([2, 1], [1, 2])) == M([2 * third, -third], [-third, 2 * third])

    def test_identity(self):
        assert inverse(Matrix.identity(3)) == Matrix.identity(3)

    def test_singular(self):
        with pytest.raises(NotInvertible):
            inverse(M([1, 2], [0, 0]))

    def test_rectangular(self):
        with pytest.raises(DimensionMismatch):
            inverse(M([1, 2]))

    @given(square(elements=rationals))
    def test_inverse_round_trip(self, a):
        if rank(a) < a.rows:
            with pytest.raises(NotInvertible):
                inverse(a)
        else:
            assert a @ inverse(a) == Matrix.identity(a.rows) == inverse(a) @ a


class TestSubspaces:
    def test_null_space_of_rank_one(self):
        ns = null_space(M([1, 0], [-1, 0]))
        assert ns.dim == 1
        assert subspace_relation(ns, Subspace.span(M([0], [1]))) is Relation.EQUAL

    def test_null_space_extremes(self):
        assert null_space(Matrix.identity(3)).dim == 0
        assert null_space(Matrix.zeros(2)).dim == 2

    def test_relations(self):
        e1, e2 = Subspace.span(M([1], [0], [0])), Subspace.span(M([0], [1], [0]))
        e12 = Subspace.span(M([1, 0], [0, 1], [0, 0]))
        assert subspace_relation(e1, e12) is Relation.P_IN_Q
        assert subspace_relation(e12, e1) is Relation.Q_IN_P
        assert subspace_relation(e1, e2) is Relation.INCOMPARABLE

    def test_idempotent_column_space(self):
        a = M([1, 2], [0, 0])
        assert subspace_relation(column_space(a), column_space(a @ a)) is Relation.EQUAL

    def test_ambient_mismatch(self):
        with pytest.raises(DimensionMismatch):
            subspace_relation(Subspace.span(M([1])), Subspace.span(M([1], [0])))

    def test_dependent_basis_rejected(self):
        with pytest.raises(ValueError):
            Subspace(2, M([1, 2], [1, 2]))

    @given(matrices())
    def test_null_space_dimension_and_kernel(self, a):
        ns = null_space(a)
        assert ns.dim == a.cols - rank(a)
        assert (a @ ns.basis).is_zero()
        assert (left_null_space(a).basis.T @ a).is_zero()

    @given(matrices())
    def test_relation_is_reflexive(self, a):
        for sp in (column_space(a), row_space(a), null_space(a)):
            assert subspace_relation(sp, sp) is Relation.EQUAL


class TestFactorization:
    @pytest.mark.parametrize(
        "a, f, g",
        [
            (M([1, 2], [0, 0]), M([1], [0]), M([1, 2])),
            (Matrix.identity(2), Matrix.identity(2), Matrix.identity(2)),
            (M([1, 0], [-1, 0]), M([1], [-1]), M([1, 0])),
        ],
    )
    def test_known_factorizations(self, a, f, g):
        assert full_rank_factorization(a) == (f, g)

    def test_zero_is_rejected(self):
        with pytest.raises(ValueError):
            full_rank_factorization(Matrix.zeros(2))

    @given(matrices())
    def test_factorization_reconstructs(self, a):
        if a.is_zero():
            return
        f, g = full_rank_factorization(a)
        r = rank(a)
        assert f @ g == a
        assert (f.cols, g.rows) == (r, r) and rank(f) == rank(g) == r

    @given(matrices(elements=rationals))
    def test_moore_penrose_equations(self, a):
        x = moore_penrose(a)
        assert a @ x @ a == a and x @ a @ x == x
        assert (a @ x).is_symmetric() and (x @ a).is_symmetric()


class TestAffineSolver:
    def test_identity_system(self):
        sol = solve_affine_matrix_system([equation(Term(Matrix.identity(2), Matrix.identity(2)), rhs=Matrix.identity(2))], (2, 2))
        assert sol.kind is SolutionKind.UNIQUE and sol.value == Matrix.identity(2)

    def test_one_inverse_family_dimension(self):
        a = M([1, 2], [0, 0])
        sol = solve_affine_matrix_system([equation(Term(a, a), rhs=a)], (2, 2))
        assert sol.kind is SolutionKind.AFFINE and sol.dimension == 3

    def test_inconsistent(self):
        a = M([1, 0], [0, 0])
        sol = solve_affine_matrix_system([equation(Term(a, Matrix.identity(2)), rhs=Matrix.identity(2))], (2, 2))
        assert sol.kind is SolutionKind.INCONSISTENT and not sol.consistent
        with pytest.raises(ValueError):
            sol.value

    def test_column_major_encoding(self):
        # X -> X with X 2x1: rows follow column-major entries of the residual
        coeffs, rhs = linear_system([equation(Term(Matrix.identity(2), Matrix.identity(1)), rhs=M([5], [6]))], (2, 1))
        assert coeffs == [[1, 0], [0, 1]] and rhs == [5, 6]

    def test_transposed_term(self):
        # X^T = X pins the symmetric part only
        eye = Matrix.identity(2)
        sol = solve_affine_matrix_system(
            [equation(Term(eye, eye), Term(-eye, eye, transpose=True), rhs=Matrix.zeros(2))], (2, 2)
        )
        assert sol.dimension == 3
        for v in sol.homogeneous:
            assert v.is_symmetric()

    @given(st.integers(1, 3).flatmap(lambda k: st.tuples(square(k), square(k), square(k))))
    def test_solutions_resubstitute(self, mats):
        left, right, target = mats
        cons = [equation(Term(left, right), rhs=left @ target @ right)]
        sol = solve_affine_matrix_system(cons, target.shape)
        assert sol.consistent
        assert all(c.holds(sol.particular) for c in cons)
        for h in sol.homogeneous:
            assert all(c.holds(sol.particular + h) for c in cons)
        unique = rank(left) == left.rows and rank(right) == right.rows
        assert (sol.kind is SolutionKind.UNIQUE) == unique

import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

import hopf_kernels.exactmath.linalg as linalg
from hopf_kernels.exactmath.field import field_make
from hopf_kernels.types import *

Q = field_make(1)


def matrix(rows):
    return linalg.matrix_make(Q, [[Q.rational(x) for x in row] for row in rows], ncols=len(rows[0]))


def vector(xs):
    return tuple(Q.rational(x) for x in xs)


def matrices(nrows: int, ncols: int) -> st.SearchStrategy:
    entry = st.integers(min_value=-2, max_value=2)
    return st.lists(st.lists(entry, min_size=ncols, max_size=ncols), min_size=nrows, max_size=nrows).map(matrix)


class TestEchelon(unittest.TestCase):
    """TestEchelon is a class for unit tests about the reduced row-echelon forms.
    """
    def test_rref(self) -> None:
        m = matrix([[2, 4, 2], [1, 2, 2], [3, 6, 4]])
        expected = matrix([[1, 2, 0], [0, 0, 1], [0, 0, 0]])

        actual, r = linalg.rref(m)
        self.assertEqual(actual, expected)
        self.assertEqual(r, 2)

    def test_span_is_canonical(self) -> None:
        a = linalg.span(Q, 3, [vector([1, 1, 0]), vector([0, 1, 1])])
        b = linalg.span(Q, 3, [vector([1, 2, 1]), vector([1, 0, -1])])
        self.assertEqual(a, b)
        self.assertEqual(a.pivots, (0, 1))

    def test_contains_and_coordinates(self) -> None:
        s = linalg.span(Q, 3, [vector([1, 0, 1]), vector([0, 1, 1])])
        v = vector([2, 3, 5])
        self.assertTrue(linalg.contains_vector(s, v))
        self.assertFalse(linalg.contains_vector(s, vector([0, 0, 1])))
        self.assertEqual(linalg.coordinates(s, v), vector([2, 3]))
        self.assertEqual(linalg.quotient_coordinates(s, v), vector([0]))

    def test_shape_error(self) -> None:
        builder = linalg.EchelonBuilder(field=Q, ncols=3)
        self.assertRaises(ShapeError, lambda: builder.add(vector([1, 2])))
        a = linalg.full_subspace(Q, 2)
        b = linalg.full_subspace(Q, 3)
        self.assertRaises(ShapeError, lambda: linalg.subspace_sum(a, b))

    @settings(max_examples=40, deadline=None)
    @given(matrices(3, 4))
    def test_rref_is_idempotent(self, m) -> None:
        once, r = linalg.rref(m)
        twice, s = linalg.rref(once)
        self.assertEqual(once, twice)
        self.assertEqual(r, s)

    @settings(max_examples=40, deadline=None)
    @given(matrices(3, 4))
    def test_rank_of_transpose(self, m) -> None:
        self.assertEqual(linalg.rank(m), linalg.rank(linalg.transpose(m)))

    @settings(max_examples=40, deadline=None)
    @given(matrices(3, 4))
    def test_rank_nullity(self, m) -> None:
        self.assertEqual(linalg.rank(m) + linalg.kernel(m).dim, m.ncols)
        for x in linalg.kernel(m).vectors():
            self.assertTrue(linalg.vec_is_zero(linalg.mat_vec(m, x)))


class TestSubspaces(unittest.TestCase):
    """TestSubspaces is a class for unit tests about sums and intersections of subspaces.
    """
    def test_intersect(self) -> None:
        a = linalg.span(Q, 3, [vector([1, 0, 0]), vector([0, 1, 0])])
        b = linalg.span(Q, 3, [vector([0, 1, 0]), vector([0, 0, 1])])
        expected = linalg.span(Q, 3, [vector([0, 1, 0])])

        self.assertEqual(linalg.subspace_intersect(a, b), expected)
        self.assertEqual(linalg.subspace_ops(a, b, 'intersect'), expected)
        self.assertEqual(linalg.subspace_sum(a, b), linalg.full_subspace(Q, 3))

    def test_contains(self) -> None:
        a = linalg.span(Q, 3, [vector([1, 0, 0]), vector([0, 1, 0])])
        b = linalg.span(Q, 3, [vector([1, 1, 0])])
        self.assertTrue(linalg.subspace_contains(a, b))
        self.assertFalse(linalg.subspace_contains(b, a))
        self.assertTrue(linalg.subspace_contains(a, linalg.zero_subspace(Q, 3)))

    def test_invalid_operation(self) -> None:
        a = linalg.zero_subspace(Q, 2)
        self.assertRaises(ValueError, lambda: linalg.subspace_ops(a, a, 'union'))

    @settings(max_examples=40, deadline=None)
    @given(matrices(2, 4), matrices(2, 4))
    def test_dimension_formula(self, m, n) -> None:
        a = linalg.span(Q, 4, m.entries)
        b = linalg.span(Q, 4, n.entries)
        total = linalg.subspace_sum(a, b)
        common = linalg.subspace_intersect(a, b)
        self.assertEqual(total.dim + common.dim, a.dim + b.dim)
        self.assertTrue(linalg.subspace_contains(a, common))
        self.assertTrue(linalg.subspace_contains(b, common))
        self.assertTrue(linalg.subspace_contains(total, a))


class TestSolve(unittest.TestCase):
    """TestSolve is a class for unit tests about linear systems.
    """
    def test_solve_vector(self) -> None:
        a = matrix([[1, 1], [1, -1]])
        x = linalg.solve_vector(a, vector([3, 1]))
        self.assertEqual(x, vector([2, 1]))

    def test_inconsistent(self) -> None:
        a = matrix([[1, 1], [2, 2]])
        self.assertIsNone(linalg.solve_vector(a, vector([1, 3])))

    def test_solve_over_cyclotomic_field(self) -> None:
        k = field_make(4)
        i = k.zeta_power(1)
        a = linalg.matrix_make(k, [[k.one(), i], [i, k.one()]])
        b = (k.rational(2), k.zero())
        x = linalg.solve_vector(a, b)
        self.assertEqual(linalg.mat_vec(a, x), b)

    def test_kernel(self) -> None:
        m = matrix([[1, 2, 3], [2, 4, 6]])
        k = linalg.kernel(m)
        self.assertEqual(k.dim, 2)
        self.assertTrue(linalg.contains_vector(k, vector([-2, 1, 0])))
        self.assertTrue(linalg.contains_vector(k, vector([Fraction(-3, 2), 0, Fraction(1, 2)])))

    def test_kronecker_and_trace(self) -> None:
        a = matrix([[1, 2], [3, 4]])
        b = matrix([[0, 1], [1, 0]])
        self.assertEqual(linalg.trace(linalg.kronecker(a, linalg.identity_matrix(Q, 2))), 2 * linalg.trace(a))
        self.assertEqual(linalg.trace(linalg.kronecker(a, b)), 0)

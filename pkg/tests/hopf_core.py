import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.corpus.builtins import builtin_algebra, builtin_names
from hopf_kernels.corpus.groups import builtin_group_table
from hopf_kernels.exactmath.field import field_make
from hopf_kernels.hopf.axioms import morphism_check, require_hopf, verify_hopf
from hopf_kernels.hopf.dual import dual, integral, subalgebra_integral
from hopf_kernels.hopf.quotient import augmentation_ideal, hopf_ideal_violations, quotient_by_ideal, quotient_by_subalgebra
from hopf_kernels.hopf.subalgebras import HOPF, NORMAL_HOPF, certify, closure, hopf_subalgebra, is_normal, largest_subcoalgebra_in, trivial_subalgebra, whole_algebra
from hopf_kernels.types import *


def element_order(t: GroupTable, a: int) -> int:
    k = 1
    x = a
    while x != 0:
        x = t.table[x][a]
        k += 1
    return k


def elements_of_order(t: GroupTable, k: int) -> List[int]:
    return [a for a in range(t.order) if element_order(t, a) == k]


def span_with_unit(h: HopfAlgebraData, *indices: int) -> Subspace:
    return linalg.span(h.field, h.dim, [h.unit] + [alg.basis(h, i) for i in indices])


class TestHopfAxioms(unittest.TestCase):
    """TestHopfAxioms is a class for unit tests about the exact verification of the axioms.
    """
    def test_builtins(self) -> None:
        for name in builtin_names():
            with self.subTest(name=name):
                report = verify_hopf(builtin_algebra(name))
                self.assertTrue(report.passed, report.failures())

    def test_corrupted_antipode(self) -> None:
        h = builtin_algebra('C2')
        broken = HopfAlgebraData(field=h.field, dim=h.dim, mult=h.mult, unit=h.unit, comult=h.comult, counit=h.counit, antipode=linalg.zero_matrix(h.field, 2, 2), name='broken')

        report = verify_hopf(broken)
        self.assertFalse(report.passed)
        self.assertIn('antipode_left', [check.name for check in report.failures()])
        with self.assertRaises(AxiomError) as cm:
            require_hopf(broken)
        self.assertIs(cm.exception.report.passed, False)

    def test_shape_error(self) -> None:
        h = builtin_algebra('C2')
        broken = HopfAlgebraData(field=h.field, dim=h.dim, mult=h.mult, unit=h.unit[:1], comult=h.comult, counit=h.counit, antipode=h.antipode, name='broken')
        self.assertRaises(ShapeError, lambda: verify_hopf(broken))

    def test_entries_from_another_field(self) -> None:
        h = builtin_algebra('C2')
        mult = [[list(row) for row in plane] for plane in h.mult]
        mult[1][1][0] = field_make(4).one()
        broken = HopfAlgebraData(field=h.field, dim=h.dim, mult=mult, unit=h.unit, comult=h.comult, counit=h.counit, antipode=h.antipode, name='broken')

        report = verify_hopf(broken)
        self.assertEqual([(check.name, check.witness) for check in report.failures()], [('mult_entries_in_field', (1, 1, 0))])
        with self.assertRaises(AxiomError) as cm:
            require_hopf(broken)
        self.assertEqual(cm.exception.report, report)

    def test_commutativity(self) -> None:
        self.assertTrue(alg.is_commutative(builtin_algebra('C4')))
        self.assertFalse(alg.is_commutative(builtin_algebra('S3')))
        self.assertTrue(alg.is_cocommutative(builtin_algebra('S3')))
        self.assertFalse(alg.is_cocommutative(builtin_algebra('Fun-S3')))
        self.assertTrue(alg.is_commutative(builtin_algebra('Fun-S3')))


class TestDual(unittest.TestCase):
    """TestDual is a class for unit tests about the dual Hopf algebra.
    """
    def test_double_dual(self) -> None:
        h = builtin_algebra('S3')
        hh = dual(dual(h))
        self.assertEqual(hh.mult, h.mult)
        self.assertEqual(hh.comult, h.comult)
        self.assertEqual(hh.unit, h.unit)
        self.assertEqual(hh.counit, h.counit)
        self.assertEqual(hh.antipode, h.antipode)
        self.assertEqual(hh.name, 'S3')
        self.assertEqual(dual(h).name, 'Fun-S3')

    def test_dual_of_kac_paljutkin(self) -> None:
        self.assertTrue(verify_hopf(dual(builtin_algebra('KP8'))).passed)


class TestIntegral(unittest.TestCase):
    """TestIntegral is a class for unit tests about the normalized integrals.
    """
    def test_group_algebra(self) -> None:
        h = builtin_algebra('C2')
        half = h.field.rational(Fraction(1, 2))
        self.assertEqual(integral(h), (half, half))

    def test_function_algebra(self) -> None:
        h = builtin_algebra('Fun-C2')
        self.assertEqual(integral(h), (h.field.one(), h.field.zero()))

    def test_properties(self) -> None:
        for name in ('S3', 'Fun-S3', 'KP8', 'Q8'):
            with self.subTest(name=name):
                h = builtin_algebra(name)
                lam = integral(h)
                self.assertEqual(alg.counit(h, lam), h.field.one())
                self.assertEqual(alg.multiply(h, lam, lam), lam)
                self.assertEqual(alg.antipode(h, lam), lam)
                for i in range(h.dim):
                    x = alg.basis(h, i)
                    expected = linalg.vec_scale(h.counit[i], lam)
                    self.assertEqual(alg.multiply(h, x, lam), expected)
                    self.assertEqual(alg.multiply(h, lam, x), expected)

    def test_subalgebra_integral(self) -> None:
        h = builtin_algebra('S3')
        t = builtin_group_table('S3')
        a = elements_of_order(t, 3)[0]
        k = closure(h, span_with_unit(h, a))
        lam = subalgebra_integral(h, k)
        third = h.field.rational(Fraction(1, 3))
        expected = tuple(third if element_order(t, b) in (1, 3) else h.field.zero() for b in range(6))
        self.assertEqual(lam, expected)


class TestSubalgebras(unittest.TestCase):
    """TestSubalgebras is a class for unit tests about Hopf subalgebras and their closures.
    """
    def test_closure_of_a_transposition(self) -> None:
        h = builtin_algebra('S3')
        t = builtin_group_table('S3')
        g = elements_of_order(t, 2)[0]

        k = closure(h, span_with_unit(h, g), HOPF)
        self.assertEqual(k.dim, 2)
        self.assertTrue(k.flags.is_hopf)
        self.assertFalse(is_normal(h, k))

        n = closure(h, span_with_unit(h, g), NORMAL_HOPF)
        self.assertEqual(n.dim, 6)
        self.assertTrue(n.flags.is_normal)

    def test_closure_of_a_three_cycle(self) -> None:
        h = builtin_algebra('S3')
        t = builtin_group_table('S3')
        a = elements_of_order(t, 3)[0]

        k = closure(h, span_with_unit(h, a), NORMAL_HOPF)
        self.assertEqual(k.dim, 3)
        self.assertEqual(k, closure(h, span_with_unit(h, a), HOPF))

    def test_invalid_mode(self) -> None:
        h = builtin_algebra('C2')
        self.assertRaises(ValueError, lambda: closure(h, span_with_unit(h), 'normal'))

    def test_certify(self) -> None:
        h = builtin_algebra('S3')
        v = linalg.span(h.field, h.dim, [alg.basis(h, 1)])
        flags = certify(h, v).flags
        self.assertTrue(flags.is_subcoalgebra)
        self.assertFalse(flags.contains_unit)
        self.assertFalse(flags.is_hopf)
        self.assertRaises(NotHopfSubalgebraError, lambda: hopf_subalgebra(h, v))

    def test_trivial_and_whole(self) -> None:
        h = builtin_algebra('KP8')
        self.assertEqual(trivial_subalgebra(h).dim, 1)
        self.assertEqual(whole_algebra(h).dim, 8)
        self.assertTrue(is_normal(h, trivial_subalgebra(h)))
        self.assertTrue(is_normal(h, whole_algebra(h)))


class TestLargestSubcoalgebra(unittest.TestCase):
    """TestLargestSubcoalgebra is a class for unit tests about the largest subcoalgebra contained in a subspace.
    """
    def test_cyclic_group_of_order_two(self) -> None:
        h = builtin_algebra('C2')
        g = alg.basis(h, 1)
        one_plus_g = linalg.span(h.field, h.dim, [linalg.vec_add(h.unit, g)])
        self.assertEqual(largest_subcoalgebra_in(h, one_plus_g).dim, 0)
        only_g = linalg.span(h.field, h.dim, [g])
        self.assertEqual(largest_subcoalgebra_in(h, only_g), only_g)
        whole = linalg.full_subspace(h.field, h.dim)
        self.assertEqual(largest_subcoalgebra_in(h, whole), whole)

    @settings(max_examples=30, deadline=None)
    @given(st.sets(st.integers(min_value=0, max_value=5)), st.lists(st.integers(min_value=-2, max_value=2), min_size=6, max_size=6))
    def test_group_likes_survive(self, elements: Set[int], extra: List[int]) -> None:
        # the subcoalgebras of a group algebra are the spans of sets of group elements
        h = builtin_algebra('S3')
        w = tuple(h.field.rational(c) for c in extra)
        v = linalg.span(h.field, h.dim, [alg.basis(h, g) for g in sorted(elements)] + [w])
        inside = [g for g in range(h.dim) if linalg.contains_vector(v, alg.basis(h, g))]
        self.assertTrue(set(elements) <= set(inside))
        self.assertEqual(largest_subcoalgebra_in(h, v), linalg.span(h.field, h.dim, [alg.basis(h, g) for g in inside]))

    def test_simple_subcoalgebra_survives(self) -> None:
        h = builtin_algebra('KP8')
        # the span of z, xz, yz, xyz is a simple subcoalgebra
        block = linalg.span(h.field, h.dim, [alg.basis(h, i) for i in range(4, 8)])
        v = linalg.subspace_sum(block, linalg.span(h.field, h.dim, [linalg.vec_add(h.unit, alg.basis(h, 1))]))
        self.assertEqual(largest_subcoalgebra_in(h, v), block)


class TestQuotient(unittest.TestCase):
    """TestQuotient is a class for unit tests about Hopf ideals and quotients.
    """
    def test_quotient_by_a_normal_subalgebra(self) -> None:
        h = builtin_algebra('S3')
        t = builtin_group_table('S3')
        k = closure(h, span_with_unit(h, elements_of_order(t, 3)[0]))

        q = quotient_by_subalgebra(h, k)
        self.assertEqual(q.quotient.dim, 2)
        self.assertTrue(alg.is_commutative(q.quotient))
        self.assertEqual(morphism_check(q.projection, h, q.quotient).target, q.quotient)

    def test_quotient_by_a_non_normal_subalgebra(self) -> None:
        h = builtin_algebra('S3')
        t = builtin_group_table('S3')
        k = closure(h, span_with_unit(h, elements_of_order(t, 2)[0]))
        self.assertRaises(NotNormalError, lambda: quotient_by_subalgebra(h, k))

    def test_augmentation_ideal(self) -> None:
        h = builtin_algebra('Q8')
        i = augmentation_ideal(h)
        self.assertEqual(i.dim, 7)
        self.assertEqual(quotient_by_ideal(h, i).quotient.dim, 1)

    def test_not_an_ideal(self) -> None:
        h = builtin_algebra('S3')
        v = linalg.span(h.field, h.dim, [alg.basis(h, 1)])
        self.assertNotEqual(hopf_ideal_violations(h, v), [])
        with self.assertRaises(HopfIdealError) as cm:
            quotient_by_ideal(h, v)
        self.assertNotEqual(cm.exception.conditions, [])


class TestMorphism(unittest.TestCase):
    """TestMorphism is a class for unit tests about the certification of Hopf algebra maps.
    """
    def test_identity(self) -> None:
        h = builtin_algebra('KP8')
        f = linalg.identity_matrix(h.field, h.dim)
        self.assertEqual(morphism_check(f, h, h).matrix, f)

    def test_antipode_is_not_multiplicative(self) -> None:
        h = builtin_algebra('S3')
        with self.assertRaises(MorphismError) as cm:
            morphism_check(h.antipode, h, h)
        self.assertEqual(cm.exception.condition, 'multiplicative')

    def test_shape(self) -> None:
        h = builtin_algebra('S3')
        c2 = builtin_algebra('C2')
        self.assertRaises(ShapeError, lambda: morphism_check(h.antipode, h, c2))

import unittest
from fractions import Fraction

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.analyzer.context import HopfContext
from hopf_kernels.corpus.builtins import builtin_algebra
from hopf_kernels.corpus.groups import builtin_group_table, group_algebra
from hopf_kernels.exactmath.field import field_make
from hopf_kernels.hopf.subalgebras import closure
from hopf_kernels.rep.center import center, trace_functionals
from hopf_kernels.rep.characters import char_product, char_star, combination, decompose, induced_trivial_character, irr_characters, make_character, regular_character
from hopf_kernels.rep.eigen import exact_eigenspaces
from hopf_kernels.rep.idempotents import central_primitive_idempotents, certify_idempotents
from hopf_kernels.rep.modules import check_representation, regular_representation, rep_from_block, representation_character, tensor_representation, trivial_representation
from hopf_kernels.rep.phi import phi_inverse, phi_map
from hopf_kernels.types import *


class TestEigen(unittest.TestCase):
    """TestEigen is a class for unit tests about exact eigenvalues.
    """
    def test_rational(self) -> None:
        q = field_make(1)
        a = linalg.matrix_make(q, [[q.zero(), q.one()], [q.one(), q.zero()]])

        result = exact_eigenspaces(a, denominator_bound=16)
        self.assertEqual(sorted(value.rational_value() for value, _ in result), [-1, 1])
        self.assertEqual([space.dim for _, space in result], [1, 1])

    def test_gaussian(self) -> None:
        k = field_make(4)
        i = k.zeta_power(1)
        a = linalg.matrix_make(k, [[k.zero(), -k.one()], [k.one(), k.zero()]])

        result = exact_eigenspaces(a, denominator_bound=16)
        self.assertEqual(set(value for value, _ in result), {i, -i})
        for value, space in result:
            x = space.vectors()[0]
            self.assertEqual(linalg.mat_vec(a, x), linalg.vec_scale(value, x))

    def test_field_too_small(self) -> None:
        q = field_make(1)
        a = linalg.matrix_make(q, [[q.zero(), -q.one()], [q.one(), q.zero()]])
        self.assertRaises(FieldTooSmallError, lambda: exact_eigenspaces(a, denominator_bound=16))


class TestIrreducibleCharacters(unittest.TestCase):
    """TestIrreducibleCharacters is a class for unit tests about the blocks and the irreducible characters.
    """
    def test_degrees(self) -> None:
        expected = {
            'C2': [1, 1],
            'C4': [1, 1, 1, 1],
            'S3': [1, 1, 2],
            'Fun-S3': [1, 1, 1, 1, 1, 1],
            'Q8': [1, 1, 1, 1, 2],
            'A4': [1, 1, 1, 3],
            'KP8': [1, 1, 1, 1, 2],
            'Fun-KP8': [1, 1, 1, 1, 2],
        }
        for name, degrees in expected.items():
            with self.subTest(name=name):
                irr = irr_characters(builtin_algebra(name))
                self.assertEqual([block.degree for block in irr.blocks], degrees)

    def test_cyclic_group_of_order_two(self) -> None:
        h = builtin_algebra('C2')
        irr = irr_characters(h)
        one = h.field.one()
        self.assertEqual([chi.values for chi in irr.characters], [(one, one), (one, -one)])

    def test_trivial_first(self) -> None:
        h = builtin_algebra('KP8')
        irr = irr_characters(h)
        self.assertEqual(irr.characters[0].values, h.counit)

    def test_idempotents(self) -> None:
        h = builtin_algebra('Q8')
        idempotents = central_primitive_idempotents(h)
        self.assertEqual(len(idempotents), 5)
        certify_idempotents(h, idempotents)
        self.assertEqual(linalg.vec_sum(h.field, h.dim, idempotents), h.unit)
        z = center(h)
        for xi in idempotents:
            self.assertTrue(linalg.contains_vector(z, xi))

    def test_characters_span_the_trace_functionals(self) -> None:
        h = builtin_algebra('S3')
        irr = irr_characters(h)
        self.assertEqual(linalg.span(h.field, h.dim, [chi.values for chi in irr.characters]), trace_functionals(h))
        self.assertEqual(center(h).dim, 3)

    def test_field_too_small(self) -> None:
        t = builtin_group_table('C4')
        h = group_algebra(t, cyclotomic_order=1)
        self.assertRaises(FieldTooSmallError, lambda: irr_characters(h))


class TestCharacterRing(unittest.TestCase):
    """TestCharacterRing is a class for unit tests about products, sums and decompositions of characters.
    """
    def test_regular_character(self) -> None:
        h = builtin_algebra('S3')
        irr = irr_characters(h)
        chi = regular_character(h, irr)
        self.assertEqual(chi.values[0], h.field.rational(6))
        self.assertTrue(all(not x for x in chi.values[1:]))
        self.assertEqual(decompose(chi, irr), [1, 1, 2])

    def test_product_of_the_standard_character(self) -> None:
        h = builtin_algebra('S3')
        irr = irr_characters(h)
        chi = irr.characters[2]
        self.assertEqual(decompose(char_product(chi, chi), irr), [1, 1, 1])
        self.assertEqual(char_star(chi), chi)

    def test_star_on_kac_paljutkin(self) -> None:
        h = builtin_algebra('KP8')
        irr = irr_characters(h)
        stars = [char_star(chi) for chi in irr.characters]
        self.assertEqual(sorted(decompose(chi, irr).index(1) for chi in stars), [0, 1, 2, 3, 4])

    def test_combination(self) -> None:
        h = builtin_algebra('C2')
        irr = irr_characters(h)
        chi = combination(irr, [2, 1])
        self.assertEqual(chi.degree, h.field.rational(3))
        self.assertEqual(decompose(chi, irr), [2, 1])
        self.assertRaises(DecompositionError, lambda: combination(irr, [1]))
        self.assertRaises(DecompositionError, lambda: combination(irr, [1, -1]))

    def test_decompose_failure(self) -> None:
        h = builtin_algebra('C2')
        irr = irr_characters(h)
        half = h.field.rational(Fraction(1, 2))
        self.assertRaises(DecompositionError, lambda: decompose(make_character(h, [half, half]), irr))

    def test_induced_trivial_character(self) -> None:
        h = builtin_algebra('S3')
        irr = irr_characters(h)
        t = builtin_group_table('S3')
        a = next(a for a in range(1, 6) if t.table[a][a] != 0)
        k = closure(h, linalg.span(h.field, h.dim, [h.unit, alg.basis(h, a)]))
        self.assertEqual(decompose(induced_trivial_character(h, k), irr), [1, 1, 0])


class TestRepresentations(unittest.TestCase):
    """TestRepresentations is a class for unit tests about modules given by matrices.
    """
    def test_regular_representation(self) -> None:
        h = builtin_algebra('KP8')
        r = regular_representation(h)
        self.assertTrue(check_representation(r))
        self.assertEqual(representation_character(r), regular_character(h).values)

    def test_block_representation(self) -> None:
        h = builtin_algebra('S3')
        irr = irr_characters(h)
        r = rep_from_block(h, irr, 2)
        self.assertEqual(r.module_dim, 4)
        self.assertTrue(check_representation(r))
        self.assertEqual(representation_character(r), linalg.vec_scale(2, irr.characters[2].values))

    def test_tensor_representation(self) -> None:
        h = builtin_algebra('KP8')
        irr = irr_characters(h)
        r = rep_from_block(h, irr, 4)
        s = trivial_representation(h)
        chi = irr.characters[4]
        self.assertEqual(representation_character(tensor_representation(r, s)), linalg.vec_scale(2, chi.values))
        self.assertEqual(representation_character(tensor_representation(r, r)), linalg.vec_scale(4, char_product(chi, chi).values))


class TestPhi(unittest.TestCase):
    """TestPhi is a class for unit tests about the linear isomorphism from the dual to the algebra given by the integral.
    """
    def test_cyclic_group_of_order_two(self) -> None:
        h = builtin_algebra('C2')
        ctx = HopfContext(algebra=h)
        half = h.field.rational(Fraction(1, 2))
        zero = h.field.zero()
        self.assertEqual(phi_map(h, ctx.integral, alg.basis(h, 0)), (half, zero))
        self.assertEqual(phi_map(h, ctx.integral, alg.basis(h, 1)), (zero, half))
        self.assertEqual(phi_map(h, ctx.integral, h.counit), ctx.integral)

    def test_inverse(self) -> None:
        h = builtin_algebra('KP8')
        ctx = HopfContext(algebra=h)
        for i in range(h.dim):
            x = alg.basis(h, i)
            self.assertEqual(phi_map(h, ctx.integral, phi_inverse(h, ctx.integral, x, matrix=ctx.phi_matrix), matrix=ctx.phi_matrix), x)

    def test_idempotent_identities(self) -> None:
        for name in ('S3', 'Fun-S3', 'KP8'):
            with self.subTest(name=name):
                ctx = HopfContext(algebra=builtin_algebra(name))
                h = ctx.algebra
                n = h.field.rational(h.dim)
                for block in ctx.coirr.blocks:
                    d = block.character.values
                    expected = linalg.vec_scale(block.character.degree / n, alg.antipode(h, d))
                    self.assertEqual(phi_map(h, ctx.integral, block.idempotent, matrix=ctx.phi_matrix), expected)
                for block in ctx.irr.blocks:
                    expected = linalg.vec_scale(block.degree, block.character.values)
                    self.assertEqual(phi_inverse(h, ctx.integral, block.idempotent, matrix=ctx.phi_matrix), expected)

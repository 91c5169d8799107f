import unittest

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.analyzer.context import HopfContext
from hopf_kernels.analyzer.kernels import annihilator, hopf_ideal_of_module, hopf_kernel, kernel_reports, kernel_subalgebra, ker_set, simple_subcoalgebra, sm_space, tensor_annihilator
from hopf_kernels.corpus.builtins import GROUP_ORDERS, builtin_algebra, builtin_names
from hopf_kernels.corpus.groups import builtin_group_table
from hopf_kernels.hopf.axioms import morphism_check
from hopf_kernels.hopf.quotient import augmentation_ideal, quotient_by_ideal
from hopf_kernels.rep.modules import rep_from_block, tensor_representation
from hopf_kernels.types import *


def group_elements_span(h: HopfAlgebraData, elements: Iterable[int]) -> Subspace:
    return linalg.span(h.field, h.dim, [alg.basis(h, g) for g in elements])


def is_normal_subgroup(t: GroupTable, k: Set[int]) -> bool:
    if 0 not in k:
        return False
    if any(t.table[a][b] not in k for a in k for b in k):
        return False
    return all(t.table[t.table[g][a]][t.inverse[g]] in k for g in range(t.order) for a in k)


def conjugacy_classes(t: GroupTable) -> List[FrozenSet[int]]:
    classes = {frozenset(t.table[t.table[g][a]][t.inverse[g]] for g in range(t.order)) for a in range(t.order)}
    return sorted(classes, key=min)


def normal_subgroups(t: GroupTable) -> List[FrozenSet[int]]:
    """normal_subgroups lists the unions of conjugacy classes which are closed under the multiplication."""

    classes = [c for c in conjugacy_classes(t) if 0 not in c]
    result = []
    for mask in range(2**len(classes)):
        k = {0}.union(*[c for i, c in enumerate(classes) if mask & (1 << i)])
        if all(t.table[a][b] in k for a in k for b in k):
            result.append(frozenset(k))
    return result


def quotient_class_number(t: GroupTable, n: FrozenSet[int]) -> int:
    """quotient_class_number counts the conjugacy classes of :math:`G/N` by the orbits of conjugation on the cosets."""

    cosets = {frozenset(t.table[a][x] for x in n) for a in range(t.order)}
    orbits = set()
    for coset in cosets:
        a = min(coset)
        orbit = frozenset(frozenset(t.table[t.table[t.table[g][a]][t.inverse[g]]][x] for x in n) for g in range(t.order))
        orbits.add(orbit)
    return len(orbits)


class TestKernelOfCharacter(unittest.TestCase):
    """TestKernelOfCharacter is a class for unit tests about the kernels of the irreducible characters.
    """
    def test_symmetric_group(self) -> None:
        h = builtin_algebra('S3')
        t = builtin_group_table('S3')
        ctx = HopfContext(algebra=h)
        even = [a for a in range(6) if a == 0 or t.table[a][a] != 0]

        trivial, sign, standard = [kernel_subalgebra(ctx, chi) for chi in ctx.irr.characters]
        self.assertEqual(trivial.dim, 6)
        self.assertEqual(sign.space, group_elements_span(h, even))
        self.assertTrue(sign.flags.is_normal)
        self.assertEqual(standard.space, group_elements_span(h, [0]))

    def test_simple_subcoalgebras(self) -> None:
        ctx = HopfContext(algebra=builtin_algebra('KP8'))
        dims = [simple_subcoalgebra(ctx, d).dim for d in range(len(ctx.coirr.blocks))]
        self.assertEqual(dims, [1, 1, 1, 1, 4])
        total = linalg.zero_subspace(ctx.algebra.field, 8)
        for d in range(len(ctx.coirr.blocks)):
            total = linalg.subspace_sum(total, simple_subcoalgebra(ctx, d))
        self.assertEqual(total.dim, 8)

    def test_ker_set_of_the_trivial_character(self) -> None:
        ctx = HopfContext(algebra=builtin_algebra('Q8'))
        self.assertEqual(ker_set(ctx, ctx.irr.characters[0]), tuple(range(len(ctx.coirr.blocks))))

    def test_sm_space(self) -> None:
        h = builtin_algebra('S3')
        ctx = HopfContext(algebra=h)
        r = rep_from_block(h, ctx.irr, 1)
        # S_M of the sign module is spanned by the even permutations and the differences of the odd ones
        self.assertEqual(sm_space(r).dim, 5)


class TestGroupOracle(unittest.TestCase):
    """TestGroupOracle is a class for unit tests which compare the kernels of group algebras with the classical kernels of group characters.

    The classical kernel :math:`\\{g \\mid \\chi(g) = \\chi(1)\\}` is read from the character values and checked to be a normal subgroup with the multiplication table only.
    The kernels are also counted against the normal subgroups and the class numbers of the quotients, both of which come from the multiplication table alone.
    """

    expected_sizes = {
        'C2': [2, 1],
        'C4': [4, 2, 1, 1],
        'C2xC2': [4, 2, 2, 2],
        'S3': [6, 3, 1],
        'D4': [8, 4, 4, 4, 1],
        'Q8': [8, 4, 4, 4, 1],
        'A4': [12, 4, 4, 1],
    }

    def test_group_algebras(self) -> None:
        for name in GROUP_ORDERS:
            with self.subTest(name=name):
                h = builtin_algebra(name)
                t = builtin_group_table(name)
                ctx = HopfContext(algebra=h)
                sizes = []
                for chi in ctx.irr.characters:
                    classical = {g for g in range(t.order) if chi.values[g] == chi.values[0]}
                    self.assertTrue(is_normal_subgroup(t, classical))
                    self.assertEqual(kernel_subalgebra(ctx, chi).space, group_elements_span(h, classical))
                    grouplikes = {ctx.coirr.blocks[d].character.values.index(h.field.one()) for d in ker_set(ctx, chi)}
                    self.assertEqual(grouplikes, classical)
                    sizes.append(len(classical))
                self.assertEqual(sorted(sizes, reverse=True), self.expected_sizes[name])

    def test_kernels_against_normal_subgroups(self) -> None:
        # an irreducible character contains N in its kernel iff it comes from G/N, and there are as many of them as classes of G/N
        for name in GROUP_ORDERS:
            with self.subTest(name=name):
                t = builtin_group_table(name)
                ctx = HopfContext(algebra=builtin_algebra(name))
                kernels = []
                for chi in ctx.irr.characters:
                    space = kernel_subalgebra(ctx, chi).space
                    k = frozenset(g for g in range(t.order) if linalg.contains_vector(space, alg.basis(ctx.algebra, g)))
                    self.assertEqual(space, group_elements_span(ctx.algebra, k))
                    kernels.append(k)
                self.assertEqual(len(kernels), len(conjugacy_classes(t)))
                normals = normal_subgroups(t)
                for k in kernels:
                    self.assertIn(k, normals)
                for n in normals:
                    self.assertEqual(sum(1 for k in kernels if n <= k), quotient_class_number(t, n), sorted(n))


class TestKernelCoincidence(unittest.TestCase):
    """TestKernelCoincidence is a class for unit tests about the agreement of the three constructions of the kernel.
    """
    def test_builtins(self) -> None:
        for name in builtin_names():
            with self.subTest(name=name):
                ctx = HopfContext(algebra=builtin_algebra(name))
                for report in kernel_reports(ctx):
                    self.assertTrue(report.matches_hopf_kernel, report.character_index)
                    self.assertTrue(report.matches_sm_oracle, report.character_index)
                    self.assertTrue(report.matches_quotient_kernel, report.character_index)

    def test_hopf_ideal_of_the_sign_module(self) -> None:
        h = builtin_algebra('S3')
        ctx = HopfContext(algebra=h)
        ideal, powers = hopf_ideal_of_module(rep_from_block(h, ctx.irr, 1))
        self.assertEqual(ideal.dim, 4)
        self.assertGreaterEqual(powers, 1)

    def test_tensor_annihilator(self) -> None:
        h = builtin_algebra('S3')
        ctx = HopfContext(algebra=h)
        for a in range(3):
            for b in range(3):
                r = rep_from_block(h, ctx.irr, a)
                s = rep_from_block(h, ctx.irr, b)
                with self.subTest(a=a, b=b):
                    self.assertEqual(annihilator(tensor_representation(r, s)), tensor_annihilator(h, annihilator(r), annihilator(s)))


class TestHopfKernel(unittest.TestCase):
    """TestHopfKernel is a class for unit tests about the Hopf kernels of Hopf algebra maps.
    """
    def test_counit_map(self) -> None:
        h = builtin_algebra('C2')
        q = quotient_by_ideal(h, augmentation_ideal(h))
        f = morphism_check(q.projection, h, q.quotient)
        self.assertEqual(q.projection.entries, ((h.field.one(), ), (h.field.one(), )))
        self.assertEqual(hopf_kernel(f).dim, 2)

    def test_identity(self) -> None:
        h = builtin_algebra('KP8')
        f = morphism_check(linalg.identity_matrix(h.field, h.dim), h, h)
        self.assertEqual(hopf_kernel(f).space, linalg.span(h.field, h.dim, [h.unit]))

    def test_projection_of_the_symmetric_group(self) -> None:
        h = builtin_algebra('S3')
        t = builtin_group_table('S3')
        even = [a for a in range(6) if a == 0 or t.table[a][a] != 0]
        odd = [a for a in range(6) if a not in even]
        # the ideal spanned by g - 1 for even g and g - g' for odd g, g'
        ideal = linalg.span(h.field, h.dim, [linalg.vec_sub(alg.basis(h, g), h.unit) for g in even[1:]] + [linalg.vec_sub(alg.basis(h, g), alg.basis(h, odd[0])) for g in odd[1:]])
        q = quotient_by_ideal(h, ideal)
        self.assertEqual(q.quotient.dim, 2)
        f = morphism_check(q.projection, h, q.quotient)
        self.assertEqual(hopf_kernel(f).space, group_elements_span(h, even))

import unittest

from hopf_kernels.analyzer.context import HopfContext
from hopf_kernels.analyzer.lattice import normal_quotients
from hopf_kernels.analyzer.theorems import check_dual_kernel_is_quotient_dual, check_kernel_of_sum, findings_passed, quotient_context, theorem_harness
from hopf_kernels.corpus.builtins import builtin_algebra, builtin_names
from hopf_kernels.types import *

GATING_FINDINGS = [
    'regular_character_of_dual',
    'kernel_conditions_agree',
    'kernel_power_laws',
    'conjugation_law',
    'kernel_of_sum',
    'kernel_coincidence',
    'kernel_duality',
    'augmentation_criterion',
    'quotient_irreducibles',
    'hopf_kernel_of_projection',
    'phi_identities',
    'central_partitions',
    'classes_share_normal_closure',
    'normal_subalgebras_are_central_kernels',
    'induced_character_constructions_agree',
    'central_character_kernels_normal',
    'dual_property_n_iff_kernels_constant_on_classes',
    'property_n_is_self_dual',
    'dual_kernel_is_quotient_dual',
    'normal_correspondence_round_trip',
]


class TestTheoremHarness(unittest.TestCase):
    """TestTheoremHarness is a class for unit tests about the checks on the built-in algebras.
    """
    def check_all_pass(self, name: str) -> List[Finding]:
        findings = theorem_harness(HopfContext(algebra=builtin_algebra(name)))
        failed = [finding for finding in findings if finding.gating and not finding.passed]
        self.assertEqual(failed, [])
        self.assertTrue(findings_passed(findings))
        self.assertEqual([finding.name for finding in findings if finding.gating], GATING_FINDINGS)
        return findings

    def test_symmetric_group(self) -> None:
        findings = self.check_all_pass('S3')
        by_name = {finding.name: finding for finding in findings}
        self.assertTrue(by_name['character_bound'].passed)
        self.assertEqual(by_name['property_n_is_self_dual'].witness['property_n'], True)
        # the plain Hopf closures of two transpositions differ
        self.assertFalse(by_name['classes_share_hopf_closure'].passed)

    def test_kac_paljutkin(self) -> None:
        findings = self.check_all_pass('KP8')
        by_name = {finding.name: finding for finding in findings}
        self.assertIn('property_n', by_name['property_n_is_self_dual'].witness)

    def test_every_builtin(self) -> None:
        for name in builtin_names():
            with self.subTest(name=name):
                self.check_all_pass(name)

    def test_findings_passed(self) -> None:
        ok = Finding(name='a', passed=True, witness={})
        recorded = Finding(name='b', passed=False, witness={}, gating=False)
        failed = Finding(name='c', passed=False, witness={})
        self.assertTrue(findings_passed([ok, recorded]))
        self.assertFalse(findings_passed([ok, failed]))


class TestChecks(unittest.TestCase):
    """TestChecks is a class for unit tests about single checks.
    """
    def test_kernel_of_sum(self) -> None:
        finding = check_kernel_of_sum(HopfContext(algebra=builtin_algebra('Q8')))
        self.assertTrue(finding.passed)
        self.assertEqual(finding.witness['failures'], [])

    def test_dual_kernel_is_quotient_dual(self) -> None:
        finding = check_dual_kernel_is_quotient_dual(HopfContext(algebra=builtin_algebra('S3')))
        self.assertTrue(finding.passed)
        self.assertNotIn('skipped', finding.witness)

    def test_quotient_context(self) -> None:
        ctx = HopfContext(algebra=builtin_algebra('S3'))
        dims = sorted(quotient_context(ctx, index).dim for index in normal_quotients(ctx))
        self.assertEqual(dims, [1, 2, 6])

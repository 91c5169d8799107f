"""
the module to check the statements about kernels and central characters on a concrete Hopf algebra

Each check returns a :class:`Finding`.
A failed finding on a valid input means a bug in this package, so the checks never raise on failure; they are logged at ERROR and reported.
"""

import itertools
from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
from hopf_kernels.analyzer.central import central_data, char_subalgebra, n_of_d
from hopf_kernels.analyzer.context import HopfContext
from hopf_kernels.analyzer.kernels import annihilator, hopf_kernel, kernel_reports, kernel_subalgebra, ker_set
from hopf_kernels.analyzer.lattice import enumerate_lattice, lattice_members, normal_quotients, property_n, quotient_dual_space
from hopf_kernels.exactmath.field import Rational
from hopf_kernels.hopf.axioms import morphism_check
from hopf_kernels.hopf.dual import subalgebra_integral
from hopf_kernels.hopf.quotient import positive_part
from hopf_kernels.hopf.subalgebras import HOPF, largest_subcoalgebra_in
from hopf_kernels.rep.center import center
from hopf_kernels.rep.characters import char_eval, char_power, char_star, combination, induced_trivial_character, make_character, pullback
from hopf_kernels.rep.eigen import SEPARATION_EXPONENT, make_context
from hopf_kernels.rep.modules import action, rep_from_block
from hopf_kernels.rep.phi import phi_inverse, phi_map
from hopf_kernels.types import *

logger = getLogger(__name__)


def _finding(name: str, passed: bool, *, gating: bool = True, **witness: Any) -> Finding:
    if not passed and gating:
        logger.error('finding %s failed: %s', name, witness)
    return Finding(name=name, passed=passed, witness=witness, gating=gating)


def quotient_context(ctx: HopfContext, index: int) -> HopfContext:
    """quotient_context returns the context of :math:`H /\\!/ K` for the ``index``-th member of the lattice, which must be normal."""

    def build() -> HopfContext:
        q = normal_quotients(ctx)[index]
        return HopfContext(algebra=q.quotient, precision=ctx.precision, verified=True)

    return ctx.memoize(('quotient_context', index), build)


def _lattice_index(ctx: HopfContext, space: Subspace) -> int:
    for index, k in enumerate(lattice_members(ctx)):
        if k.space == space:
            return index
    raise CertificationError(f"""{ctx.name}: a Hopf subalgebra of dimension {space.dim} is missing from the lattice""")


def _pulled_back_irr(ctx: HopfContext, index: int) -> Set[int]:
    """_pulled_back_irr returns the indices in Irr(H) of the irreducible characters of the quotient by the ``index``-th member."""

    q = normal_quotients(ctx)[index]
    positions = {chi.values: c for c, chi in enumerate(ctx.irr.characters)}
    result = set()
    for chi in quotient_context(ctx, index).irr.characters:
        values = pullback(chi, q).values
        if values not in positions:
            raise CertificationError(f"""{ctx.name}: an irreducible character of {q.quotient.name} does not pull back to an irreducible character""")
        result.add(positions[values])
    return result


def check_regular_character_of_dual(ctx: HopfContext) -> Finding:
    h = ctx.algebra
    lhs = linalg.vec_scale(h.dim, ctx.integral)
    rhs = linalg.vec_sum(h.field, h.dim, [linalg.vec_scale(block.degree, block.character.values) for block in ctx.coirr.blocks])
    return _finding('regular_character_of_dual', lhs == rhs)


def check_kernel_conditions(ctx: HopfContext) -> Finding:
    """check_kernel_conditions compares :math:`\\chi(d) = \\varepsilon(d) \\chi(1)` with :math:`d` acting as the scalar :math:`\\varepsilon(d)`."""

    h = ctx.algebra
    mismatches = []
    for c, chi in enumerate(ctx.irr.characters):
        r = rep_from_block(h, ctx.irr, c)
        identity = linalg.identity_matrix(h.field, r.module_dim)
        for d, block in enumerate(ctx.coirr.blocks):
            by_value = char_eval(chi, block.character.values) == block.degree * chi.degree
            by_action = action(r, block.character.values) == linalg.mat_scale(block.degree, identity)
            if by_value != by_action:
                mismatches.append([c, d])
    return _finding('kernel_conditions_agree', not mismatches, mismatches=mismatches)


def check_kernel_power_laws(ctx: HopfContext) -> Finding:
    failures = []
    for c, chi in enumerate(ctx.irr.characters):
        kernel = set(ker_set(ctx, chi))
        if not kernel <= set(ker_set(ctx, char_power(chi, 2))):
            failures.append({'character': c, 'law': 'square'})
        common = set(range(len(ctx.coirr.blocks)))
        for n in range(1, ctx.dim + 1):
            common &= set(ker_set(ctx, char_power(chi, n)))
        if common != kernel:
            failures.append({'character': c, 'law': 'powers'})
    return _finding('kernel_power_laws', not failures, failures=failures)


def check_conjugation_law(ctx: HopfContext) -> Finding:
    mismatches = []
    for c, chi in enumerate(ctx.irr.characters):
        for d, block in enumerate(ctx.coirr.blocks):
            if char_eval(chi, char_star(block.character).values) != char_eval(chi, block.character.values).conj():
                mismatches.append([c, d])
    return _finding('conjugation_law', not mismatches, mismatches=mismatches)


def check_kernel_of_sum(ctx: HopfContext) -> Finding:
    size = len(ctx.irr.blocks)
    vectors = []
    for i, j in itertools.combinations(range(size), 2):
        m = [0] * size
        m[i] = 1
        m[j] = 2
        vectors.append(m)
    vectors.append([1] * size)
    failures = []
    for m in vectors:
        expected = set(range(len(ctx.coirr.blocks)))
        for c, multiplicity in enumerate(m):
            if multiplicity:
                expected &= set(ker_set(ctx, ctx.irr.blocks[c].character))
        if set(ker_set(ctx, combination(ctx.irr, m))) != expected:
            failures.append(m)
    return _finding('kernel_of_sum', not failures, failures=failures)


def check_kernel_coincidence(ctx: HopfContext) -> Finding:
    reports = kernel_reports(ctx)
    failures = [report.character_index for report in reports if not report.passed]
    return _finding('kernel_coincidence', not failures, failures=failures, kernel_dims=[report.kernel_space.dim for report in reports])


def check_kernel_duality(ctx: HopfContext) -> Finding:
    """check_kernel_duality compares :math:`d \\in \\ker \\chi` with :math:`\\chi \\in \\ker d` computed on the dual."""

    mismatches = []
    for c, chi in enumerate(ctx.irr.characters):
        kernel = ker_set(ctx, chi)
        for d, block in enumerate(ctx.coirr.blocks):
            if (d in kernel) != (c in ker_set(ctx.dual, block.character)):
                mismatches.append([c, d])
    return _finding('kernel_duality', not mismatches, mismatches=mismatches)


def check_augmentation_criterion(ctx: HopfContext) -> Finding:
    h = ctx.algebra
    mismatches = []
    annihilators = [annihilator(rep_from_block(h, ctx.irr, c)) for c in range(len(ctx.irr.blocks))]
    for index, k in enumerate(lattice_members(ctx)):
        plus = positive_part(h, k)
        for c, chi in enumerate(ctx.irr.characters):
            by_ideal = linalg.subspace_contains(annihilators[c], plus)
            by_kernel = linalg.subspace_contains(kernel_subalgebra(ctx, chi).space, k.space)
            if by_ideal != by_kernel:
                mismatches.append([index, c])
    return _finding('augmentation_criterion', not mismatches, mismatches=mismatches)


def check_quotient_irreducibles(ctx: HopfContext) -> Finding:
    failures = []
    for index, k in enumerate(lattice_members(ctx)):
        if not k.flags.is_normal:
            continue
        expected = {c for c, chi in enumerate(ctx.irr.characters) if linalg.subspace_contains(kernel_subalgebra(ctx, chi).space, k.space)}
        if _pulled_back_irr(ctx, index) != expected:
            failures.append(index)
    return _finding('quotient_irreducibles', not failures, failures=failures)


def check_hopf_kernel_of_projection(ctx: HopfContext) -> Finding:
    """check_hopf_kernel_of_projection compares the Hopf kernel of :math:`H \\to H /\\!/ K` with the largest subcoalgebra of :math:`\\{x \\mid \\pi(x) = \\varepsilon(x) 1\\}` and with :math:`K`."""

    h = ctx.algebra
    members = lattice_members(ctx)
    failures = []
    for index, q in normal_quotients(ctx).items():
        b = q.quotient
        p = q.projection
        rows = ([p.entries[i][a] - h.counit[i] * b.unit[a] for i in range(h.dim)] for a in range(b.dim))
        fixed = linalg.kernel_of_rows(h.field, h.dim, rows)
        largest = largest_subcoalgebra_in(h, fixed)
        hker = hopf_kernel(morphism_check(p, h, b))
        if not (hker.space == largest == members[index].space):
            failures.append(index)
    return _finding('hopf_kernel_of_projection', not failures, failures=failures)


def check_phi_identities(ctx: HopfContext) -> Finding:
    h = ctx.algebra
    failures = []
    for d, block in enumerate(ctx.coirr.blocks):
        scale = h.field.rational(Rational(block.degree, h.dim))
        if phi_map(h, ctx.integral, block.idempotent, matrix=ctx.phi_matrix) != linalg.vec_scale(scale, char_star(block.character).values):
            failures.append(f"""phi(xi_d) for d = {d}""")
    for c, block in enumerate(ctx.irr.blocks):
        if phi_inverse(h, ctx.integral, block.idempotent, matrix=ctx.phi_matrix) != linalg.vec_scale(block.degree, block.character.values):
            failures.append(f"""phi^-1(xi_chi) for chi = {c}""")
    characters = linalg.span(h.field, h.dim, [phi_map(h, ctx.integral, x, matrix=ctx.phi_matrix) for x in char_subalgebra(ctx).vectors()])
    if characters != center(h):
        failures.append('phi(C(H)) = Z(H)')
    centrals = linalg.span(h.field, h.dim, [phi_map(h, ctx.integral, x, matrix=ctx.phi_matrix) for x in center(ctx.dual.algebra).vectors()])
    if centrals != char_subalgebra(ctx.dual):
        failures.append('phi(Z(H^*)) = C(H^*)')
    return _finding('phi_identities', not failures, failures=failures)


def check_central_partitions(ctx: HopfContext) -> Finding:
    h = ctx.algebra
    data = central_data(ctx)
    total = linalg.vec_sum(h.field, h.dim, data.e_hats)
    passed = len(data.partition_x) == len(data.partition_y) and total == linalg.vec_scale(h.dim, ctx.integral)
    return _finding('central_partitions', passed, partition_y=[list(cls) for cls in data.partition_y], partition_x=[list(cls) for cls in data.partition_x])


def check_classes_share_normal_closure(ctx: HopfContext) -> List[Finding]:
    """check_classes_share_normal_closure checks :math:`N(d) = N(d')` for equivalent :math:`d, d'`.

    The same comparison for the plain Hopf closure, and whether the integral of :math:`N(d)` is central in :math:`H`, are recorded as non-gating findings.
    """

    h = ctx.algebra
    data = central_data(ctx)
    normal_failures = []
    plain_failures = []
    for cls in data.partition_y:
        if len({n_of_d(ctx, d).space for d in cls}) != 1:
            normal_failures.append(list(cls))
        if len({n_of_d(ctx, d, HOPF).space for d in cls}) != 1:
            plain_failures.append(list(cls))
    z = center(h)
    non_central = [d for d in range(len(ctx.coirr.blocks)) if not linalg.contains_vector(z, subalgebra_integral(h, n_of_d(ctx, d)))]
    return [
        _finding('classes_share_normal_closure', not normal_failures, failures=normal_failures, dims=[n_of_d(ctx, d).dim for d in range(len(ctx.coirr.blocks))]),
        _finding('classes_share_hopf_closure', not plain_failures, gating=False, failures=plain_failures, dims=[n_of_d(ctx, d, HOPF).dim for d in range(len(ctx.coirr.blocks))]),
        _finding('normal_closure_integrals_central', not non_central, gating=False, non_central=non_central),
    ]


def check_normal_subalgebras_are_central_kernels(ctx: HopfContext) -> Finding:
    h = ctx.algebra
    data = central_data(ctx)
    failures = []
    for index, k in enumerate(lattice_members(ctx)):
        if not k.flags.is_normal:
            continue
        chi = induced_trivial_character(h, k)
        if kernel_subalgebra(ctx, chi).space != k.space or not linalg.contains_vector(data.z_hat_dual, chi.values):
            failures.append(index)
    return _finding('normal_subalgebras_are_central_kernels', not failures, failures=failures)


def check_induced_character_constructions(ctx: HopfContext) -> Finding:
    """check_induced_character_constructions compares :math:`H / H K^+` as a module with :math:`\\dim(L) t_L` pulled back from :math:`L = H /\\!/ K`."""

    h = ctx.algebra
    members = lattice_members(ctx)
    failures = []
    for index, q in normal_quotients(ctx).items():
        quotient = quotient_context(ctx, index)
        t = quotient.dual.integral
        pulled = pullback(make_character(q.quotient, linalg.vec_scale(q.quotient.dim, t)), q)
        if pulled.values != induced_trivial_character(h, members[index]).values:
            failures.append(index)
    return _finding('induced_character_constructions_agree', not failures, failures=failures)


def check_central_character_kernels_normal(ctx: HopfContext) -> Finding:
    data = central_data(ctx)
    hd = ctx.dual.algebra
    non_normal = [j for j, e_hat in enumerate(data.e_hats) if not kernel_subalgebra(ctx.dual, make_character(hd, e_hat)).flags.is_normal]
    return _finding('central_character_kernels_normal', not non_normal, non_normal=non_normal)


def check_dual_property_n(ctx: HopfContext) -> Finding:
    data = central_data(ctx)
    constant = all(len({ker_set(ctx.dual, ctx.coirr.blocks[d].character) for d in cls}) == 1 for cls in data.partition_y)
    holds = property_n(ctx.dual).holds
    return _finding('dual_property_n_iff_kernels_constant_on_classes', holds == constant, dual_property_n=holds, kernels_constant_on_classes=constant)


def check_property_n_self_dual(ctx: HopfContext) -> Finding:
    holds = property_n(ctx).holds
    dual_holds = property_n(ctx.dual).holds
    return _finding('property_n_is_self_dual', holds == dual_holds, property_n=holds, dual_property_n=dual_holds, non_normal=list(property_n(ctx).non_normal))


def check_dual_kernel_is_quotient_dual(ctx: HopfContext) -> Finding:
    if not property_n(ctx).holds:
        return _finding('dual_kernel_is_quotient_dual', True, skipped=True)
    failures = []
    for d, block in enumerate(ctx.coirr.blocks):
        index = _lattice_index(ctx, n_of_d(ctx, d).space)
        q = normal_quotients(ctx)[index]
        kernel = kernel_subalgebra(ctx.dual, block.character)
        if kernel.space != quotient_dual_space(q) or set(ker_set(ctx.dual, block.character)) != _pulled_back_irr(ctx, index):
            failures.append(d)
    return _finding('dual_kernel_is_quotient_dual', not failures, failures=failures)


def check_normal_correspondence_round_trip(ctx: HopfContext) -> Finding:
    lattice = enumerate_lattice(ctx)
    dual_quotients = normal_quotients(ctx.dual)
    failures = []
    for index, partner in sorted(lattice.dual_correspondence.items()):
        if quotient_dual_space(dual_quotients[partner]) != lattice.subalgebras[index].space:
            failures.append(index)
    return _finding('normal_correspondence_round_trip', not failures, failures=failures, correspondence={str(k): v for k, v in sorted(lattice.dual_correspondence.items())})


def check_character_bound(ctx: HopfContext) -> Finding:
    """check_character_bound checks :math:`|\\chi(d)| \\le \\varepsilon(d) \\chi(1)` numerically."""

    mp = make_context(ctx.precision)
    tolerance = mp.mpf(2)**(-SEPARATION_EXPONENT)
    violations = []
    for c, chi in enumerate(ctx.irr.characters):
        for d, block in enumerate(ctx.coirr.blocks):
            value = char_eval(chi, block.character.values).embed(mp)
            if abs(value) > block.degree * ctx.irr.blocks[c].degree + tolerance:
                violations.append([c, d])
    return _finding('character_bound', not violations, gating=False, violations=violations)


def theorem_harness(ctx: HopfContext) -> List[Finding]:
    """theorem_harness runs every check on ``ctx`` and its dual.

    :raises CertificationError: if an intermediate object fails its own certification
    """

    logger.info('%s: running the checks', ctx.name)
    findings = [
        check_regular_character_of_dual(ctx),
        check_kernel_conditions(ctx),
        check_kernel_power_laws(ctx),
        check_conjugation_law(ctx),
        check_kernel_of_sum(ctx),
        check_kernel_coincidence(ctx),
        check_kernel_duality(ctx),
        check_augmentation_criterion(ctx),
        check_quotient_irreducibles(ctx),
        check_hopf_kernel_of_projection(ctx),
        check_phi_identities(ctx),
        check_central_partitions(ctx),
    ]
    findings.extend(check_classes_share_normal_closure(ctx))
    findings.extend([
        check_normal_subalgebras_are_central_kernels(ctx),
        check_induced_character_constructions(ctx),
        check_central_character_kernels_normal(ctx),
        check_dual_property_n(ctx),
        check_property_n_self_dual(ctx),
        check_dual_kernel_is_quotient_dual(ctx),
        check_normal_correspondence_round_trip(ctx),
        check_character_bound(ctx),
    ])
    return findings


def findings_passed(findings: Sequence[Finding]) -> bool:
    return all(finding.passed for finding in findings if finding.gating)

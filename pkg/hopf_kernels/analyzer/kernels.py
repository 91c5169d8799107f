"""
the module to compute the kernels of representations and the Hopf kernels of Hopf algebra maps

There are three independent ways to get the kernel :math:`H_\\chi` of a module :math:`M` affording a character :math:`\\chi`:

1. the sum of the simple subcoalgebras :math:`C_d` over the irreducible characters :math:`d` of :math:`H^*` with :math:`\\chi(d) = \\varepsilon(d) \\chi(1)`,
2. the largest subcoalgebra of :math:`S_M = \\{h \\mid h m = \\varepsilon(h) m\\}`,
3. the Hopf kernel of the projection :math:`H \\to H / I_M`, where :math:`I_M` is the largest Hopf ideal inside the annihilator of :math:`M`.

:func:`verify_kernel_coincidence` computes all of them and compares them as canonical subspaces.
"""

from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.analyzer.context import HopfContext
from hopf_kernels.exactmath.field import FieldElem
from hopf_kernels.hopf.axioms import morphism_check
from hopf_kernels.hopf.quotient import augmentation_ideal, hopf_ideal_violations, quotient_by_ideal
from hopf_kernels.hopf.subalgebras import certify, hopf_subalgebra, is_subcoalgebra, largest_subcoalgebra_in, projection_matrix
from hopf_kernels.rep.characters import char_eval, char_product, char_star, decompose, pullback, regular_character
from hopf_kernels.rep.modules import rep_from_block
from hopf_kernels.types import *

logger = getLogger(__name__)


def ker_set(ctx: HopfContext, chi: Character) -> Tuple[int, ...]:
    """ker_set returns the indices of the irreducible characters :math:`d` of :math:`H^*` with :math:`\\chi(d) = \\varepsilon(d) \\chi(1)`.

    The set is certified to be closed under the product and the star of characters of :math:`H^*`.

    :raises CertificationError:
    """

    return ctx.memoize(('ker_set', chi.values), lambda: _ker_set(ctx, chi))


def _ker_set(ctx: HopfContext, chi: Character) -> Tuple[int, ...]:
    coirr = ctx.coirr
    result = tuple(index for index, block in enumerate(coirr.blocks) if char_eval(chi, block.character.values) == block.character.degree * chi.degree)
    members = set(result)
    for a in result:
        d = coirr.blocks[a].character
        star = decompose(char_star(d), coirr)
        if any(m and index not in members for index, m in enumerate(star)):
            raise CertificationError(f"""{ctx.name}: the kernel set {result} is not closed under the star""")
        for b in result:
            product = decompose(char_product(d, coirr.blocks[b].character), coirr)
            if any(m and index not in members for index, m in enumerate(product)):
                raise CertificationError(f"""{ctx.name}: the kernel set {result} is not closed under products""")
    return result


def simple_subcoalgebra(ctx: HopfContext, d: int) -> Subspace:
    """simple_subcoalgebra returns :math:`C_d`, the image of :math:`x \\mapsto \\sum \\xi_d(x_1) x_2` for the central primitive idempotent :math:`\\xi_d` of :math:`H^*`.

    :raises CertificationError:
    """

    def build() -> Subspace:
        h = ctx.algebra
        block = ctx.coirr.blocks[d]
        xi = block.idempotent
        images = []
        for i in range(h.dim):
            image = [h.field.zero()] * h.dim
            for j, k, c in h.comult_table[i]:
                if xi[j]:
                    image[k] = image[k] + c * xi[j]
            images.append(image)
        space = linalg.span(h.field, h.dim, images)
        if space.dim != block.degree**2 or not is_subcoalgebra(h, space):
            raise CertificationError(f"""{ctx.name}: the simple subcoalgebra of the cocharacter {d} is wrong""")
        return space

    return ctx.memoize(('simple_subcoalgebra', d), build)


def kernel_subalgebra(ctx: HopfContext, chi: Character) -> HopfSubalgebraHandle:
    """kernel_subalgebra returns :math:`H_\\chi = \\sum_{d \\in \\ker \\chi} C_d`, certified as a Hopf subalgebra.

    :raises CertificationError:
    """

    return subalgebra_of_ker_set(ctx, ker_set(ctx, chi))


def subalgebra_of_ker_set(ctx: HopfContext, indices: Sequence[int]) -> HopfSubalgebraHandle:
    h = ctx.algebra
    space = linalg.zero_subspace(h.field, h.dim)
    for d in indices:
        space = linalg.subspace_sum(space, simple_subcoalgebra(ctx, d))
    expected = sum(ctx.coirr.blocks[d].degree**2 for d in indices)
    if space.dim != expected:
        raise CertificationError(f"""{ctx.name}: the kernel has dimension {space.dim}, expected {expected}""")
    try:
        return hopf_subalgebra(h, space)
    except NotHopfSubalgebraError as e:
        raise CertificationError(f"""{ctx.name}: the kernel of a character is not a Hopf subalgebra: {e}""")


def sm_space(r: Representation) -> Subspace:
    """sm_space returns :math:`S_M = \\{h \\mid \\rho(h) = \\varepsilon(h) \\mathrm{id}\\}`."""

    h = r.algebra
    m = r.module_dim

    def equations() -> Iterator[List[FieldElem]]:
        for s in range(m):
            for t in range(m):
                yield [r.matrices[i].entries[s][t] - (h.counit[i] if s == t else 0) for i in range(h.dim)]

    return linalg.kernel_of_rows(h.field, h.dim, equations())


def largest_hopf_in_sm(r: Representation) -> HopfSubalgebraHandle:
    """largest_hopf_in_sm returns the largest subcoalgebra of :math:`S_M` with all of its flags computed; it is expected to be a Hopf subalgebra.
    """

    h = r.algebra
    return certify(h, largest_subcoalgebra_in(h, sm_space(r)))


def annihilator(r: Representation) -> Subspace:
    h = r.algebra
    m = r.module_dim

    def equations() -> Iterator[List[FieldElem]]:
        for s in range(m):
            for t in range(m):
                yield [r.matrices[i].entries[s][t] for i in range(h.dim)]

    return linalg.kernel_of_rows(h.field, h.dim, equations())


def tensor_annihilator(h: HopfAlgebraData, ann_v: Subspace, ann_m: Subspace) -> Subspace:
    """tensor_annihilator returns the annihilator of :math:`V \\otimes M` from the annihilators of :math:`V` and :math:`M`.

    The action on :math:`V \\otimes M` factors through :math:`(q_V \\otimes q_M) \\circ \\Delta` with the projections :math:`q_V : H \\to H / \\mathrm{Ann}(V)` and :math:`q_M : H \\to H / \\mathrm{Ann}(M)`, followed by an injective map.
    """

    q_v = projection_matrix(ann_v)
    q_m = projection_matrix(ann_m)
    columns = [alg.apply_legs(alg.comultiply(h, alg.basis(h, i)), q_v, q_m) for i in range(h.dim)]
    width = q_v.ncols * q_m.ncols
    return linalg.kernel_of_rows(h.field, h.dim, (tuple(column[a] for column in columns) for a in range(width)))


def hopf_ideal_of_module(r: Representation) -> Tuple[Subspace, int]:
    """hopf_ideal_of_module returns :math:`I_M = \\bigcap_{n \\ge 0} \\mathrm{Ann}(M^{\\otimes n})`, starting from :math:`\\mathrm{Ann}(M^{\\otimes 0}) = \\ker \\varepsilon`.

    The annihilator of :math:`M^{\\otimes (n+1)}` depends only on that of :math:`M^{\\otimes n}`, so the iteration stops at the first repeated annihilator.

    :returns: the ideal and the number of tensor powers used
    :raises CertificationError:
    """

    h = r.algebra
    ann_m = annihilator(r)
    current = augmentation_ideal(h)
    seen = [current]
    result = current
    for n in range(1, 2 * h.dim + 3):
        current = tensor_annihilator(h, current, ann_m)
        if current in seen:
            violations = hopf_ideal_violations(h, result)
            if violations:
                raise CertificationError(f"""{h.name}: I_M is not a Hopf ideal: {violations}""")
            logger.debug('%s: I_M of dimension %d found with tensor powers up to %d', h.name, result.dim, n - 1)
            return result, n - 1
        seen.append(current)
        result = linalg.subspace_intersect(result, current)
    raise CertificationError(f"""{h.name}: the annihilators of the tensor powers did not repeat""")


def hopf_kernel(f: HopfMorphism) -> HopfSubalgebraHandle:
    """hopf_kernel solves :math:`\\sum a_1 \\otimes f(a_2) \\otimes a_3 = \\sum a_1 \\otimes 1 \\otimes a_2`.

    :raises CertificationError: if the solution space is not a Hopf subalgebra
    """

    a = f.source
    b = f.target
    n = a.dim
    m = b.dim
    field = a.field
    width = n * m * n
    columns = []
    for i in range(n):
        column = [field.zero()] * width
        for j, k, c in a.comult_table[i]:
            for p, q, e in a.comult_table[j]:
                ce = c * e
                for r, value in enumerate(f.matrix.entries[q]):
                    if value:
                        index = (p * m + r) * n + k
                        column[index] = column[index] + ce * value
            for r, u in enumerate(b.unit):
                if u:
                    index = (j * m + r) * n + k
                    column[index] = column[index] - c * u
        columns.append(column)
    rows = (tuple(column[x] for column in columns) for x in range(width))
    space = linalg.kernel_of_rows(field, n, rows)
    try:
        return hopf_subalgebra(a, space)
    except NotHopfSubalgebraError as e:
        raise CertificationError(f"""{a.name}: the Hopf kernel is not a Hopf subalgebra: {e}""")


def quotient_module_kernel(ctx: HopfContext, q: QuotientData) -> HopfSubalgebraHandle:
    """quotient_module_kernel returns the kernel of :math:`B = H / I` regarded as a left :math:`H`-module through the projection.
    """

    chi = pullback(regular_character(q.quotient), q)
    return kernel_subalgebra(ctx, chi)


def verify_kernel_coincidence(ctx: HopfContext, index: int) -> KernelReport:
    """verify_kernel_coincidence compares the kernel of the ``index``-th irreducible character with the Hopf kernel of :math:`H \\to H / I_M`, with the largest Hopf subalgebra in :math:`S_M`, and with the kernel of :math:`H / I_M` as a module.
    """

    h = ctx.algebra
    chi = ctx.irr.blocks[index].character
    kernel = kernel_subalgebra(ctx, chi)
    r = rep_from_block(h, ctx.irr, index)
    sm = sm_space(r)
    oracle = largest_hopf_in_sm(r)
    ideal, _ = hopf_ideal_of_module(r)
    q = quotient_by_ideal(h, ideal, name=f"""{h.name}/I_{index}""")
    hker = hopf_kernel(morphism_check(q.projection, h, q.quotient))
    quotient_kernel = quotient_module_kernel(ctx, q)
    report = KernelReport(
        character_index=index,
        character=chi,
        ker_set=ker_set(ctx, chi),
        kernel_space=kernel.space,
        sm_space=sm,
        oracle_space=oracle.space,
        ideal_space=ideal,
        hker_space=hker.space,
        quotient_kernel_space=quotient_kernel.space,
        matches_hopf_kernel=kernel.space == hker.space,
        matches_sm_oracle=oracle.flags.is_hopf and kernel.space == oracle.space,
        matches_quotient_kernel=kernel.space == quotient_kernel.space,
        is_normal=kernel.flags.is_normal,
    )
    if not report.passed:
        logger.error('%s: the kernels of the irreducible character %d disagree: hopf kernel %s, S_M oracle %s, quotient kernel %s', h.name, index, report.matches_hopf_kernel, report.matches_sm_oracle, report.matches_quotient_kernel)
    return report


def kernel_reports(ctx: HopfContext) -> List[KernelReport]:
    return ctx.memoize('kernel_reports', lambda: [verify_kernel_coincidence(ctx, index) for index in range(len(ctx.irr.blocks))])

"""
the module for the central characters of a semisimple Hopf algebra

:math:`\\hat{Z}(H^*) = Z(H^*) \\cap C(H)` is spanned by central idempotents of :math:`H^*`, so every element of it acts on the block of an irreducible character :math:`d` of :math:`H^*` by the scalar :math:`d(z) / \\varepsilon(d)`.
Two irreducible characters are equivalent when all of these scalars agree; the classes :math:`Y_j` give the primitive idempotents :math:`e_j = \\sum_{d \\in Y_j} \\xi_d` of :math:`\\hat{Z}(H^*)` without any factorization.
The classes :math:`X_i` of :math:`\\mathrm{Irr}(H)` are computed in the same way from :math:`\\hat{Z}(H) = Z(H) \\cap C(H^*)`.
"""

from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.analyzer.context import HopfContext
from hopf_kernels.analyzer.kernels import simple_subcoalgebra
from hopf_kernels.exactmath.field import FieldElem
from hopf_kernels.hopf.subalgebras import NORMAL_HOPF, closure
from hopf_kernels.rep.center import center, trace_functionals
from hopf_kernels.rep.characters import char_eval, char_star
from hopf_kernels.rep.phi import phi_map
from hopf_kernels.types import *

logger = getLogger(__name__)


def char_subalgebra(ctx: HopfContext) -> Subspace:
    """char_subalgebra returns :math:`C(H) \\subseteq H^*`, the span of the irreducible characters, certified to equal the space of trace functionals.

    :raises CertificationError:
    """

    def build() -> Subspace:
        h = ctx.algebra
        space = linalg.span(h.field, h.dim, [chi.values for chi in ctx.irr.characters])
        if space != trace_functionals(h):
            raise CertificationError(f"""{ctx.name}: the span of the irreducible characters is not the space of trace functionals""")
        return space

    return ctx.memoize('char_subalgebra', build)


def _partition(z_hat: Subspace, irr: IrrData) -> List[Tuple[int, ...]]:
    patterns: Dict[Tuple[FieldElem, ...], List[int]] = {}
    for index, block in enumerate(irr.blocks):
        pattern = tuple(char_eval(block.character, z) / block.degree for z in z_hat.vectors())
        patterns.setdefault(pattern, []).append(index)
    return sorted(tuple(indices) for indices in patterns.values())


def _check_idempotents(h: HopfAlgebraData, elements: Sequence[Vector], space: Subspace, what: str) -> None:
    zero = alg.zero(h)
    for i, x in enumerate(elements):
        if not linalg.contains_vector(space, x):
            raise CertificationError(f"""{h.name}: {what} {i} is not in the expected subalgebra""")
        for j, y in enumerate(elements):
            if alg.multiply(h, x, y) != (x if i == j else zero):
                raise CertificationError(f"""{h.name}: {what} {i} and {j} are not orthogonal idempotents""")
    if linalg.vec_sum(h.field, h.dim, elements) != h.unit:
        raise CertificationError(f"""{h.name}: the {what}s do not sum to the unit""")


def central_data(ctx: HopfContext) -> CentralData:
    """central_data computes :math:`\\hat{Z}(H^*)`, :math:`\\hat{Z}(H)`, both partitions and their idempotents.

    :raises CertificationError:
    """

    return ctx.memoize('central_data', lambda: _central_data(ctx))


def _central_data(ctx: HopfContext) -> CentralData:
    h = ctx.algebra
    hd = ctx.dual.algebra
    field = h.field
    n = h.dim

    z_hat_dual = linalg.subspace_intersect(center(hd), char_subalgebra(ctx))
    z_hat = linalg.subspace_intersect(center(h), char_subalgebra(ctx.dual))
    partition_y = _partition(z_hat_dual, ctx.coirr)
    partition_x = _partition(z_hat, ctx.irr)
    if len(partition_x) != len(partition_y):
        raise CertificationError(f"""{ctx.name}: the partitions have {len(partition_x)} and {len(partition_y)} classes""")

    e_idempotents = [linalg.vec_sum(field, n, [ctx.coirr.blocks[d].idempotent for d in cls]) for cls in partition_y]
    _check_idempotents(hd, e_idempotents, z_hat_dual, 'e')
    e_hats = []
    for cls, e in zip(partition_y, e_idempotents):
        e_hat = linalg.vec_sum(field, n, [linalg.vec_scale(ctx.coirr.blocks[d].degree, char_star(ctx.coirr.blocks[d].character).values) for d in cls])
        if e_hat != linalg.vec_scale(n, phi_map(h, ctx.integral, e, matrix=ctx.phi_matrix)):
            raise CertificationError(f"""{ctx.name}: the two formulas of e-hat disagree on the class {cls}""")
        e_hats.append(e_hat)

    f_elements = [linalg.vec_sum(field, n, [linalg.vec_scale(ctx.irr.blocks[c].degree, ctx.irr.blocks[c].character.values) for c in cls]) for cls in partition_x]
    f_images = [phi_map(h, ctx.integral, f, matrix=ctx.phi_matrix) for f in f_elements]
    for cls, image in zip(partition_x, f_images):
        if image != linalg.vec_sum(field, n, [ctx.irr.blocks[c].idempotent for c in cls]):
            raise CertificationError(f"""{ctx.name}: phi(f) is not the sum of the central idempotents on the class {cls}""")
    _check_idempotents(h, f_images, z_hat, 'phi(f)')
    logger.debug('%s: partition Y = %s, partition X = %s', ctx.name, partition_y, partition_x)
    return CentralData(
        z_hat_dual=z_hat_dual,
        z_hat=z_hat,
        partition_y=partition_y,
        partition_x=partition_x,
        e_idempotents=e_idempotents,
        e_hats=e_hats,
        f_elements=f_elements,
        f_images=f_images,
    )


def n_of_d(ctx: HopfContext, d: int, mode: str = NORMAL_HOPF) -> HopfSubalgebraHandle:
    """n_of_d returns the smallest normal Hopf subalgebra containing the simple subcoalgebra of the ``d``-th irreducible character of :math:`H^*`; with ``mode='hopf'`` the plain Hopf closure is returned instead.
    """

    return ctx.memoize(('n_of_d', d, mode), lambda: closure(ctx.algebra, simple_subcoalgebra(ctx, d), mode))

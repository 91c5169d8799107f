"""
the module to enumerate the Hopf subalgebras of a semisimple Hopf algebra

Every Hopf subalgebra is a sum of simple subcoalgebras :math:`C_d`, so it is the join of the Hopf closures of the :math:`C_d` it contains.
The lattice is therefore the join-closure of these atoms.
"""

from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
from hopf_kernels.analyzer.context import HopfContext
from hopf_kernels.analyzer.kernels import kernel_subalgebra, simple_subcoalgebra
from hopf_kernels.hopf.quotient import quotient_by_subalgebra
from hopf_kernels.hopf.subalgebras import HOPF, closure, join, trivial_subalgebra
from hopf_kernels.types import *

logger = getLogger(__name__)


def _sort_key(k: HopfSubalgebraHandle) -> Tuple[Any, ...]:
    return (k.dim, k.space.pivots, tuple(tuple(c.sort_key() for c in row) for row in k.space.basis.entries))


def lattice_members(ctx: HopfContext) -> List[HopfSubalgebraHandle]:
    """lattice_members returns all Hopf subalgebras, ordered by dimension and then by the canonical basis.

    :raises CertificationError: if the join-closure does not terminate within :math:`2^{|\\mathrm{Irr}(H^*)|}` steps or the result is not closed under intersections
    """

    return ctx.memoize('lattice_members', lambda: _lattice_members(ctx))


def _lattice_members(ctx: HopfContext) -> List[HopfSubalgebraHandle]:
    h = ctx.algebra
    members: Dict[Subspace, HopfSubalgebraHandle] = {}
    queue: List[HopfSubalgebraHandle] = []

    def visit(k: HopfSubalgebraHandle) -> None:
        if k.space not in members:
            members[k.space] = k
            queue.append(k)

    visit(trivial_subalgebra(h))
    for d in range(len(ctx.coirr.blocks)):
        visit(closure(h, simple_subcoalgebra(ctx, d), HOPF))
    atoms = list(members.values())

    cap = 2**len(ctx.coirr.blocks)
    steps = 0
    while queue:
        steps += 1
        if steps > cap:
            raise CertificationError(f"""{ctx.name}: the join-closure of the lattice exceeded {cap} steps""")
        k = queue.pop(0)
        for atom in atoms:
            if linalg.subspace_contains(k.space, atom.space):
                continue
            visit(join(h, k, atom))

    result = sorted(members.values(), key=_sort_key)
    for a in result:
        for b in result:
            if linalg.subspace_intersect(a.space, b.space) not in members:
                raise CertificationError(f"""{ctx.name}: the lattice is not closed under intersections""")
    logger.info('%s: %d Hopf subalgebras of dimensions %s', ctx.name, len(result), [k.dim for k in result])
    return result


def quotient_dual_space(q: QuotientData) -> Subspace:
    """quotient_dual_space returns :math:`\\pi^*((H /\\!/ K)^*) \\subseteq H^*`, spanned by the columns of the projection.
    """

    p = q.projection
    return linalg.span(p.field, p.nrows, [tuple(p.entries[i][a] for i in range(p.nrows)) for a in range(p.ncols)])


def normal_quotients(ctx: HopfContext) -> Dict[int, QuotientData]:
    """normal_quotients returns :math:`H /\\!/ K` for each normal member of the lattice, keyed by its index."""

    def build() -> Dict[int, QuotientData]:
        h = ctx.algebra
        return {index: quotient_by_subalgebra(h, k) for index, k in enumerate(lattice_members(ctx)) if k.flags.is_normal}

    return ctx.memoize('normal_quotients', build)


def enumerate_lattice(ctx: HopfContext) -> LatticeData:
    """enumerate_lattice returns the lattice of Hopf subalgebras with normal flags and the correspondence :math:`K \\mapsto (H /\\!/ K)^*` into the lattice of the dual.

    :raises CertificationError: if some :math:`(H /\\!/ K)^*` is not a normal member of the lattice of the dual, or the correspondence is not a bijection of normal members
    """

    return ctx.memoize('lattice', lambda: _enumerate_lattice(ctx))


def _enumerate_lattice(ctx: HopfContext) -> LatticeData:
    members = lattice_members(ctx)
    dual_members = lattice_members(ctx.dual)
    dual_index = {k.space: index for index, k in enumerate(dual_members)}
    correspondence: Dict[int, int] = {}
    for index, q in normal_quotients(ctx).items():
        partner = dual_index.get(quotient_dual_space(q))
        if partner is None or not dual_members[partner].flags.is_normal:
            raise CertificationError(f"""{ctx.name}: the dual of the quotient by the member {index} is not a normal Hopf subalgebra of the dual""")
        correspondence[index] = partner
    dual_normal = sum(1 for k in dual_members if k.flags.is_normal)
    if len(set(correspondence.values())) != len(correspondence) or len(correspondence) != dual_normal:
        raise CertificationError(f"""{ctx.name}: the correspondence of normal Hopf subalgebras is not a bijection""")
    return LatticeData(
        algebra=ctx.algebra,
        subalgebras=members,
        normal_flags=[k.flags.is_normal for k in members],
        dual_correspondence=correspondence,
    )


def property_n(ctx: HopfContext) -> PropertyNResult:
    """property_n checks whether the kernel of every irreducible character is a normal Hopf subalgebra."""

    def build() -> PropertyNResult:
        non_normal = tuple(index for index, chi in enumerate(ctx.irr.characters) if not kernel_subalgebra(ctx, chi).flags.is_normal)
        if non_normal:
            logger.info('%s: the kernels of the irreducible characters %s are not normal', ctx.name, list(non_normal))
        return PropertyNResult(holds=not non_normal, non_normal=non_normal)

    return ctx.memoize('property_n', build)

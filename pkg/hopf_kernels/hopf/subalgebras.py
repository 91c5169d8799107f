"""
the module for Hopf subalgebras, subcoalgebras and their closures

The closures are fixpoint iterations on an :class:`EchelonBuilder`.
Each round strictly increases (or, for :func:`largest_subcoalgebra_in`, decreases) the dimension, so the rounds are capped by ``dim + 1`` and exceeding the cap is a :class:`CertificationError`.
"""

from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.types import *

logger = getLogger(__name__)

HOPF = 'hopf'
NORMAL_HOPF = 'normal_hopf'


def is_subalgebra(h: HopfAlgebraData, v: Subspace) -> bool:
    builder = linalg.builder_of(v)
    basis = v.vectors()
    return all(builder.contains(alg.multiply(h, x, y)) for x in basis for y in basis)


def is_subcoalgebra(h: HopfAlgebraData, v: Subspace) -> bool:
    """is_subcoalgebra checks :math:`\\Delta(V) \\subseteq V \\otimes V` as :math:`(q \\otimes \\mathrm{id}) \\Delta(V) = 0 = (\\mathrm{id} \\otimes q) \\Delta(V)` for the projection :math:`q : H \\to H/V`.
    """

    q = projection_matrix(v)
    identity = linalg.identity_matrix(h.field, h.dim)
    for x in v.vectors():
        delta = alg.comultiply(h, x)
        if any(alg.apply_legs(delta, q, identity)) or any(alg.apply_legs(delta, identity, q)):
            return False
    return True


def projection_matrix(v: Subspace) -> Matrix:
    """projection_matrix is the matrix of :math:`K^n \\to K^n / V` in the row convention, with the quotient read at the non-pivot columns of ``v``.
    """

    n = v.ambient_dim
    rows = [linalg.quotient_coordinates(v, linalg.basis_vector(v.field, n, i)) for i in range(n)]
    return linalg.matrix_make(v.field, rows, ncols=n - v.dim)


def contains_unit(h: HopfAlgebraData, v: Subspace) -> bool:
    return linalg.contains_vector(v, h.unit)


def is_antipode_stable(h: HopfAlgebraData, v: Subspace) -> bool:
    builder = linalg.builder_of(v)
    return all(builder.contains(alg.antipode(h, x)) for x in v.vectors())


def is_normal_space(h: HopfAlgebraData, v: Subspace) -> bool:
    builder = linalg.builder_of(v)
    return all(builder.contains(y) for x in v.vectors() for y in alg.adjoint_images(h, x))


def certify(h: HopfAlgebraData, v: Subspace) -> HopfSubalgebraHandle:
    """certify computes every flag of a subspace exactly.
    """

    subalgebra = is_subalgebra(h, v)
    subcoalgebra = is_subcoalgebra(h, v)
    unit = contains_unit(h, v)
    stable = is_antipode_stable(h, v)
    normal = subalgebra and subcoalgebra and unit and stable and is_normal_space(h, v)
    flags = SubalgebraFlags(is_subalgebra=subalgebra, is_subcoalgebra=subcoalgebra, contains_unit=unit, antipode_stable=stable, is_normal=normal)
    return HopfSubalgebraHandle(parent=h, space=v, flags=flags)


def hopf_subalgebra(h: HopfAlgebraData, v: Subspace) -> HopfSubalgebraHandle:
    """
    :raises NotHopfSubalgebraError:
    """

    handle = certify(h, v)
    if not handle.flags.is_hopf:
        raise NotHopfSubalgebraError(f"""{h.name}: the subspace of dimension {v.dim} is not a Hopf subalgebra: {handle.flags}""")
    return handle


def is_normal(h: HopfAlgebraData, k: HopfSubalgebraHandle) -> bool:
    """is_normal checks stability under both adjoint actions :math:`x_1 w S(x_2)` and :math:`S(x_1) w x_2`.

    :raises NotHopfSubalgebraError:
    """

    if not k.flags.is_hopf:
        raise NotHopfSubalgebraError(f"""{h.name}: normality is defined for Hopf subalgebras only""")
    return is_normal_space(h, k.space)


def largest_subcoalgebra_in(h: HopfAlgebraData, v: Subspace) -> Subspace:
    """largest_subcoalgebra_in computes the greatest fixpoint of :math:`D \\mapsto \\{x \\in D \\mid \\Delta(x) \\in D \\otimes D\\}` starting from ``v``.

    :raises CertificationError: if the iteration does not stabilize within ``dim + 1`` rounds
    """

    n = h.dim
    identity = linalg.identity_matrix(h.field, n)
    current = v
    for iteration in range(n + 2):
        if current.dim == 0:
            return current
        q = projection_matrix(current)
        basis = current.vectors()
        # column r of the system is the obstruction of the r-th basis vector of D
        columns = []
        for x in basis:
            delta = alg.comultiply(h, x)
            columns.append(alg.apply_legs(delta, q, identity) + alg.apply_legs(delta, identity, q))
        rows = (tuple(column[a] for column in columns) for a in range(len(columns[0])))
        solutions = linalg.kernel_of_rows(h.field, len(basis), rows)
        if solutions.dim == current.dim:
            logger.debug('%s: largest subcoalgebra found after %d rounds: dim = %d', h.name, iteration, current.dim)
            return current
        current = linalg.span(h.field, n, [linalg.linear_combination(h.field, n, a, basis) for a in solutions.vectors()])
    raise CertificationError(f"""{h.name}: the largest-subcoalgebra iteration did not stabilize""")


def closure(h: HopfAlgebraData, v: Subspace, mode: str = HOPF) -> HopfSubalgebraHandle:
    """closure computes the least fixpoint of :math:`W \\mapsto W + K 1 + W W + S(W)`, adding both adjoint actions on :math:`W` when ``mode`` is ``normal_hopf``.

    The input is expected to be a subcoalgebra (a sum of simple subcoalgebras, or the span of 1); the result is certified either way.

    :raises NotHopfSubalgebraError: if the result is not a Hopf subalgebra
    :raises CertificationError: if the iteration exceeds ``dim + 1`` rounds
    """

    if mode not in (HOPF, NORMAL_HOPF):
        raise ValueError(f"""invalid closure mode: {repr(mode)}""")
    n = h.dim
    builder = linalg.builder_of(v)
    builder.add(h.unit)
    for iteration in range(n + 2):
        snapshot = builder.rows()
        candidates: List[Vector] = []
        for x in snapshot:
            for y in snapshot:
                candidates.append(alg.multiply(h, x, y))
            candidates.append(alg.antipode(h, x))
            if mode == NORMAL_HOPF:
                candidates.extend(alg.adjoint_images(h, x))
        added = builder.extend(candidates)
        if not added:
            logger.debug('%s: %s closure stabilized after %d rounds: dim = %d', h.name, mode, iteration, builder.rank)
            handle = hopf_subalgebra(h, builder.subspace())
            if mode == NORMAL_HOPF and not handle.flags.is_normal:
                raise CertificationError(f"""{h.name}: the normal closure is not normal""")
            return handle
    raise CertificationError(f"""{h.name}: the {mode} closure did not stabilize""")


def join(h: HopfAlgebraData, a: HopfSubalgebraHandle, b: HopfSubalgebraHandle) -> HopfSubalgebraHandle:
    return closure(h, linalg.subspace_sum(a.space, b.space), HOPF)


def trivial_subalgebra(h: HopfAlgebraData) -> HopfSubalgebraHandle:
    return hopf_subalgebra(h, linalg.span(h.field, h.dim, [h.unit]))


def whole_algebra(h: HopfAlgebraData) -> HopfSubalgebraHandle:
    return hopf_subalgebra(h, linalg.full_subspace(h.field, h.dim))

"""
the module to find exact eigenvalues and eigenspaces of a diagonalizable matrix over :math:`\\mathbb{Q}(\\zeta_N)`

The eigenvalues are located numerically with :mod:`mpmath` under the embedding :math:`\\zeta \\mapsto e^{2 \\pi i / N}`, rebuilt exactly as elements of the field with an integer relation search, and then certified exactly: every eigenspace is the kernel of :math:`A - \\lambda I` and the eigenspace dimensions must add up to the size of :math:`A`.
No numeric value leaves this module.

For example, the matrix :math:`\\begin{pmatrix} 0 & 1 \\\\ 1 & 0 \\end{pmatrix}` over :math:`\\mathbb{Q}` gives the eigenvalues :math:`-1` and :math:`1`.
"""

from logging import getLogger
from typing import *

import mpmath

import hopf_kernels.exactmath.linalg as linalg
from hopf_kernels.exactmath.field import CycloField, FieldElem, Rational
from hopf_kernels.types import *

logger = getLogger(__name__)

DEFAULT_PRECISION = 128
SEPARATION_EXPONENT = 40


def make_context(precision: int) -> Any:
    ctx = mpmath.ctx_mp.MPContext()
    ctx.prec = precision
    return ctx


def locate_eigenvalues(ctx: Any, a: Matrix) -> List[Any]:
    """locate_eigenvalues returns one numeric representative for each distinct eigenvalue.

    Values closer than :math:`2^{-prec/2}` are merged, and the distinct representatives must be more than :math:`2^{-40}` apart.

    :raises NumericLocationError:
    """

    n = a.nrows
    m = ctx.matrix(n, n)
    for s in range(n):
        for r in range(n):
            m[s, r] = a.entries[s][r].embed(ctx)
    values = ctx.eig(m, left=False, right=False)
    merge = ctx.mpf(2)**(-(ctx.prec // 2))
    separation = ctx.mpf(2)**(-SEPARATION_EXPONENT)
    clusters: List[List[Any]] = []
    for index in range(n):
        value = values[index]
        for cluster in clusters:
            if abs(cluster[0] - value) < merge:
                cluster.append(value)
                break
        else:
            clusters.append([value])
    representatives = [ctx.fsum(cluster) / len(cluster) for cluster in clusters]
    for i, x in enumerate(representatives):
        for y in representatives[i + 1:]:
            if abs(x - y) <= separation:
                raise NumericLocationError(f"""eigenvalues are not separated at {ctx.prec} bits""")
    return representatives


def reconstruct(ctx: Any, field: CycloField, value: Any, *, denominator_bound: int) -> FieldElem:
    """reconstruct finds rationals :math:`r_k` with :math:`\\lambda = \\sum_k r_k \\zeta^k` by an integer relation among :math:`\\mathrm{Re}\\,z + \\pi\\,\\mathrm{Im}\\,z` of :math:`\\lambda` and the powers of :math:`\\zeta`.

    :raises FieldTooSmallError: if no relation with a denominator at most ``denominator_bound`` is found
    """

    tolerance = ctx.mpf(2)**(-(ctx.prec // 2))
    if abs(value) < tolerance:
        return field.zero()

    def flatten(z: Any) -> Any:
        z = ctx.mpc(z)
        return z.real + ctx.pi * z.imag

    powers = [flatten(ctx.expjpi(ctx.mpf(2 * k) / field.order)) for k in range(field.degree)]
    maxcoeff = max(1000, denominator_bound * (int(abs(value)) + 1) * 8 * field.degree)
    relation = ctx.pslq([flatten(value)] + powers, tol=tolerance, maxcoeff=maxcoeff, maxsteps=20000)
    if relation is None or relation[0] == 0:
        raise FieldTooSmallError(field.order, f"""no exact value for the eigenvalue {ctx.nstr(value, 12)}""")
    if abs(relation[0]) > denominator_bound:
        raise FieldTooSmallError(field.order, f"""the eigenvalue {ctx.nstr(value, 12)} needs a denominator above the bound {denominator_bound}""")
    return field.make([-Rational(int(r), int(relation[0])) for r in relation[1:]])


def exact_eigenspaces(a: Matrix, *, precision: int = DEFAULT_PRECISION, denominator_bound: int) -> List[Tuple[FieldElem, Subspace]]:
    """exact_eigenspaces returns the distinct eigenvalues of a diagonalizable square matrix together with their eigenspaces of column vectors.

    The numeric precision is doubled once when location or reconstruction fails.

    :raises NumericLocationError:
    :raises FieldTooSmallError:
    """

    if a.nrows != a.ncols:
        raise ShapeError(f"""a square matrix is required, got {a.nrows}x{a.ncols}""")
    n = a.nrows
    field = a.field
    if n == 1:
        return [(a.entries[0][0], linalg.full_subspace(field, 1))]
    last_error: Optional[HopfKernelsError] = None
    for prec in (precision, 2 * precision):
        ctx = make_context(prec)
        try:
            located = locate_eigenvalues(ctx, a)
            values = [reconstruct(ctx, field, value, denominator_bound=denominator_bound) for value in located]
        except (NumericLocationError, FieldTooSmallError) as e:
            logger.debug('eigenvalue location at %d bits failed: %s', prec, e)
            last_error = e
            continue
        result = []
        for value in values:
            shifted = linalg.matrix_make(field, [tuple(a.entries[s][r] - (value if s == r else 0) for r in range(n)) for s in range(n)], ncols=n)
            result.append((value, linalg.kernel(shifted)))
        if len(set(values)) == len(values) and all(space.dim for _, space in result) and sum(space.dim for _, space in result) == n:
            return result
        last_error = FieldTooSmallError(field.order, 'eigenvalue certification failed')
        logger.debug('eigenvalue certification at %d bits failed', prec)
    assert last_error is not None
    raise last_error

"""
the module to split the center of a semisimple algebra into its central primitive idempotents

The center :math:`Z(H)` is commutative and semisimple.
It is cut into common eigenspaces of the multiplications by the basis elements of :math:`Z(H)`, and each 1-dimensional piece :math:`K v` gives the idempotent :math:`v / c` where :math:`v^2 = c v`.
"""

from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.rep.center import center
from hopf_kernels.rep.eigen import DEFAULT_PRECISION, exact_eigenspaces
from hopf_kernels.types import *

logger = getLogger(__name__)


def _split(h: HopfAlgebraData, piece: Subspace, z: Vector, *, precision: int) -> List[Subspace]:
    basis = piece.vectors()
    k = len(basis)
    columns = [linalg.coordinates(piece, alg.multiply(h, z, e)) for e in basis]
    a = linalg.transpose(linalg.matrix_make(h.field, columns, ncols=k))
    if all(a.entries[s][r] == (a.entries[0][0] if s == r else 0) for s in range(k) for r in range(k)):
        return [piece]
    eigenspaces = exact_eigenspaces(a, precision=precision, denominator_bound=h.dim * h.field.order**2)
    pieces = []
    for _, space in eigenspaces:
        pieces.append(linalg.span(h.field, h.dim, [linalg.linear_combination(h.field, h.dim, c, basis) for c in space.vectors()]))
    return pieces


def central_primitive_idempotents(h: HopfAlgebraData, *, precision: int = DEFAULT_PRECISION) -> List[Vector]:
    """central_primitive_idempotents returns the central primitive idempotents of a semisimple ``h``.

    The result is certified exactly: idempotent, central, pairwise orthogonal and summing to 1.

    :raises FieldTooSmallError: if the center does not split over the field
    :raises NumericLocationError:
    :raises CertificationError:
    """

    z_space = center(h)
    pieces = [z_space]
    for z in z_space.vectors():
        if all(piece.dim == 1 for piece in pieces):
            break
        next_pieces = []
        for piece in pieces:
            if piece.dim == 1:
                next_pieces.append(piece)
            else:
                next_pieces.extend(_split(h, piece, z, precision=precision))
        pieces = next_pieces
        logger.debug('%s: center split into pieces of dimensions %s', h.name, [piece.dim for piece in pieces])
    if any(piece.dim != 1 for piece in pieces):
        raise FieldTooSmallError(h.field.order, f"""the center of {h.name} does not split""")

    idempotents = []
    for piece in pieces:
        v = piece.basis.entries[0]
        square = alg.multiply(h, v, v)
        p = next(i for i, c in enumerate(v) if c)
        c = square[p] / v[p]
        if not c or square != linalg.vec_scale(c, v):
            raise FieldTooSmallError(h.field.order, f"""a piece of the center of {h.name} is not spanned by an idempotent""")
        idempotents.append(linalg.vec_scale(c.inverse(), v))
    certify_idempotents(h, idempotents)
    return idempotents


def certify_idempotents(h: HopfAlgebraData, idempotents: Sequence[Vector]) -> None:
    """
    :raises CertificationError:
    """

    zero = alg.zero(h)
    for i, x in enumerate(idempotents):
        for j, y in enumerate(idempotents):
            product = alg.multiply(h, x, y)
            if product != (x if i == j else zero):
                raise CertificationError(f"""{h.name}: central idempotents {i} and {j} are not orthogonal idempotents""")
        for k in range(h.dim):
            b = alg.basis(h, k)
            if alg.multiply(h, b, x) != alg.multiply(h, x, b):
                raise CertificationError(f"""{h.name}: idempotent {i} is not central""")
    if linalg.vec_sum(h.field, h.dim, idempotents) != h.unit:
        raise CertificationError(f"""{h.name}: the central idempotents do not sum to 1""")

from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
from hopf_kernels.exactmath.field import FieldElem
from hopf_kernels.types import *

logger = getLogger(__name__)


def center(h: HopfAlgebraData) -> Subspace:
    """center returns :math:`Z(H)`, the kernel of :math:`z \\mapsto (b_i z - z b_i)_i`.
    """

    n = h.dim

    def equations() -> Iterator[List[FieldElem]]:
        for i in range(n):
            for k in range(n):
                yield [h.mult[i][j][k] - h.mult[j][i][k] for j in range(n)]

    result = linalg.kernel_of_rows(h.field, n, equations())
    logger.debug('%s: dim Z(H) = %d', h.name, result.dim)
    return result


def trace_functionals(h: HopfAlgebraData) -> Subspace:
    """trace_functionals returns :math:`\\{f \\in H^* \\mid f(ab) = f(ba)\\}` in the coordinates of the dual basis.
    """

    n = h.dim

    def equations() -> Iterator[List[FieldElem]]:
        for i in range(n):
            for j in range(i + 1, n):
                yield [h.mult[i][j][k] - h.mult[j][i][k] for k in range(n)]

    return linalg.kernel_of_rows(h.field, n, equations())

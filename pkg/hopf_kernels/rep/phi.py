from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.exactmath.field import FieldElem
from hopf_kernels.types import *

logger = getLogger(__name__)


def phi_matrix(h: HopfAlgebraData, integral: Vector) -> Matrix:
    """phi_matrix returns the matrix of :math:`\\varphi(f) = \\sum f(S(\\Lambda_1)) \\Lambda_2`; its row ``i`` is the image of the ``i``-th dual basis vector.

    :raises NotSemisimpleError: if :math:`\\varphi` is not invertible
    """

    n = h.dim
    delta = alg.comultiply(h, integral)
    rows = [[h.field.zero()] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            t = delta[j * n + k]
            if not t:
                continue
            for i, s in h.antipode_table[j]:
                rows[i][k] = rows[i][k] + t * s
    result = linalg.matrix_make(h.field, rows, ncols=n)
    if linalg.rank(result) != n:
        raise NotSemisimpleError(f"""{h.name}: the map f -> f(S(L_1)) L_2 is singular""")
    return result


def phi_map(h: HopfAlgebraData, integral: Vector, f: Sequence[FieldElem], *, matrix: Optional[Matrix] = None) -> Vector:
    if matrix is None:
        matrix = phi_matrix(h, integral)
    return linalg.vec_mat(f, matrix)


def phi_inverse(h: HopfAlgebraData, integral: Vector, x: Sequence[FieldElem], *, matrix: Optional[Matrix] = None) -> Vector:
    if matrix is None:
        matrix = phi_matrix(h, integral)
    solution = linalg.solve_vector(linalg.transpose(matrix), x)
    assert solution is not None
    return solution

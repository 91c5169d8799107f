"""
the module to compute with elements of a Hopf algebra given by structure constants

Elements are coordinate vectors in the basis of :class:`HopfAlgebraData`.
Elements of :math:`H \\otimes H` are flat vectors of length :math:`n^2` indexed by ``j * n + k``.
"""

from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
from hopf_kernels.exactmath.field import FieldElem
from hopf_kernels.types import *

logger = getLogger(__name__)


def basis(h: HopfAlgebraData, i: int) -> Vector:
    return linalg.basis_vector(h.field, h.dim, i)


def zero(h: HopfAlgebraData) -> Vector:
    return linalg.zero_vector(h.field, h.dim)


def multiply(h: HopfAlgebraData, x: Sequence[FieldElem], y: Sequence[FieldElem]) -> Vector:
    acc = [h.field.zero()] * h.dim
    table = h.mult_table
    for i, a in enumerate(x):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for k, c in row[j]:
                acc[k] = acc[k] + ab * c
    return tuple(acc)


def multiply_all(h: HopfAlgebraData, xs: Sequence[Sequence[FieldElem]]) -> Vector:
    result: Vector = h.unit
    for x in xs:
        result = multiply(h, result, x)
    return result


def comultiply(h: HopfAlgebraData, x: Sequence[FieldElem]) -> Vector:
    n = h.dim
    acc = [h.field.zero()] * (n * n)
    for i, a in enumerate(x):
        if not a:
            continue
        for j, k, c in h.comult_table[i]:
            acc[j * n + k] = acc[j * n + k] + a * c
    return tuple(acc)


def counit(h: HopfAlgebraData, x: Sequence[FieldElem]) -> FieldElem:
    return linalg.vec_dot(x, h.counit)


def antipode(h: HopfAlgebraData, x: Sequence[FieldElem]) -> Vector:
    acc = [h.field.zero()] * h.dim
    for i, a in enumerate(x):
        if not a:
            continue
        for j, c in h.antipode_table[i]:
            acc[j] = acc[j] + a * c
    return tuple(acc)


def tensor(x: Sequence[FieldElem], y: Sequence[FieldElem]) -> Vector:
    assert x and y
    zero = x[0].field.zero()
    return tuple(a * b if a and b else zero for a in x for b in y)


def apply_legs(t: Sequence[FieldElem], f: Matrix, g: Matrix) -> Vector:
    """apply_legs computes :math:`(f \\otimes g)(t)` for linear maps given by matrices whose rows are the images of basis vectors.
    """

    n, p = f.nrows, f.ncols
    m, q = g.nrows, g.ncols
    assert len(t) == n * m
    field = f.field
    acc = [field.zero()] * (p * q)
    for j in range(n):
        for k in range(m):
            value = t[j * m + k]
            if not value:
                continue
            for a, fa in enumerate(f.entries[j]):
                if not fa:
                    continue
                coeff = value * fa
                for b, gb in enumerate(g.entries[k]):
                    if gb:
                        acc[a * q + b] = acc[a * q + b] + coeff * gb
    return tuple(acc)


def is_commutative(h: HopfAlgebraData) -> bool:
    return all(h.mult[i][j] == h.mult[j][i] for i in range(h.dim) for j in range(i + 1, h.dim))


def is_cocommutative(h: HopfAlgebraData) -> bool:
    return all(h.comult[i][j][k] == h.comult[i][k][j] for i in range(h.dim) for j in range(h.dim) for k in range(j + 1, h.dim))


def left_multiplication_matrix(h: HopfAlgebraData, x: Sequence[FieldElem]) -> Matrix:
    """left_multiplication_matrix returns :math:`L_x` in the column convention: the entry ``[s][r]`` is the ``s``-th coordinate of :math:`x b_r`.
    """

    columns = [multiply(h, x, basis(h, r)) for r in range(h.dim)]
    return linalg.transpose(linalg.matrix_make(h.field, columns, ncols=h.dim))


def adjoint_images(h: HopfAlgebraData, w: Sequence[FieldElem]) -> Iterator[Vector]:
    """adjoint_images yields :math:`\\sum x_1 w S(x_2)` and :math:`\\sum S(x_1) w x_2` for every basis element :math:`x`.
    """

    n = h.dim
    s_rows = h.antipode.entries
    for i in range(n):
        left = [h.field.zero()] * n
        right = [h.field.zero()] * n
        for j, k, c in h.comult_table[i]:
            bj = basis(h, j)
            bk = basis(h, k)
            left_term = multiply(h, multiply(h, bj, w), s_rows[k])
            right_term = multiply(h, multiply(h, s_rows[j], w), bk)
            for a in range(n):
                if left_term[a]:
                    left[a] = left[a] + c * left_term[a]
                if right_term[a]:
                    right[a] = right[a] + c * right_term[a]
        yield tuple(left)
        yield tuple(right)


def element_to_str(h: HopfAlgebraData, x: Sequence[FieldElem], *, names: Optional[Sequence[str]] = None) -> str:
    if names is None:
        names = [f"""b{i}""" for i in range(h.dim)]
    terms = []
    for i, a in enumerate(x):
        if not a:
            continue
        if a.is_one():
            terms.append(names[i])
        elif a.is_rational():
            terms.append(f"""{a}*{names[i]}""")
        else:
            terms.append(f"""({a})*{names[i]}""")
    return ' + '.join(terms) if terms else '0'

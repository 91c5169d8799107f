"""
the module for finite-dimensional left modules given by matrices

A :class:`Representation` stores one matrix per basis element of the algebra in the column convention, so that :math:`\\rho(x) \\rho(y) = \\rho(xy)` is the ordinary matrix product.
"""

from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.exactmath.field import FieldElem
from hopf_kernels.types import *

logger = getLogger(__name__)


def action(r: Representation, x: Sequence[FieldElem]) -> Matrix:
    """action returns :math:`\\rho(x)` for an arbitrary element ``x``."""

    m = r.module_dim
    field = r.algebra.field
    acc = [[field.zero()] * m for _ in range(m)]
    for i, c in enumerate(x):
        if not c:
            continue
        for s, row in enumerate(r.matrices[i].entries):
            for t, value in enumerate(row):
                if value:
                    acc[s][t] = acc[s][t] + c * value
    return linalg.matrix_make(field, acc, ncols=m)


def representation_on_subspace(h: HopfAlgebraData, v: Subspace) -> Representation:
    """representation_on_subspace restricts the left regular action to a left ideal ``v``, in the canonical basis of ``v``.
    """

    basis = v.vectors()
    matrices = []
    for i in range(h.dim):
        b = alg.basis(h, i)
        columns = [linalg.coordinates(v, alg.multiply(h, b, e)) for e in basis]
        matrices.append(linalg.transpose(linalg.matrix_make(h.field, columns, ncols=len(basis))))
    return Representation(algebra=h, module_dim=len(basis), matrices=tuple(matrices))


def quotient_module_representation(h: HopfAlgebraData, left_ideal: Subspace) -> Representation:
    """quotient_module_representation is the left action of ``h`` on :math:`H / I` for a left ideal :math:`I`, in the non-pivot coordinates.
    """

    free = linalg.complement_indices(left_ideal)
    matrices = []
    for i in range(h.dim):
        b = alg.basis(h, i)
        columns = [linalg.quotient_coordinates(left_ideal, alg.multiply(h, b, alg.basis(h, f))) for f in free]
        matrices.append(linalg.transpose(linalg.matrix_make(h.field, columns, ncols=len(free))) if free else linalg.zero_matrix(h.field, 0, 0))
    return Representation(algebra=h, module_dim=len(free), matrices=tuple(matrices))


def regular_representation(h: HopfAlgebraData) -> Representation:
    return representation_on_subspace(h, linalg.full_subspace(h.field, h.dim))


def trivial_representation(h: HopfAlgebraData) -> Representation:
    matrices = tuple(linalg.matrix_make(h.field, [(c, )], ncols=1) for c in h.counit)
    return Representation(algebra=h, module_dim=1, matrices=matrices)


def rep_from_block(h: HopfAlgebraData, irr: IrrData, block_index: int) -> Representation:
    """rep_from_block returns the left module :math:`H \\xi` of the ``block_index``-th block.

    This module is :math:`\\chi(1)` copies of the simple module, so a basis element acts as a scalar on it iff it does on the simple module.
    """

    xi = irr.blocks[block_index].idempotent
    block = linalg.span(h.field, h.dim, [alg.multiply(h, alg.basis(h, i), xi) for i in range(h.dim)])
    return representation_on_subspace(h, block)


def tensor_representation(r: Representation, s: Representation) -> Representation:
    """tensor_representation is :math:`M \\otimes N` with :math:`\\rho(x) = \\sum \\rho_M(x_1) \\otimes \\rho_N(x_2)`, materialized as Kronecker products.
    """

    h = r.algebra
    m = r.module_dim * s.module_dim
    matrices = []
    for i in range(h.dim):
        acc = linalg.zero_matrix(h.field, m, m)
        for j, k, c in h.comult_table[i]:
            acc = linalg.mat_add(acc, linalg.mat_scale(c, linalg.kronecker(r.matrices[j], s.matrices[k])))
        matrices.append(acc)
    return Representation(algebra=h, module_dim=m, matrices=tuple(matrices))


def representation_character(r: Representation) -> Vector:
    """representation_character returns the values :math:`\\mathrm{tr}\\,\\rho(b_i)`."""

    return tuple(linalg.trace(matrix) for matrix in r.matrices)


def check_representation(r: Representation) -> bool:
    """check_representation verifies :math:`\\rho(1) = I` and :math:`\\rho(b_i) \\rho(b_j) = \\rho(b_i b_j)` exactly.
    """

    h = r.algebra
    if r.module_dim == 0:
        return True
    if action(r, h.unit) != linalg.identity_matrix(h.field, r.module_dim):
        return False
    for i in range(h.dim):
        for j in range(h.dim):
            if linalg.matmul(r.matrices[i], r.matrices[j]) != action(r, h.mult[i][j]):
                return False
    return True

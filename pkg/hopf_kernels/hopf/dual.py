"""
the module to build the dual Hopf algebra and the idempotent integral

The dual :math:`H^*` is written in the dual basis :math:`f_0, \\dots, f_{n-1}` of the basis of :math:`H`.
Its structure constants are transposes of those of :math:`H`, so ``dual(dual(h))`` has the same tensors as ``h``.
"""

from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.exactmath.field import FieldElem
from hopf_kernels.types import *

logger = getLogger(__name__)


def dual_name(name: str) -> str:
    if name.startswith('Fun-'):
        return name[len('Fun-'):]
    return 'Fun-' + name


def dual(h: HopfAlgebraData) -> HopfAlgebraData:
    n = h.dim
    mult = [[[h.comult[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
    comult = [[[h.mult[j][k][i] for k in range(n)] for j in range(n)] for i in range(n)]
    return HopfAlgebraData(
        field=h.field,
        dim=n,
        mult=mult,
        unit=h.counit,
        comult=comult,
        counit=h.unit,
        antipode=linalg.transpose(h.antipode),
        name=dual_name(h.name),
    )


def integral_space(h: HopfAlgebraData) -> Subspace:
    """integral_space solves :math:`x \\Lambda = \\varepsilon(x) \\Lambda` and :math:`\\Lambda x = \\varepsilon(x) \\Lambda` for all basis elements :math:`x`.
    """

    n = h.dim

    def equations() -> Iterator[List[FieldElem]]:
        for side in ('left', 'right'):
            for i in range(n):
                for k in range(n):
                    row = []
                    for j in range(n):
                        c = h.mult[i][j][k] if side == 'left' else h.mult[j][i][k]
                        if j == k:
                            c = c - h.counit[i]
                        row.append(c)
                    yield row

    return linalg.kernel_of_rows(h.field, n, equations())


def integral(h: HopfAlgebraData) -> Vector:
    """integral returns the two-sided integral :math:`\\Lambda` normalized by :math:`\\varepsilon(\\Lambda) = 1`.

    :raises IntegralError: if the space of two-sided integrals is not 1-dimensional
    :raises NotSemisimpleError: if :math:`\\varepsilon(\\Lambda) = 0`
    """

    space = integral_space(h)
    if space.dim != 1:
        raise IntegralError(f"""{h.name}: the space of two-sided integrals has dimension {space.dim}, expected 1""")
    candidate = space.basis.entries[0]
    e = alg.counit(h, candidate)
    if not e:
        raise NotSemisimpleError(f"""{h.name}: the integral is annihilated by the counit, so the algebra is not semisimple""")
    result = linalg.vec_scale(e.inverse(), candidate)
    if alg.multiply(h, result, result) != result:
        raise CertificationError(f"""{h.name}: the normalized integral is not idempotent""")
    logger.debug('%s: integral = %s', h.name, alg.element_to_str(h, result))
    return result


def subalgebra_integral(h: HopfAlgebraData, k: HopfSubalgebraHandle) -> Vector:
    """subalgebra_integral returns the normalized two-sided integral of a Hopf subalgebra, as an element of ``h``.

    :raises NotHopfSubalgebraError:
    :raises NotSemisimpleError:
    """

    if not k.flags.is_hopf:
        raise NotHopfSubalgebraError(f"""{h.name}: not a Hopf subalgebra""")
    field = h.field
    basis = k.space.vectors()
    m = len(basis)

    def coords(x: Vector) -> Vector:
        return linalg.coordinates(k.space, x)

    # unknowns: the coordinates of the integral in the basis of K
    rows: List[List[FieldElem]] = []
    for w in basis:
        e = alg.counit(h, w)
        for side in ('left', 'right'):
            images = [coords(alg.multiply(h, w, v) if side == 'left' else alg.multiply(h, v, w)) for v in basis]
            for s in range(m):
                rows.append([images[r][s] - (e if r == s else field.zero()) for r in range(m)])
    space = linalg.kernel_of_rows(field, m, rows)
    if space.dim != 1:
        raise IntegralError(f"""the space of integrals of a Hopf subalgebra of {h.name} has dimension {space.dim}""")
    candidate = linalg.linear_combination(field, h.dim, space.basis.entries[0], basis)
    e = alg.counit(h, candidate)
    if not e:
        raise NotSemisimpleError(f"""a Hopf subalgebra of {h.name} is not semisimple""")
    return linalg.vec_scale(e.inverse(), candidate)
